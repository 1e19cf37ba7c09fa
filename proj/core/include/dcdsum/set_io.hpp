#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dcdsum/integer_set.hpp"

namespace dcdsum {

/// Malformed set file. `line()` is 1-based; 0 when the problem is not tied
/// to a line (unreadable file, no elements).
class SetFileError : public std::runtime_error {
 public:
  SetFileError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One decimal integer per line, optional leading '-', blank lines and
/// surrounding whitespace ignored. Duplicates are rejected. The result is
/// sorted.
IntegerSet read_set(std::istream& in, const std::string& source = "<stream>");
IntegerSet read_set_file(const std::filesystem::path& path);

/// One element per line in increasing order, '\n' terminated.
void write_set(std::ostream& out, const IntegerSet& set);
void write_set_file(const std::filesystem::path& path, const IntegerSet& set);

}  // namespace dcdsum
