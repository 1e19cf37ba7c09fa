#include "dcdsum/set_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>

namespace dcdsum {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::string describe(const std::string& source, std::size_t line, const std::string& message) {
  if (line == 0) return source + ": " + message;
  return source + ":" + std::to_string(line) + ": " + message;
}

}  // namespace

SetFileError::SetFileError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(describe(source, line, message)), line_(line) {}

IntegerSet read_set(std::istream& in, const std::string& source) {
  std::map<Integer, std::size_t> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (line == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    const auto text = trim(raw);
    if (text.empty()) continue;
    auto value = parse_integer(text);
    if (!value) throw SetFileError(source, line, "not a decimal integer: '" + std::string(text) + "'");
    auto [it, inserted] = seen.emplace(std::move(*value), line);
    if (!inserted) {
      throw SetFileError(source, line,
                         "duplicate element " + to_string(it->first) + " (first seen on line " +
                             std::to_string(it->second) + ")");
    }
  }
  if (seen.empty()) throw SetFileError(source, 0, "set file contains no elements");
  std::vector<Integer> elements;
  elements.reserve(seen.size());
  for (auto& [value, where] : seen) elements.push_back(value);
  return IntegerSet::from_sorted(std::move(elements));
}

IntegerSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SetFileError(path.string(), 0, "cannot open file");
  return read_set(in, path.string());
}

void write_set(std::ostream& out, const IntegerSet& set) {
  for (const Integer& x : set) out << x << '\n';
}

void write_set_file(const std::filesystem::path& path, const IntegerSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_set(out, set);
}

}  // namespace dcdsum
