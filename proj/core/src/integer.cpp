#include "dcdsum/integer.hpp"

#include <cctype>

namespace dcdsum {

std::optional<std::int64_t> narrow(const Integer& value) {
  if (value >= kNarrowLimit || value <= -kNarrowLimit) return std::nullopt;
  return static_cast<std::int64_t>(value);
}

std::string to_string(const Integer& value) { return value.str(); }

std::optional<Integer> parse_integer(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  Integer out = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    out *= 10;
    out += ch - '0';
  }
  return negative ? Integer(-out) : out;
}

double to_double(const Integer& value) { return value.convert_to<double>(); }

}  // namespace dcdsum
