#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcdsum {

/// Arbitrary-precision signed integer used for every set element and sum.
using Integer = boost::multiprecision::cpp_int;

/// Magnitude bound below which kernels switch to machine words. Sums of two
/// such values cannot overflow int64.
inline constexpr std::int64_t kNarrowLimit = std::int64_t{1} << 61;

/// Returns the value as int64 when |value| < kNarrowLimit.
std::optional<std::int64_t> narrow(const Integer& value);

std::string to_string(const Integer& value);

/// Parses an optionally '-'-prefixed decimal literal. Returns nullopt on any
/// other character, on an empty digit string, or on a leading '+'.
std::optional<Integer> parse_integer(std::string_view text);

/// Converts to double, saturating to +-inf outside the double range.
double to_double(const Integer& value);

}  // namespace dcdsum
