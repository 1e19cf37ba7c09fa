#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "dcdsum/integer.hpp"

namespace dcdsum {

/// Strictly increasing, nonempty sequence of integers.
class IntegerSet {
 public:
  /// Sorts and deduplicates `elements`. Throws std::invalid_argument if empty.
  explicit IntegerSet(std::vector<Integer> elements);
  IntegerSet(std::initializer_list<long long> elements);

  /// Adopts `elements` as-is; throws std::invalid_argument unless they are
  /// nonempty and strictly increasing.
  static IntegerSet from_sorted(std::vector<Integer> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const Integer& operator[](std::size_t i) const { return elements_[i]; }
  const Integer& min() const { return elements_.front(); }
  const Integer& max() const { return elements_.back(); }
  std::span<const Integer> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Integer& value) const;

  /// All elements as int64, or nullopt if any |element| >= kNarrowLimit.
  std::optional<std::vector<std::int64_t>> narrowed() const;

  bool operator==(const IntegerSet&) const = default;

 private:
  struct Adopt {};
  IntegerSet(Adopt, std::vector<Integer> elements) : elements_(std::move(elements)) {}

  std::vector<Integer> elements_;
};

struct Representation {
  Integer value;
  std::uint64_t count = 0;

  bool operator==(const Representation&) const = default;
};

/// r_{A+B}: for every x in A+B, the number of pairs (a, b) with a + b = x.
/// Entries are sorted by value.
class RepProfile {
 public:
  RepProfile(std::vector<Representation> entries, std::size_t size_a, std::size_t size_b);

  std::span<const Representation> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  std::size_t size_a() const noexcept { return size_a_; }
  std::size_t size_b() const noexcept { return size_b_; }

  std::uint64_t total() const;
  std::uint64_t max_multiplicity() const;
  /// 0 when `value` is not a sum.
  std::uint64_t count_at(const Integer& value) const;

  /// histogram[r] = number of sums with exactly r representations; index 0 is
  /// always 0.
  std::vector<std::uint64_t> multiplicity_histogram() const;

 private:
  std::vector<Representation> entries_;
  std::size_t size_a_;
  std::size_t size_b_;
};

struct EnergyValue {
  double alpha = 2.0;
  double value = 0.0;
  /// Set when alpha is an integer.
  std::optional<Integer> exact;
};

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);
IntegerSet difference_set(const IntegerSet& a, const IntegerSet& b);
RepProfile representation_profile(const IntegerSet& a, const IntegerSet& b);

/// E_alpha = sum over x of r(x)^alpha. Throws std::invalid_argument for
/// alpha <= 1 or non-finite alpha.
EnergyValue energy(const RepProfile& profile, double alpha);
Integer energy_exact(const RepProfile& profile, unsigned alpha);

/// a_{i+1} - a_i for i = 1 .. |A|-1.
std::vector<Integer> consecutive_differences(const IntegerSet& a);

bool is_dcd(const IntegerSet& a);
bool is_convex(const IntegerSet& a);
bool is_sidon(const IntegerSet& a);
bool is_tdcd(const IntegerSet& a);

/// Largest number of indices sharing one consecutive difference. Requires
/// |A| >= 2.
std::uint64_t consecutive_difference_multiplicity(const IntegerSet& a);

/// max consecutive difference <= 2 * min consecutive difference. Requires
/// |A| >= 2.
bool satisfies_doubling(const IntegerSet& a);

/// Sorted sums x with r(x) >= t. May be empty. Throws for t == 0.
std::vector<Integer> high_multiplicity_set(const RepProfile& profile, std::uint64_t t);

}  // namespace dcdsum
