#include "dcdsum/integer_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcdsum {
namespace {

template <typename T>
std::vector<Integer> widen(const std::vector<T>& values) {
  if constexpr (std::is_same_v<T, Integer>) {
    return values;
  } else {
    return std::vector<Integer>(values.begin(), values.end());
  }
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

template <typename T>
bool all_distinct(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

template <typename T>
std::vector<T> pairwise(const std::vector<T>& a, const std::vector<T>& b, bool subtract) {
  std::vector<T> out;
  out.reserve(a.size() * b.size());
  for (const T& x : a) {
    for (const T& y : b) out.push_back(subtract ? T(x - y) : T(x + y));
  }
  return out;
}

// Both narrowed views, or nullopt when either set holds a wide element.
std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> narrow_pair(
    const IntegerSet& a, const IntegerSet& b) {
  auto na = a.narrowed();
  if (!na) return std::nullopt;
  auto nb = b.narrowed();
  if (!nb) return std::nullopt;
  return std::make_pair(std::move(*na), std::move(*nb));
}

std::vector<Integer> as_vector(const IntegerSet& a) {
  return {a.begin(), a.end()};
}

IntegerSet pairwise_set(const IntegerSet& a, const IntegerSet& b, bool subtract) {
  if (auto n = narrow_pair(a, b)) {
    return IntegerSet::from_sorted(widen(sorted_unique(pairwise(n->first, n->second, subtract))));
  }
  return IntegerSet::from_sorted(sorted_unique(pairwise(as_vector(a), as_vector(b), subtract)));
}

template <typename T>
std::vector<Representation> run_lengths(std::vector<T> sums) {
  std::sort(sums.begin(), sums.end());
  std::vector<Representation> out;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    out.push_back({Integer(sums[i]), static_cast<std::uint64_t>(j - i)});
    i = j;
  }
  return out;
}

template <typename T>
bool sums_distinct(const std::vector<T>& a) {
  std::vector<T> sums;
  sums.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) sums.push_back(a[i] + a[j]);
  }
  return all_distinct(std::move(sums));
}

template <typename T>
bool lagged_differences_distinct(const std::vector<T>& a) {
  std::vector<T> diffs;
  for (std::size_t lag = 1; lag < a.size(); ++lag) {
    diffs.clear();
    for (std::size_t i = lag; i < a.size(); ++i) diffs.push_back(a[i] - a[i - lag]);
    if (!all_distinct(diffs)) return false;
  }
  return true;
}

void require_two(const IntegerSet& a, const char* what) {
  if (a.size() < 2) throw std::invalid_argument(std::string(what) + " requires |A| >= 2");
}

}  // namespace

IntegerSet::IntegerSet(std::vector<Integer> elements) : elements_(sorted_unique(std::move(elements))) {
  if (elements_.empty()) throw std::invalid_argument("IntegerSet must be nonempty");
}

IntegerSet::IntegerSet(std::initializer_list<long long> elements)
    : IntegerSet(std::vector<Integer>(elements.begin(), elements.end())) {}

IntegerSet IntegerSet::from_sorted(std::vector<Integer> elements) {
  if (elements.empty()) throw std::invalid_argument("IntegerSet must be nonempty");
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (!(elements[i - 1] < elements[i])) {
      throw std::invalid_argument("IntegerSet elements must be strictly increasing");
    }
  }
  return IntegerSet(Adopt{}, std::move(elements));
}

bool IntegerSet::contains(const Integer& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<std::vector<std::int64_t>> IntegerSet::narrowed() const {
  if (!narrow(elements_.front()) || !narrow(elements_.back())) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (const Integer& x : elements_) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

RepProfile::RepProfile(std::vector<Representation> entries, std::size_t size_a, std::size_t size_b)
    : entries_(std::move(entries)), size_a_(size_a), size_b_(size_b) {
  std::uint64_t sum = 0;
  const std::uint64_t cap = std::min(size_a_, size_b_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.count == 0 || e.count > cap) throw std::invalid_argument("RepProfile multiplicity out of range");
    if (i > 0 && !(entries_[i - 1].value < e.value)) {
      throw std::invalid_argument("RepProfile values must be strictly increasing");
    }
    sum += e.count;
  }
  if (sum != static_cast<std::uint64_t>(size_a_) * size_b_) {
    throw std::invalid_argument("RepProfile counts must sum to |A||B|");
  }
}

std::uint64_t RepProfile::total() const {
  std::uint64_t sum = 0;
  for (const auto& e : entries_) sum += e.count;
  return sum;
}

std::uint64_t RepProfile::max_multiplicity() const {
  std::uint64_t best = 0;
  for (const auto& e : entries_) best = std::max(best, e.count);
  return best;
}

std::uint64_t RepProfile::count_at(const Integer& value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const Representation& e, const Integer& v) { return e.value < v; });
  return (it != entries_.end() && it->value == value) ? it->count : 0;
}

std::vector<std::uint64_t> RepProfile::multiplicity_histogram() const {
  std::vector<std::uint64_t> hist(max_multiplicity() + 1, 0);
  for (const auto& e : entries_) ++hist[e.count];
  return hist;
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) { return pairwise_set(a, b, false); }

IntegerSet difference_set(const IntegerSet& a, const IntegerSet& b) { return pairwise_set(a, b, true); }

RepProfile representation_profile(const IntegerSet& a, const IntegerSet& b) {
  if (auto n = narrow_pair(a, b)) {
    return RepProfile(run_lengths(pairwise(n->first, n->second, false)), a.size(), b.size());
  }
  return RepProfile(run_lengths(pairwise(as_vector(a), as_vector(b), false)), a.size(), b.size());
}

EnergyValue energy(const RepProfile& profile, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 1.0) {
    throw std::invalid_argument("energy requires a finite alpha > 1");
  }
  EnergyValue out;
  out.alpha = alpha;
  if (alpha == std::floor(alpha) && alpha <= 64.0) {
    out.exact = energy_exact(profile, static_cast<unsigned>(alpha));
    out.value = to_double(*out.exact);
    return out;
  }
  double sum = 0.0;
  for (const auto& e : profile.entries()) sum += std::pow(static_cast<double>(e.count), alpha);
  out.value = sum;
  return out;
}

Integer energy_exact(const RepProfile& profile, unsigned alpha) {
  Integer sum = 0;
  for (const auto& e : profile.entries()) sum += boost::multiprecision::pow(Integer(e.count), alpha);
  return sum;
}

std::vector<Integer> consecutive_differences(const IntegerSet& a) {
  std::vector<Integer> out;
  out.reserve(a.size() > 0 ? a.size() - 1 : 0);
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] - a[i - 1]);
  return out;
}

bool is_dcd(const IntegerSet& a) { return all_distinct(consecutive_differences(a)); }

bool is_convex(const IntegerSet& a) {
  const auto diffs = consecutive_differences(a);
  return std::adjacent_find(diffs.begin(), diffs.end(), std::greater_equal<>()) == diffs.end();
}

bool is_sidon(const IntegerSet& a) {
  if (auto n = a.narrowed()) return sums_distinct(*n);
  return sums_distinct(as_vector(a));
}

bool is_tdcd(const IntegerSet& a) {
  if (auto n = a.narrowed()) return lagged_differences_distinct(*n);
  return lagged_differences_distinct(as_vector(a));
}

std::uint64_t consecutive_difference_multiplicity(const IntegerSet& a) {
  require_two(a, "consecutive_difference_multiplicity");
  auto diffs = consecutive_differences(a);
  std::sort(diffs.begin(), diffs.end());
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < diffs.size();) {
    std::size_t j = i;
    while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
    best = std::max<std::uint64_t>(best, j - i);
    i = j;
  }
  return best;
}

bool satisfies_doubling(const IntegerSet& a) {
  require_two(a, "satisfies_doubling");
  const auto diffs = consecutive_differences(a);
  const auto [lo, hi] = std::minmax_element(diffs.begin(), diffs.end());
  return *hi <= 2 * *lo;
}

std::vector<Integer> high_multiplicity_set(const RepProfile& profile, std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("high_multiplicity_set requires t >= 1");
  std::vector<Integer> out;
  for (const auto& e : profile.entries()) {
    if (e.count >= t) out.push_back(e.value);
  }
  return out;
}

}  // namespace dcdsum
