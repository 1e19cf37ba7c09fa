#include "dcdsum/sidon.hpp"

#include <cmath>
#include <stdexcept>

#include "dcdsum/golden_section.hpp"

namespace dcdsum {
namespace {

struct Search {
  std::size_t size;
  std::int64_t max_element;
  std::vector<std::int64_t> chosen;
  std::vector<char> used;  // used[d]: difference d already realized
  std::vector<IntegerSet> found;

  void extend() {
    if (chosen.size() == size) {
      found.push_back(IntegerSet::from_sorted(std::vector<Integer>(chosen.begin(), chosen.end())));
      return;
    }
    // Leave room for the remaining elements, each at least one larger.
    const auto remaining = static_cast<std::int64_t>(size - chosen.size() - 1);
    for (std::int64_t next = chosen.back() + 1; next + remaining <= max_element; ++next) {
      std::size_t placed = 0;
      for (; placed < chosen.size(); ++placed) {
        char& slot = used[static_cast<std::size_t>(next - chosen[placed])];
        if (slot) break;
        slot = 1;
      }
      if (placed == chosen.size()) {
        chosen.push_back(next);
        extend();
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < placed; ++i) used[static_cast<std::size_t>(next - chosen[i])] = 0;
    }
  }
};

}  // namespace

std::vector<IntegerSet> sidon_search(std::size_t size, std::int64_t max_element) {
  if (size < 2) throw std::invalid_argument("sidon_search requires size >= 2");
  if (max_element < 0 || static_cast<std::uint64_t>(max_element) + 1 < size) return {};
  Search s{size, max_element, {0}, std::vector<char>(static_cast<std::size_t>(max_element) + 1, 0), {}};
  s.extend();
  return std::move(s.found);
}

SeedScore seed_stats(const IntegerSet& seed) {
  if (!is_sidon(seed)) throw std::invalid_argument("seed_stats requires a Sidon set");
  SeedScore out;
  out.sums = sumset(seed, seed).size();
  out.diffs = difference_set(seed, seed).size();
  out.score = out.diffs > 1 ? std::log(static_cast<double>(out.diffs) / static_cast<double>(out.sums)) /
                                  std::log(static_cast<double>(out.diffs))
                            : 0.0;
  return out;
}

double objective_f(double x) {
  if (!(x > 1.0)) throw std::invalid_argument("objective_f requires x > 1");
  const double diffs = x * (x - 1.0) + 1.0;
  const double sums = x * (x - 1.0) / 2.0 + x;
  return std::log(diffs / sums) / std::log(diffs);
}

ExponentOptimum optimize_exponent() {
  std::vector<double> grid;
  for (int i = 101; i <= 5000; ++i) grid.push_back(i / 100.0);
  for (int i = 101; i <= 2000; ++i) grid.push_back(i / 2.0);

  std::size_t best = 0;
  double best_f = objective_f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = objective_f(grid[i]);
    if (v > best_f) {
      best_f = v;
      best = i;
    }
  }
  const double lo = best > 0 ? grid[best - 1] : 1.0 + 1e-9;
  const double hi = best + 1 < grid.size() ? grid[best + 1] : grid[best];
  const auto refined = golden_section_maximize(objective_f, lo, hi, 1e-7);
  if (refined.fx < best_f) return {grid[best], best_f, refined.iterations};
  return {refined.x, refined.fx, refined.iterations};
}

}  // namespace dcdsum
