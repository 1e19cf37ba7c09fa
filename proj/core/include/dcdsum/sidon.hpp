#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcdsum/integer_set.hpp"

namespace dcdsum {

struct SeedScore {
  std::uint64_t sums = 0;   ///< |S+S|
  std::uint64_t diffs = 0;  ///< |S-S|, counting 0
  double score = 0.0;       ///< log(diffs / sums) / log(diffs)
};

/// Every Sidon set {0 = s_1 < ... < s_size <= max_element}, in lexicographic
/// order. Depth-first extension, pruning any candidate whose differences to
/// the chosen elements collide with a difference already in use. Throws for
/// size < 2.
std::vector<IntegerSet> sidon_search(std::size_t size, std::int64_t max_element);

/// Throws std::invalid_argument for non-Sidon S.
SeedScore seed_stats(const IntegerSet& seed);

/// f(x) = log((x(x-1)+1) / (x(x-1)/2 + x)) / log(x(x-1)+1); the score a
/// Sidon set of size x would have. Throws for x <= 1.
double objective_f(double x);

struct ExponentOptimum {
  double x_star = 0.0;
  double f_star = 0.0;
  std::size_t iterations = 0;  ///< golden-section iterations after the grid
};

/// Maximizes objective_f on (1, 1000]: grid with step 0.01 on (1, 50] and
/// 0.5 on (50, 1000], then golden-section refinement on the two grid cells
/// around the best grid point to 1e-6 in x.
ExponentOptimum optimize_exponent();

}  // namespace dcdsum
