#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dcdsum/arc_graph.hpp"
#include "dcdsum/integer_set.hpp"

namespace dcdsum::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// `size` distinct values drawn from [lo, hi].
inline IntegerSet random_set(Rng& rng, std::size_t size, std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> chosen;
  while (chosen.size() < size) chosen.insert(uniform(rng, lo, hi));
  return IntegerSet(std::vector<Integer>(chosen.begin(), chosen.end()));
}

/// Set of the given size whose consecutive differences are distinct values
/// from [1, max_gap], in random order, starting at `start`.
inline IntegerSet random_dcd_set(Rng& rng, std::size_t size, std::int64_t max_gap, std::int64_t start = 0) {
  std::vector<std::int64_t> gaps(static_cast<std::size_t>(max_gap));
  std::iota(gaps.begin(), gaps.end(), 1);
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<Integer> out{Integer(start)};
  for (std::size_t i = 0; i + 1 < size; ++i) out.push_back(out.back() + gaps[i]);
  return IntegerSet::from_sorted(std::move(out));
}

/// dcd set whose consecutive differences are a random permutation of
/// {g, g+1, ..., 2g-1} restricted to `size - 1` values, so max gap <= 2 min gap.
inline IntegerSet random_doubling_set(Rng& rng, std::size_t size) {
  const auto g = static_cast<std::int64_t>(size - 1);
  std::vector<std::int64_t> gaps;
  for (std::int64_t d = g; d < 2 * g; ++d) gaps.push_back(d);
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<Integer> out{Integer(0)};
  for (std::size_t i = 0; i + 1 < size; ++i) out.push_back(out.back() + gaps[i]);
  return IntegerSet::from_sorted(std::move(out));
}

/// {0, 1, 4, ..., (size-1)^2}: convex, every consecutive difference odd.
inline IntegerSet squares(std::size_t size) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < size; ++i) out.emplace_back(i * i);
  return IntegerSet::from_sorted(std::move(out));
}

inline IntegerSet interval(std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> out;
  for (std::int64_t x = lo; x <= hi; ++x) out.emplace_back(x);
  return IntegerSet::from_sorted(std::move(out));
}

/// Random multigraph on n vertices with m arcs at unit positions.
inline ArcGraph random_arc_graph(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<ArcEdge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    std::size_t v = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
    if (v >= u) ++v;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, std::nullopt});
  }
  return ArcGraph::with_unit_positions(n, std::move(edges));
}

}  // namespace dcdsum::testing
