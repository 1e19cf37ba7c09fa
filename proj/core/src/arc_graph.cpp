#include "dcdsum/arc_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace dcdsum {
namespace {

using Interval = std::pair<std::size_t, std::size_t>;

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t index) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }

  // Number of inserted indices <= index.
  std::uint64_t prefix(std::size_t index) const {
    std::uint64_t sum = 0;
    for (std::size_t i = std::min(index + 1, tree_.size() - 1); i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

// Endpoints must lie in [0, n).
std::uint64_t count_interleaved(std::vector<Interval> arcs, std::size_t n) {
  std::sort(arcs.begin(), arcs.end());
  Fenwick open(n);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < arcs.size();) {
    std::size_t j = i;
    while (j < arcs.size() && arcs[j].first == arcs[i].first) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const auto [u, v] = arcs[k];
      // Earlier arcs (left end < u) whose right end lies strictly in (u, v).
      total += open.prefix(v - 1) - open.prefix(u);
    }
    for (std::size_t k = i; k < j; ++k) open.add(arcs[k].second);
    i = j;
  }
  return total;
}

// Relabels endpoints to ranks among the endpoints present.
std::uint64_t count_interleaved_compressed(std::vector<Interval> arcs) {
  std::vector<std::size_t> points;
  points.reserve(arcs.size() * 2);
  for (const auto& [u, v] : arcs) {
    points.push_back(u);
    points.push_back(v);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto rank = [&](std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin());
  };
  for (auto& [u, v] : arcs) {
    u = rank(u);
    v = rank(v);
  }
  return count_interleaved(std::move(arcs), points.size());
}

std::vector<Interval> intervals_of(const ArcGraph& graph) {
  std::vector<Interval> out;
  out.reserve(graph.edge_count());
  for (const auto& e : graph.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

ArcGraph::ArcGraph(std::vector<Integer> positions, std::vector<ArcEdge> edges)
    : positions_(std::move(positions)), edges_(std::move(edges)) {
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    if (!(positions_[i - 1] < positions_[i])) {
      throw std::invalid_argument("ArcGraph positions must be strictly increasing");
    }
  }
  for (const auto& e : edges_) {
    if (!(e.u < e.v) || e.v >= positions_.size()) {
      throw std::invalid_argument("ArcGraph edge must satisfy u < v < vertex_count");
    }
  }
}

ArcGraph ArcGraph::with_unit_positions(std::size_t vertex_count, std::vector<ArcEdge> edges) {
  std::vector<Integer> positions;
  positions.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) positions.emplace_back(i);
  return ArcGraph(std::move(positions), std::move(edges));
}

bool ArcGraph::has_parallel_edges() const {
  auto arcs = intervals_of(*this);
  std::sort(arcs.begin(), arcs.end());
  return std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end();
}

bool ArcGraph::fully_labelled() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const ArcEdge& e) { return e.label.has_value(); });
}

ArcGraph build_sum_graph(const IntegerSet& a, const IntegerSet& b) {
  if (a.size() < 2) throw std::invalid_argument("build_sum_graph requires |A| >= 2");
  const IntegerSet sums = sumset(a, b);
  std::vector<ArcEdge> edges;
  edges.reserve((a.size() - 1) * b.size());

  auto na = a.narrowed();
  auto nb = b.narrowed();
  auto ns = sums.narrowed();
  if (na && nb && ns) {
    const auto& s = *ns;
    auto index_of = [&](std::int64_t x) {
      return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
    };
    for (std::size_t j = 0; j < nb->size(); ++j) {
      std::size_t prev = index_of((*na)[0] + (*nb)[j]);
      for (std::size_t i = 0; i + 1 < na->size(); ++i) {
        const std::size_t next = index_of((*na)[i + 1] + (*nb)[j]);
        edges.push_back({prev, next, TranslateLabel{i, j}});
        prev = next;
      }
    }
  } else {
    const auto s = sums.elements();
    auto index_of = [&](const Integer& x) {
      return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
    };
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        edges.push_back({index_of(a[i] + b[j]), index_of(a[i + 1] + b[j]), TranslateLabel{i, j}});
      }
    }
  }
  return ArcGraph(std::vector<Integer>(sums.begin(), sums.end()), std::move(edges));
}

std::uint64_t count_crossings_oracle(const ArcGraph& graph) {
  const auto edges = graph.edges();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& f = edges[j];
      if ((e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v)) ++total;
    }
  }
  return total;
}

std::uint64_t count_crossings_fast(const ArcGraph& graph) {
  return count_interleaved(intervals_of(graph), graph.vertex_count());
}

std::uint64_t count_crossings_among(const ArcGraph& graph, std::span<const std::size_t> edge_ids) {
  std::vector<Interval> arcs;
  arcs.reserve(edge_ids.size());
  for (std::size_t id : edge_ids) {
    const auto& e = graph.edges()[id];
    arcs.emplace_back(e.u, e.v);
  }
  return count_interleaved(std::move(arcs), graph.vertex_count());
}

std::uint64_t count_intersections(const ArcGraph& graph) {
  const auto edges = graph.edges();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (std::max(e.u, f.u) < std::min(e.v, f.v)) ++total;
    }
  }
  return total;
}

std::uint64_t count_intersections_fast(const ArcGraph& graph) {
  const std::size_t n = graph.vertex_count();
  const auto edges = graph.edges();
  std::vector<std::uint64_t> left(n, 0), right(n, 0);
  std::vector<std::size_t> ends;
  ends.reserve(edges.size());
  for (const auto& e : edges) {
    ++left[e.u];
    ++right[e.v];
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());

  // Separated pairs: one arc ends at or before the other starts.
  std::uint64_t separated = 0;
  for (const auto& f : edges) {
    separated += static_cast<std::uint64_t>(std::upper_bound(ends.begin(), ends.end(), f.u) - ends.begin());
  }

  // Overlapping pairs sharing an endpoint: same left end or same right end;
  // parallel pairs share both and were counted twice.
  std::uint64_t sharing = 0;
  for (std::size_t x = 0; x < n; ++x) sharing += choose2(left[x]) + choose2(right[x]);
  auto arcs = intervals_of(graph);
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 0; i < arcs.size();) {
    std::size_t j = i;
    while (j < arcs.size() && arcs[j] == arcs[i]) ++j;
    sharing -= choose2(j - i);
    i = j;
  }

  return choose2(edges.size()) - separated - sharing;
}

std::uint64_t max_translate_pair_crossings(const ArcGraph& graph) {
  std::map<std::size_t, std::vector<Interval>> groups;
  for (const auto& e : graph.edges()) {
    if (!e.label) throw std::invalid_argument("max_translate_pair_crossings requires labelled edges");
    groups[e.label->b_index].emplace_back(e.u, e.v);
  }
  std::vector<std::vector<Interval>> translates;
  std::vector<std::uint64_t> inner;
  for (auto& [id, arcs] : groups) {
    inner.push_back(count_interleaved_compressed(arcs));
    translates.push_back(std::move(arcs));
  }
  std::uint64_t best = 0;
  std::vector<Interval> both;
  for (std::size_t i = 0; i < translates.size(); ++i) {
    for (std::size_t j = i + 1; j < translates.size(); ++j) {
      both.assign(translates[i].begin(), translates[i].end());
      both.insert(both.end(), translates[j].begin(), translates[j].end());
      const std::uint64_t between = count_interleaved_compressed(both) - inner[i] - inner[j];
      best = std::max(best, between);
    }
  }
  return best;
}

std::vector<std::uint64_t> degree_sequence(const ArcGraph& graph) {
  std::vector<std::uint64_t> degree(graph.vertex_count(), 0);
  for (const auto& e : graph.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::sort(degree.begin(), degree.end(), std::greater<>());
  return degree;
}

CrossingStats crossing_stats(const ArcGraph& graph) {
  CrossingStats stats;
  stats.crossings = count_crossings_fast(graph);
  stats.intersections = count_intersections_fast(graph);
  if (graph.edge_count() > 0 && graph.fully_labelled()) {
    stats.max_translate_pair_crossings = max_translate_pair_crossings(graph);
  }
  stats.degree_sequence = degree_sequence(graph);
  return stats;
}

}  // namespace dcdsum
