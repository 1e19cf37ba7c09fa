#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dcdsum/arc_graph.hpp"
#include "dcdsum/integer_set.hpp"

namespace dcdsum {

/// Assert-mode reports are proven inequalities with explicit constants and
/// fail a run when violated; report-mode reports only record the numbers.
enum class BoundMode { Assert, Report };

/// The claimed relation between lhs and rhs.
enum class Relation { GreaterEqual, LessEqual, Less };

using ContextValue = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

/// One inequality evaluated on one input. The verdict `satisfied` is
/// computed in exact integer arithmetic; lhs, rhs and ratio are the same
/// quantities rounded to double for reporting.
struct BoundReport {
  std::string name;
  Relation relation = Relation::GreaterEqual;
  BoundMode mode = BoundMode::Assert;
  bool precondition_met = true;
  bool satisfied = false;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs / rhs, present when rhs > 0.
  std::optional<double> ratio;
  std::string note;
  std::map<std::string, ContextValue> context;

  bool violated() const { return mode == BoundMode::Assert && precondition_met && !satisfied; }
};

const char* to_string(BoundMode mode);
const char* to_string(Relation relation);

/// Everything the (A, B) checkers share, computed once: sumset profile, sum
/// graph, crossing and intersection counts. Immutable after construction.
class Instance {
 public:
  Instance(IntegerSet a, IntegerSet b);

  const IntegerSet& a() const noexcept { return a_; }
  const IntegerSet& b() const noexcept { return b_; }
  const RepProfile& profile() const noexcept { return profile_; }
  std::uint64_t sumset_size() const noexcept { return profile_.support_size(); }
  bool a_is_dcd() const noexcept { return a_is_dcd_; }

  /// Absent when |A| < 2.
  const std::optional<ArcGraph>& graph() const noexcept { return graph_; }
  std::uint64_t crossings() const noexcept { return crossings_; }
  std::uint64_t intersections() const noexcept { return intersections_; }

  /// |S_t|: number of sums with at least t representations.
  std::uint64_t count_at_least(std::uint64_t t) const;

 private:
  IntegerSet a_;
  IntegerSet b_;
  RepProfile profile_;
  bool a_is_dcd_;
  std::optional<ArcGraph> graph_;
  std::uint64_t crossings_ = 0;
  std::uint64_t intersections_ = 0;
  std::vector<std::uint64_t> at_least_;
};

/// |A+B| >= |A||B|^{1/2} / sqrt(27) for dcd A.
BoundReport check_thm_main(const Instance& inst);
BoundReport check_thm_main(const IntegerSet& a, const IntegerSet& b);

/// cr(G) <= C(|B|,2)(2|A|-1) <= |B|^2 |A| for dcd A.
BoundReport check_crossing_upper(const Instance& inst);
BoundReport check_crossing_upper(const IntegerSet& a, const IntegerSet& b);

/// cr(G) >= (|B|(|A|-1))^3 / (27 |A+B|^2); report only.
BoundReport check_crossing_lower(const Instance& inst);
BoundReport check_crossing_lower(const IntegerSet& a, const IntegerSet& b);

/// cr(G) >= sum_i i d_i^3 / (36000 n) - 4.01 n^2 for simple G. Throws
/// std::invalid_argument on parallel edges.
BoundReport check_pst_degree(const ArcGraph& graph);

/// Crossings among the edges between U and its complement are at least
/// e^3 / (108 |U||V|); asserted only when e >= 6 max(|U|, |V|). `part_u`
/// holds vertex indices.
BoundReport check_bipartite_lemma(const ArcGraph& graph, std::span<const std::size_t> part_u);

/// |A+B| against E_{1.5}(A,B)^{2/3}; report only. Throws
/// std::invalid_argument when |A| != |B|.
BoundReport check_energy_bound(const Instance& inst);
BoundReport check_energy_bound(const IntegerSet& a, const IntegerSet& b);

/// With Delta = |A||B| / sum_{x in S} r(x):
/// |A+B| >= |B||A|^2 / ((2 Delta)^3 |S|). Throws std::invalid_argument if S
/// is not a subset of A+B.
BoundReport check_delta_theorem(const Instance& inst, const IntegerSet& s);
BoundReport check_delta_theorem(const IntegerSet& a, const IntegerSet& b, const IntegerSet& s);

/// |S_t| < 3 |A+B|^{1/2} |A|^{1/2} |B| / t^{3/2}. Throws for t < 2.
BoundReport check_st_corollary(const Instance& inst, std::uint64_t t);
BoundReport check_st_corollary(const IntegerSet& a, const IntegerSet& b, std::uint64_t t);

/// |A+B| against |A||B|^{1/2} / m^{1/2}, m the consecutive difference
/// multiplicity; report only, ratio is the empirical constant. Throws when
/// |A| < 2.
BoundReport check_multiplicity_claim(const Instance& inst);
BoundReport check_multiplicity_claim(const IntegerSet& a, const IntegerSet& b);

/// int(G) >= 0.0658 e^3 / n^2, asserted when e >= 2.25 n.
BoundReport check_intersection_bound(const ArcGraph& graph);

/// |A+B| >= 2/(3 sqrt 3) |A||B|^{1/2} for dcd A whose consecutive
/// differences are within a factor two of each other.
BoundReport check_doubling_claim(const Instance& inst);
BoundReport check_doubling_claim(const IntegerSet& a, const IntegerSet& b);

/// Vertices whose position is even.
std::vector<std::size_t> parity_partition(const ArcGraph& graph);

/// Every checker that applies to (A, B): the graph checkers run on the sum
/// graph (bipartite lemma on the parity split), the delta theorem on S = A+B
/// and on the smallest most-represented sum, the S_t corollary for every t
/// from 2 to the largest multiplicity. Checkers whose preconditions fail
/// contribute precondition reports. Sorted by name, then context.
std::vector<BoundReport> run_all_checks(const Instance& inst);

}  // namespace dcdsum
