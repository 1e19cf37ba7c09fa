#include "dcdsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcdsum {
namespace {

using std::uint64_t;

Integer big(uint64_t x) { return Integer(x); }

double dbl(uint64_t x) { return static_cast<double>(x); }

void finish(BoundReport& r) {
  if (r.rhs > 0.0 && std::isfinite(r.rhs)) r.ratio = r.lhs / r.rhs;
}

void unmet(BoundReport& r, std::string why) {
  r.precondition_met = false;
  r.mode = BoundMode::Report;
  r.note = "precondition not met: " + why;
}

void add_sizes(BoundReport& r, const Instance& inst) {
  r.context["|A|"] = uint64_t{inst.a().size()};
  r.context["|B|"] = uint64_t{inst.b().size()};
  r.context["|A+B|"] = inst.sumset_size();
}

void require_dcd(BoundReport& r, const Instance& inst) {
  if (!inst.a_is_dcd()) unmet(r, "A does not have distinct consecutive differences");
}

std::string context_key(const BoundReport& r) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& [key, value] : r.context) {
    out << key << '=';
    std::visit([&](const auto& v) { out << v; }, value);
    out << ';';
  }
  return out.str();
}

}  // namespace

const char* to_string(BoundMode mode) { return mode == BoundMode::Assert ? "assert" : "report"; }

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::GreaterEqual:
      return "lhs >= rhs";
    case Relation::LessEqual:
      return "lhs <= rhs";
    case Relation::Less:
      return "lhs < rhs";
  }
  return "?";
}

Instance::Instance(IntegerSet a, IntegerSet b)
    : a_(std::move(a)),
      b_(std::move(b)),
      profile_(representation_profile(a_, b_)),
      a_is_dcd_(is_dcd(a_)) {
  if (a_.size() >= 2) {
    graph_ = build_sum_graph(a_, b_);
    crossings_ = count_crossings_fast(*graph_);
    intersections_ = count_intersections_fast(*graph_);
  }
  // at_least_[t] = |S_t| for t = 0 .. max multiplicity (+1 sentinel).
  const auto hist = profile_.multiplicity_histogram();
  at_least_.assign(hist.size() + 1, 0);
  for (std::size_t t = hist.size(); t-- > 0;) at_least_[t] = at_least_[t + 1] + hist[t];
}

uint64_t Instance::count_at_least(uint64_t t) const {
  if (t >= at_least_.size()) return 0;
  return at_least_[t];
}

BoundReport check_thm_main(const Instance& inst) {
  BoundReport r;
  r.name = "thm_main";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Assert;
  const uint64_t s = inst.sumset_size();
  const uint64_t na = inst.a().size();
  const uint64_t nb = inst.b().size();
  r.lhs = dbl(s);
  r.rhs = dbl(na) * std::sqrt(dbl(nb)) / std::sqrt(27.0);
  r.satisfied = 27 * big(s) * s >= big(na) * na * nb;
  add_sizes(r, inst);
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_thm_main(const IntegerSet& a, const IntegerSet& b) { return check_thm_main(Instance(a, b)); }

BoundReport check_crossing_upper(const Instance& inst) {
  BoundReport r;
  r.name = "crossing_upper";
  r.relation = Relation::LessEqual;
  r.mode = BoundMode::Assert;
  add_sizes(r, inst);
  if (!inst.graph()) {
    unmet(r, "|A| < 2");
    r.satisfied = true;
    return r;
  }
  const uint64_t k = inst.a().size();
  const uint64_t nb = inst.b().size();
  const uint64_t cr = inst.crossings();
  const Integer sharp = big(nb) * (nb - 1) / 2 * (2 * k - 1);
  const Integer loose = big(nb) * nb * k;
  r.lhs = dbl(cr);
  r.rhs = to_double(sharp);
  r.satisfied = big(cr) <= sharp && big(cr) <= loose;
  r.context["cr"] = cr;
  r.context["C(|B|,2)(2|A|-1)"] = to_string(sharp);
  r.context["|B|^2|A|"] = to_string(loose);
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_crossing_upper(const IntegerSet& a, const IntegerSet& b) {
  return check_crossing_upper(Instance(a, b));
}

BoundReport check_crossing_lower(const Instance& inst) {
  BoundReport r;
  r.name = "crossing_lower";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Report;
  add_sizes(r, inst);
  if (!inst.graph()) {
    unmet(r, "|A| < 2");
    return r;
  }
  const uint64_t e = (inst.a().size() - 1) * inst.b().size();
  const uint64_t n = inst.sumset_size();
  const uint64_t cr = inst.crossings();
  r.lhs = dbl(cr);
  r.rhs = std::pow(dbl(e), 3) / (27.0 * dbl(n) * dbl(n));
  r.satisfied = 27 * big(n) * n * cr >= big(e) * e * e;
  r.context["cr"] = cr;
  r.context["e"] = e;
  r.context["e>=3n"] = e >= 3 * n;
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_crossing_lower(const IntegerSet& a, const IntegerSet& b) {
  return check_crossing_lower(Instance(a, b));
}

BoundReport check_pst_degree(const ArcGraph& graph) {
  if (graph.has_parallel_edges()) throw std::invalid_argument("check_pst_degree requires a simple graph");
  BoundReport r;
  r.name = "pst_degree";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Assert;
  const uint64_t n = graph.vertex_count();
  const uint64_t cr = count_crossings_fast(graph);
  const auto degrees = degree_sequence(graph);
  Integer weighted = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    weighted += big(i + 1) * degrees[i] * degrees[i] * degrees[i];
  }
  r.lhs = dbl(cr);
  if (n == 0) {
    r.rhs = 0.0;
    r.satisfied = true;
  } else {
    r.rhs = to_double(weighted) / (36000.0 * dbl(n)) - 4.01 * dbl(n) * dbl(n);
    // cr >= W / (36000 n) - 401 n^2 / 100, scaled by 3 600 000 n.
    r.satisfied = big(cr) * 3600000 * n >= 100 * weighted - big(401) * 36000 * n * n * n;
  }
  r.context["cr"] = cr;
  r.context["n"] = n;
  r.context["m"] = uint64_t{graph.edge_count()};
  r.context["sum i*d_i^3"] = to_string(weighted);
  finish(r);
  return r;
}

BoundReport check_bipartite_lemma(const ArcGraph& graph, std::span<const std::size_t> part_u) {
  const std::size_t n = graph.vertex_count();
  std::vector<char> in_u(n, 0);
  for (std::size_t v : part_u) {
    if (v >= n) throw std::invalid_argument("check_bipartite_lemma: vertex index out of range");
    in_u[v] = 1;
  }
  const auto size_u = static_cast<uint64_t>(std::count(in_u.begin(), in_u.end(), 1));
  const uint64_t size_v = n - size_u;

  std::vector<std::size_t> cross;
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const auto& e = graph.edges()[i];
    if (in_u[e.u] != in_u[e.v]) cross.push_back(i);
  }
  const uint64_t e = cross.size();
  const uint64_t cr = count_crossings_among(graph, cross);

  BoundReport r;
  r.name = "bipartite_lemma";
  r.relation = Relation::GreaterEqual;
  const bool hypothesis = e >= 6 * std::max(size_u, size_v);
  r.mode = hypothesis ? BoundMode::Assert : BoundMode::Report;
  if (!hypothesis) r.note = "e < 6 max(|U|,|V|): hypothesis unmet, reported only";
  r.lhs = dbl(cr);
  if (size_u == 0 || size_v == 0) {
    r.rhs = 0.0;
    r.satisfied = true;
  } else {
    r.rhs = std::pow(dbl(e), 3) / (108.0 * dbl(size_u) * dbl(size_v));
    r.satisfied = 108 * big(size_u) * size_v * cr >= big(e) * e * e;
  }
  r.context["cr"] = cr;
  r.context["e"] = e;
  r.context["|U|"] = size_u;
  r.context["|V|"] = size_v;
  finish(r);
  return r;
}

BoundReport check_energy_bound(const Instance& inst) {
  if (inst.a().size() != inst.b().size()) throw std::invalid_argument("check_energy_bound requires |A| = |B|");
  BoundReport r;
  r.name = "energy_bound";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Report;
  const double e15 = energy(inst.profile(), 1.5).value;
  const uint64_t s = inst.sumset_size();
  r.lhs = dbl(s);
  r.rhs = std::pow(e15, 2.0 / 3.0);
  r.satisfied = r.lhs >= r.rhs;
  add_sizes(r, inst);
  r.context["E_1.5"] = e15;
  r.context["log|A+B|"] = std::log(dbl(s));
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_energy_bound(const IntegerSet& a, const IntegerSet& b) {
  return check_energy_bound(Instance(a, b));
}

BoundReport check_delta_theorem(const Instance& inst, const IntegerSet& s) {
  uint64_t weight = 0;
  for (const Integer& x : s) {
    const uint64_t c = inst.profile().count_at(x);
    if (c == 0) throw std::invalid_argument("check_delta_theorem: S must be a subset of A+B");
    weight += c;
  }
  const uint64_t na = inst.a().size();
  const uint64_t nb = inst.b().size();
  const uint64_t sum = inst.sumset_size();
  const uint64_t size_s = s.size();

  BoundReport r;
  r.name = "delta_theorem";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Assert;
  // With Delta = |A||B| / W, |B||A|^2 / ((2 Delta)^3 |S|) = W^3 / (8 |A| |B|^2 |S|).
  const Integer denominator = 8 * big(na) * nb * nb * size_s;
  const Integer numerator = big(weight) * weight * weight;
  r.lhs = dbl(sum);
  r.rhs = to_double(numerator) / to_double(denominator);
  r.satisfied = big(sum) * denominator >= numerator;
  add_sizes(r, inst);
  r.context["|S|"] = size_s;
  r.context["sum_S r"] = weight;
  r.context["Delta"] = dbl(na) * dbl(nb) / dbl(weight);
  r.context["|A||B|^2>=6|A+B|"] = big(na) * nb * nb >= 6 * big(sum);
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_delta_theorem(const IntegerSet& a, const IntegerSet& b, const IntegerSet& s) {
  return check_delta_theorem(Instance(a, b), s);
}

BoundReport check_st_corollary(const Instance& inst, uint64_t t) {
  if (t < 2) throw std::invalid_argument("check_st_corollary requires t >= 2");
  const uint64_t na = inst.a().size();
  const uint64_t nb = inst.b().size();
  const uint64_t sum = inst.sumset_size();
  const uint64_t st = inst.count_at_least(t);

  BoundReport r;
  r.name = "st_corollary";
  r.relation = Relation::Less;
  r.mode = BoundMode::Assert;
  r.lhs = dbl(st);
  r.rhs = 3.0 * std::sqrt(dbl(sum)) * std::sqrt(dbl(na)) * dbl(nb) / std::pow(dbl(t), 1.5);
  // Squared: |S_t|^2 t^3 < 9 |A+B| |A| |B|^2.
  r.satisfied = big(st) * st * t * t * t < 9 * big(sum) * na * nb * nb;
  add_sizes(r, inst);
  r.context["t"] = t;
  require_dcd(r, inst);
  finish(r);
  return r;
}

BoundReport check_st_corollary(const IntegerSet& a, const IntegerSet& b, uint64_t t) {
  return check_st_corollary(Instance(a, b), t);
}

BoundReport check_multiplicity_claim(const Instance& inst) {
  const uint64_t m = consecutive_difference_multiplicity(inst.a());
  const uint64_t na = inst.a().size();
  const uint64_t nb = inst.b().size();
  BoundReport r;
  r.name = "multiplicity_claim";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Report;
  r.note = "constant unspecified; ratio is the empirical constant";
  r.lhs = dbl(inst.sumset_size());
  r.rhs = dbl(na) * std::sqrt(dbl(nb)) / std::sqrt(dbl(m));
  r.satisfied = big(inst.sumset_size()) * inst.sumset_size() * m >= big(na) * na * nb;
  add_sizes(r, inst);
  r.context["m"] = m;
  finish(r);
  return r;
}

BoundReport check_multiplicity_claim(const IntegerSet& a, const IntegerSet& b) {
  return check_multiplicity_claim(Instance(a, b));
}

BoundReport check_intersection_bound(const ArcGraph& graph) {
  const uint64_t n = graph.vertex_count();
  const uint64_t e = graph.edge_count();
  const uint64_t crossings_and_nestings = count_intersections_fast(graph);
  BoundReport r;
  r.name = "intersection_bound";
  r.relation = Relation::GreaterEqual;
  const bool hypothesis = 4 * e >= 9 * n && n > 0;
  r.mode = hypothesis ? BoundMode::Assert : BoundMode::Report;
  if (!hypothesis) r.note = "e < 2.25 n: hypothesis unmet, reported only";
  r.lhs = dbl(crossings_and_nestings);
  if (n == 0) {
    r.rhs = 0.0;
    r.satisfied = true;
  } else {
    r.rhs = 0.0658 * std::pow(dbl(e), 3) / (dbl(n) * dbl(n));
    r.satisfied = 10000 * big(crossings_and_nestings) * n * n >= 658 * big(e) * e * e;
  }
  r.context["int"] = crossings_and_nestings;
  r.context["e"] = e;
  r.context["n"] = n;
  finish(r);
  return r;
}

BoundReport check_doubling_claim(const Instance& inst) {
  const uint64_t s = inst.sumset_size();
  const uint64_t na = inst.a().size();
  const uint64_t nb = inst.b().size();
  BoundReport r;
  r.name = "doubling_claim";
  r.relation = Relation::GreaterEqual;
  r.mode = BoundMode::Assert;
  r.lhs = dbl(s);
  r.rhs = 2.0 / (3.0 * std::sqrt(3.0)) * dbl(na) * std::sqrt(dbl(nb));
  r.satisfied = 27 * big(s) * s >= 4 * big(na) * na * nb;
  add_sizes(r, inst);
  if (!inst.a_is_dcd()) {
    unmet(r, "A does not have distinct consecutive differences");
  } else if (na < 2 || !satisfies_doubling(inst.a())) {
    unmet(r, "consecutive differences of A are not within a factor 2");
  }
  finish(r);
  return r;
}

BoundReport check_doubling_claim(const IntegerSet& a, const IntegerSet& b) {
  return check_doubling_claim(Instance(a, b));
}

std::vector<std::size_t> parity_partition(const ArcGraph& graph) {
  std::vector<std::size_t> out;
  const auto pos = graph.positions();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (boost::multiprecision::bit_test(pos[i], 0) == false) out.push_back(i);
  }
  return out;
}

std::vector<BoundReport> run_all_checks(const Instance& inst) {
  std::vector<BoundReport> out;
  out.push_back(check_thm_main(inst));
  out.push_back(check_crossing_upper(inst));
  out.push_back(check_crossing_lower(inst));

  std::vector<Integer> all;
  const Representation* top = &inst.profile().entries().front();
  for (const auto& e : inst.profile().entries()) {
    all.push_back(e.value);
    if (e.count > top->count) top = &e;
  }
  out.push_back(check_delta_theorem(inst, IntegerSet::from_sorted({top->value})));
  out.back().context["S"] = std::string("argmax r");
  out.push_back(check_delta_theorem(inst, IntegerSet::from_sorted(std::move(all))));
  out.back().context["S"] = std::string("A+B");

  for (uint64_t t = 2; t <= inst.profile().max_multiplicity(); ++t) out.push_back(check_st_corollary(inst, t));
  out.push_back(check_doubling_claim(inst));

  if (inst.a().size() == inst.b().size()) {
    out.push_back(check_energy_bound(inst));
  } else {
    BoundReport r;
    r.name = "energy_bound";
    r.mode = BoundMode::Report;
    unmet(r, "|A| != |B|");
    add_sizes(r, inst);
    out.push_back(std::move(r));
  }

  if (inst.graph()) {
    const ArcGraph& g = *inst.graph();
    out.push_back(check_multiplicity_claim(inst));
    if (g.has_parallel_edges()) {
      BoundReport r;
      r.name = "pst_degree";
      unmet(r, "sum graph has parallel edges");
      r.context["m"] = uint64_t{g.edge_count()};
      out.push_back(std::move(r));
    } else {
      out.push_back(check_pst_degree(g));
    }
    const auto even = parity_partition(g);
    out.push_back(check_bipartite_lemma(g, even));
    out.back().context["split"] = std::string("position parity");
    out.push_back(check_intersection_bound(g));
  }

  std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) {
    if (x.name != y.name) return x.name < y.name;
    return context_key(x) < context_key(y);
  });
  return out;
}

}  // namespace dcdsum
