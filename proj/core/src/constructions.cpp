#include "dcdsum/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcdsum {
namespace {

[[noreturn]] void invalid(const std::string& message) { throw std::invalid_argument(message); }

Integer power(const Integer& base, std::size_t exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

}  // namespace

CoprimeParams coprime_params(std::int64_t t) {
  if (t < 1) invalid("coprime_construction requires t >= 1");
  CoprimeParams p;
  p.t = t;
  const Integer six_t = Integer(6) * t;
  p.a = six_t + 1;
  p.b = six_t + 2;
  p.c = six_t + 3;
  p.d = six_t + 5;
  p.n = p.a * p.b;
  p.k = p.c * p.d;
  p.m = p.a * p.c;
  p.r = p.b * p.d;
  return p;
}

IntegerSet interleaved_multiples(const Integer& modulus, const Integer& step) {
  if (!(modulus > 1) || !(step > modulus)) invalid("interleaved_multiples requires step > modulus > 1");
  std::vector<Integer> out;
  // j ranges over 0 <= j < modulus / 2, i.e. 2j < modulus.
  for (Integer j = 0; 2 * j < modulus; ++j) {
    const Integer here = j * step;
    if (j > 0) {
      const Integer prev = here - step;
      const Integer between = (prev / modulus + 1) * modulus;
      if (!(between < here)) invalid("no multiple of the modulus between consecutive multiples of step");
      out.push_back(between);
    }
    out.push_back(here);
  }
  return IntegerSet::from_sorted(std::move(out));
}

CoprimeConstruction coprime_construction(std::int64_t t) {
  CoprimeParams p = coprime_params(t);
  IntegerSet a = interleaved_multiples(p.n, p.k);
  IntegerSet b = interleaved_multiples(p.m, p.r);
  return {std::move(a), std::move(b), std::move(p)};
}

void validate(const EulerTour& tour) {
  const std::size_t s = tour.num_vertices;
  if (s < 2) invalid("EulerTour needs at least 2 vertices");
  if (tour.visits.size() != s * (s - 1) + 1) {
    invalid("EulerTour on " + std::to_string(s) + " vertices must have " + std::to_string(s * (s - 1) + 1) +
            " visits, got " + std::to_string(tour.visits.size()));
  }
  if (tour.visits.front() != 1 || tour.visits.back() != 1) invalid("EulerTour must start and end at vertex 1");
  std::vector<char> used(s * s, 0);
  for (std::size_t i = 0; i + 1 < tour.visits.size(); ++i) {
    const std::size_t from = tour.visits[i];
    const std::size_t to = tour.visits[i + 1];
    if (from < 1 || from > s || to < 1 || to > s) invalid("EulerTour visits a vertex out of range");
    if (from == to) invalid("EulerTour uses a loop at vertex " + std::to_string(from));
    char& slot = used[(from - 1) * s + (to - 1)];
    if (slot) invalid("EulerTour repeats arc " + std::to_string(from) + "->" + std::to_string(to));
    slot = 1;
  }
}

EulerTour eulerian_tour(std::size_t s) {
  if (s < 2) invalid("eulerian_tour requires s >= 2");
  // next_target[v] is the smallest target not yet used from v (1-based).
  std::vector<std::size_t> next_target(s + 1, 1);
  auto advance = [&](std::size_t v) {
    std::size_t& t = next_target[v];
    if (t == v) ++t;
    return t;
  };
  std::vector<std::size_t> stack{1};
  std::vector<std::size_t> circuit;
  circuit.reserve(s * (s - 1) + 1);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    const std::size_t t = advance(v);
    if (t <= s) {
      ++next_target[v];
      stack.push_back(t);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return {s, std::move(circuit)};
}

VectorSeq::VectorSeq(std::size_t dim, std::size_t length, std::int32_t max_coord)
    : dim_(dim), length_(length), max_coord_(max_coord), data_(dim * length, 0) {
  if (dim == 0) invalid("VectorSeq dimension must be positive");
}

std::vector<std::int32_t> VectorSeq::vector_at(std::size_t index) const {
  std::vector<std::int32_t> out(dim_);
  for (std::size_t c = 0; c < dim_; ++c) out[c] = at(index, c);
  return out;
}

bool has_distinct_steps(const VectorSeq& seq) {
  if (seq.size() < 3) return true;
  const std::size_t steps = seq.size() - 1;
  const std::size_t dim = seq.dim();
  std::vector<std::int32_t> rows(steps * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto coord = seq.coordinate(c);
    for (std::size_t i = 0; i < steps; ++i) rows[i * dim + c] = coord[i + 1] - coord[i];
  }
  std::vector<std::size_t> order(steps);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return rows.begin() + static_cast<std::ptrdiff_t>(i * dim); };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(row(x), row(x) + static_cast<std::ptrdiff_t>(dim), row(y),
                                        row(y) + static_cast<std::ptrdiff_t>(dim));
  });
  for (std::size_t i = 1; i < steps; ++i) {
    if (std::equal(row(order[i - 1]), row(order[i - 1]) + static_cast<std::ptrdiff_t>(dim), row(order[i]))) {
      return false;
    }
  }
  return true;
}

bool is_closed(const VectorSeq& seq) {
  if (seq.size() == 0) return false;
  for (std::size_t c = 0; c < seq.dim(); ++c) {
    if (seq.at(0, c) != seq.at(seq.size() - 1, c)) return false;
  }
  return true;
}

VectorSeq q1_from_seed(const IntegerSet& seed, const EulerTour& tour) {
  validate(tour);
  if (seed.size() != tour.num_vertices) invalid("seed size must equal the tour's vertex count");
  if (seed.min() != 0) invalid("seed must have minimum 0");
  if (seed.max() > std::numeric_limits<std::int32_t>::max() / 2) invalid("seed elements too large");
  if (!is_sidon(seed)) invalid("seed must be a Sidon set");
  const auto max_coord = static_cast<std::int32_t>(seed.max());
  VectorSeq q(1, tour.visits.size(), max_coord);
  auto coord = q.coordinate(0);
  for (std::size_t i = 0; i < tour.visits.size(); ++i) {
    coord[i] = static_cast<std::int32_t>(seed[tour.visits[i] - 1]);
  }
  return q;
}

VectorSeq q_step(const VectorSeq& qk, const VectorSeq& q1) {
  if (q1.dim() != 1) invalid("q_step: q1 must be one-dimensional");
  if (q1.size() % 2 == 0) invalid("q_step: |q1| must be odd");
  if (qk.size() % 2 == 0) invalid("q_step: |qk| must be odd");
  const std::size_t block = qk.size();
  const std::size_t blocks = q1.size();
  VectorSeq out(qk.dim() + 1, block * blocks, std::max(qk.max_coord(), q1.max_coord()));
  for (std::size_t c = 0; c < qk.dim(); ++c) {
    const auto src = qk.coordinate(c);
    auto dst = out.coordinate(c);
    for (std::size_t i = 0; i < blocks; ++i) std::copy(src.begin(), src.end(), dst.begin() + i * block);
  }
  const auto seeds = q1.coordinate(0);
  auto last = out.coordinate(qk.dim());
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::int32_t even = seeds[i];
    const std::int32_t odd = i == 0 ? seeds[0] : seeds[i - 1];
    for (std::size_t p = 0; p < block; ++p) last[i * block + p] = (p % 2 == 0) ? even : odd;
  }
  return out;
}

std::vector<Integer> encode_b(const VectorSeq& seq, const Integer& base) {
  if (!(base > 2 * Integer(seq.max_coord()))) invalid("encode_b requires base > 2 * max coordinate");
  std::vector<Integer> weights(seq.dim());
  weights[0] = 1;
  for (std::size_t c = 1; c < seq.dim(); ++c) weights[c] = weights[c - 1] * base;
  std::vector<Integer> out(seq.size(), 0);
  for (std::size_t c = 0; c < seq.dim(); ++c) {
    const auto coord = seq.coordinate(c);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (coord[i] != 0) out[i] += weights[c] * coord[i];
    }
  }
  return out;
}

IntegerSet assemble_a(std::span<const Integer> b, const Integer& base, std::size_t k) {
  if (b.empty()) invalid("assemble_a requires a nonempty sequence");
  const Integer shift = power(base, k);
  std::vector<Integer> out;
  out.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] >= shift) invalid("assemble_a requires 0 <= b_i < base^k");
    out.push_back(b[i] + Integer(i + 1) * shift);
  }
  return IntegerSet::from_sorted(std::move(out));
}

Integer default_base(const IntegerSet& seed) {
  Integer base = 10;
  while (base <= 2 * seed.max()) base *= 10;
  return base;
}

SeedConstruction sidon_seed_construction(const IntegerSet& seed, std::size_t k,
                                         const SeedConstructionOptions& options) {
  if (k < 1) invalid("sidon_seed_construction requires k >= 1");
  if (seed.size() < 3) invalid("sidon_seed_construction requires |S| >= 3");
  if (options.paper_tour && seed != paper_seed()) invalid("the published tour only applies to the published seed");

  EulerTour tour = options.paper_tour ? paper_tour() : eulerian_tour(seed.size());
  const VectorSeq q1 = q1_from_seed(seed, tour);
  VectorSeq qk = q1;
  for (std::size_t step = 1; step < k; ++step) qk = q_step(qk, q1);

  Integer base = options.base.value_or(default_base(seed));
  std::vector<Integer> b = encode_b(qk, base);
  IntegerSet a = assemble_a(b, base, k);
  return {std::move(a), std::move(b), std::move(base), k, std::move(tour), q1.size()};
}

double construction_exponent(const IntegerSet& seed) {
  if (!is_sidon(seed)) invalid("construction_exponent requires a Sidon set");
  const auto diffs = static_cast<double>(difference_set(seed, seed).size());
  const auto sums = static_cast<double>(sumset(seed, seed).size());
  if (diffs <= 1.0) invalid("construction_exponent requires |S - S| > 1");
  return std::log(diffs / sums) / std::log(diffs);
}

IntegerSet paper_seed() { return IntegerSet{0, 1, 3, 7, 12, 22, 30}; }

EulerTour paper_tour() {
  return {7, {1, 3, 5, 2, 6, 4, 7, 2, 4, 1, 5, 7, 3, 6, 1, 2, 3, 4, 5, 6, 7, 1,
              7, 5, 3, 7, 4, 6, 5, 1, 6, 2, 5, 4, 3, 1, 4, 2, 7, 6, 3, 2, 1}};
}

std::vector<std::int32_t> paper_q1() {
  return {0,  3, 12, 1,  22, 7, 30, 1,  7,  0, 12, 30, 3,  22, 0,  1, 3,  7,  12, 22, 30, 0,
          30, 12, 3, 30, 7, 22, 12, 0, 22, 1,  12, 7,  3,  0,  7, 1,  30, 22, 3,  1,  0};
}

}  // namespace dcdsum
