#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcdsum/integer_set.hpp"

namespace dcdsum {

// ---------------------------------------------------------------------------
// Coprime pair construction
// ---------------------------------------------------------------------------

/// a, b, c, d = 6t+1, 6t+2, 6t+3, 6t+5 and the products n = ab, k = cd,
/// m = ac, r = bd.
struct CoprimeParams {
  std::int64_t t = 0;
  Integer a, b, c, d;
  Integer n, k, m, r;
};

struct CoprimeConstruction {
  IntegerSet a;
  IntegerSet b;
  CoprimeParams params;
};

CoprimeParams coprime_params(std::int64_t t);

/// The multiples {j * step : 0 <= j < modulus / 2} with, between each
/// consecutive pair, the smallest multiple of `modulus` strictly above the
/// lower one. Requires step > modulus > 1.
IntegerSet interleaved_multiples(const Integer& modulus, const Integer& step);

/// A from (n, k), B from (m, r). Throws std::invalid_argument for t < 1.
CoprimeConstruction coprime_construction(std::int64_t t);

// ---------------------------------------------------------------------------
// Sidon-seeded recursive construction
// ---------------------------------------------------------------------------

/// Closed walk on the complete digraph over vertices 1..num_vertices using
/// every arc (i, j), i != j, exactly once, starting and ending at 1.
struct EulerTour {
  std::size_t num_vertices = 0;
  std::vector<std::size_t> visits;
};

/// Throws std::invalid_argument describing the first violated property.
void validate(const EulerTour& tour);

/// Hierholzer's algorithm, always leaving a vertex along its smallest unused
/// target. Throws std::invalid_argument for s < 2.
EulerTour eulerian_tour(std::size_t s);

/// Sequence of dim-dimensional vectors with coordinates in [0, max_coord],
/// stored coordinate-major.
class VectorSeq {
 public:
  VectorSeq(std::size_t dim, std::size_t length, std::int32_t max_coord);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return length_; }
  std::int32_t max_coord() const noexcept { return max_coord_; }

  std::int32_t at(std::size_t index, std::size_t coord) const { return data_[coord * length_ + index]; }
  std::span<const std::int32_t> coordinate(std::size_t coord) const {
    return std::span<const std::int32_t>(data_).subspan(coord * length_, length_);
  }
  std::span<std::int32_t> coordinate(std::size_t coord) {
    return std::span<std::int32_t>(data_).subspan(coord * length_, length_);
  }
  std::vector<std::int32_t> vector_at(std::size_t index) const;

 private:
  std::size_t dim_;
  std::size_t length_;
  std::int32_t max_coord_;
  std::vector<std::int32_t> data_;
};

/// True iff all consecutive difference vectors are pairwise distinct.
bool has_distinct_steps(const VectorSeq& seq);
bool is_closed(const VectorSeq& seq);

/// vectors[i] = S[tour.visits[i]] (1-based vertices). Requires S Sidon with
/// min 0 and |S| = tour.num_vertices; throws std::invalid_argument otherwise.
VectorSeq q1_from_seed(const IntegerSet& seed, const EulerTour& tour);

/// Appends one coordinate: |q1| blocks, each a copy of qk; block 1 carries
/// q1[1] throughout, block i > 1 alternates q1[i], q1[i-1] starting and
/// ending on q1[i]. Throws std::invalid_argument if q1 is not 1-dimensional
/// or if |q1| or |qk| is even.
VectorSeq q_step(const VectorSeq& qk, const VectorSeq& q1);

/// b_i = sum_c v_i[c] * base^c. Requires base > 2 * max_coord.
std::vector<Integer> encode_b(const VectorSeq& seq, const Integer& base);

/// a_i = b_i + i * base^k for i = 1..|b|. Requires 0 <= b_i < base^k.
IntegerSet assemble_a(std::span<const Integer> b, const Integer& base, std::size_t k);

/// Smallest power of ten strictly greater than 2 * max(seed).
Integer default_base(const IntegerSet& seed);

struct SeedConstructionOptions {
  std::optional<Integer> base;
  /// Use the published 43-step tour; only valid for the published seed.
  bool paper_tour = false;
};

struct SeedConstruction {
  IntegerSet a;
  std::vector<Integer> b;
  Integer base;
  std::size_t k = 0;
  EulerTour tour;
  std::size_t q1_length = 0;
};

/// eulerian_tour -> q1_from_seed -> q_step^(k-1) -> encode_b -> assemble_a.
/// Requires S Sidon, min(S) = 0, |S| >= 3, k >= 1.
SeedConstruction sidon_seed_construction(const IntegerSet& seed, std::size_t k,
                                         const SeedConstructionOptions& options = {});

/// log(|S-S| / |S+S|) / log(|S-S|). Requires S Sidon and |S| >= 2.
double construction_exponent(const IntegerSet& seed);

/// {0, 1, 3, 7, 12, 22, 30}.
IntegerSet paper_seed();
/// The published Euler tour on 7 vertices (43 visits).
EulerTour paper_tour();
/// The published Q_1 sequence (43 values).
std::vector<std::int32_t> paper_q1();

}  // namespace dcdsum
