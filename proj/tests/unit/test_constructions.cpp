#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "dcdsum/constructions.hpp"
#include "dcdsum/sidon.hpp"
#include "dcdsum/sumset_count.hpp"

using namespace dcdsum;

namespace {

struct CoprimeRow {
  std::int64_t t;
  std::int64_t a, b, c, d, n, k, m, r;
  std::size_t size_a, size_b;
  std::int64_t max_a;
  std::size_t sumset;
};

// Produced by the brute-force oracle in tests/oracles.
const CoprimeRow kCoprime[] = {
    {1, 7, 8, 9, 11, 56, 99, 63, 88, 55, 63, 2673, 1648},
    {2, 13, 14, 15, 17, 182, 255, 195, 238, 181, 195, 22950, 10239},
    {3, 19, 20, 21, 23, 380, 483, 399, 460, 379, 399, 91287, 30780},
    {4, 25, 26, 27, 29, 650, 783, 675, 754, 649, 675, 253692, 68538},
    {5, 31, 32, 33, 35, 992, 1155, 1023, 1120, 991, 1023, 571725, 128517},
};

std::vector<std::vector<std::int32_t>> steps(const VectorSeq& q) {
  std::vector<std::vector<std::int32_t>> out;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    std::vector<std::int32_t> d(q.dim());
    for (std::size_t c = 0; c < q.dim(); ++c) d[c] = q.at(i + 1, c) - q.at(i, c);
    out.push_back(std::move(d));
  }
  return out;
}

bool steps_pairwise_distinct(const VectorSeq& q) {
  const auto s = steps(q);
  return std::set<std::vector<std::int32_t>>(s.begin(), s.end()).size() == s.size();
}

}  // namespace

TEST(Coprime, ParamsForSmallT) {
  for (const auto& row : kCoprime) {
    const CoprimeParams p = coprime_params(row.t);
    EXPECT_EQ(p.a, row.a);
    EXPECT_EQ(p.b, row.b);
    EXPECT_EQ(p.c, row.c);
    EXPECT_EQ(p.d, row.d);
    EXPECT_EQ(p.n, row.n);
    EXPECT_EQ(p.k, row.k);
    EXPECT_EQ(p.m, row.m);
    EXPECT_EQ(p.r, row.r);
    EXPECT_EQ(gcd(p.n, p.k), 1);
    EXPECT_EQ(gcd(p.m, p.r), 1);
  }
  EXPECT_THROW(coprime_params(0), std::invalid_argument);
  EXPECT_THROW(coprime_construction(-3), std::invalid_argument);
}

TEST(Coprime, FrozenSizesAndSumsets) {
  for (const auto& row : kCoprime) {
    const CoprimeConstruction c = coprime_construction(row.t);
    EXPECT_EQ(c.a.size(), row.size_a);
    EXPECT_EQ(c.a.size(), static_cast<std::size_t>(row.n - 1));
    // |B| is m: m is odd, so the interleaving rule gives (m+1)/2 + (m-1)/2 elements.
    EXPECT_EQ(c.b.size(), row.size_b);
    EXPECT_EQ(c.a.max(), row.max_a);
    EXPECT_LT(c.a.max(), Integer(row.k) * row.n / 2);
    EXPECT_TRUE(is_dcd(c.a));
    EXPECT_TRUE(is_dcd(c.b));

    const IntegerSet sums = sumset(c.a, c.b);
    EXPECT_EQ(sums.size(), row.sumset);
    EXPECT_LT(sums.size(), static_cast<std::size_t>(4 * row.b * row.c * row.d));
    EXPECT_GE(sums.min(), 0);
    EXPECT_LT(sums.max(), Integer(row.a) * row.b * row.c * row.d);
    for (const Integer& x : sums) {
      ASSERT_TRUE(x % row.a == 0 || x % row.b == 0 || x % row.c == 0 || x % row.d == 0) << x;
    }
  }
}

TEST(Coprime, UpAndDownStepsNeverCoincide) {
  for (std::int64_t t = 1; t <= 5; ++t) {
    const CoprimeConstruction c = coprime_construction(t);
    for (const auto* set : {&c.a, &c.b}) {
      const bool is_a = set == &c.a;
      const Integer step = is_a ? c.params.k : c.params.r;
      const Integer modulus = is_a ? c.params.n : c.params.m;
      // Even positions hold j*step, odd positions the interleaved multiple of the modulus.
      std::set<Integer> up, down;
      for (std::size_t i = 0; i + 1 < set->size(); ++i) {
        const Integer diff = (*set)[i + 1] - (*set)[i];
        if (i % 2 == 0) {
          EXPECT_EQ((*set)[i] % step, 0);
          EXPECT_EQ((*set)[i + 1] % modulus, 0);
          EXPECT_TRUE(up.insert(diff).second) << "repeated in - jk step " << diff;
        } else {
          EXPECT_TRUE(down.insert(diff).second) << "repeated jk - in step " << diff;
        }
      }
      for (const Integer& d : up) EXPECT_FALSE(down.contains(d)) << d;
    }
  }
}

TEST(Coprime, InterleavedUsesSmallestMultipleAbove) {
  const IntegerSet s = interleaved_multiples(5, 7);  // 0,7,14 then one multiple of 5 per gap
  EXPECT_EQ(s, IntegerSet({0, 5, 7, 10, 14}));
}

TEST(EulerTour, SmallCases) {
  EXPECT_EQ(eulerian_tour(2).visits, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(eulerian_tour(3).visits, (std::vector<std::size_t>{1, 2, 1, 3, 2, 3, 1}));
  EXPECT_EQ(eulerian_tour(7).visits,
            (std::vector<std::size_t>{1, 2, 1, 3, 1, 4, 1, 5, 1, 6, 1, 7, 2, 3, 2, 4, 2, 5, 2, 6, 2, 7,
                                      3, 4, 3, 5, 3, 6, 3, 7, 4, 5, 4, 6, 4, 7, 5, 6, 5, 7, 6, 7, 1}));
  EXPECT_THROW(eulerian_tour(1), std::invalid_argument);
}

TEST(EulerTour, ValidForManySizes) {
  for (std::size_t s = 2; s <= 30; ++s) {
    const EulerTour tour = eulerian_tour(s);
    EXPECT_EQ(tour.visits.size(), s * (s - 1) + 1);
    EXPECT_NO_THROW(validate(tour)) << s;
  }
}

TEST(EulerTour, ValidateRejectsBrokenTours) {
  EXPECT_NO_THROW(validate(EulerTour{3, {1, 2, 3, 1, 3, 2, 1}}));
  EXPECT_THROW(validate(EulerTour{3, {1, 2, 3, 1, 3, 2, 2}}), std::invalid_argument);
  EXPECT_THROW(validate(EulerTour{3, {1, 2, 1, 2, 3, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(validate(EulerTour{3, {2, 1, 3, 2, 3, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(validate(EulerTour{3, {1, 2, 3, 1}}), std::invalid_argument);
}

TEST(Q1, FromSmallSeed) {
  const VectorSeq q = q1_from_seed({0, 1, 3}, EulerTour{3, {1, 2, 3, 1, 3, 2, 1}});
  const auto c = q.coordinate(0);
  EXPECT_EQ(std::vector<std::int32_t>(c.begin(), c.end()), (std::vector<std::int32_t>{0, 1, 3, 0, 3, 1, 0}));
  EXPECT_TRUE(has_distinct_steps(q));
  EXPECT_TRUE(is_closed(q));
}

TEST(Q1, PublishedFixtureRoundTrips) {
  const EulerTour tour = paper_tour();
  EXPECT_EQ(tour.visits.size(), 43u);
  EXPECT_NO_THROW(validate(tour));
  const VectorSeq q = q1_from_seed(paper_seed(), tour);
  const auto got = q.coordinate(0);
  const auto expected = paper_q1();
  EXPECT_EQ(std::vector<std::int32_t>(got.begin(), got.end()), expected);
  EXPECT_TRUE(has_distinct_steps(q));
  // every nonzero difference of the seed appears exactly once
  std::multiset<std::int32_t> diffs;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) diffs.insert(q.at(i + 1, 0) - q.at(i, 0));
  const IntegerSet d = difference_set(paper_seed(), paper_seed());
  EXPECT_EQ(diffs.size(), d.size() - 1);
  for (const Integer& x : d) EXPECT_EQ(diffs.count(static_cast<std::int32_t>(x)), x == 0 ? 0u : 1u);
}

TEST(Q1, RejectsBadSeeds) {
  EXPECT_THROW(q1_from_seed({0, 1, 2}, eulerian_tour(3)), std::invalid_argument);
  EXPECT_THROW(q1_from_seed({1, 2, 4}, eulerian_tour(3)), std::invalid_argument);
  EXPECT_THROW(q1_from_seed({0, 1, 3, 7}, eulerian_tour(3)), std::invalid_argument);
}

TEST(QStep, BlockStructure) {
  const VectorSeq q1 = q1_from_seed({0, 1, 3}, eulerian_tour(3));
  const VectorSeq q2 = q_step(q1, q1);
  ASSERT_EQ(q2.size(), 49u);
  ASSERT_EQ(q2.dim(), 2u);
  EXPECT_TRUE(steps_pairwise_distinct(q2));
  EXPECT_EQ(steps(q2).size(), 48u);
  EXPECT_TRUE(is_closed(q2));
  for (std::size_t block = 0; block < 7; ++block) {
    for (std::size_t j = 0; j < 7; ++j) {
      EXPECT_EQ(q2.at(block * 7 + j, 0), q1.at(j, 0));
      if (block == 0) {
        EXPECT_EQ(q2.at(j, 1), q1.at(0, 0));
      } else {
        EXPECT_EQ(q2.at(block * 7 + j, 1), j % 2 == 0 ? q1.at(block, 0) : q1.at(block - 1, 0));
      }
    }
    if (block > 0) {
      // step into a block only moves the new coordinate
      EXPECT_EQ(q2.at(block * 7, 0) - q2.at(block * 7 - 1, 0), 0);
    }
  }
}

TEST(QStep, DistinctStepsUpToDepthThree) {
  for (const IntegerSet& seed : {IntegerSet{0, 1, 3}, paper_seed()}) {
    const VectorSeq q1 = q1_from_seed(seed, eulerian_tour(seed.size()));
    VectorSeq qk = q1;
    for (std::size_t k = 2; k <= 3; ++k) {
      qk = q_step(qk, q1);
      EXPECT_EQ(qk.dim(), k);
      EXPECT_EQ(qk.size(), static_cast<std::size_t>(std::pow(q1.size(), k)));
      EXPECT_TRUE(has_distinct_steps(qk));
      EXPECT_TRUE(is_closed(qk));
      if (seed.size() == 3) EXPECT_TRUE(steps_pairwise_distinct(qk));
    }
  }
}

TEST(QStep, RejectsEvenLengthOrWideQ1) {
  VectorSeq even(1, 4, 5);
  const VectorSeq q1 = q1_from_seed({0, 1, 3}, eulerian_tour(3));
  EXPECT_THROW(q_step(q1, even), std::invalid_argument);
  EXPECT_THROW(q_step(even, q1), std::invalid_argument);
  EXPECT_THROW(q_step(q1, q_step(q1, q1)), std::invalid_argument);
}

TEST(Encode, Examples) {
  VectorSeq v(2, 1, 12);
  v.coordinate(0)[0] = 3;
  v.coordinate(1)[0] = 12;
  EXPECT_EQ(encode_b(v, 100), (std::vector<Integer>{1203}));
  EXPECT_THROW(encode_b(v, 24), std::invalid_argument);
  EXPECT_NO_THROW(encode_b(v, 25));

  const VectorSeq q1 = q1_from_seed(paper_seed(), paper_tour());
  const auto b = encode_b(q1, 100);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], q1.at(i, 0));
}

TEST(Assemble, Examples) {
  const VectorSeq q1 = q1_from_seed(paper_seed(), paper_tour());
  const IntegerSet a = assemble_a(encode_b(q1, 100), 100, 1);
  ASSERT_EQ(a.size(), 43u);
  EXPECT_EQ(a[0], 100);
  EXPECT_EQ(a[1], 203);
  EXPECT_EQ(a[2], 312);
  EXPECT_TRUE(is_dcd(a));
  EXPECT_THROW(assemble_a(std::vector<Integer>{Integer(100)}, 100, 1), std::invalid_argument);
  EXPECT_THROW(assemble_a(std::vector<Integer>{Integer(-1)}, 100, 1), std::invalid_argument);
}

TEST(SeedConstruction, DefaultBase) {
  EXPECT_EQ(default_base(paper_seed()), 100);
  EXPECT_EQ(default_base({0, 1, 3}), 10);
  EXPECT_EQ(default_base({0, 1, 5}), 100);
}

TEST(SeedConstruction, FrozenCountsPublishedSeed) {
  const SeedConstruction k1 = sidon_seed_construction(paper_seed(), 1);
  EXPECT_EQ(k1.a.size(), 43u);
  EXPECT_TRUE(is_dcd(k1.a));
  EXPECT_EQ(k1.a[0], 100);
  EXPECT_EQ(k1.a[1], 201);
  EXPECT_EQ(k1.a[2], 300);
  EXPECT_EQ(sumset_size_streaming(k1.a, k1.a), 694u);
  EXPECT_EQ(sumset(IntegerSet(k1.b), IntegerSet(k1.b)).size(), 28u);

  SeedConstructionOptions published;
  published.paper_tour = true;
  const SeedConstruction k1p = sidon_seed_construction(paper_seed(), 1, published);
  EXPECT_EQ(k1p.a[1], 203);
  EXPECT_EQ(sumset_size_streaming(k1p.a, k1p.a), 795u);
  EXPECT_LE(795u, 2408u);

  const SeedConstruction k2 = sidon_seed_construction(paper_seed(), 2);
  EXPECT_EQ(k2.a.size(), 1849u);
  EXPECT_TRUE(is_dcd(k2.a));
  const IntegerSet b2(k2.b);
  EXPECT_EQ(sumset_size_streaming(b2, b2), 784u);
  EXPECT_EQ(sumset_size_streaming(k2.a, k2.a), 471325u);

  const SeedConstruction k2p = sidon_seed_construction(paper_seed(), 2, published);
  EXPECT_EQ(sumset_size_streaming(k2p.a, k2p.a), 609213u);
}

TEST(SeedConstruction, FrozenCountsSmallSeed) {
  const IntegerSet seed{0, 1, 3};
  struct Row {
    std::size_t k, size, sums, b_sums;
  };
  for (const Row& row : {Row{1, 7, 27, 6}, Row{2, 49, 752, 36}, Row{3, 343, 19713, 216}}) {
    const SeedConstruction c = sidon_seed_construction(seed, row.k);
    EXPECT_EQ(c.a.size(), row.size);
    EXPECT_TRUE(is_dcd(c.a));
    EXPECT_EQ(sumset(c.a, c.a).size(), row.sums);
    const IntegerSet b(c.b);
    EXPECT_EQ(sumset(b, b).size(), row.b_sums);
    EXPECT_LE(row.sums, 2 * static_cast<std::size_t>(std::pow(6, row.k) * std::pow(7, row.k)));
  }
  // default base 10, so a_i = b_i + i * 100
  const SeedConstruction k2 = sidon_seed_construction(seed, 2);
  EXPECT_EQ(k2.base, 10);
  EXPECT_EQ(k2.a[0], 100);
  EXPECT_EQ(k2.a[1], 201);
  EXPECT_EQ(k2.a[2], 300);
}

TEST(SeedConstruction, PublishedSeedDepthThreeIsDcd) {
  const SeedConstruction k3 = sidon_seed_construction(paper_seed(), 3);
  EXPECT_EQ(k3.a.size(), 79507u);
  EXPECT_TRUE(is_dcd(k3.a));
  const IntegerSet b(k3.b);
  EXPECT_LE(sumset_size_streaming(b, b), 21952u);
}

TEST(SeedConstruction, RejectsBadInput) {
  EXPECT_THROW(sidon_seed_construction({0, 1, 2}, 1), std::invalid_argument);
  EXPECT_THROW(sidon_seed_construction({0, 1, 3}, 0), std::invalid_argument);
  EXPECT_THROW(sidon_seed_construction({0, 1, 3}, 1, SeedConstructionOptions{Integer(5), false}),
               std::invalid_argument);
  SeedConstructionOptions published;
  published.paper_tour = true;
  EXPECT_THROW(sidon_seed_construction({0, 1, 3}, 1, published), std::invalid_argument);
}

TEST(Exponent, Values) {
  EXPECT_NEAR(construction_exponent(paper_seed()), std::log(43.0 / 28.0) / std::log(43.0), 1e-15);
  EXPECT_NEAR(construction_exponent(paper_seed()), 0.11406, 1e-5);
  EXPECT_NEAR(construction_exponent({0, 1, 3}), 0.07921777883839824, 1e-12);
  EXPECT_DOUBLE_EQ(construction_exponent({0, 1}), 0.0);
  EXPECT_THROW(construction_exponent({0}), std::invalid_argument);
  EXPECT_THROW(construction_exponent({0, 1, 2}), std::invalid_argument);
}
