#include "cli/reproduce.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dcdsum/constructions.hpp"
#include "dcdsum/sidon.hpp"
#include "dcdsum/sumset_count.hpp"

namespace dcdsum::cli {
namespace {

class Table {
 public:
  void equal(std::string id, std::string description, const Integer& published, const Integer& computed) {
    add(std::move(id), std::move(description), to_string(published), integer_json(computed), "equal",
        published == computed);
  }

  void at_most(std::string id, std::string description, const Integer& bound, const Integer& computed) {
    add(std::move(id), std::move(description), "<= " + to_string(bound), integer_json(computed), "<=",
        computed <= bound);
  }

  void below(std::string id, std::string description, const Integer& bound, const Integer& computed) {
    add(std::move(id), std::move(description), "< " + to_string(bound), integer_json(computed), "<",
        computed < bound);
  }

  void close(std::string id, std::string description, const std::string& published, double target,
             double computed, double tolerance) {
    std::ostringstream check;
    check << "|computed - " << published << "| <= " << tolerance;
    add(std::move(id), std::move(description), published, computed, check.str(),
        std::abs(computed - target) <= tolerance);
  }

  void holds(std::string id, std::string description, std::string published, bool computed) {
    add(std::move(id), std::move(description), std::move(published), computed, "true", computed);
  }

  std::vector<ComparisonRow> take() { return std::move(rows_); }

 private:
  void add(std::string id, std::string description, std::string published, Json computed, std::string check,
           bool match) {
    rows_.push_back({std::move(id), std::move(description), std::move(published), std::move(computed),
                     std::move(check), match});
  }

  std::vector<ComparisonRow> rows_;
};

Integer ipow(std::uint64_t base, std::size_t exponent) {
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

void seed_rows(Table& table) {
  const IntegerSet seed = paper_seed();
  const SeedScore stats = seed_stats(seed);
  table.holds("seed.sidon", "{0,1,3,7,12,22,30} is a Sidon set", "Sidon", is_sidon(seed));
  table.equal("seed.sums", "|S+S| of the 7-element seed", 28, stats.sums);
  table.equal("seed.diffs", "|S-S| of the 7-element seed", 43, stats.diffs);
  table.close("seed.exponent", "c = log(43/28)/log(43)", "0.11406", 0.11406, construction_exponent(seed), 1e-5);

  const ExponentOptimum opt = optimize_exponent();
  table.close("optimum.f", "maximum of the seed-size objective", "0.114058", 0.114058, opt.f_star, 1e-5);
  table.close("optimum.x", "maximizer of the seed-size objective", "6.99618", 6.99618, opt.x_star, 1e-3);

  const double small = construction_exponent(IntegerSet{0, 1, 3});
  table.holds("small_seed.exponent_below_0.1",
              "c for S={0,1,3} is positive and a bit below 0.1",
              "a bit below 0.1", small < 0.1 && small > 0.0);
}

void fixture_rows(Table& table) {
  const EulerTour tour = paper_tour();
  bool valid = true;
  try {
    validate(tour);
  } catch (const std::invalid_argument&) {
    valid = false;
  }
  table.holds("fixture.tour_valid", "published 43-visit tour is an Euler tour of the complete digraph on 7",
              "Euler tour", valid);
  const VectorSeq q1 = q1_from_seed(paper_seed(), tour);
  const auto expected = paper_q1();
  const auto got = q1.coordinate(0);
  table.holds("fixture.q1_round_trip", "seed values along the published tour reproduce the published Q_1",
              "Q_1", std::equal(got.begin(), got.end(), expected.begin(), expected.end()));
  table.holds("fixture.q1_steps_distinct", "consecutive differences of Q_1 are distinct and nonzero",
              "all differences but 0", has_distinct_steps(q1) && is_closed(q1));
}

void seed_construction_rows(Table& table, std::size_t k, bool paper_tour) {
  const IntegerSet seed = paper_seed();
  SeedConstructionOptions options;
  options.paper_tour = paper_tour;
  const SeedConstruction built = sidon_seed_construction(seed, k, options);
  const std::string prefix = "k" + std::to_string(k) + (paper_tour ? ".paper_tour" : "");
  const std::string where = " (k=" + std::to_string(k) + (paper_tour ? ", published tour)" : ")");

  table.equal(prefix + ".size", "|A| = 43^k" + where, ipow(43, k), built.a.size());
  table.holds(prefix + ".dcd", "A has distinct consecutive differences" + where, "dcd", is_dcd(built.a));

  std::vector<Integer> distinct_b(built.b);
  const IntegerSet b_values(std::move(distinct_b));
  table.at_most(prefix + ".b_sums", "distinct b_i + b_j <= 28^k" + where, ipow(28, k),
                sumset_size_streaming(b_values, b_values));

  const Integer bound = 2 * ipow(28, k) * ipow(43, k);
  table.at_most(prefix + ".sumset", "|A+A| <= 28^k * 2 * 43^k" + where, bound,
                sumset_size_streaming(built.a, built.a));
}

void coprime_rows(Table& table) {
  const CoprimeConstruction c = coprime_construction(1);
  const auto& p = c.params;
  std::ostringstream abcd;
  abcd << p.a << ',' << p.b << ',' << p.c << ',' << p.d;
  table.holds("coprime.t1.abcd", "a,b,c,d = 6t+1, 6t+2, 6t+3, 6t+5 at t=1", "7,8,9,11", abcd.str() == "7,8,9,11");
  table.equal("coprime.t1.size_a", "|A| = n - 1 at t=1", p.n - 1, c.a.size());
  table.below("coprime.t1.max_a", "elements of A below kn/2 at t=1", p.k * p.n / 2, c.a.max());
  table.holds("coprime.t1.dcd", "A and B have distinct consecutive differences at t=1", "dcd",
              is_dcd(c.a) && is_dcd(c.b));

  const IntegerSet sums = sumset(c.a, c.b);
  table.below("coprime.t1.sumset", "|A+B| < 4bcd at t=1", 4 * p.b * p.c * p.d, sums.size());
  bool divisible = true;
  for (const Integer& x : sums) {
    divisible = divisible && (x % p.a == 0 || x % p.b == 0 || x % p.c == 0 || x % p.d == 0);
  }
  table.holds("coprime.t1.divisible", "every element of A+B divisible by one of a,b,c,d at t=1",
              "divisible by a, b, c or d", divisible);
  table.holds("coprime.t1.range", "A+B lies in [0, abcd) at t=1", "[0, abcd)",
              sums.min() >= 0 && sums.max() < p.a * p.b * p.c * p.d);
}

void constant_rows(Table& table) {
  table.close("const.thm_main", "1/sqrt(27)", "0.19", 0.19, 1.0 / std::sqrt(27.0), 0.005);
  table.close("const.one_over_27", "1/27", "0.037", 0.037, 1.0 / 27.0, 0.0005);
  table.holds("const.int_beats_cr", "1/27 < 0.0658", "1/27 < 0.0658", 1.0 / 27.0 < 0.0658);
}

}  // namespace

std::vector<ComparisonRow> reproduce_rows(bool heavy) {
  Table table;
  seed_rows(table);
  fixture_rows(table);
  seed_construction_rows(table, 1, false);
  seed_construction_rows(table, 1, true);
  seed_construction_rows(table, 2, false);
  seed_construction_rows(table, 2, true);
  if (heavy) seed_construction_rows(table, 3, false);
  coprime_rows(table);
  constant_rows(table);
  return table.take();
}

Json rows_json(const std::vector<ComparisonRow>& rows) {
  Json out;
  Json list = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    Json j;
    j["id"] = r.id;
    j["description"] = r.description;
    j["published"] = r.published;
    j["computed"] = r.computed;
    j["check"] = r.check;
    j["match"] = r.match;
    list.push_back(std::move(j));
    all = all && r.match;
  }
  out["rows"] = std::move(list);
  out["allMatch"] = all;
  return out;
}

void print_table(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << std::left << std::setw(34) << "id" << std::setw(28) << "published" << std::setw(22) << "computed"
      << "match\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(34) << r.id << std::setw(28) << r.published << std::setw(22) << r.computed.dump()
        << (r.match ? "yes" : "NO") << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "id,published,computed,match\n";
  for (const auto& r : rows) {
    std::string computed = r.computed.dump();
    if (computed.find(',') != std::string::npos || computed.find('"') != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : computed) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      computed = quoted + "\"";
    }
    out << r.id << ",\"" << r.published << "\"," << computed << ',' << (r.match ? "true" : "false") << '\n';
  }
}

}  // namespace dcdsum::cli
