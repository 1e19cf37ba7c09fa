#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "cli/manifest.hpp"
#include "cli/reproduce.hpp"
#include "dcdsum/arc_graph.hpp"
#include "dcdsum/bounds.hpp"
#include "dcdsum/constructions.hpp"
#include "dcdsum/json.hpp"
#include "dcdsum/set_io.hpp"
#include "dcdsum/sidon.hpp"
#include "dcdsum/sumset_count.hpp"

namespace dcdsum::cli {
namespace fs = std::filesystem;

namespace {

// Sets above this size need --heavy before |A+A| is counted.
constexpr std::size_t kLightSumsetLimit = 5000;

struct Options {
  std::string a_path, b_path, json_path, csv_path, manifest_path, out_prefix;
  std::string seed = "paper";
  std::size_t k = 1;
  std::int64_t t = 1;
  std::string base;
  bool heavy = false;
  bool paper_tour = false;
  bool oracle = false;
  std::size_t size = 0;
  std::int64_t max_element = 0;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int construct_coprime();
  int construct_sidon_seed();
  int analyze();
  int crossings();
  int check_all();
  int sidon_search_cmd();
  int sidon_optimize_cmd();
  int reproduce_paper();

 private:
  IntegerSet load(const std::string& path, RunManifest& manifest) {
    IntegerSet set = read_set_file(path);
    manifest.add_input(path);
    return set;
  }

  // Writes the document to --json or stdout, then the manifest.
  void emit(const Json& doc, RunManifest& manifest) {
    if (opt_.json_path.empty()) {
      out_ << doc.dump(2) << '\n';
    } else {
      write_json_file(opt_.json_path, doc);
      manifest.outputs.push_back(opt_.json_path);
    }
    write_manifest(manifest, opt_.json_path);
  }

  void write_manifest(RunManifest& manifest, const std::string& primary) {
    manifest.tool_version = tool_version();
    std::string path = opt_.manifest_path;
    if (path.empty() && !primary.empty()) path = primary + ".manifest.json";
    if (path.empty()) {
      // stdout-only runs: dcdsum-<command>.manifest.json in the working directory
      path = "dcdsum-" + manifest.command + ".manifest.json";
      std::replace(path.begin(), path.end(), ' ', '-');
    }
    write_json_file(path, manifest.to_json());
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

Json sizes_json(std::initializer_list<std::pair<const char*, Json>> items) {
  Json j = Json::object();
  for (const auto& [k, v] : items) j[k] = v;
  return j;
}

int Runner::construct_coprime() {
  RunManifest manifest{"construct coprime", {{"t", std::to_string(opt_.t)}}, {}, {}, {}};
  const CoprimeConstruction c = coprime_construction(opt_.t);
  const auto& p = c.params;
  const IntegerSet sums = sumset(c.a, c.b);
  bool divisible = true;
  for (const Integer& x : sums) {
    divisible = divisible && (x % p.a == 0 || x % p.b == 0 || x % p.c == 0 || x % p.d == 0);
  }

  Json doc;
  doc["command"] = "construct coprime";
  doc["params"] = sizes_json({{"t", opt_.t},
                              {"a", integer_json(p.a)},
                              {"b", integer_json(p.b)},
                              {"c", integer_json(p.c)},
                              {"d", integer_json(p.d)},
                              {"n", integer_json(p.n)},
                              {"k", integer_json(p.k)},
                              {"m", integer_json(p.m)},
                              {"r", integer_json(p.r)}});
  doc["sizes"] = sizes_json({{"|A|", c.a.size()}, {"|B|", c.b.size()}, {"|A+B|", sums.size()}});
  doc["checks"] = sizes_json({{"aIsDcd", is_dcd(c.a)},
                              {"bIsDcd", is_dcd(c.b)},
                              {"maxA<kn/2", c.a.max() < p.k * p.n / 2},
                              {"sumsetWithin[0,abcd)", sums.min() >= 0 && sums.max() < p.a * p.b * p.c * p.d},
                              {"everySumDivisible", divisible},
                              {"|A+B|<4bcd", sums.size() < 4 * p.b * p.c * p.d}});
  doc["ratio|A+B|/(|A||B|^0.5)"] =
      static_cast<double>(sums.size()) / (static_cast<double>(c.a.size()) * std::sqrt(static_cast<double>(c.b.size())));

  if (!opt_.out_prefix.empty()) {
    const std::string a_file = opt_.out_prefix + "_A.txt";
    const std::string b_file = opt_.out_prefix + "_B.txt";
    write_set_file(a_file, c.a);
    write_set_file(b_file, c.b);
    manifest.outputs.push_back(a_file);
    manifest.outputs.push_back(b_file);
    const std::string json_path = opt_.json_path.empty() ? opt_.out_prefix + ".json" : opt_.json_path;
    write_json_file(json_path, doc);
    manifest.outputs.push_back(json_path);
    write_manifest(manifest, json_path);
    out_ << doc.dump(2) << '\n';
    return kExitOk;
  }
  emit(doc, manifest);
  return kExitOk;
}

int Runner::construct_sidon_seed() {
  RunManifest manifest{"construct sidon-seed",
                       {{"seed", opt_.seed},
                        {"k", std::to_string(opt_.k)},
                        {"paperTour", opt_.paper_tour ? "true" : "false"},
                        {"base", opt_.base.empty() ? "default" : opt_.base},
                        {"heavy", opt_.heavy ? "true" : "false"}},
                       {},
                       {},
                       {}};
  const IntegerSet seed = opt_.seed == "paper" ? paper_seed() : load(opt_.seed, manifest);
  SeedConstructionOptions options;
  options.paper_tour = opt_.paper_tour;
  if (!opt_.base.empty()) {
    auto parsed = parse_integer(opt_.base);
    if (!parsed || *parsed <= 0) throw std::invalid_argument("--base must be a positive integer");
    options.base = *parsed;
  }
  const SeedConstruction built = sidon_seed_construction(seed, opt_.k, options);
  const IntegerSet b_values{std::vector<Integer>(built.b)};
  const SeedScore score = seed_stats(seed);

  const Integer sums_pow = boost::multiprecision::pow(Integer(score.sums), static_cast<unsigned>(opt_.k));
  const Integer q1_pow = boost::multiprecision::pow(Integer(built.q1_length), static_cast<unsigned>(opt_.k));

  Json doc;
  doc["command"] = "construct sidon-seed";
  Json seed_json = Json::array();
  for (const Integer& x : seed) seed_json.push_back(integer_json(x));
  doc["params"] = sizes_json({{"seed", seed_json},
                              {"k", opt_.k},
                              {"base", integer_json(built.base)},
                              {"paperTour", opt_.paper_tour}});
  doc["sizes"] = sizes_json({{"|A|", built.a.size()}, {"|Q_1|", built.q1_length}});
  Json stats;
  stats["isDcd"] = is_dcd(built.a);
  stats["distinctBSums"] = sumset_size_streaming(b_values, b_values);
  stats["distinctBSumsBound"] = integer_json(sums_pow);
  stats["sumsetBound"] = integer_json(2 * sums_pow * q1_pow);
  if (built.a.size() <= kLightSumsetLimit || opt_.heavy) {
    const std::uint64_t s = sumset_size_streaming(built.a, built.a);
    stats["|A+A|"] = s;
    stats["log|A+A|/log|A|"] = std::log(static_cast<double>(s)) / std::log(static_cast<double>(built.a.size()));
  } else {
    stats["|A+A|"] = nullptr;
    stats["log|A+A|/log|A|"] = nullptr;
  }
  stats["c"] = construction_exponent(seed);
  stats["2-c"] = 2.0 - construction_exponent(seed);
  doc["stats"] = std::move(stats);

  if (!opt_.out_prefix.empty()) {
    const std::string a_file = opt_.out_prefix + "_A.txt";
    write_set_file(a_file, built.a);
    manifest.outputs.push_back(a_file);
    std::string json_path = opt_.json_path.empty() ? opt_.out_prefix + ".json" : opt_.json_path;
    write_json_file(json_path, doc);
    manifest.outputs.push_back(json_path);
    write_manifest(manifest, json_path);
    out_ << doc.dump(2) << '\n';
    return kExitOk;
  }
  emit(doc, manifest);
  return kExitOk;
}

int Runner::analyze() {
  RunManifest manifest{"analyze", {{"a", opt_.a_path}, {"b", opt_.b_path}}, {}, {}, {}};
  const IntegerSet a = load(opt_.a_path, manifest);
  const IntegerSet b = load(opt_.b_path, manifest);
  const RepProfile profile = representation_profile(a, b);
  const auto hist = profile.multiplicity_histogram();

  Json doc;
  doc["|A|"] = a.size();
  doc["|B|"] = b.size();
  doc["|A+B|"] = profile.support_size();
  doc["|A-B|"] = difference_set(a, b).size();
  doc["E_2"] = integer_json(energy_exact(profile, 2));
  doc["E_1.5"] = energy(profile, 1.5).value;
  doc["maxMultiplicity"] = profile.max_multiplicity();
  Json h = Json::array();
  for (std::size_t r = 1; r < hist.size(); ++r) {
    if (hist[r] != 0) h.push_back(Json{{"multiplicity", r}, {"count", hist[r]}});
  }
  doc["multiplicityHistogram"] = std::move(h);
  doc["aIsDcd"] = is_dcd(a);
  doc["aIsConvex"] = is_convex(a);

  if (!opt_.csv_path.empty()) {
    std::ofstream csv(opt_.csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + opt_.csv_path);
    csv << "multiplicity,count\n";
    for (std::size_t r = 1; r < hist.size(); ++r) {
      if (hist[r] != 0) csv << r << ',' << hist[r] << '\n';
    }
    manifest.outputs.push_back(opt_.csv_path);
  }
  emit(doc, manifest);
  return kExitOk;
}

int Runner::crossings() {
  RunManifest manifest{"crossings",
                       {{"a", opt_.a_path}, {"b", opt_.b_path}, {"oracle", opt_.oracle ? "true" : "false"}},
                       {},
                       {},
                       {}};
  const IntegerSet a = load(opt_.a_path, manifest);
  const IntegerSet b = load(opt_.b_path, manifest);
  const ArcGraph g = build_sum_graph(a, b);
  CrossingStats stats = crossing_stats(g);
  if (opt_.oracle) {
    const auto cr = count_crossings_oracle(g);
    const auto in = count_intersections(g);
    if (cr != stats.crossings || in != stats.intersections) {
      err_ << "fast and brute-force counts disagree\n";
      return kExitBoundViolation;
    }
  }
  emit(to_json(stats), manifest);
  return kExitOk;
}

int Runner::check_all() {
  RunManifest manifest{"check all", {{"a", opt_.a_path}, {"b", opt_.b_path}}, {}, {}, {}};
  const IntegerSet a = load(opt_.a_path, manifest);
  const IntegerSet b = load(opt_.b_path, manifest);
  const auto reports = run_all_checks(Instance(a, b));
  emit(to_json(reports), manifest);
  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.violated()) {
      err_ << "bound violated: " << to_json(r).dump() << '\n';
      code = kExitBoundViolation;
    }
  }
  return code;
}

int Runner::sidon_search_cmd() {
  RunManifest manifest{"sidon search",
                       {{"size", std::to_string(opt_.size)}, {"max", std::to_string(opt_.max_element)}},
                       {},
                       {},
                       {}};
  const auto sets = sidon_search(opt_.size, opt_.max_element);
  Json doc;
  doc["size"] = opt_.size;
  doc["maxElement"] = opt_.max_element;
  doc["count"] = sets.size();
  Json list = Json::array();
  for (const auto& s : sets) {
    Json elems = Json::array();
    for (const Integer& x : s) elems.push_back(integer_json(x));
    list.push_back(std::move(elems));
  }
  doc["sets"] = std::move(list);
  if (!sets.empty()) doc["stats"] = to_json(seed_stats(sets.front()));
  emit(doc, manifest);
  return kExitOk;
}

int Runner::sidon_optimize_cmd() {
  RunManifest manifest{"sidon optimize", {}, {}, {}, {}};
  emit(to_json(optimize_exponent()), manifest);
  return kExitOk;
}

int Runner::reproduce_paper() {
  RunManifest manifest{"reproduce-paper", {{"heavy", opt_.heavy ? "true" : "false"}}, {}, {}, {}};
  const auto rows = reproduce_rows(opt_.heavy);
  print_table(out_, rows);
  const Json doc = rows_json(rows);
  if (!opt_.json_path.empty()) {
    write_json_file(opt_.json_path, doc);
    manifest.outputs.push_back(opt_.json_path);
  }
  if (!opt_.csv_path.empty()) {
    std::ofstream csv(opt_.csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + opt_.csv_path);
    write_csv(csv, rows);
    manifest.outputs.push_back(opt_.csv_path);
  }
  write_manifest(manifest, opt_.json_path);
  return doc["allMatch"].get<bool>() ? kExitOk : kExitBoundViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Sumsets of sets with distinct consecutive differences", "dcdsum"};
  app.require_subcommand(1);
  app.add_option("--manifest", opt.manifest_path, "Where to write the run manifest");

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--a", opt.a_path, "Set file for A")->required();
    cmd->add_option("--b", opt.b_path, "Set file for B")->required();
    cmd->add_option("--json", opt.json_path, "Write JSON here instead of stdout");
  };

  auto* construct = app.add_subcommand("construct", "Generate one of the explicit constructions");
  construct->require_subcommand(1);
  auto* coprime = construct->add_subcommand("coprime", "Coprime pair (A, B) for parameter t");
  coprime->add_option("--t", opt.t, "Parameter t >= 1")->required();
  coprime->add_option("--out", opt.out_prefix, "Write PREFIX_A.txt, PREFIX_B.txt and PREFIX.json");
  coprime->add_option("--json", opt.json_path, "Sidecar JSON path");
  auto* sidon_seed = construct->add_subcommand("sidon-seed", "Sidon-seeded recursive set");
  sidon_seed->add_option("--seed", opt.seed, "'paper' or a set file")->default_val("paper");
  sidon_seed->add_option("--k", opt.k, "Recursion depth k >= 1")->required();
  sidon_seed->add_option("--base", opt.base, "Encoding base (default: smallest power of ten > 2 max S)");
  sidon_seed->add_flag("--paper-tour", opt.paper_tour, "Use the published Euler tour");
  sidon_seed->add_flag("--heavy", opt.heavy, "Count |A+A| even for large A");
  sidon_seed->add_option("--out", opt.out_prefix, "Write PREFIX_A.txt and PREFIX.json");
  sidon_seed->add_option("--json", opt.json_path, "Sidecar JSON path");

  auto* analyze = app.add_subcommand("analyze", "Sumset, difference set, energies, multiplicities");
  add_pair(analyze);
  analyze->add_option("--csv", opt.csv_path, "Multiplicity histogram as CSV");

  auto* crossings = app.add_subcommand("crossings", "Crossing statistics of the sum graph");
  add_pair(crossings);
  crossings->add_flag("--oracle", opt.oracle, "Cross-check against the quadratic counters");

  auto* check = app.add_subcommand("check", "Evaluate inequalities");
  check->require_subcommand(1);
  auto* check_all = check->add_subcommand("all", "Run every checker on (A, B)");
  add_pair(check_all);

  auto* sidon = app.add_subcommand("sidon", "Sidon set search and exponent optimization");
  sidon->require_subcommand(1);
  auto* search = sidon->add_subcommand("search", "Enumerate Sidon sets with min 0");
  search->add_option("--size", opt.size, "Number of elements")->required();
  search->add_option("--max", opt.max_element, "Largest allowed element")->required();
  search->add_option("--json", opt.json_path, "Write JSON here instead of stdout");
  auto* optimize = sidon->add_subcommand("optimize", "Maximize the exponent over seed size");
  optimize->add_option("--json", opt.json_path, "Write JSON here instead of stdout");

  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute every published number");
  reproduce->add_option("--json", opt.json_path, "Comparison table as JSON");
  reproduce->add_option("--csv", opt.csv_path, "Comparison table as CSV");
  reproduce->add_flag("--heavy", opt.heavy, "Include the k = 3 construction");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  Runner runner(opt, out, err);
  try {
    if (coprime->parsed()) return runner.construct_coprime();
    if (sidon_seed->parsed()) return runner.construct_sidon_seed();
    if (analyze->parsed()) return runner.analyze();
    if (crossings->parsed()) return runner.crossings();
    if (check_all->parsed()) return runner.check_all();
    if (search->parsed()) return runner.sidon_search_cmd();
    if (optimize->parsed()) return runner.sidon_optimize_cmd();
    if (reproduce->parsed()) return runner.reproduce_paper();
  } catch (const SetFileError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dcdsum::cli
