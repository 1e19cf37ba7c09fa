#include "dcdsum/json.hpp"

namespace dcdsum {

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

Json to_json(const CrossingStats& stats) {
  Json j;
  j["crossings"] = stats.crossings;
  j["intersections"] = stats.intersections;
  j["maxTranslatePairCrossings"] = stats.max_translate_pair_crossings;
  j["degreeSequence"] = stats.degree_sequence;
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["name"] = report.name;
  j["relation"] = to_string(report.relation);
  j["mode"] = to_string(report.mode);
  j["preconditionMet"] = report.precondition_met;
  j["satisfied"] = report.satisfied;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
  j["note"] = report.note;
  Json context = Json::object();
  for (const auto& [key, value] : report.context) {
    std::visit([&](const auto& v) { context[key] = v; }, value);
  }
  j["context"] = std::move(context);
  return j;
}

Json to_json(std::span<const BoundReport> reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Json to_json(const SeedScore& score) {
  return Json{{"sums", score.sums}, {"diffs", score.diffs}, {"score", score.score}};
}

Json to_json(const ExponentOptimum& optimum) {
  return Json{{"xStar", optimum.x_star}, {"fStar", optimum.f_star}, {"iterations", optimum.iterations}};
}

}  // namespace dcdsum
