#pragma once

#include <span>

#include <nlohmann/json.hpp>

#include "dcdsum/arc_graph.hpp"
#include "dcdsum/bounds.hpp"
#include "dcdsum/integer.hpp"
#include "dcdsum/sidon.hpp"

namespace dcdsum {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in int64, decimal string otherwise.
Json integer_json(const Integer& value);

/// Keys: crossings, intersections, maxTranslatePairCrossings, degreeSequence.
Json to_json(const CrossingStats& stats);

/// Keys: name, relation, mode, preconditionMet, satisfied, lhs, rhs, ratio
/// (null when rhs <= 0), note, context (keys sorted).
Json to_json(const BoundReport& report);
Json to_json(std::span<const BoundReport> reports);

Json to_json(const SeedScore& score);
Json to_json(const ExponentOptimum& optimum);

}  // namespace dcdsum
