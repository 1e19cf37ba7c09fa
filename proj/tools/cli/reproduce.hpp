#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcdsum/json.hpp"

namespace dcdsum::cli {

/// One published number next to its recomputation.
struct ComparisonRow {
  std::string id;
  std::string description;
  std::string published;
  Json computed;
  std::string check;  ///< how `computed` is compared with `published`
  bool match = false;
};

/// Recomputes every published constant and size. `heavy` adds the k = 3
/// recursive construction (about 3e9 sums counted with the streaming
/// counter).
std::vector<ComparisonRow> reproduce_rows(bool heavy);

Json rows_json(const std::vector<ComparisonRow>& rows);
void print_table(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace dcdsum::cli
