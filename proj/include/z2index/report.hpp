#pragma once

// Serialized forms of index reports, tables, relation dumps and numeric
// summaries. Layouts are documented in docs/report-format.md.

#include <string>
#include <vector>

#include "json.hpp"

#include "z2index/kernel_ideal.hpp"
#include "z2index/numeric.hpp"

namespace z2index {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const IndexReport& report);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
IndexReport index_report_from_json(const nlohmann::json& j);

std::string render_text(const IndexReport& report);
/// Header "n,d,dimBasis,dimIdeal,cInIdeal,hind", one line per degree.
std::string render_csv(const IndexReport& report);

struct TableRow {
  int n = 0;
  int hind = 0;
  int theorem_lower = 0;
  int theorem_upper = 0;
  std::optional<int> theorem_exact;
  bool exploratory = false;
  bool truncated = false;
  bool consistent = true;

  /// Unset when no closed form exists for n.
  std::optional<bool> match() const;
};

struct IndexTable {
  std::vector<TableRow> rows;
  /// hind(n) >= hind(d) for every listed pair d | n.
  bool divisibility_monotone = true;
  std::vector<std::string> violations;

  bool consistent() const;
};

/// Builds the table from finished reports, in the given order.
IndexTable make_table(const std::vector<IndexReport>& reports);

nlohmann::json to_json(const IndexTable& table);
std::string render_text(const IndexTable& table);
std::string render_csv(const IndexTable& table);

nlohmann::json relations_json(const KernelGenerators& gens, int only_degree = 0);
std::string relations_text(const KernelGenerators& gens, int only_degree = 0);

nlohmann::json to_json(const numeric::NumericSummary& s);
std::string render_text(const numeric::NumericSummary& s);

}  // namespace z2index
