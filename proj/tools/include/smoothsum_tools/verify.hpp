#pragma once

#include <functional>
#include <string>
#include <vector>

#include "smoothsum_tools/table.hpp"

namespace smoothsum::tools {

/// quick: shortened ladders for smoke runs; desk: the full acceptance set.
enum class Level { quick, desk };

Level parse_level(const std::string& text);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;        // one line, deterministic
  std::vector<Table> tables;  // measurements, deterministic
  double seconds = 0.0;
  double time_limit = 0.0;    // 0: none
};

inline constexpr int kCriterionCount = 10;

/// Criteria 1 to 9. Criterion 10 needs the others and is run by run_acceptance.
CriterionResult run_criterion(int id, Level level);

using Progress = std::function<void(const CriterionResult&)>;

/// All ten criteria in order. Criterion 10 reruns 1 to 9 at 8 threads and
/// again at the current thread count and compares the rendered tables.
std::vector<CriterionResult> run_acceptance(Level level, const Progress& progress = {});

/// Tables of the given results rendered as CSV bodies, in order.
std::string render_tables(const std::vector<CriterionResult>& results);

/// Summary table: id, name, status, summary.
Table summary_table(const std::vector<CriterionResult>& results);

/// "[PASS] 1 oracle equivalence: ... (0.4 s)"
std::string result_line(const CriterionResult& r);

}  // namespace smoothsum::tools
