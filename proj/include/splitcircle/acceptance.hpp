#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace splitcircle {

// Every criterion demands full agreement; the rate is kept explicit so the
// report states what was required.
inline constexpr double kRequiredPassRate = 1.0;

struct AcceptanceConfig {
  int circle_cap = 9;            // largest graph handed to the circle oracle
  std::uint64_t seed = 20240611;
  int exhaustive_max_n = 7;      // criterion 1: all split graphs up to this size
  int random_graphs = 500;       // criterion 1: random graphs on 8 and 9 vertices
  int random_matrices = 500;     // criteria 4 and 5
  int script_max_k = 10;         // criterion 2
  int pairwise_max_k = 8;        // criterion 3
  int lc_max_n = 6;              // criterion 7
};

struct CriterionResult {
  int id = 0;
  std::string title;
  long checked = 0;
  long failed = 0;
  std::string detail;  // first failures or a short summary

  double pass_rate() const { return checked == 0 ? 1.0 : 1.0 - double(failed) / double(checked); }
  bool passed() const { return checked > 0 && pass_rate() >= kRequiredPassRate; }
};

CriterionResult check_characterization(const AcceptanceConfig& cfg);   // 1 and the data for 6
CriterionResult check_obstructions(const AcceptanceConfig& cfg);       // 2
CriterionResult check_minimality(const AcceptanceConfig& cfg);         // 3
CriterionResult check_two_nested_engine(const AcceptanceConfig& cfg);  // 4
CriterionResult check_nested_engine(const AcceptanceConfig& cfg);      // 5
CriterionResult check_models(const AcceptanceConfig& cfg);             // 6
CriterionResult check_local_complement(const AcceptanceConfig& cfg);   // 7
CriterionResult check_decompositions(const AcceptanceConfig& cfg);     // 8

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg, std::ostream* progress);

void print_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace splitcircle
