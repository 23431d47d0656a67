#pragma once

// The acceptance checks, shared by the acceptance binary and `seifert selftest`.

#include "seifert/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  std::optional<std::string> artifact_dir; // where the bicyclic discrepancy report is written
  std::uint64_t seed = 20181;
};

/// The lens space (0,o1|(3,2),(1,5)) with the Dih(Z_6 x Z_12) action generated by
/// (1/6,1/3), (0,1/12) and the fiber reversal, with the published z = 6, l = 12
/// choices and the published core orders 4 and 6.
char const *worked_example_json();
QuotientInput worked_example_input();

CheckResult check_worked_example();
CheckResult check_slope_invariance();
CheckResult check_cyclic_core_sweep();
CheckResult check_bicyclic_core_sweep(AcceptanceOptions const &options);
CheckResult check_lens_product();
CheckResult check_table_audit();
CheckResult check_dispatch(std::uint64_t seed);
CheckResult check_reversal_exclusion(std::uint64_t seed);
CheckResult check_invariant_properties(std::uint64_t seed);

std::vector<CheckResult> run_acceptance(AcceptanceOptions const &options);

/// "PASS [n] name (1.23 s / limit 10 s): detail"
std::string format_check(CheckResult const &r);
Json to_json(CheckResult const &r);

} // namespace seifert
