#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skein/report.hpp"

namespace skein {

/// One acceptance criterion. `suite` is the name selectable from the CLI.
struct Criterion {
  int id = 0;
  std::string suite;
  std::string title;
  std::function<CheckReport()> run;
};

/// Criteria 1..10 in order. Randomized parts use fixed seeds.
const std::vector<Criterion>& acceptance_criteria();

/// Suite names in first-appearance order.
std::vector<std::string> suite_names();

/// Criteria belonging to a suite; empty for an unknown name.
std::vector<Criterion> suite_criteria(const std::string& suite);

CheckReport check_main_theorem();
CheckReport check_poly_table();
CheckReport check_phi();
CheckReport check_low_orders();
CheckReport check_skein_relation();
CheckReport check_chi_algebra();
CheckReport check_invariance();
CheckReport check_symmetries();
CheckReport check_star_algebra();
CheckReport check_differentiability();

}  // namespace skein
