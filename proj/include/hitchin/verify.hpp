#pragma once

#include "hitchin/periods.hpp"

#include <string>
#include <vector>

namespace hitchin::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  periods::PeriodConfig periods{};
  double fdStep = 1e-3;
  double ratioTol = 1e-3;
  double fdSymTol = 1e-4;
};

// The acceptance criteria, one result each, in order.
std::vector<CriterionResult> run_suite(const SuiteOptions& opt = {});

}  // namespace hitchin::verify
