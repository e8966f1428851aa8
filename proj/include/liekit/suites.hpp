#pragma once

// Verification suites: each runs one module's checks and collects them into a
// Report. "all" runs every suite and merges the results in a fixed order.

#include "liekit/report.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  double tol = 1e-10;     // general algebraic tolerance
  bool parallel = false;  // run the parts of "all" concurrently, merged in suite order
};

/// finite, lie, so3su2, su3, lorentz, poincare, noether (the members of "all").
const std::vector<std::string>& suite_names();

std::map<std::string, double> default_tolerances(double tol);

/// Throws UsageError for an unknown name. The timestamp is left empty.
Report run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace liekit
