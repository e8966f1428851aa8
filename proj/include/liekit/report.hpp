#pragma once

// Verification reports: named checks with a residual or value, the tolerance
// it was judged against, and the claim it traces to; plus recorded
// disagreements between printed claims and computed results.

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liekit {

enum class Bound { upper, lower };

struct Check {
  std::string name;
  double value = 0;      // residual, or 1/0 for a boolean outcome
  double tolerance = 0;  // upper bound: pass iff value <= tolerance; lower bound: pass iff value >= tolerance
  bool pass = false;
  std::string ref;       // topic anchor of the claim being checked
  Bound bound = Bound::upper;
};

/// pass iff residual is finite and <= tol.
Check residual_check(std::string name, double residual, double tol, std::string ref);
/// pass iff value is finite and >= minimum (convergence orders).
Check lower_bound_check(std::string name, double value, double minimum, std::string ref);
/// value 0 when ok, 1 otherwise; tolerance 0.
Check boolean_check(std::string name, bool ok, std::string ref);

struct Discrepancy {
  std::string id;
  std::string claimed;
  std::string computed;
  std::string note;
};

/// Output of one module's verification routine.
struct Findings {
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;
  nlohmann::json data = nlohmann::json::object();

  void add(Check c) { checks.push_back(std::move(c)); }
  void flag(Discrepancy d) { discrepancies.push_back(std::move(d)); }
  void append(Findings other, const std::string& data_key = "");
};

struct Report {
  std::string suite;
  std::optional<std::string> timestamp;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  Findings findings;

  bool passed() const;
  const Check* first_failure() const;
};

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Discrepancy& d);
nlohmann::json to_json(const Report& r);

/// Pretty JSON, 2-space indent, trailing newline.
std::string dump_report(const Report& r);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace liekit
