#include "liekit/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace liekit {

Check residual_check(std::string name, double residual, double tol, std::string ref) {
  return Check{std::move(name), residual, tol, std::isfinite(residual) && residual <= tol, std::move(ref)};
}

Check lower_bound_check(std::string name, double value, double minimum, std::string ref) {
  return Check{std::move(name), value, minimum, std::isfinite(value) && value >= minimum, std::move(ref), Bound::lower};
}

Check boolean_check(std::string name, bool ok, std::string ref) {
  return Check{std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(ref)};
}

void Findings::append(Findings other, const std::string& data_key) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& d : other.discrepancies) discrepancies.push_back(std::move(d));
  if (!data_key.empty()) {
    data[data_key] = std::move(other.data);
  } else {
    for (auto& [k, v] : other.data.items()) data[k] = v;
  }
}

bool Report::passed() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const {
  for (const auto& c : findings.checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

// JSON has no NaN/Inf; encode them as strings so a broken check still serialises.
nlohmann::json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v == 0 ? 0.0 : v;
}

}  // namespace

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name}, {"value", number(c.value)}, {"tolerance", number(c.tolerance)},
          {"bound", c.bound == Bound::upper ? "upper" : "lower"}, {"pass", c.pass}, {"ref", c.ref}};
}

nlohmann::json to_json(const Discrepancy& d) {
  return {{"id", d.id}, {"claimed", d.claimed}, {"computed", d.computed}, {"note", d.note}};
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["timestamp"] = r.timestamp ? nlohmann::json(*r.timestamp) : nlohmann::json(nullptr);
  j["seed"] = r.seed;
  j["tolerances"] = r.tolerances;
  j["passed"] = r.passed();
  const Check* first = r.first_failure();
  j["first_failure"] = first ? nlohmann::json(first->name) : nlohmann::json(nullptr);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.findings.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  nlohmann::json disc = nlohmann::json::array();
  for (const auto& d : r.findings.discrepancies) disc.push_back(to_json(d));
  j["discrepancies"] = std::move(disc);
  j["data"] = r.findings.data;
  return j;
}

std::string dump_report(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace liekit
