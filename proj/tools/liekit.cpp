// liekit: verification suites, format emitters, the lattice simulator and the
// Lorentz classifier behind one command line.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 I/O or input-file error.

#include "liekit/finitegroup.hpp"
#include "liekit/lorentz.hpp"
#include "liekit/matrix_io.hpp"
#include "liekit/noether.hpp"
#include "liekit/so3su2.hpp"
#include "liekit/su3flavor.hpp"
#include "liekit/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <map>

namespace {

using namespace liekit;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string out;
  bool json = false;
  bool parallel = false;
  bool no_timestamp = false;
};

struct EmitArgs {
  std::string what;
  std::string path;
  std::string group = "c4";
  std::string matrix = "gell-mann-8";
  bool with_y = false;
};

struct NoetherArgs {
  LatticeConfig cfg;
  std::string ic = "gaussian";
  std::string out;
  int refine = 0;
};

void print_summary(const Report& r, std::ostream& os) {
  int failed = 0;
  for (const auto& c : r.findings.checks) failed += c.pass ? 0 : 1;
  os << r.suite << ": " << r.findings.checks.size() << " checks, " << failed << " failed, "
     << r.findings.discrepancies.size() << " discrepancies (seed " << r.seed << ")\n";
  for (const auto& c : r.findings.checks)
    if (!c.pass)
      os << "  FAIL " << c.name << ": " << c.value << (c.bound == Bound::upper ? " > " : " < ") << c.tolerance
         << "  [" << c.ref << "]\n";
  for (const auto& d : r.findings.discrepancies) os << "  note " << d.id << ": " << d.computed << "\n";
}

int run_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  opt.seed = a.seed;
  opt.tol = a.tol;
  opt.parallel = a.parallel;
  Report r = run_suite(a.suite, opt);
  if (!a.no_timestamp) r.timestamp = utc_timestamp();
  const std::string text = dump_report(r);
  if (!a.out.empty()) write_text_file(a.out, text);
  if (a.json) std::cout << text;
  else print_summary(r, std::cout);
  if (const Check* c = r.first_failure()) {
    std::cerr << "first failure: " << c->name << "\n";
    return kCheckFailed;
  }
  return kPass;
}

std::map<std::string, ComplexMatrix> named_matrices() {
  std::map<std::string, ComplexMatrix> m;
  for (Axis ax : kAxes) {
    const std::string s = to_string(ax);
    m["pauli-" + s] = pauli(ax);
    m["so3-" + s] = so3_generator(ax);
    m["lorentz-j" + s] = lorentz_generator(GeneratorKind::rotation, ax);
    m["lorentz-k" + s] = lorentz_generator(GeneratorKind::boost, ax);
    m["quaternion-" + std::string(ax == Axis::x ? "i" : ax == Axis::y ? "j" : "k")] = quaternion_unit_matrix(ax);
  }
  for (int a = 1; a <= 8; ++a) m["gell-mann-" + std::to_string(a)] = gell_mann(a);
  m["parity-tp"] = parity_tp();
  m["time-reversal-tt"] = time_reversal_tt();
  m["metric"] = minkowski_metric();
  return m;
}

int run_emit(const EmitArgs& a) {
  std::string text;
  if (a.what == "weights-csv") {
    text = weights_csv(fundamental_weights(), a.with_y);
  } else if (a.what == "group-json") {
    const std::map<std::string, GroupPtr> groups = {
        {"c4", cyclic_group_c4()}, {"parity", parity_group()}, {"s3", symmetric_group_s3()}};
    const auto it = groups.find(a.group);
    if (it == groups.end()) throw UsageError("unknown group '" + a.group + "' (c4, parity, s3)");
    text = group_to_json(*it->second).dump(2) + "\n";
  } else if (a.what == "matrix-json") {
    const auto all = named_matrices();
    const auto it = all.find(a.matrix);
    if (it == all.end()) throw UsageError("unknown matrix '" + a.matrix + "'");
    text = matrix_to_json(it->second).dump(2) + "\n";
  } else {
    throw UsageError("unknown format '" + a.what + "' (weights-csv, group-json, matrix-json)");
  }
  write_text_file(a.path, text);
  return kPass;
}

int run_noether(NoetherArgs a) {
  try {
    a.cfg.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (a.refine == 1 || a.refine < 0) throw UsageError("--refine needs at least 2 levels");
  InitialCondition ic;
  try {
    ic = InitialCondition::parse(a.ic);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const ConservationResult r = conservation_report(a.cfg, ic);
  nlohmann::json j = to_json(r);
  if (a.refine >= 2) {
    const auto dt_runs = refinement_runs(a.cfg, ic, a.refine, false);
    const auto dx_runs = refinement_runs(a.cfg, ic, a.refine, true);
    j["convergence"] = {
        to_json(convergence_of(dt_runs, "relative energy drift",
                               [](const ConservationResult& c) { return c.energy_drift; })),
        to_json(convergence_of(dt_runs, "relative boost drift",
                               [](const ConservationResult& c) { return c.boost_drift; })),
        to_json(convergence_of(dx_runs, "max divergence residual", max_divergence))};
  }
  const std::string text = j.dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(a.out, text);
    std::cout << "energy drift " << r.energy_drift << ", momentum drift " << r.momentum_drift << ", boost drift "
              << r.boost_drift << ", max divergence " << max_divergence(r) << "\n";
  }
  return kPass;
}

int run_classify(const std::string& path) {
  const ComplexMatrix m = matrix_from_json(read_json_file(path));
  if (m.rows() != 4) throw FormatError("classify: expected a 4x4 matrix");
  if (!verify_lorentz(m)) {
    std::cerr << "not a Lorentz transformation: max |L eta L^T - eta| = " << lorentz_residual(m) << "\n";
    return kCheckFailed;
  }
  const LorentzClassification c = classify(m);
  std::cout << nlohmann::json{{"det", c.det}, {"lambda00", c.lambda00}, {"category", c.category}}.dump() << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group and Lie algebra verification toolkit"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", va.suite, "finite | lie | so3su2 | su3 | lorentz | poincare | noether | all")->required();
  verify->add_option("--seed", va.seed, "seed for every random draw");
  verify->add_option("--tol", va.tol, "algebraic tolerance");
  verify->add_option("--out", va.out, "write the JSON report here");
  verify->add_flag("--json", va.json, "print the JSON report instead of a summary");
  verify->add_flag("--parallel", va.parallel, "run the parts of 'all' concurrently");
  verify->add_flag("--no-timestamp", va.no_timestamp, "leave the timestamp null");

  EmitArgs ea;
  auto* emit = app.add_subcommand("emit", "write a data file");
  emit->add_option("what", ea.what, "weights-csv | group-json | matrix-json")->required();
  emit->add_option("path", ea.path, "output file")->required();
  emit->add_option("--group", ea.group, "c4 | parity | s3");
  emit->add_option("--matrix", ea.matrix, "pauli-x, so3-z, gell-mann-8, lorentz-kx, parity-tp, ...");
  emit->add_flag("--with-y", ea.with_y, "add the y = (2/sqrt3) x8 column");

  NoetherArgs na;
  auto* noether = app.add_subcommand("noether", "lattice Klein-Gordon simulator");
  noether->require_subcommand(1);
  auto* run = noether->add_subcommand("run", "evolve and report conserved charges");
  run->add_option("--dims", na.cfg.dims, "1 or 3");
  run->add_option("--grid", na.cfg.extent, "sites per dimension");
  run->add_option("--dx", na.cfg.dx);
  run->add_option("--dt", na.cfg.dt);
  run->add_option("--mass", na.cfg.mass);
  run->add_option("--steps", na.cfg.steps);
  run->add_option("--ic", na.ic, "gaussian | vacuum | mode:k | file:path");
  run->add_option("--sample", na.cfg.sample_every, "sample interval in steps");
  run->add_option("--out", na.out, "write the JSON report here");
  run->add_option("--refine", na.refine, "refinement levels for the convergence table");

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "classify a Lorentz matrix file");
  classify_cmd->add_option("matrix", classify_path, "matrix JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(va);
    if (emit->parsed()) return run_emit(ea);
    if (run->parsed()) return run_noether(na);
    if (classify_cmd->parsed()) return run_classify(classify_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
