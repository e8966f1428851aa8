#include "liekit/noether.hpp"

#include "liekit/matrix_io.hpp"
#include "liekit/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <numbers>

namespace liekit {

void LatticeConfig::validate() const {
  if (dims != 1 && dims != 3) throw PreconditionError("lattice: dims must be 1 or 3");
  if (extent < 8) throw PreconditionError("lattice: extent must be at least 8 sites");
  if (!(dx > 0) || !(dt > 0) || !std::isfinite(dx) || !std::isfinite(dt))
    throw PreconditionError("lattice: dx and dt must be positive");
  if (dt / dx > 0.5) throw PreconditionError("lattice: stability requires dt/dx <= 0.5");
  if (!(mass >= 0) || !std::isfinite(mass)) throw PreconditionError("lattice: mass must be non-negative");
  if (steps < 0) throw PreconditionError("lattice: steps must be non-negative");
  if (sample_every < 1) throw PreconditionError("lattice: sample interval must be positive");
}

std::size_t LatticeConfig::sites() const {
  std::size_t n = 1;
  for (int d = 0; d < dims; ++d) n *= static_cast<std::size_t>(extent);
  return n;
}

double LatticeConfig::cell_volume() const { return std::pow(dx, dims); }

namespace {

std::size_t stride(const LatticeConfig& cfg, int d) {
  std::size_t s = 1;
  for (int k = 0; k < d; ++k) s *= static_cast<std::size_t>(cfg.extent);
  return s;
}

int site_index(const LatticeConfig& cfg, std::size_t site, int d) {
  return static_cast<int>((site / stride(cfg, d)) % static_cast<std::size_t>(cfg.extent));
}

// Periodic neighbour tables, built once per lattice.
struct Grid {
  int dims;
  std::size_t sites;
  std::vector<std::array<std::size_t, 3>> plus, minus;

  explicit Grid(const LatticeConfig& cfg) : dims(cfg.dims), sites(cfg.sites()), plus(sites), minus(sites) {
    const auto n = static_cast<std::size_t>(cfg.extent);
    for (int d = 0; d < dims; ++d) {
      const std::size_t st = stride(cfg, d);
      for (std::size_t s = 0; s < sites; ++s) {
        const std::size_t i = (s / st) % n;
        plus[s][static_cast<std::size_t>(d)] = i + 1 < n ? s + st : s - (n - 1) * st;
        minus[s][static_cast<std::size_t>(d)] = i > 0 ? s - st : s + (n - 1) * st;
      }
    }
  }
};

void require_shape(const FieldState& s, const LatticeConfig& cfg) {
  if (s.phi.size() != cfg.sites() || s.pi.size() != cfg.sites())
    throw PreconditionError("field state does not match the lattice size");
}

double gradient_squared(const std::vector<double>& phi, const Grid& g, std::size_t s, double dx) {
  double sum = 0;
  for (int d = 0; d < g.dims; ++d) {
    const auto dd = static_cast<std::size_t>(d);
    const double fwd = (phi[g.plus[s][dd]] - phi[s]) / dx;
    const double bwd = (phi[s] - phi[g.minus[s][dd]]) / dx;
    sum += 0.5 * (fwd * fwd + bwd * bwd);
  }
  return sum;
}

double central(const std::vector<double>& phi, const Grid& g, std::size_t s, int d, double dx) {
  const auto dd = static_cast<std::size_t>(d);
  return (phi[g.plus[s][dd]] - phi[g.minus[s][dd]]) / (2 * dx);
}

double energy_at(const FieldState& st, const Grid& g, const LatticeConfig& cfg, std::size_t s) {
  const double p = st.pi[s];
  const double f = st.phi[s];
  return 0.5 * p * p + 0.5 * gradient_squared(st.phi, g, s, cfg.dx) + 0.5 * cfg.mass * cfg.mass * f * f;
}

double lagrangian_at(const FieldState& st, const Grid& g, const LatticeConfig& cfg, std::size_t s) {
  const double p = st.pi[s];
  const double f = st.phi[s];
  return 0.5 * p * p - 0.5 * gradient_squared(st.phi, g, s, cfg.dx) - 0.5 * cfg.mass * cfg.mass * f * f;
}

class Stepper {
public:
  explicit Stepper(const LatticeConfig& cfg) : cfg_(cfg), grid_(cfg), acc_(cfg.sites()) {}

  const Grid& grid() const { return grid_; }

  void step(FieldState& s) {
    const double h = cfg_.dt;
    accelerate(s.phi);
    for (std::size_t k = 0; k < s.pi.size(); ++k) s.pi[k] += 0.5 * h * acc_[k];
    for (std::size_t k = 0; k < s.phi.size(); ++k) s.phi[k] += h * s.pi[k];
    accelerate(s.phi);
    for (std::size_t k = 0; k < s.pi.size(); ++k) s.pi[k] += 0.5 * h * acc_[k];
    s.t += h;
  }

private:
  void accelerate(const std::vector<double>& phi) {
    const double inv_dx2 = 1.0 / (cfg_.dx * cfg_.dx);
    const double m2 = cfg_.mass * cfg_.mass;
    for (std::size_t s = 0; s < grid_.sites; ++s) {
      double lap = 0;
      for (int d = 0; d < grid_.dims; ++d) {
        const auto dd = static_cast<std::size_t>(d);
        lap += phi[grid_.plus[s][dd]] - 2 * phi[s] + phi[grid_.minus[s][dd]];
      }
      acc_[s] = lap * inv_dx2 - m2 * phi[s];
    }
  }

  LatticeConfig cfg_;
  Grid grid_;
  std::vector<double> acc_;
};

struct Moments {
  double energy = 0;
  std::vector<double> momentum;
  std::vector<double> energy_moment;  // sum eps x^i dV
  double abs_moment = 0;              // sum eps |x| dV
  std::vector<double> angular;
};

Moments moments(const FieldState& st, const Grid& g, const LatticeConfig& cfg) {
  const double dv = cfg.cell_volume();
  const auto nd = static_cast<std::size_t>(cfg.dims);
  Moments m;
  m.momentum.assign(nd, 0.0);
  m.energy_moment.assign(nd, 0.0);
  if (cfg.dims == 3) m.angular.assign(3, 0.0);
  std::array<double, 3> x{};
  std::array<double, 3> t_i0{};  // T^{i0} = -pi D0_i phi
  for (std::size_t s = 0; s < g.sites; ++s) {
    const double eps = energy_at(st, g, cfg, s);
    m.energy += eps;
    double r2 = 0;
    for (int d = 0; d < cfg.dims; ++d) {
      const auto dd = static_cast<std::size_t>(d);
      x[dd] = site_coordinate(cfg, s, d);
      const double dens = st.pi[s] * central(st.phi, g, s, d, cfg.dx);
      m.momentum[dd] += dens;
      t_i0[dd] = -dens;
      m.energy_moment[dd] += eps * x[dd];
      r2 += x[dd] * x[dd];
    }
    m.abs_moment += eps * std::sqrt(r2);
    if (cfg.dims == 3) {
      m.angular[0] += t_i0[1] * x[2] - t_i0[2] * x[1];
      m.angular[1] += t_i0[2] * x[0] - t_i0[0] * x[2];
      m.angular[2] += t_i0[0] * x[1] - t_i0[1] * x[0];
    }
  }
  m.energy *= dv;
  m.abs_moment *= dv;
  for (auto& v : m.momentum) v *= dv;
  for (auto& v : m.energy_moment) v *= dv;
  for (auto& v : m.angular) v *= dv;
  return m;
}

ChargeRecord record_from(const Moments& m, double t) {
  ChargeRecord r;
  r.t = t;
  r.energy = m.energy;
  r.momentum = m.momentum;
  r.angular_momentum = m.angular;
  r.boost.resize(m.momentum.size());
  for (std::size_t i = 0; i < m.momentum.size(); ++i) r.boost[i] = m.energy_moment[i] + t * m.momentum[i];
  return r;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs_of(const std::vector<double>& a) {
  double worst = 0;
  for (double v : a) worst = std::max(worst, std::abs(v));
  return worst;
}

// pi for a purely right-moving wave with the semi-discrete dispersion relation.
std::vector<double> right_moving_momentum(const std::vector<double>& phi, const LatticeConfig& cfg) {
  const auto n = phi.size();
  const double two_pi = 2 * std::numbers::pi;
  std::vector<std::complex<double>> twiddle(n);
  for (std::size_t k = 0; k < n; ++k) twiddle[k] = std::polar(1.0, -two_pi * double(k) / double(n));

  std::vector<std::complex<double>> spectrum(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += phi[j] * twiddle[(j * k) % n];
    long signed_k = k <= n / 2 ? long(k) : long(k) - long(n);
    if (signed_k == 0 || (n % 2 == 0 && k == n / 2)) {
      spectrum[k] = 0;
      continue;
    }
    const double kappa = two_pi * double(signed_k) / (double(n) * cfg.dx);
    const double lattice_k = 2.0 / cfg.dx * std::sin(kappa * cfg.dx / 2);
    const double omega = std::sqrt(cfg.mass * cfg.mass + lattice_k * lattice_k);
    spectrum[k] = std::complex<double>(0, signed_k > 0 ? -omega : omega) * acc;
  }
  std::vector<double> pi(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += spectrum[k] * std::conj(twiddle[(j * k) % n]);
    pi[j] = acc.real() / double(n);
  }
  return pi;
}

}  // namespace

double site_coordinate(const LatticeConfig& cfg, std::size_t site, int d) {
  return (site_index(cfg, site, d) - 0.5 * (cfg.extent - 1)) * cfg.dx;
}

double lagrangian_density(const FieldState& s, const LatticeConfig& cfg, std::size_t site) {
  require_shape(s, cfg);
  return lagrangian_at(s, Grid(cfg), cfg, site);
}

double energy_density(const FieldState& s, const LatticeConfig& cfg, std::size_t site) {
  require_shape(s, cfg);
  return energy_at(s, Grid(cfg), cfg, site);
}

StressTensorField stress_tensor(const FieldState& st, const LatticeConfig& cfg) {
  require_shape(st, cfg);
  const Grid g(cfg);
  StressTensorField out;
  out.components = cfg.dims + 1;
  const auto c = static_cast<std::size_t>(out.components);
  out.values.assign(g.sites * c * c, 0.0);
  std::array<double, 3> grad{};
  for (std::size_t s = 0; s < g.sites; ++s) {
    double* t = &out.values[s * c * c];
    for (int d = 0; d < cfg.dims; ++d) grad[static_cast<std::size_t>(d)] = central(st.phi, g, s, d, cfg.dx);
    const double lag = lagrangian_at(st, g, cfg, s);
    const double p = st.pi[s];
    t[0] = energy_at(st, g, cfg, s);
    for (std::size_t i = 1; i < c; ++i) {
      t[i] = p * grad[i - 1];      // T^0_i
      t[i * c] = -grad[i - 1] * p;  // T^i_0
      for (std::size_t j = 1; j < c; ++j) t[i * c + j] = -grad[i - 1] * grad[j - 1] - (i == j ? lag : 0.0);
    }
  }
  return out;
}

FieldState evolve(FieldState s, const LatticeConfig& cfg, int steps) {
  cfg.validate();
  require_shape(s, cfg);
  if (steps < 0) throw PreconditionError("evolve: negative step count");
  Stepper stepper(cfg);
  for (int n = 0; n < steps; ++n) stepper.step(s);
  return s;
}

ChargeRecord charges(const FieldState& s, const LatticeConfig& cfg) {
  require_shape(s, cfg);
  return record_from(moments(s, Grid(cfg), cfg), s.t);
}

std::vector<double> energy_moment(const FieldState& s, const LatticeConfig& cfg) {
  require_shape(s, cfg);
  return moments(s, Grid(cfg), cfg).energy_moment;
}

InitialCondition InitialCondition::parse(const std::string& spec) {
  InitialCondition ic;
  if (spec == "gaussian") return ic;
  if (spec == "vacuum") {
    ic.kind = InitialKind::vacuum;
    return ic;
  }
  if (spec.rfind("mode:", 0) == 0) {
    ic.kind = InitialKind::mode;
    try {
      std::size_t used = 0;
      ic.mode = std::stoi(spec.substr(5), &used);
      if (used != spec.size() - 5) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw PreconditionError("initial condition: bad mode number in '" + spec + "'");
    }
    return ic;
  }
  if (spec.rfind("file:", 0) == 0) {
    ic.kind = InitialKind::file;
    ic.path = spec.substr(5);
    return ic;
  }
  if (spec == "file") throw PreconditionError("initial condition: use file:<path>");
  if (std::filesystem::exists(spec)) {
    ic.kind = InitialKind::file;
    ic.path = spec;
    return ic;
  }
  throw PreconditionError("initial condition: unknown spec '" + spec + "'");
}

std::string InitialCondition::describe() const {
  switch (kind) {
    case InitialKind::gaussian: return "gaussian";
    case InitialKind::mode: return "mode:" + std::to_string(mode);
    case InitialKind::file: return "file:" + path;
    case InitialKind::vacuum: return "vacuum";
  }
  return "?";
}

FieldState make_initial_state(const LatticeConfig& cfg, const InitialCondition& ic) {
  cfg.validate();
  const std::size_t n = cfg.sites();
  FieldState s;
  s.phi.assign(n, 0.0);
  s.pi.assign(n, 0.0);
  const double length = cfg.domain_length();
  switch (ic.kind) {
    case InitialKind::vacuum: break;
    case InitialKind::mode:
      for (std::size_t k = 0; k < n; ++k)
        s.phi[k] = ic.amplitude * std::cos(2 * std::numbers::pi * ic.mode * site_index(cfg, k, 0) * cfg.dx / length);
      break;
    case InitialKind::gaussian: {
      const double w = ic.width > 0 ? ic.width : (cfg.dims == 1 ? 10.0 : 3.0);
      if (cfg.dims == 1) {
        const double k0 = 2 * std::numbers::pi * ic.cycles / length;
        for (std::size_t k = 0; k < n; ++k) {
          const double x = site_coordinate(cfg, k, 0);
          s.phi[k] = ic.amplitude * std::exp(-x * x / (2 * w * w)) * std::cos(k0 * x);
        }
        s.pi = right_moving_momentum(s.phi, cfg);
      } else {
        for (std::size_t k = 0; k < n; ++k) {
          double r2 = 0;
          for (int d = 0; d < cfg.dims; ++d) r2 += std::pow(site_coordinate(cfg, k, d), 2);
          s.phi[k] = ic.amplitude * std::exp(-r2 / (2 * w * w));
        }
      }
      break;
    }
    case InitialKind::file: {
      const nlohmann::json j = read_json_file(ic.path);
      try {
        s.phi = j.at("phi").get<std::vector<double>>();
        s.pi = j.at("pi").get<std::vector<double>>();
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("initial condition file: ") + e.what());
      }
      if (s.phi.size() != n || s.pi.size() != n)
        throw FormatError("initial condition file: expected " + std::to_string(n) + " values for phi and pi");
      for (std::size_t k = 0; k < n; ++k)
        if (!std::isfinite(s.phi[k]) || !std::isfinite(s.pi[k]))
          throw FormatError("initial condition file: non-finite value");
      break;
    }
  }
  return s;
}

std::vector<double> divergence_residual(const FieldState& prev, const FieldState& cur, const FieldState& next,
                                        const LatticeConfig& cfg) {
  const StressTensorField tp = stress_tensor(prev, cfg);
  const StressTensorField tc = stress_tensor(cur, cfg);
  const StressTensorField tn = stress_tensor(next, cfg);
  const Grid g(cfg);
  const double dt = next.t - prev.t;
  std::vector<double> worst(static_cast<std::size_t>(tc.components), 0.0);
  for (std::size_t s = 0; s < g.sites; ++s)
    for (int mu = 0; mu < tc.components; ++mu) {
      double r = (tn.at(s, 0, mu) - tp.at(s, 0, mu)) / dt;
      for (int i = 1; i < tc.components; ++i) {
        const auto d = static_cast<std::size_t>(i - 1);
        r += (tc.at(g.plus[s][d], i, mu) - tc.at(g.minus[s][d], i, mu)) / (2 * cfg.dx);
      }
      worst[static_cast<std::size_t>(mu)] = std::max(worst[static_cast<std::size_t>(mu)], std::abs(r));
    }
  return worst;
}

ConservationResult conservation_report(const LatticeConfig& cfg, const InitialCondition& ic) {
  cfg.validate();
  ConservationResult out;
  out.config = cfg;
  out.initial = ic;
  out.divergence.assign(static_cast<std::size_t>(cfg.dims + 1), 0.0);

  Stepper stepper(cfg);
  const Grid& g = stepper.grid();
  FieldState cur = make_initial_state(cfg, ic);
  FieldState prev;

  const Moments m0 = moments(cur, g, cfg);
  const ChargeRecord r0 = record_from(m0, cur.t);
  double abs_moment_max = m0.abs_moment;
  double boost_abs = 0;
  double rate_scale = std::max(max_abs_of(m0.momentum), m0.energy);
  double rate_worst = 0;

  Moments m_prev;
  Moments m_cur = m0;
  for (int n = 0; n <= cfg.steps; ++n) {
    const ChargeRecord rec = record_from(m_cur, cur.t);
    const double e_ref = std::abs(r0.energy) > 0 ? std::abs(r0.energy) : 1.0;
    out.energy_drift = std::max(out.energy_drift, std::abs(rec.energy - r0.energy) / e_ref);
    out.momentum_drift = std::max(out.momentum_drift, max_abs_diff(rec.momentum, r0.momentum));
    boost_abs = std::max(boost_abs, max_abs_diff(rec.boost, r0.boost));
    abs_moment_max = std::max(abs_moment_max, m_cur.abs_moment);
    rate_scale = std::max({rate_scale, max_abs_of(m_cur.momentum), m_cur.energy});
    if (cfg.dims == 3) out.angular_momentum_max = std::max(out.angular_momentum_max, std::abs(rec.angular_momentum[2]));

    const bool sampled = n % cfg.sample_every == 0 || n == cfg.steps;
    if (sampled) out.samples.push_back(rec);
    // the final level still needs a successor for the centred time differences
    FieldState next = cur;
    stepper.step(next);
    const Moments m_next = moments(next, g, cfg);
    if (n >= 1) {
      for (std::size_t i = 0; i < m_cur.momentum.size(); ++i) {
        const double rate = (m_next.energy_moment[i] - m_prev.energy_moment[i]) / (2 * cfg.dt);
        rate_worst = std::max(rate_worst, std::abs(rate + m_cur.momentum[i]));
      }
      if (sampled) {
        const auto div = divergence_residual(prev, cur, next, cfg);
        for (std::size_t mu = 0; mu < div.size(); ++mu) out.divergence[mu] = std::max(out.divergence[mu], div[mu]);
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
    m_prev = std::move(m_cur);
    m_cur = m_next;
  }
  out.boost_drift = abs_moment_max > 0 ? boost_abs / abs_moment_max : boost_abs;
  out.boost_rate_residual = rate_scale > 0 ? rate_worst / rate_scale : rate_worst;
  return out;
}

double ConvergenceStudy::min_order() const {
  if (orders.empty()) return std::nan("");
  return *std::min_element(orders.begin(), orders.end());
}

std::vector<ConservationResult> refinement_runs(const LatticeConfig& cfg, const InitialCondition& ic, int levels,
                                                bool refine_space) {
  std::vector<ConservationResult> runs;
  LatticeConfig c = cfg;
  for (int k = 0; k < levels; ++k) {
    runs.push_back(conservation_report(c, ic));
    c.dt /= 2;
    c.steps *= 2;
    c.sample_every *= 2;
    if (refine_space) {
      c.dx /= 2;
      c.extent *= 2;
    }
  }
  return runs;
}

ConvergenceStudy convergence_of(const std::vector<ConservationResult>& runs, std::string quantity,
                                const std::function<double(const ConservationResult&)>& value) {
  ConvergenceStudy study;
  study.quantity = std::move(quantity);
  for (const auto& r : runs) study.levels.push_back({r.config.dx, r.config.dt, r.config.extent, r.config.steps, value(r)});
  for (std::size_t k = 0; k + 1 < study.levels.size(); ++k)
    study.orders.push_back(std::log2(study.levels[k].value / study.levels[k + 1].value));
  return study;
}

double max_divergence(const ConservationResult& r) {
  return r.divergence.empty() ? 0.0 : *std::max_element(r.divergence.begin(), r.divergence.end());
}

ConvergenceStudy energy_drift_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels) {
  return convergence_of(refinement_runs(cfg, ic, levels, false), "relative energy drift",
                        [](const ConservationResult& r) { return r.energy_drift; });
}

ConvergenceStudy boost_drift_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels) {
  return convergence_of(refinement_runs(cfg, ic, levels, false), "relative boost drift",
                        [](const ConservationResult& r) { return r.boost_drift; });
}

ConvergenceStudy divergence_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels) {
  return convergence_of(refinement_runs(cfg, ic, levels, true), "max divergence residual", max_divergence);
}

Eigen::Matrix4d assemble_em_tensor(const Eigen::Vector3d& e, const Eigen::Vector3d& b, double c) {
  if (!(c > 0) || !std::isfinite(c)) throw PreconditionError("assemble_em_tensor: c must be positive");
  if (!e.allFinite() || !b.allFinite()) throw PreconditionError("assemble_em_tensor: non-finite field");
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 3; ++i) {
    f(0, i + 1) = -e(i) / c;
    f(i + 1, 0) = e(i) / c;
  }
  f(1, 2) = -b.z();
  f(2, 1) = b.z();
  f(1, 3) = b.y();
  f(3, 1) = -b.y();
  f(2, 3) = -b.x();
  f(3, 2) = b.x();
  return f;
}

nlohmann::json to_json(const LatticeConfig& cfg) {
  return {{"dims", cfg.dims}, {"grid", cfg.extent}, {"dx", cfg.dx}, {"dt", cfg.dt},
          {"mass", cfg.mass}, {"steps", cfg.steps}, {"sample", cfg.sample_every}, {"boundary", "periodic"}};
}

nlohmann::json to_json(const ChargeRecord& r) {
  nlohmann::json j = {{"t", r.t}, {"E", r.energy}, {"P", r.momentum}, {"BO", r.boost}};
  if (!r.angular_momentum.empty()) j["L"] = r.angular_momentum;
  return j;
}

nlohmann::json to_json(const ConservationResult& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  nlohmann::json j = {
      {"config", to_json(r.config)},
      {"initial_condition", r.initial.describe()},
      {"samples", std::move(samples)},
      {"drift",
       {{"energy_relative", r.energy_drift},
        {"momentum_absolute", r.momentum_drift},
        {"boost_relative", r.boost_drift},
        {"boost_rate_residual", r.boost_rate_residual}}},
      {"divergence_residual", {{"per_component", r.divergence}, {"sites", "all (periodic boundary, no boundary terms)"}}},
  };
  if (r.config.dims == 3) j["drift"]["angular_momentum_z_max"] = r.angular_momentum_max;
  return j;
}

nlohmann::json to_json(const ConvergenceStudy& s) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : s.levels)
    levels.push_back({{"dx", l.dx}, {"dt", l.dt}, {"grid", l.extent}, {"steps", l.steps}, {"value", l.value}});
  return {{"quantity", s.quantity}, {"levels", std::move(levels)}, {"orders", s.orders}};
}

}  // namespace liekit
