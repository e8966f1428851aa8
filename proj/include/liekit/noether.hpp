#pragma once

// Free Klein-Gordon field on a periodic lattice (1 or 3 space dimensions):
// densities, the energy-momentum tensor, velocity-Verlet evolution, Noether
// charges, conservation and convergence studies, and the EM field tensor.

#include "json.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace liekit {

struct LatticeConfig {
  int dims = 1;         // 1 or 3
  int extent = 256;     // sites per dimension
  double dx = 1.0;
  double dt = 0.05;
  double mass = 1.0;
  int steps = 2000;
  int sample_every = 100;

  /// Throws PreconditionError unless dims in {1, 3}, extent >= 8, dt/dx <= 0.5,
  /// positive dx and dt, mass >= 0, steps >= 0 and sample_every >= 1.
  void validate() const;
  std::size_t sites() const;
  double cell_volume() const;
  double domain_length() const { return extent * dx; }
};

struct FieldState {
  std::vector<double> phi;
  std::vector<double> pi;  // d phi / dt
  double t = 0;
};

/// Site coordinate along dimension d, measured from the grid midpoint.
double site_coordinate(const LatticeConfig& cfg, std::size_t site, int d);

/// 1/2 pi^2 - 1/4 sum_d [(D+ phi)^2 + (D- phi)^2] - 1/2 m^2 phi^2, with D+- one-sided differences.
double lagrangian_density(const FieldState& s, const LatticeConfig& cfg, std::size_t site);
/// 1/2 pi^2 + 1/4 sum_d [(D+ phi)^2 + (D- phi)^2] + 1/2 m^2 phi^2; sums to the lattice Hamiltonian.
double energy_density(const FieldState& s, const LatticeConfig& cfg, std::size_t site);

/// Per-site T^nu_mu, nu = row, mu = column, indices 0..dims.
struct StressTensorField {
  int components = 0;
  std::vector<double> values;

  double at(std::size_t site, int nu, int mu) const {
    return values[(site * static_cast<std::size_t>(components) + static_cast<std::size_t>(nu)) *
                      static_cast<std::size_t>(components) + static_cast<std::size_t>(mu)];
  }
};

/// T^0_0 = energy density, T^0_i = pi D0_i phi, T^i_0 = -D0_i phi pi,
/// T^i_j = -D0_i phi D0_j phi - delta_ij L (D0 = central difference).
StressTensorField stress_tensor(const FieldState& s, const LatticeConfig& cfg);

/// Velocity Verlet for phi_tt = Lap phi - m^2 phi. Validates cfg first.
FieldState evolve(FieldState s, const LatticeConfig& cfg, int steps);

struct ChargeRecord {
  double t = 0;
  double energy = 0;
  std::vector<double> momentum;          // P_i = sum T^0_i dV
  std::vector<double> boost;             // BO^i = sum (T^00 x^i - T^i0 t) dV
  std::vector<double> angular_momentum;  // 3D only: L^i
};

/// T^00 = T^0_0 and T^i0 = -T^0_i, so BO^i = sum (eps x^i + t P_i density) dV and
/// L^z = sum (T^x0 y - T^y0 x) dV.
ChargeRecord charges(const FieldState& s, const LatticeConfig& cfg);

/// Energy moment sum eps x^i dV.
std::vector<double> energy_moment(const FieldState& s, const LatticeConfig& cfg);

enum class InitialKind { gaussian, mode, file, vacuum };

/// gaussian: 1D a right-moving packet A exp(-x^2 / 2w^2) cos(k0 x) with k0 = 2 pi cycles / L;
/// 3D a static bump A exp(-r^2 / 2w^2). mode:k: phi = A cos(2 pi k x / L), pi = 0.
/// file: {"phi": [...], "pi": [...]}.
struct InitialCondition {
  InitialKind kind = InitialKind::gaussian;
  int mode = 1;
  std::string path;
  double amplitude = 1.0;
  double width = -1;  // physical length; negative selects 10 (1D) or 3 (3D)
  int cycles = 16;

  /// "gaussian" | "vacuum" | "mode:<k>" | "file:<path>" or a bare path to an existing file.
  static InitialCondition parse(const std::string& spec);
  std::string describe() const;
};

FieldState make_initial_state(const LatticeConfig& cfg, const InitialCondition& ic);

/// Max over sites of |(T^0_mu(n+1) - T^0_mu(n-1)) / 2dt + sum_i D0_i T^i_mu(n)|, one entry per mu.
std::vector<double> divergence_residual(const FieldState& prev, const FieldState& cur, const FieldState& next,
                                        const LatticeConfig& cfg);

struct ConservationResult {
  LatticeConfig config;
  InitialCondition initial;
  std::vector<ChargeRecord> samples;
  double energy_drift = 0;         // max |E(t) - E(0)| / |E(0)| (absolute if E(0) = 0)
  double momentum_drift = 0;       // max |P(t) - P(0)|
  double boost_drift = 0;          // max |BO(t) - BO(0)| / max_t sum eps |x| dV
  double boost_rate_residual = 0;  // max |d/dt sum eps x dV + P| / max(|P|, E), central difference in time
  double angular_momentum_max = 0; // 3D: max |L^z|
  std::vector<double> divergence;  // per mu, max over sampled times
};

ConservationResult conservation_report(const LatticeConfig& cfg, const InitialCondition& ic);

struct ConvergenceLevel {
  double dx = 0;
  double dt = 0;
  int extent = 0;
  int steps = 0;
  double value = 0;
};

struct ConvergenceStudy {
  std::string quantity;
  std::vector<ConvergenceLevel> levels;
  std::vector<double> orders;  // log2(value[k] / value[k+1])
  double min_order() const;
};

/// conservation_report at successive refinements: dt halved and steps doubled (fixed physical time),
/// and with refine_space also dx halved and the extent doubled (fixed physical domain).
std::vector<ConservationResult> refinement_runs(const LatticeConfig& cfg, const InitialCondition& ic, int levels,
                                                bool refine_space);
/// Levels and log2 ratios of value(run) over a refinement sequence.
ConvergenceStudy convergence_of(const std::vector<ConservationResult>& runs, std::string quantity,
                                const std::function<double(const ConservationResult&)>& value);
double max_divergence(const ConservationResult& r);

/// Halves dt (doubling steps) at fixed dx: relative energy drift per level.
ConvergenceStudy energy_drift_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels = 3);
/// Same refinement, relative boost-charge drift.
ConvergenceStudy boost_drift_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels = 3);
/// Halves dx and dt together at fixed physical domain and time: max divergence residual per level.
ConvergenceStudy divergence_convergence(const LatticeConfig& cfg, const InitialCondition& ic, int levels = 3);

/// F^{ab} with F^{0i} = -E_i / c and F^{ij} = -eps_ijk B_k.
Eigen::Matrix4d assemble_em_tensor(const Eigen::Vector3d& e, const Eigen::Vector3d& b, double c);

nlohmann::json to_json(const LatticeConfig& cfg);
nlohmann::json to_json(const ChargeRecord& r);
nlohmann::json to_json(const ConservationResult& r);
nlohmann::json to_json(const ConvergenceStudy& s);

}  // namespace liekit
