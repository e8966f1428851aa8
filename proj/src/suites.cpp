#include "liekit/suites.hpp"

#include "liekit/exact.hpp"
#include "liekit/finitegroup.hpp"
#include "liekit/liecore.hpp"
#include "liekit/lorentz.hpp"
#include "liekit/matrix_io.hpp"
#include "liekit/noether.hpp"
#include "liekit/numkernel.hpp"
#include "liekit/random_matrices.hpp"
#include "liekit/so3su2.hpp"
#include "liekit/su3flavor.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace liekit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I1(0, 1);

struct Tol {
  double algebraic = 1e-10;
  double unitarity = 1e-9;
  double intertwiner = 1e-8;
  double finite_difference = 1e-8;
  double closure = kClosureTol;
  double structure = 1e-10;
  double jacobi = 1e-11;
  double commutator = 1e-12;
  double double_cover = 1e-10;
  double weights = 1e-12;
  double lorentz = 1e-10;
  double boost = 1e-12;
  double speed = 1e-9;
  double energy_drift = 1e-5;
  double momentum_drift = 1e-10;
  double angular_momentum = 1e-6;
  double order = 1.9;
};

Tol make_tol(double tol) {
  Tol t;
  t.algebraic = tol;
  return t;
}

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix from_ints(Eigen::Index n, std::initializer_list<int> entries) {
  ComplexMatrix m(n, n);
  auto it = entries.begin();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = double(*it++);
  return m;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double unitarity_residual(const ComplexMatrix& m) { return diff(m * m.adjoint(), eye(m.rows())); }

double intertwining_residual(const Representation& r1, const Representation& r2, const ComplexMatrix& s) {
  const ComplexMatrix s_inv = s.inverse();
  double worst = 0;
  for (int g = 0; g < r1.group->order(); ++g)
    worst = std::max(worst, diff(s_inv * r1(g) * s, r2(g)) / std::max(1.0, max_abs(r2(g))));
  return worst;
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

template <typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const std::exception&) {
    return true;
  }
  return false;
}

// ---------------------------------------------------------------- finite

Findings finite_suite(std::uint64_t seed, const Tol& t) {
  Findings f;
  const std::string axioms = "group axioms";
  const std::string regular = "regular representation";
  const std::string repdef = "representation definition";
  const std::string unitar = "unitarization theorem";

  const GroupPtr c4 = cyclic_group_c4();
  const GroupPtr parity = parity_group();
  const GroupPtr s3 = symmetric_group_s3();
  const std::pair<const char*, GroupPtr> groups[] = {{"C4", c4}, {"parity", parity}, {"S3", s3}};

  for (const auto& [name, g] : groups) {
    const bool ok = !throws([&] { verify_group_axioms(g->elements(), g->table()); });
    f.add(boolean_check(std::string("group axioms hold for ") + name, ok, axioms));
  }

  {
    std::string axiom = "none";
    std::array<int, 3> witness{-1, -1, -1};
    try {
      verify_group_axioms({"a", "b"}, {{0, 0}, {0, 1}});
    } catch (const GroupAxiomError& e) {
      axiom = to_string(e.axiom());
      witness = e.witness();
    }
    f.add(boolean_check("absorbing two-element table rejected", axiom != "none", axioms));
    f.add(boolean_check("absorbing table rejection names the missing inverse of a", axiom == "inverse" && witness[0] == 0,
                        axioms));
    f.data["absorbing_table"] = {{"axiom", axiom}, {"witness", witness}};
    f.flag({"absorbing-table-axiom",
            "the table f(a,a)=f(a,b)=f(b,a)=a, f(b,b)=b fails because no identity exists",
            "b is a two-sided identity; the first violated axiom is inverse (a has none)",
            "b x = x b = x for x in {a, b}, so the identity search succeeds"});
  }

  // regular representation against the printed k(R) matrices
  const Representation reg = build_regular_representation(c4);
  const std::array<ComplexMatrix, 4> printed = {
      from_ints(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
      from_ints(4, {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0}),
      from_ints(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}),
      from_ints(4, {0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0})};
  double reg_diff = 0;
  for (int k = 0; k < 4; ++k) reg_diff = std::max(reg_diff, diff(reg(k), printed[static_cast<std::size_t>(k)]));
  f.add(residual_check("regular representation of C4 equals the printed k(R) matrices", reg_diff, 0.0, regular));

  for (const auto& [name, g] : groups) {
    const Representation r = build_regular_representation(g);
    bool permutation = true;
    for (const auto& m : r.images)
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m.row(i).sum() != cplx(1.0) || m.col(i).sum() != cplx(1.0)) permutation = false;
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          if (m(i, j) != cplx(0.0) && m(i, j) != cplx(1.0)) permutation = false;
      }
    f.add(boolean_check(std::string("regular representation of ") + name + " is a permutation family", permutation,
                        regular));
    const RepresentationCheck chk = verify_representation(r, t.algebraic);
    f.add(residual_check(std::string("regular representation of ") + name + " is a homomorphism", chk.max_residual,
                         t.algebraic, regular));
  }
  {
    const Representation rp = build_regular_representation(parity);
    f.add(residual_check("regular k(P) = [[0,1],[1,0]]", diff(rp(1), from_ints(2, {0, 1, 1, 0})), 0.0, regular));
  }

  const Representation c4rot = c4_rotation_representation();
  f.add(residual_check("g(R90) = [[0,-1],[1,0]]", diff(c4rot(c4->index_of("R90")), from_ints(2, {0, -1, 1, 0})), 0.0,
                       repdef));
  const std::pair<const char*, Representation> bundled[] = {
      {"C4 rotations", c4rot}, {"parity reflection", parity_reflection_representation()},
      {"S3 standard", s3_standard_representation()}};
  for (const auto& [name, r] : bundled) {
    const RepresentationCheck chk = verify_representation(r, t.algebraic);
    f.add(residual_check(std::string(name) + " is a representation", chk.max_residual, t.algebraic, repdef));
  }

  {
    std::vector<ComplexMatrix> imgs = c4rot.images;
    const int r90 = c4->index_of("R90");
    imgs[static_cast<std::size_t>(r90)] = eye(2);
    const RepresentationCheck chk = verify_representation(Representation(c4, imgs), t.algebraic);
    const bool witness_ok = chk.witness && chk.witness->first == r90 && chk.witness->second == r90;
    f.add(boolean_check("C4 images with g(R90) = 1 rejected", !chk.ok, repdef));
    f.add(boolean_check("broken C4 images fail first on the pair (R90, R90)", witness_ok, repdef));
  }

  f.add(boolean_check("are_equivalent rejects a 2D versus 4D pair",
                      throws([&] { are_equivalent(c4rot, reg); }), unitar));

  // the C2 example D(g) = [[1,1],[0,-1]]
  {
    ComplexMatrix dg(2, 2);
    dg << 1.0, 1.0, 0.0, -1.0;
    const Representation c2(parity, {eye(2), dg});
    f.add(residual_check("D(g) = [[1,1],[0,-1]] represents C2", verify_representation(c2).max_residual, t.algebraic,
                         repdef));
    const UnitarizationResult u = unitarize(c2, t.algebraic);
    f.add(residual_check("C2 example: S = [[2,1],[1,3]]", diff(u.s, from_ints(2, {2, 1, 1, 3})), t.algebraic, unitar));
    f.add(residual_check("C2 example: S^{1/2} squared is S", diff(u.s_half * u.s_half, u.s), t.algebraic, unitar));
    f.add(residual_check("C2 example: D'(g) unitary", unitarity_residual(u.unitarized(1)), t.unitarity, unitar));
    f.add(residual_check("C2 example: D'(g)^2 = 1", diff(u.unitarized(1) * u.unitarized(1), eye(2)), t.algebraic,
                         unitar));
    const auto e = eig_hermitian(ComplexMatrix(dg.adjoint() * dg));
    const double r5 = std::sqrt(5.0);
    f.add(residual_check("D^dagger D = [[1,1],[1,2]] has eigenvalues (3 -+ sqrt 5)/2",
                         std::max(std::abs(e.eigenvalues(0) - (3 - r5) / 2), std::abs(e.eigenvalues(1) - (3 + r5) / 2)),
                         t.algebraic, "positive operators"));
  }

  {
    const UnitarizationResult u = unitarize(reg, t.algebraic);
    double fixed = 0;
    for (int g = 0; g < 4; ++g) fixed = std::max(fixed, diff(u.unitarized(g), reg(g)));
    f.add(residual_check("unitarizing the regular C4 representation is a no-op (S = 4)",
                         std::max(fixed, diff(u.s, 4.0 * eye(4))), t.algebraic, unitar));
  }

  for (const auto& [name, r] : bundled) {
    const auto s = are_equivalent(r, r, t.intertwiner);
    f.add(residual_check(std::string(name) + " is equivalent to itself via the identity",
                         s ? diff(*s, eye(r.dim())) : std::numeric_limits<double>::infinity(), t.algebraic, unitar));
  }

  // random conjugations of the unitary bundled representations
  {
    std::mt19937_64 rng(seed);
    constexpr int kTrials = 100;
    constexpr double kMaxCondition = 1e3;
    double worst_unitarity = 0, worst_forward = 0, worst_back = 0, worst_condition = 0;
    double min_gram_eigenvalue = std::numeric_limits<double>::infinity();
    int forward = 0, back = 0;
    for (int trial = 0; trial < kTrials; ++trial) {
      const Representation& base = bundled[trial % 3].second;
      const ComplexMatrix s = random_invertible(base.dim(), kMaxCondition, rng);
      worst_condition = std::max(worst_condition, condition_number(s));
      const ComplexMatrix s_inv = s.inverse();
      std::vector<ComplexMatrix> imgs;
      for (const auto& m : base.images) imgs.push_back(s_inv * m * s);
      const Representation conj(base.group, imgs);
      for (const auto& m : imgs)
        min_gram_eigenvalue = std::min(min_gram_eigenvalue, eig_hermitian(ComplexMatrix(m.adjoint() * m)).eigenvalues(0));

      const UnitarizationResult u = unitarize(conj, t.algebraic);
      for (const auto& m : u.unitarized.images) worst_unitarity = std::max(worst_unitarity, unitarity_residual(m));

      if (const auto w = are_equivalent(conj, u.unitarized, t.intertwiner)) {
        ++forward;
        worst_forward = std::max(worst_forward, intertwining_residual(conj, u.unitarized, *w));
      }
      if (const auto w = are_equivalent(base, conj, t.intertwiner)) {
        ++back;
        worst_back = std::max(worst_back, intertwining_residual(base, conj, *w));
      }
    }
    f.add(boolean_check("random conjugators have condition number <= 1e3", worst_condition <= kMaxCondition, unitar));
    f.add(boolean_check("D^dagger D positive definite for every conjugated image", min_gram_eigenvalue > 0,
                        "positive operators"));
    f.add(residual_check("unitarized images of 100 random conjugations are unitary", worst_unitarity, t.unitarity,
                         unitar));
    f.add(boolean_check("are_equivalent finds an intertwiner to the unitarized representation in all 100 trials",
                        forward == kTrials, unitar));
    f.add(residual_check("intertwiners to the unitarized representations reproduce them", worst_forward,
                         t.intertwiner, unitar));
    f.add(boolean_check("are_equivalent recovers the conjugation in all 100 trials", back == kTrials, unitar));
    f.add(residual_check("recovered conjugations reproduce the conjugated representations", worst_back,
                         t.intertwiner, unitar));
    f.data["conjugation_trials"] = {{"trials", kTrials},
                                    {"max_condition_number", worst_condition},
                                    {"max_unitarity_residual", worst_unitarity},
                                    {"max_intertwining_residual", std::max(worst_forward, worst_back)},
                                    {"min_gram_eigenvalue", min_gram_eigenvalue}};
  }

  {
    const auto e = eig_hermitian(parity_reflection_representation()(1));
    const auto ek = eig_hermitian(build_regular_representation(parity)(1));
    const double r = std::max({std::abs(e.eigenvalues(0) + 1), std::abs(e.eigenvalues(1) - 1),
                               std::abs(ek.eigenvalues(0) + 1), std::abs(ek.eigenvalues(1) - 1)});
    f.add(residual_check("parity eigenvalues are -1 and +1", r, t.algebraic, "parity group"));
  }
  return f;
}

// ---------------------------------------------------------------- lie

ParamCurve curve1(Eigen::Index dim, std::function<ComplexMatrix(double)> fn) {
  ParamCurve c;
  c.dim = dim;
  c.param_count = 1;
  c.evaluate = [fn](const RealVector& a) { return fn(a(0)); };
  return c;
}

ComplexMatrix closed_form_boost_x(double th) {
  ComplexMatrix b = eye(4);
  b(0, 0) = b(1, 1) = std::cosh(th);
  b(0, 1) = b(1, 0) = -std::sinh(th);
  return b;
}

double tensor_diff(const StructureConstants& sc, const std::function<double(int, int, int)>& expected) {
  double worst = 0;
  for (int a = 0; a < sc.size; ++a)
    for (int b = 0; b < sc.size; ++b)
      for (int c = 0; c < sc.size; ++c) worst = std::max(worst, std::abs(sc.at(a, b, c) - expected(a, b, c)));
  return worst;
}

bool exact_equals(const ExactStructureConstants& e, const std::function<int(int, int, int)>& expected) {
  for (int a = 0; a < e.size; ++a)
    for (int b = 0; b < e.size; ++b)
      for (int c = 0; c < e.size; ++c)
        if (e.at(a, b, c) != Rational(expected(a, b, c))) return false;
  return true;
}

nlohmann::json exact_tensor_json(const ExactStructureConstants& e) {
  nlohmann::json out = nlohmann::json::array();
  for (int a = 0; a < e.size; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < e.size; ++b) {
      nlohmann::json col = nlohmann::json::array();
      for (int c = 0; c < e.size; ++c) col.push_back(boost::rational_cast<double>(e.at(a, b, c)));
      row.push_back(col);
    }
    out.push_back(row);
  }
  return out;
}

int eps0(int a, int b, int c) { return levi_civita(a + 1, b + 1, c + 1); }

Findings lie_suite(std::uint64_t seed, const Tol& t) {
  Findings f;
  const std::string gen = "generators of a Lie group";
  const std::string expmap = "exponential map";
  const std::string sc = "structure constants";
  const std::string bracket = "Lie bracket properties";

  struct NamedCurve {
    std::string name;
    ParamCurve curve;
    ComplexMatrix expected;
    double range;
  };
  std::vector<NamedCurve> curves;
  curves.push_back({"SO(2) rotation R(theta)", curve1(2, so2_rotation), so2_generator(), kPi});
  curves.push_back({"constant identity curve", curve1(2, [](double) { return eye(2); }), ComplexMatrix::Zero(2, 2), kPi});
  curves.push_back({"quaternion curve t_x(theta) = cos + sin I",
                    curve1(2, [](double th) { return quat_matrix(paper_t(Axis::x, th)); }), pauli(Axis::x), kPi});
  for (Axis ax : kAxes)
    curves.push_back({std::string("SO(3) rotation R_") + to_string(ax),
                      curve1(3, [ax](double th) { return so3_rotation(ax, th); }), so3_generator(ax), kPi});
  curves.push_back({"closed-form boost B_x", curve1(4, closed_form_boost_x),
                    lorentz_generator(GeneratorKind::boost, Axis::x), 2.0});

  double worst_reproduction = 0;
  for (const auto& c : curves) {
    const GeneratorEstimate est = extract_generator(c.curve, 0);
    f.add(residual_check("extracted generator of " + c.name, diff(est.generator, c.expected), t.finite_difference, gen));
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const double th = -c.range + 2 * c.range * k / 19.0;
      RealVector a(1);
      a(0) = th;
      worst = std::max(worst, diff(mat_exp(ComplexMatrix(I1 * th * est.generator)), c.curve.evaluate(a)));
    }
    worst_reproduction = std::max(worst_reproduction, worst);
    f.add(residual_check("exp of the extracted generator reproduces " + c.name + " at 20 points", worst,
                         t.finite_difference, expmap));
  }
  f.data["max_curve_reproduction_residual"] = worst_reproduction;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  {
    const GeneratorBasis so2 = so2_basis();
    f.add(residual_check("exp_map at alpha = 0 is the identity", diff(exp_map(so2, RealVector::Zero(1)), eye(2)), 0.0,
                         expmap));
    double worst = 0, closure = 0;
    for (int k = 0; k < 20; ++k) {
      RealVector a(1), b(1);
      a(0) = angle(rng);
      b(0) = angle(rng);
      worst = std::max(worst, diff(exp_map(so2, a), so2_rotation(a(0))));
      closure = std::max(closure, diff(exp_map(so2, a) * exp_map(so2, b), exp_map(so2, RealVector(a + b))));
    }
    f.add(residual_check("exp_map on so(2) gives R(theta)", worst, t.algebraic, expmap));
    f.add(residual_check("exp(a) exp(b) = exp(a + b) on a one-parameter basis", closure, t.algebraic, expmap));
    const StructureConstants abel = structure_constants(so2);
    f.add(residual_check("abelian basis has zero structure constants", tensor_diff(abel, [](int, int, int) { return 0.0; }),
                         0.0, sc));
  }
  {
    const GeneratorBasis p = pauli_basis();
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      RealVector a(3);
      for (int i = 0; i < 3; ++i) a(i) = angle(rng);
      worst = std::max(worst, unitarity_residual(exp_map(p, a)));
    }
    f.add(residual_check("exp_map of a Hermitian basis is unitary", worst, t.unitarity, expmap));
  }

  // Pauli and SO(3) constants in exact arithmetic
  {
    const auto pe = exact_structure_constants({exact_pauli(Axis::x), exact_pauli(Axis::y), exact_pauli(Axis::z)});
    f.add(boolean_check("Pauli basis: f_abc = 2 eps_abc exactly",
                        exact_equals(pe, [](int a, int b, int c) { return 2 * eps0(a, b, c); }), sc));
    const StructureConstants pn = structure_constants(pauli_basis());
    f.add(residual_check("Pauli basis: least-squares f matches 2 eps",
                         tensor_diff(pn, [](int a, int b, int c) { return 2.0 * eps0(a, b, c); }), t.structure, sc));

    const auto se = exact_structure_constants(
        {exact_so3_generator(Axis::x), exact_so3_generator(Axis::y), exact_so3_generator(Axis::z)});
    const bool minus_eps = exact_equals(se, [](int a, int b, int c) { return -eps0(a, b, c); });
    f.add(boolean_check("SO(3) basis: exact constants computed (f = -eps)", minus_eps, sc));
    f.data["so3_structure_constants"] = exact_tensor_json(se);
    f.flag({"so3-structure-constants", "[X_i, X_j] = 2i eps_ijk X_k for the printed SO(3) generators",
            "[X_i, X_j] = -i eps_ijk X_k (f = -eps) in exact arithmetic",
            "no factor 2; the sign follows from the printed layout (X_x)_yz = +i"});
  }

  {
    const StructureConstants s3c = su3_structure_constants();
    f.add(residual_check("su(3) basis {lambda/2} closes", s3c.residual, t.structure, sc));
    f.add(residual_check("su(3): f_12^3 = 1", std::abs(s3c.at(0, 1, 2) - 1.0), t.structure, sc));
    double anti = 0;
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b)
        for (int c = 0; c < 8; ++c) anti = std::max(anti, std::abs(s3c.at(a, b, c) + s3c.at(b, a, c)));
    f.add(residual_check("su(3): f_ab^c = -f_ba^c as computed", anti, 0.0, sc));
    f.add(residual_check("su(3): constants are real", s3c.max_imag(), t.structure, sc));
  }

  f.add(boolean_check("{sigma_x, sigma_y} is rejected as not closed", [] {
          try {
            structure_constants(GeneratorBasis("xy", {pauli(Axis::x), pauli(Axis::y)}));
          } catch (const NotClosedError&) {
            return true;
          }
          return false;
        }(), sc));

  {
    const std::pair<const char*, GeneratorBasis> bases[] = {
        {"su(2)", pauli_basis()}, {"su(3)", su3_basis()}, {"Lorentz {J, K}", lorentz_basis()}};
    nlohmann::json brackets = nlohmann::json::object();
    std::uint64_t k = 0;
    for (const auto& [name, b] : bases) {
      const BracketReport r = verify_bracket_properties(b, 100, seed + (++k));
      f.add(residual_check(std::string("Jacobi identity over 100 random triples: ") + name, r.jacobi, t.jacobi, bracket));
      f.add(residual_check(std::string("[A, A] = 0: ") + name, r.self_bracket, 0.0, bracket));
      f.add(residual_check(std::string("bracket bilinearity: ") + name, r.bilinearity, t.commutator, bracket));
      f.add(residual_check(std::string("bracket antisymmetry: ") + name, r.antisymmetry, t.commutator, bracket));
      brackets[name] = {{"jacobi", r.jacobi}, {"bilinearity", r.bilinearity}, {"antisymmetry", r.antisymmetry}};
    }
    f.data["bracket_properties"] = brackets;
  }

  {
    const GeneratorBasis p = pauli_basis(), half = half_pauli_basis(), so3 = so3_basis();
    const auto same = algebras_isomorphic_by_rescale(p, p);
    const auto half_vs_p = algebras_isomorphic_by_rescale(half, p);
    const auto p_vs_half = algebras_isomorphic_by_rescale(p, half);
    const auto p_vs_so3 = algebras_isomorphic_by_rescale(p, so3);
    const auto p_vs_so3_signed = rescale_factor(p, so3);
    auto off = [](const std::optional<double>& s, double want) {
      return s ? std::abs(*s - want) : std::numeric_limits<double>::infinity();
    };
    f.add(residual_check("rescale factor Pauli vs Pauli is 1", off(same, 1.0), t.algebraic, "isomorphic algebras"));
    f.add(residual_check("rescale factor {sigma/2} vs {sigma} is 1/2", off(half_vs_p, 0.5), t.algebraic,
                         "isomorphic algebras"));
    f.add(residual_check("rescale factor {sigma} vs {sigma/2} is 2", off(p_vs_half, 2.0), t.algebraic,
                         "isomorphic algebras"));
    f.add(boolean_check("no positive rescale maps Pauli onto the SO(3) basis", !p_vs_so3, "isomorphic algebras"));
    f.add(residual_check("signed rescale factor Pauli vs SO(3) is -2", off(p_vs_so3_signed, -2.0), t.algebraic,
                         "isomorphic algebras"));
    auto opt = [](const std::optional<double>& s) { return s ? nlohmann::json(*s) : nlohmann::json(nullptr); };
    f.data["rescale"] = {{"pauli_vs_pauli", opt(same)},
                         {"half_pauli_vs_pauli", opt(half_vs_p)},
                         {"pauli_vs_half_pauli", opt(p_vs_half)},
                         {"pauli_vs_so3_positive", opt(p_vs_so3)},
                         {"pauli_vs_so3_signed", opt(p_vs_so3_signed)}};
    f.flag({"rescale-half-pauli", "{sigma/2} vs {sigma} gives s = 2",
            "s = 1/2 for ({sigma/2}, {sigma}); s = 2 for the reverse order",
            "s is defined by b1 = s b2, so f(b1) = s f(b2)"});
    f.flag({"su2-so3-same-algebra", "SU(2) and SO(3) share the same generator algebra as printed",
            "Pauli f = 2 eps and printed SO(3) f = -eps: only the signed rescale s = -2 relates them",
            "the algebras are isomorphic after X -> -X normalization, not under a positive rescale"});
  }

  {
    const bool ok = levi_civita(1, 2, 3) == 1 && levi_civita(1, 1, 2) == 0 && levi_civita(2, 1, 3) == -1 &&
                    levi_civita(3, 1, 2) == 1 && kronecker_delta(2, 2) == 1 && kronecker_delta(1, 2) == 0;
    f.add(boolean_check("Levi-Civita and Kronecker values", ok, "Levi-Civita symbol"));
    f.add(boolean_check("Levi-Civita rejects indices outside 1..3", throws([] { levi_civita(0, 1, 2); }),
                        "Levi-Civita symbol"));
  }
  return f;
}

// ---------------------------------------------------------------- so3su2

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

double eigen_spectrum_diff(const ComplexMatrix& m, std::vector<double> expected) {
  const auto e = eig_hermitian(m);
  double worst = 0;
  for (std::size_t k = 0; k < expected.size(); ++k)
    worst = std::max(worst, std::abs(e.eigenvalues(static_cast<Eigen::Index>(k)) - expected[k]));
  return worst;
}

nlohmann::json quat_json(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }

Findings so3su2_suite(std::uint64_t seed, const Tol& t) {
  Findings f;
  const std::string rot = "SO(3) rotations";
  const std::string quat = "quaternions";
  const std::string cover = "double cover";

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  {
    double worst = 0;
    for (int k = 0; k < 30; ++k) {
      const ComplexMatrix r = so3_rotation(kAxes[k % 3], angle(rng));
      worst = std::max({worst, diff(r.transpose() * r, eye(3)), std::abs(r.real().determinant() - 1.0)});
    }
    f.add(residual_check("rotations are orthogonal with det 1", worst, t.commutator, rot));
    f.add(residual_check("R_z(0) is the identity", diff(so3_rotation(Axis::z, 0), eye(3)), 0.0, rot));
    const Eigen::Vector3cd v = so3_rotation(Axis::x, kPi / 2) * Eigen::Vector3cd(0, 1, 0);
    f.add(residual_check("R_x(pi/2) (0,1,0) = (0,0,1)", max_abs(Eigen::Vector3cd(v - Eigen::Vector3cd(0, 0, 1))),
                         t.algebraic, rot));
    f.add(residual_check("2D R(pi) = -1", diff(so2_rotation(kPi), -eye(2)), t.algebraic, "SO(2) rotations"));
  }

  {
    double sig = 0, half = 0;
    for (Axis ax : kAxes) {
      sig = std::max(sig, eigen_spectrum_diff(pauli(ax), {-1, 1}));
      half = std::max(half, eigen_spectrum_diff(pauli(ax) / 2.0, {-0.5, 0.5}));
    }
    f.add(residual_check("Pauli matrices have eigenvalues -1, +1", sig, t.algebraic, "Pauli matrices"));
    f.add(residual_check("sigma/2 has eigenvalues -1/2, +1/2", half, t.algebraic, "Pauli matrices"));
    f.add(residual_check("X_z has eigenvalues -1, 0, 1", eigen_spectrum_diff(so3_generator(Axis::z), {-1, 0, 1}),
                         t.algebraic, "SO(3) generators"));
    f.add(residual_check("so3_generator(x) = [[0,0,0],[0,0,i],[0,-i,0]]",
                         diff(so3_generator(Axis::x), I1 * from_ints(3, {0, 0, 0, 0, 0, 1, 0, -1, 0})), 0.0,
                         "SO(3) generators"));
    f.flag({"pauli-eigenvalues", "the Pauli generators have eigenvalues {1/2, -1/2}",
            "sigma has eigenvalues {-1, +1}; sigma/2 has {-1/2, +1/2}", "the 1/2 belongs to the spin operators sigma/2"});
  }

  {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1}, one{1, 0, 0, 0};
    f.add(boolean_check("Hamilton rule: I J = K", quat_mul(i, j) == k, quat));
    f.add(boolean_check("I I = -1", quat_mul(i, i) == -one && quat_mul(j, j) == -one && quat_mul(k, k) == -one, quat));
    const ComplexMatrix mi = quaternion_unit_matrix(Axis::x), mj = quaternion_unit_matrix(Axis::y),
                        mk = quaternion_unit_matrix(Axis::z);
    const double printed_ij = diff(mi * mj, -mk);
    f.add(residual_check("printed matrices multiply as I J = -K", printed_ij, 0.0, quat));
    double anti = 0, unit = 0;
    std::normal_distribution<double> n(0.0, 1.0);
    for (int s = 0; s < 50; ++s) {
      const Quaternion p{n(rng), n(rng), n(rng), n(rng)}, q{n(rng), n(rng), n(rng), n(rng)};
      anti = std::max(anti, diff(quat_matrix(quat_mul(p, q)), quat_matrix(q) * quat_matrix(p)));
      const double nq = q.norm();
      const Quaternion u{q.a / nq, q.b / nq, q.c / nq, q.d / nq};
      unit = std::max(unit, quat_distance(quat_mul(u, quat_conj(u)), one));
    }
    f.add(residual_check("matrix image reverses products: M(pq) = M(q) M(p)", anti, t.commutator, quat));
    f.add(residual_check("q conj(q) = 1 for unit q", unit, t.commutator, quat));
    f.flag({"quaternion-matrix-order", "I J = K obtained by multiplying the printed 2x2 matrices",
            "the printed matrices give I J = -K; quat_mul uses Hamilton's I J = K",
            "the printed images form an anti-homomorphism, image(pq) = image(q) image(p)"});

    f.add(boolean_check("embed (1,0,0) = (0,1,0,0)", embed_vector({1, 0, 0}) == i, quat));
    double round = 0;
    for (int s = 0; s < 10; ++s) {
      const Eigen::Vector3d v(n(rng), n(rng), n(rng));
      round = std::max(round, (extract_vector(embed_vector(v)) - v).cwiseAbs().maxCoeff());
    }
    f.add(residual_check("embed/extract round trip", round, 0.0, quat));
    f.add(boolean_check("extract rejects t_x(pi/4)", throws([] { extract_vector(paper_t(Axis::x, kPi / 4)); }), quat));
    f.add(boolean_check("conjugation rejects a non-unit t",
                        throws([] { rotate_by_conjugation({2, 0, 0, 0}, {1, 0, 0}); }), quat));

    double ident = 0, norm = 0, lin = 0;
    for (int s = 0; s < 50; ++s) {
      const Eigen::Vector3d v(n(rng), n(rng), n(rng)), w(n(rng), n(rng), n(rng));
      const double a = n(rng), b = n(rng);
      const Quaternion q = su2_from_axis_angle(random_unit(rng), angle(rng));
      ident = std::max(ident, (rotate_by_conjugation(one, v) - v).cwiseAbs().maxCoeff());
      norm = std::max(norm, std::abs(rotate_by_conjugation(q, v).norm() - v.norm()));
      lin = std::max(lin, (rotate_by_conjugation(q, a * v + b * w) -
                           (a * rotate_by_conjugation(q, v) + b * rotate_by_conjugation(q, w)))
                              .cwiseAbs()
                              .maxCoeff());
    }
    f.add(residual_check("conjugation by 1 leaves v unchanged", ident, 0.0, quat));
    f.add(residual_check("conjugation preserves length", norm, t.commutator, quat));
    f.add(residual_check("conjugation is linear", lin, t.commutator, quat));
  }

  // double cover
  {
    constexpr int kSamples = 1000;
    double rodrigues = 0, coordinate = 0, antipode = 0, preimage = 0, doubled = 0;
    nlohmann::json samples = nlohmann::json::array();
    for (int s = 0; s < kSamples; ++s) {
      const Eigen::Vector3d u = random_unit(rng);
      const double th = angle(rng);
      const Quaternion q = su2_from_axis_angle(u, th);
      const Eigen::Matrix3d r = rotation_from_quaternion(q);
      const double res = (r - axis_angle_rotation(u, th)).cwiseAbs().maxCoeff();
      rodrigues = std::max(rodrigues, res);
      antipode = std::max(antipode, (rotation_from_quaternion(-q) - r).cwiseAbs().maxCoeff());
      const auto pair = quaternions_for_rotation(axis_angle_rotation(u, th));
      const Quaternion pos = q.a >= 0 ? q : -q;
      preimage = std::max({preimage, quat_distance(pair[0], pos), quat_distance(pair[1], -pos)});
      doubled = std::max(doubled, (rotation_from_quaternion(paper_t(u, th)) - axis_angle_rotation(u, 2 * th))
                                      .cwiseAbs()
                                      .maxCoeff());

      const Axis ax = kAxes[s % 3];
      const double th2 = angle(rng);
      const Eigen::Vector3d e = Eigen::Vector3d::Unit(static_cast<int>(ax));
      coordinate = std::max(coordinate, (rotation_from_quaternion(su2_from_axis_angle(e, th2)) -
                                         so3_rotation(ax, th2).real())
                                            .cwiseAbs()
                                            .maxCoeff());
      doubled = std::max(doubled, (rotation_from_quaternion(paper_t(ax, th2)) - so3_rotation(ax, 2 * th2).real())
                                      .cwiseAbs()
                                      .maxCoeff());
      if (s < 5)
        samples.push_back({{"axis", {u.x(), u.y(), u.z()}}, {"theta", th}, {"q", quat_json(q)},
                           {"rotation_residual", res}});
    }
    f.add(residual_check("conjugation by the half-angle quaternion matches the axis-angle rotation (1000 samples)",
                         rodrigues, t.double_cover, cover));
    f.add(residual_check("conjugation matches so3_rotation about coordinate axes (1000 samples)", coordinate,
                         t.double_cover, cover));
    f.add(residual_check("q and -q give the same rotation", antipode, t.double_cover, cover));
    f.add(residual_check("the preimage of each rotation is exactly {q, -q}", preimage, t.double_cover, cover));
    f.add(residual_check("paper_t(theta) conjugation gives R(2 theta)", doubled, t.double_cover, cover));
    f.data["double_cover_samples"] = samples;
    f.data["double_cover_sample_count"] = kSamples;
    f.flag({"t-theta-angle", "t_x(theta) = cos(theta) + sin(theta) I corresponds to R_x(theta)",
            "conjugation by t_x(theta) rotates by 2 theta (residual " + fmt(doubled) + " against R(2 theta))",
            "the axis-angle constructor uses the half angle"});
    f.flag({"t-z-typo", "t_z(theta) = cos(theta) + sin(theta) I", "t_z uses K",
            "with I the printed t_z would repeat t_x"});

    const Quaternion full = su2_from_axis_angle({1, 0, 0}, 2 * kPi);
    f.add(residual_check("full turn: su2_from_axis_angle(x, 2 pi) = -1", quat_distance(full, {-1, 0, 0, 0}),
                         t.algebraic, cover));
    f.add(residual_check("full turn conjugation is the identity rotation",
                         (rotation_from_quaternion(full) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(),
                         t.algebraic, cover));
  }

  {
    const IsospinResult pn = apply_isospin(ladder(Ladder::plus), neutron());
    const IsospinResult np = apply_isospin(ladder(Ladder::minus), proton());
    const IsospinResult pp = apply_isospin(ladder(Ladder::plus), proton());
    const IsospinResult nn = apply_isospin(ladder(Ladder::minus), neutron());
    f.add(boolean_check("I+ n = p", !pn.annihilated && pn.state.components == proton().components, "isospin"));
    f.add(boolean_check("I- p = n", !np.annihilated && np.state.components == neutron().components, "isospin"));
    f.add(boolean_check("I+ p = 0 and I- n = 0", pp.annihilated && nn.annihilated, "isospin"));
  }

  {
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const double th = angle(rng);
      worst = std::max(worst, diff(u1_image(std::polar(1.0, th)), so2_rotation(th)));
    }
    f.add(residual_check("U(1) image of e^{i theta} is R(theta)", worst, t.commutator, "U(1)"));
    f.add(boolean_check("U(1) images of 1 and i", u1_image(1.0) == eye(2) && u1_image(I1) == from_ints(2, {0, -1, 1, 0}),
                        "U(1)"));
    double su2 = 0;
    std::normal_distribution<double> n(0.0, 1.0);
    for (int k = 0; k < 20; ++k) {
      Eigen::Vector4d v(n(rng), n(rng), n(rng), n(rng));
      v.normalize();
      const ComplexMatrix m = su2_matrix({v(0), v(1)}, {v(2), v(3)});
      su2 = std::max({su2, unitarity_residual(m), std::abs(m.determinant() - 1.0)});
    }
    f.add(residual_check("[[a, -conj b], [b, conj a]] is special unitary", su2, t.commutator, "SU(2)"));
    f.add(boolean_check("su2_matrix rejects |a|^2 + |b|^2 != 1", throws([] { su2_matrix(1.0, 1.0); }), "SU(2)"));
  }

  {
    bool ok = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        ExactMatrix rhs = ExactMatrix::Constant(2, 2, GaussInt(0));
        for (int c = 0; c < 3; ++c) rhs += exact_pauli(kAxes[c]) * GaussInt(0, 2 * eps0(a, b, c));
        if (!exact_is_zero(ExactMatrix(exact_commutator(exact_pauli(kAxes[a]), exact_pauli(kAxes[b])) - rhs)))
          ok = false;
      }
    f.add(boolean_check("[sigma_i, sigma_j] = 2i eps sigma_k in integer arithmetic", ok, "Pauli matrices"));
  }
  return f;
}

// ---------------------------------------------------------------- su3

Findings su3_suite(std::uint64_t seed, const Tol& t) {
  Findings f;
  const std::string gm = "Gell-Mann matrices";

  double herm = 0, trace = 0, ortho = 0;
  for (int a = 1; a <= 8; ++a) {
    herm = std::max(herm, diff(gell_mann(a), gell_mann(a).adjoint()));
    trace = std::max(trace, std::abs(gell_mann(a).trace()));
    for (int b = 1; b <= 8; ++b)
      ortho = std::max(ortho, std::abs((gell_mann(a) * gell_mann(b)).trace() - 2.0 * kronecker_delta(a, b)));
  }
  f.add(residual_check("Gell-Mann matrices are Hermitian", herm, t.weights, gm));
  f.add(residual_check("Gell-Mann matrices are traceless", trace, t.weights, gm));
  f.add(residual_check("tr(lambda_a lambda_b) = 2 delta_ab", ortho, t.weights, gm));
  f.add(residual_check("lambda_1 = [[0,1,0],[1,0,0],[0,0,0]]",
                       diff(gell_mann(1), from_ints(3, {0, 1, 0, 1, 0, 0, 0, 0, 0})), 0.0, gm));
  {
    double block = 0;
    for (int a = 0; a < 3; ++a) block = std::max(block, diff(gell_mann(a + 1).topLeftCorner(2, 2), pauli(kAxes[a])));
    f.add(residual_check("lambda_1..3 embed the Pauli matrices", block, 0.0, gm));
  }
  const double r3 = std::sqrt(3.0);
  f.add(residual_check("lambda_8 eigenvalues are {-2/sqrt3, 1/sqrt3, 1/sqrt3}",
                       eigen_spectrum_diff(gell_mann(8), {-2 / r3, 1 / r3, 1 / r3}), t.weights, gm));
  f.flag({"lambda8-normalization", "lambda_8 = (1/3) diag(1, 1, -2)",
          "lambda_8 = (1/sqrt3) diag(1, 1, -2)",
          "the 1/3 prefactor contradicts the stated eigenvalues {-2/sqrt3, 1/sqrt3} and the weights"});

  {
    const std::string det = "special unitary determinant";
    const DeterminantReport dr = verify_traceless_determinant_identity(gell_mann_basis(), 100, seed);
    f.add(residual_check("det exp(i t lambda) = 1 over 100 random t per generator", dr.max_deviation, t.algebraic, det));
    f.add(residual_check("det exp(0.7 i lambda_3) = 1",
                         std::abs(mat_exp(ComplexMatrix(cplx(0, 0.7) * gell_mann(3))).determinant() - 1.0), t.algebraic,
                         det));
    f.add(residual_check("det exp(0) = 1", std::abs(mat_exp(ComplexMatrix(ComplexMatrix::Zero(3, 3))).determinant() - 1.0),
                         0.0, det));
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 1.0;
    const DeterminantReport traced = verify_traceless_determinant_identity(GeneratorBasis("diag(1,0,0)", {d}), 20, seed);
    f.add(boolean_check("diag(1,0,0) is flagged as not special", traced.max_deviation > 1e-3, det));
    f.data["traced_generator_max_deviation"] = traced.max_deviation;
  }

  {
    const std::string w = "SU(3) weights";
    const auto weights = fundamental_weights();
    const double expect[3][2] = {{0.5, r3 / 6}, {-0.5, r3 / 6}, {0.0, -r3 / 3}};
    double worst = 0, si3 = 0, sx8 = 0, eigpair = 0;
    const ComplexMatrix x3 = gell_mann(3) / 2.0, x8 = gell_mann(8) / 2.0;
    nlohmann::json wj = nlohmann::json::array();
    for (std::size_t k = 0; k < weights.size(); ++k) {
      worst = std::max({worst, std::abs(weights[k].i3 - expect[k][0]), std::abs(weights[k].x8 - expect[k][1])});
      si3 += weights[k].i3;
      sx8 += weights[k].x8;
      const Eigen::VectorXcd v = Eigen::VectorXcd::Unit(3, static_cast<Eigen::Index>(k));
      eigpair = std::max({eigpair, (x3 * v - weights[k].i3 * v).norm(), (x8 * v - weights[k].x8 * v).norm()});
      wj.push_back({{"label", weights[k].label}, {"i3", weights[k].i3}, {"x8", weights[k].x8}});
    }
    f.add(boolean_check("three fundamental weights", weights.size() == 3, w));
    f.add(residual_check("weights are (1/2, sqrt3/6), (-1/2, sqrt3/6), (0, -sqrt3/3)", worst, t.weights, w));
    f.add(residual_check("weights sum to (0, 0)", std::max(std::abs(si3), std::abs(sx8)), t.weights, w));
    f.add(residual_check("weights are simultaneous eigenpairs of X_3 and X_8", eigpair, t.weights, w));
    f.data["weights"] = wj;
  }

  {
    const StructureConstants s = su3_structure_constants();
    // standard values for {lambda/2}
    std::vector<double> ref(512, 0.0);
    auto set = [&](int a, int b, int c, double v) {
      const int p[6][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}};
      for (int k = 0; k < 6; ++k)
        ref[static_cast<std::size_t>(((p[k][0] - 1) * 8 + p[k][1] - 1) * 8 + p[k][2] - 1)] = k < 3 ? v : -v;
    };
    set(1, 2, 3, 1);
    set(1, 4, 7, 0.5);
    set(1, 5, 6, -0.5);
    set(2, 4, 6, 0.5);
    set(2, 5, 7, 0.5);
    set(3, 4, 5, 0.5);
    set(3, 6, 7, -0.5);
    set(4, 5, 8, r3 / 2);
    set(6, 7, 8, r3 / 2);
    const double dv = tensor_diff(s, [&](int a, int b, int c) { return ref[static_cast<std::size_t>((a * 8 + b) * 8 + c)]; });
    f.add(residual_check("su(3) constants match the standard table", dv, t.structure, "structure constants"));
  }

  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const GeneratorBasis b = su3_basis();
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      RealVector c(8);
      for (int i = 0; i < 8; ++i) c(i) = u(rng);
      const ComplexMatrix m = b.combine(c);
      worst = std::max({worst, diff(m, m.adjoint()), std::abs(m.trace())});
    }
    f.add(residual_check("random real combinations of lambda/2 are Hermitian and traceless", worst, t.weights, gm));
  }

  {
    const auto ud = hypercharge(Rational(1, 3), Rational(0));
    const auto s = hypercharge(Rational(1, 3), Rational(-1));
    const auto zero = hypercharge(Rational(0), Rational(0));
    f.add(boolean_check("hypercharge: u/d 1/3, s -2/3, B = S = 0 gives 0",
                        ud.hypercharge == Rational(1, 3) && s.hypercharge == Rational(-2, 3) &&
                            zero.hypercharge == Rational(0),
                        "hypercharge"));
  }
  return f;
}

// ---------------------------------------------------------------- lorentz

ComplexMatrix printed_b_y(double th) {
  ComplexMatrix b = eye(4);
  b(0, 0) = b(2, 2) = std::cosh(th);
  b(0, 3) = b(2, 0) = -std::sinh(th);
  return b;
}

ComplexMatrix printed_third_boost(double th) {
  ComplexMatrix b = eye(4);
  b(0, 0) = b(3, 3) = std::cosh(th);
  b(0, 3) = b(3, 0) = -std::sinh(th);
  return b;
}

ExactMatrix exact_diag(std::initializer_list<int> d) {
  ExactMatrix m = ExactMatrix::Constant(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()), 0);
  Eigen::Index k = 0;
  for (int v : d) m(k, k) = GaussInt(v), ++k;
  return m;
}

Findings lorentz_suite(std::uint64_t seed, const Tol& t) {
  Findings f;
  const std::string lt = "Lorentz transformations";
  const std::string cls = "Lorentz group components";
  const std::string alg = "Lorentz algebra";
  const std::string chiral = "chiral representations";

  f.add(residual_check("metric is diag(-1, 1, 1, 1)", diff(minkowski_metric(), from_ints(4, {-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1})),
                       0.0, lt));
  f.add(boolean_check("identity is Lorentz", verify_lorentz(eye(4), t.lorentz), lt));
  f.add(boolean_check("B_x(0.3) is Lorentz", verify_lorentz(liekit::boost(Axis::x, 0.3), t.lorentz), lt));
  {
    ComplexMatrix d = eye(4);
    d(0, 0) = 2.0;
    f.add(boolean_check("diag(2, 1, 1, 1) is not Lorentz", !verify_lorentz(d, t.lorentz), lt));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> rapidity(-3.0, 3.0);
  {
    double worst = 0;
    bool cat1 = true;
    for (int k = 0; k < 60; ++k) {
      const Axis ax = kAxes[k % 3];
      const ComplexMatrix l = k % 2 ? liekit::boost(ax, rapidity(rng)) : lorentz_rotation(ax, angle(rng));
      worst = std::max(worst, lorentz_residual(l) / std::max(1.0, max_abs(l) * max_abs(l)));
      cat1 = cat1 && classify(l).category == 1;
    }
    f.add(residual_check("generated boosts and rotations satisfy L eta L^T = eta", worst, t.lorentz, lt));
    f.add(boolean_check("generated boosts and rotations are in category 1", cat1, cls));
  }

  {
    const ComplexMatrix tp = parity_tp(), tt = time_reversal_tt();
    const bool ok = classify(eye(4)).category == 1 && classify(tp).category == 2 && classify(tp * tt).category == 3 &&
                    classify(tt).category == 4;
    f.add(boolean_check("identity, T_p, T_p T_t, T_t land in categories 1, 2, 3, 4", ok, cls));
    f.add(boolean_check("classification rejects |L00| < 1", throws([] {
                          ComplexMatrix m = eye(4);
                          m(0, 0) = 0.5;
                          classify(m);
                        }),
                        cls));

    // products of 50 random proper orthochronous elements
    ComplexMatrix prod = eye(4);
    std::uniform_real_distribution<double> small(-0.2, 0.2);
    bool closed = true;
    double worst = 0;
    bool cosets = true;
    for (int k = 0; k < 50; ++k) {
      const Axis ax = kAxes[k % 3];
      const ComplexMatrix g = liekit::boost(ax, small(rng)) * lorentz_rotation(kAxes[(k + 1) % 3], angle(rng));
      prod = prod * g;
      worst = std::max(worst, lorentz_residual(prod) / std::max(1.0, max_abs(prod) * max_abs(prod)));
      closed = closed && classify(prod).category == 1;
      cosets = cosets && classify(tp * g).category == 2 && classify(tp * tt * g).category == 3 &&
               classify(tt * g).category == 4;
    }
    f.add(boolean_check("products of 50 category-1 elements stay in category 1", closed, cls));
    f.add(residual_check("products of 50 category-1 elements stay Lorentz", worst, t.lorentz, cls));
    f.add(boolean_check("T_p, T_p T_t, T_t times category 1 reach categories 2, 3, 4", cosets, cls));
  }

  {
    const double th = kPi / 2;
    const Eigen::Vector4cd u = liekit::boost(Axis::x, th) * Eigen::Vector4cd(1, 0, 0, 0);
    const Eigen::Vector4cd want(std::cosh(th), -std::sinh(th), 0, 0);
    f.add(residual_check("boost(x, pi/2) (1,0,0,0) = (cosh, -sinh, 0, 0)", max_abs(Eigen::Vector4cd(u - want)), t.boost,
                         "boosts"));
    const double v = coordinate_speed(liekit::boost(Axis::x, th), Axis::x);
    f.add(residual_check("coordinate speed of boost(x, pi/2) is -tanh(pi/2) = -0.917152...",
                         std::max(std::abs(v + std::tanh(th)), std::abs(v + 0.917152335667274)), t.speed, "boosts"));
    f.data["boost_x_half_pi"] = {{"u", {u(0).real(), u(1).real(), u(2).real(), u(3).real()}}, {"speed", v}};
    f.add(residual_check("B_x(0) = 1", diff(liekit::boost(Axis::x, 0), eye(4)), 0.0, "boosts"));
    f.add(residual_check("exp(i theta K_x) matches the printed B_x", diff(liekit::boost(Axis::x, 0.8), closed_form_boost_x(0.8)),
                         t.boost * 10, "boosts"));
    // absolute residual reaches a few ulp of cosh^2(5) ~ 5.5e3, so judge it relative to cosh^2
    double hyper = 0, hyper_abs = 0;
    for (int k = 0; k <= 100; ++k) {
      const double x = -5.0 + 0.1 * k;
      const double c = std::cosh(x), s = std::sinh(x);
      hyper_abs = std::max(hyper_abs, std::abs(c * c - s * s - 1.0));
      hyper = std::max(hyper, std::abs(c * c - s * s - 1.0) / (c * c));
    }
    f.add(residual_check("cosh^2 - sinh^2 = 1 on [-5, 5] (relative to cosh^2)", hyper, t.boost, "boosts"));
    f.data["cosh_sinh_absolute_residual"] = hyper_abs;

    const double by = lorentz_residual(printed_b_y(0.8));
    f.data["printed_boost_y_lorentz_residual"] = by;
    f.flag({"printed-boost-y", "B_y(theta) has -sinh at (t, z) and (y, t)",
            "the printed B_y violates L eta L^T = eta by " + fmt(by) + " at theta = 0.8; exp(i theta K_y) couples t and y symmetrically",
            "boosts are generated by mat_exp only"});
    const double third = diff(printed_third_boost(0.8), liekit::boost(Axis::z, 0.8));
    f.add(residual_check("the third printed boost equals B_z", third, t.boost * 10, "boosts"));
    f.flag({"printed-boost-z-label", "third boost matrix labelled B_x(theta) = exp(i K_x theta)",
            "it equals exp(i theta K_z) (difference " + fmt(third) + ")", "label typo"});
  }

  {
    const LorentzAlgebraResiduals norm =
        lorentz_algebra_residuals(rotation_generators(Convention::normalized), boost_generators(Convention::normalized));
    f.add(residual_check("[J, J] = i eps J (normalized generators)", norm.jj, t.commutator, alg));
    f.add(residual_check("[J, K] = i eps K (normalized generators)", norm.jk, t.commutator, alg));
    f.add(residual_check("[K, K] = -i eps J (normalized generators)", norm.kk, t.commutator, alg));
    const NDecompositionResiduals n =
        n_decomposition(rotation_generators(Convention::normalized), boost_generators(Convention::normalized));
    f.add(residual_check("[N+, N+] = 2i eps N+", n.plus_plus, t.commutator, alg));
    f.add(residual_check("[N-, N-] = 2i eps N-", n.minus_minus, t.commutator, alg));
    f.add(residual_check("[N-, N+] = 0", n.minus_plus, t.commutator, alg));
    f.add(residual_check("N+ + N- = 2J", n.sum_identity, t.commutator, alg));
    const ComplexMatrix jx = lorentz_generator(GeneratorKind::rotation, Axis::x),
                        kx = lorentz_generator(GeneratorKind::boost, Axis::x);
    f.add(residual_check("[J_x, K_x] = 0", max_abs(commutator(jx, kx)), 0.0, alg));
    f.add(residual_check("K_x = [[0,i,0,0],[i,0,0,0],0,0]",
                         diff(kx, I1 * from_ints(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})), 0.0, alg));

    const LorentzAlgebraResiduals printed = lorentz_algebra_residuals(rotation_generators(), boost_generators());
    f.data["lorentz_algebra"] = {
        {"normalized", {{"jj", norm.jj}, {"jk", norm.jk}, {"kk", norm.kk}}},
        {"printed", {{"jj", printed.jj}, {"jk", printed.jk}, {"kk", printed.kk}}}};
    f.flag({"lorentz-generator-sign", "the printed J, K satisfy [J,J] = i eps J, [J,K] = i eps K, [K,K] = -i eps J",
            "with the printed matrices every relation holds with the opposite sign (residual " + fmt(printed.max()) + ")",
            "negating J and K (the normalized convention) satisfies all three exactly"});
    const ComplexMatrix verb = printed_rotation_generator_x_verbatim();
    const ComplexMatrix eta = minkowski_metric();
    const double stray = max_abs(ComplexMatrix(verb * eta + eta * verb.transpose()));
    f.flag({"printed-jx-entry", "J_x as printed with entry 1 at (x, x)",
            "that matrix fails J eta + eta J^T = 0 by " + fmt(stray), "the stray 1 is dropped"});
    f.data["printed_jx_antisymmetry_residual"] = stray;
  }

  {
    const ChiralRep left = chiral_rep(Handedness::left), right = chiral_rep(Handedness::right);
    const LorentzAlgebraResiduals l = lorentz_algebra_residuals(left.j, left.k);
    const LorentzAlgebraResiduals r = lorentz_algebra_residuals(right.j, right.k);
    f.add(residual_check("left chiral rep satisfies the Lorentz algebra", l.max(), t.commutator, chiral));
    f.add(residual_check("right chiral rep satisfies the Lorentz algebra", r.max(), t.commutator, chiral));
    f.add(residual_check("left: N- = J - iK vanishes", vanishing_n_residual(left), 0.0, chiral));
    f.add(residual_check("right: N+ = J + iK vanishes", vanishing_n_residual(right), 0.0, chiral));
    const ChiralRep flipped = parity_flip(left);
    double d = 0;
    for (int a = 0; a < 3; ++a) d = std::max({d, diff(flipped.j[a], right.j[a]), diff(flipped.k[a], right.k[a])});
    f.add(boolean_check("parity flip takes left to right", flipped.handedness == Handedness::right && d == 0.0, chiral));

    const ExactMatrix tp = exact_diag({1, -1, -1, -1});
    bool exact = true;
    for (Axis ax : kAxes) {
      const ExactMatrix j = exact_lorentz_generator(GeneratorKind::rotation, ax);
      const ExactMatrix k = exact_lorentz_generator(GeneratorKind::boost, ax);
      exact = exact && exact_is_zero(ExactMatrix(tp * j * tp.transpose() - j)) &&
              exact_is_zero(ExactMatrix(tp * k * tp.transpose() + k));
    }
    f.add(boolean_check("T_p J T_p^T = J and T_p K T_p^T = -K in integer arithmetic", exact, chiral));
  }
  return f;
}

// ---------------------------------------------------------------- poincare

Findings poincare_suite(std::uint64_t, const Tol& t) {
  Findings f;
  const std::string pc = "Poincare algebra";
  const PoincareAffineRep norm = poincare_affine(Convention::normalized);
  const PoincareAffineRep printed = poincare_affine(Convention::printed);
  const PoincareResiduals rn = poincare_commutators(norm);
  const PoincareResiduals rp = poincare_commutators(printed);

  f.add(residual_check("[J_i, P_j] = i eps P_k", rn.jp, t.commutator, pc));
  f.add(residual_check("[P_mu, P_nu] = 0", rn.pp, t.commutator, pc));
  f.add(residual_check("[J_i, P_t] = 0", rn.jpt, t.commutator, pc));
  f.add(residual_check("[K_i, P_t] = -i P_i", rn.kpt, t.commutator, pc));
  f.add(residual_check("P_mu^2 = 0", rn.p_nilpotent, 0.0, pc));
  {
    double block = 0;
    const Triple j = rotation_generators(Convention::normalized), k = boost_generators(Convention::normalized);
    for (int a = 0; a < 3; ++a)
      block = std::max({block, diff(norm.j[a].topLeftCorner(4, 4), j[a]), diff(norm.k[a].topLeftCorner(4, 4), k[a]),
                        max_abs(norm.j[a].row(4)), max_abs(norm.j[a].col(4)), max_abs(norm.k[a].row(4)),
                        max_abs(norm.k[a].col(4))});
    f.add(residual_check("affine embedding carries the Lorentz generators in its 4x4 block", block, 0.0, pc));
  }
  {
    const Eigen::Vector4d a(0.3, -1.2, 2.5, 0.7);
    ComplexMatrix gen = ComplexMatrix::Zero(5, 5);
    for (int mu = 0; mu < 4; ++mu) gen += a(mu) * norm.p[mu];
    f.add(residual_check("translation(a) = exp(i a^mu P_mu)", diff(mat_exp(ComplexMatrix(I1 * gen)), translation(a)),
                         t.commutator, "translations"));
  }

  f.data["poincare"] = {
      {"normalized", {{"jp", rn.jp}, {"pp", rn.pp}, {"jpt", rn.jpt}, {"kpt", rn.kpt},
                      {"jk_delta_verbatim", rn.jk_delta_verbatim}, {"kp_delta_plus", rn.kp_delta_plus},
                      {"kp_delta_minus", rn.kp_delta_minus}}},
      {"printed", {{"jp", rp.jp}, {"pp", rp.pp}, {"jpt", rp.jpt}, {"kpt", rp.kpt},
                   {"jk_delta_verbatim", rp.jk_delta_verbatim}, {"kp_delta_plus", rp.kp_delta_plus},
                   {"kp_delta_minus", rp.kp_delta_minus}}}};

  // the two readings of the J/K/delta relation
  f.add(boolean_check("verbatim [J_i, K_j] = i delta P_t is false in both conventions",
                      rn.jk_delta_verbatim > 0.5 && rp.jk_delta_verbatim > 0.5, pc));
  f.add(boolean_check("reading [K_i, P_j] = i delta P_t holds for exactly one sign convention",
                      (rp.kp_delta_plus <= t.commutator) != (rn.kp_delta_plus <= t.commutator), pc));
  f.flag({"jk-delta-relation", "[J_i, K_j] = i delta_ij P_t",
          "verbatim residual " + fmt(rn.jk_delta_verbatim) + " ([J_i, K_j] lies in the Lorentz block); read as [K_i, P_j] = i delta P_t it holds for the printed K (residual " +
              fmt(rp.kp_delta_plus) + ") and with the opposite sign for the normalized K (residual " +
              fmt(rn.kp_delta_minus) + ")",
          "no single convention satisfies this reading together with [K_i, P_t] = -i P_i"});
  f.flag({"poincare-printed-convention", "[J_i, P_j] = i eps P_k and [K_i, P_t] = -i P_i with the printed J, K",
          "printed-convention residuals jp = " + fmt(rp.jp) + ", kpt = " + fmt(rp.kpt),
          "both hold exactly for the normalized generators"});
  return f;
}

// ---------------------------------------------------------------- noether

Findings noether_suite(std::uint64_t, const Tol& t) {
  Findings f;
  const std::string cons = "conserved charges";
  const std::string emt = "energy-momentum tensor";
  const InitialCondition gaussian = InitialCondition::parse("gaussian");

  LatticeConfig base;  // 1+1D, N = 256, dx = 1, dt = 0.05, m = 1, 2000 steps
  const ConservationResult r = conservation_report(base, gaussian);
  f.add(residual_check("1+1D Gaussian packet: relative energy drift", r.energy_drift, t.energy_drift, cons));
  f.add(residual_check("1+1D Gaussian packet: momentum drift", r.momentum_drift, t.momentum_drift, cons));
  const double p0 = r.samples.front().momentum[0];
  f.add(boolean_check("travelling packet carries non-zero momentum", std::abs(p0) > 1e-3, cons));
  f.data["base_run"] = to_json(r);

  {
    const FieldState end = evolve(make_initial_state(base, gaussian), base, base.steps);
    const StressTensorField tf = stress_tensor(end, base);
    double min_t00 = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < base.sites(); ++s) min_t00 = std::min(min_t00, tf.at(s, 0, 0));
    f.add(boolean_check("T^0_0 >= 0 at every site after evolution", min_t00 >= 0, emt));
  }

  // dt refinement at fixed physical time T = 100
  LatticeConfig coarse = base;
  coarse.dt = 0.1;
  coarse.steps = 1000;
  coarse.sample_every = 50;
  const auto runs = refinement_runs(coarse, gaussian, 3, false);
  const ConvergenceStudy energy =
      convergence_of(runs, "relative energy drift", [](const ConservationResult& c) { return c.energy_drift; });
  const ConvergenceStudy boost_drift =
      convergence_of(runs, "relative boost drift", [](const ConservationResult& c) { return c.boost_drift; });
  const ConvergenceStudy boost_rate = convergence_of(runs, "d/dt energy moment + P residual",
                                                     [](const ConservationResult& c) { return c.boost_rate_residual; });
  auto order_check = [&](const std::string& name, const ConvergenceStudy& s, const std::string& ref) {
    f.add(lower_bound_check(name, s.min_order(), t.order, ref));
  };
  order_check("energy drift convergence order under dt halving", energy, cons);
  order_check("boost charge drift convergence order under dt halving", boost_drift, "boost charge");
  order_check("d/dt energy moment = -P residual convergence order", boost_rate, "boost charge");

  LatticeConfig div_cfg = base;
  div_cfg.steps = 400;
  div_cfg.sample_every = 100;
  const ConvergenceStudy div = convergence_of(refinement_runs(div_cfg, gaussian, 3, true), "max divergence residual",
                                              max_divergence);
  order_check("divergence residual convergence order under dx, dt refinement", div,
              "energy-momentum conservation");
  f.data["convergence"] = {to_json(energy), to_json(boost_drift), to_json(boost_rate), to_json(div)};

  f.flag({"boost-charge-tolerance", "BO^x constant within the energy-drift tolerance (1e-5)",
          "relative BO^x drift " + fmt(r.boost_drift) + " at dt = 0.05, converging at order " +
              fmt(boost_drift.min_order()) + " in dt",
          "the lattice flux differs from T^i0 at O(dt^2); the energy drift converges faster (order " +
              fmt(energy.min_order()) + ")"});
  f.flag({"momentum-sign", "P_i = sum T^0_i dV is positive for a right-moving packet",
          "P = " + fmt(p0) + " for the right-moving packet",
          "T^0_i = pi d_i phi is negative when phi moves right; BO uses T^i0 = -T^0_i"});

  {
    LatticeConfig c3;
    c3.dims = 3;
    c3.extent = 32;
    c3.steps = 400;
    c3.sample_every = 50;
    const ConservationResult r3 = conservation_report(c3, gaussian);
    f.add(residual_check("3+1D symmetric bump: max |L^z|", r3.angular_momentum_max, t.angular_momentum,
                         "angular momentum"));
    f.add(residual_check("3+1D symmetric bump: momentum drift", r3.momentum_drift, t.momentum_drift, cons));
    f.data["run_3d"] = {{"config", to_json(c3)},
                        {"angular_momentum_max", r3.angular_momentum_max},
                        {"energy_drift", r3.energy_drift},
                        {"momentum_drift", r3.momentum_drift},
                        {"boost_drift", r3.boost_drift}};
  }

  {
    LatticeConfig vac = base;
    vac.mass = 0;
    vac.steps = 200;
    const ConservationResult rv = conservation_report(vac, InitialCondition::parse("vacuum"));
    const ChargeRecord& last = rv.samples.back();
    const double worst = std::max({std::abs(last.energy), std::abs(last.momentum[0]), std::abs(last.boost[0]),
                                   rv.energy_drift, rv.momentum_drift, max_divergence(rv)});
    f.add(residual_check("massless vacuum stays at zero charges and residuals", worst, 0.0, cons));
  }

  {
    LatticeConfig c = base;
    FieldState s;
    s.phi.assign(c.sites(), 2.0);
    s.pi.assign(c.sites(), 0.0);
    f.add(residual_check("L = -m^2 c^2 / 2 for constant phi = c", std::abs(lagrangian_density(s, c, 7) + 2.0), 0.0,
                         "Lagrangian density"));
    c.mass = 0;
    f.add(residual_check("L = 0 for constant phi with m = 0", std::abs(lagrangian_density(s, c, 7)), 0.0,
                         "Lagrangian density"));
  }

  {
    const std::string em = "electromagnetic tensor";
    const Eigen::Matrix4d zero = assemble_em_tensor(Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), 1.0);
    const Eigen::Matrix4d ex = assemble_em_tensor({1, 0, 0}, Eigen::Vector3d::Zero(), 1.0);
    Eigen::Matrix4d want = Eigen::Matrix4d::Zero();
    want(0, 1) = -1;
    want(1, 0) = 1;
    f.add(residual_check("F = 0 for E = B = 0", zero.cwiseAbs().maxCoeff(), 0.0, em));
    f.add(residual_check("E = (1,0,0): F^01 = -1, F^10 = 1", (ex - want).cwiseAbs().maxCoeff(), 0.0, em));
    const Eigen::Matrix4d g = assemble_em_tensor({0.3, -1.1, 2.0}, {0.7, 0.2, -0.4}, 3.0);
    f.add(residual_check("F + F^T = 0", (g + g.transpose()).cwiseAbs().maxCoeff(), 0.0, em));
  }
  return f;
}

// ---------------------------------------------------------------- dispatch

using SuiteFn = Findings (*)(std::uint64_t, const Tol&);

SuiteFn lookup(const std::string& name) {
  static const std::map<std::string, SuiteFn> table = {
      {"finite", finite_suite}, {"lie", lie_suite},           {"so3su2", so3su2_suite}, {"su3", su3_suite},
      {"lorentz", lorentz_suite}, {"poincare", poincare_suite}, {"noether", noether_suite}};
  const auto it = table.find(name);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"finite", "lie", "so3su2", "su3", "lorentz", "poincare", "noether"};
  return names;
}

std::map<std::string, double> default_tolerances(double tol) {
  const Tol t = make_tol(tol);
  return {{"algebraic", t.algebraic},
          {"unitarity", t.unitarity},
          {"intertwiner", t.intertwiner},
          {"finite_difference", t.finite_difference},
          {"closure", t.closure},
          {"structure", t.structure},
          {"jacobi", t.jacobi},
          {"commutator", t.commutator},
          {"double_cover", t.double_cover},
          {"weights", t.weights},
          {"lorentz", t.lorentz},
          {"boost", t.boost},
          {"speed", t.speed},
          {"energy_drift", t.energy_drift},
          {"momentum_drift", t.momentum_drift},
          {"angular_momentum", t.angular_momentum},
          {"convergence_order", t.order}};
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  if (!(options.tol > 0) || !std::isfinite(options.tol)) throw UsageError("tolerance must be positive");
  const Tol t = make_tol(options.tol);
  Report report;
  report.suite = name;
  report.seed = options.seed;
  report.tolerances = default_tolerances(options.tol);

  if (name == "all") {
    const auto& names = suite_names();
    std::vector<Findings> parts(names.size());
    if (options.parallel) {
      std::vector<std::future<Findings>> futures;
      for (const auto& n : names) futures.push_back(std::async(std::launch::async, lookup(n), options.seed, t));
      for (std::size_t k = 0; k < names.size(); ++k) parts[k] = futures[k].get();
    } else {
      for (std::size_t k = 0; k < names.size(); ++k) parts[k] = lookup(names[k])(options.seed, t);
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
      for (auto& c : parts[k].checks) c.name = names[k] + ": " + c.name;
      report.findings.append(std::move(parts[k]), names[k]);
    }
    return report;
  }

  const SuiteFn fn = lookup(name);
  if (!fn) throw UsageError("unknown suite '" + name + "'");
  report.findings = fn(options.seed, t);
  return report;
}

}  // namespace liekit
