#include "liekit/finitegroup.hpp"

#include "liekit/matrix_io.hpp"
#include "liekit/random_matrices.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

namespace liekit {

const char* to_string(GroupAxiom axiom) {
  switch (axiom) {
    case GroupAxiom::closure: return "closure";
    case GroupAxiom::associativity: return "associativity";
    case GroupAxiom::identity: return "identity";
    case GroupAxiom::inverse: return "inverse";
  }
  return "unknown";
}

int FiniteGroup::index_of(const std::string& label) const {
  const auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw std::out_of_range("no group element labelled " + label);
  return static_cast<int>(it - elements_.begin());
}

FiniteGroup verify_group_axioms(std::vector<std::string> elements,
                                std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw GroupAxiomError(GroupAxiom::identity, {-1, -1, -1}, "empty element list");
  if (static_cast<int>(table.size()) != n)
    throw GroupAxiomError(GroupAxiom::closure, {-1, -1, -1}, "table row count differs from element count");
  for (int a = 0; a < n; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != n)
      throw GroupAxiomError(GroupAxiom::closure, {a, -1, -1}, "table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << "closure violated: f(" << a << ", " << b << ") = " << v << " is not an element";
        throw GroupAxiomError(GroupAxiom::closure, {a, b, v}, msg.str());
      }
    }
  }
  const auto f = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f(f(a, b), c) != f(a, f(b, c))) {
          std::ostringstream msg;
          msg << "associativity violated for (" << elements[static_cast<std::size_t>(a)] << ", "
              << elements[static_cast<std::size_t>(b)] << ", " << elements[static_cast<std::size_t>(c)] << ")";
          throw GroupAxiomError(GroupAxiom::associativity, {a, b, c}, msg.str());
        }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = f(e, a) == a && f(a, e) == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw GroupAxiomError(GroupAxiom::identity, {-1, -1, -1}, "no identity element");

  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (f(a, b) == identity && f(b, a) == identity) {
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse[static_cast<std::size_t>(a)] < 0)
      throw GroupAxiomError(GroupAxiom::inverse, {a, -1, -1},
                            "element " + elements[static_cast<std::size_t>(a)] + " has no inverse");
  }

  FiniteGroup g;
  g.elements_ = std::move(elements);
  g.table_ = std::move(table);
  g.identity_ = identity;
  g.inverse_ = std::move(inverse);
  return g;
}

Representation::Representation(GroupPtr g, std::vector<ComplexMatrix> imgs)
    : group(std::move(g)), images(std::move(imgs)) {
  if (!group) throw PreconditionError("representation: null group");
  if (static_cast<int>(images.size()) != group->order())
    throw PreconditionError("representation: need one image per group element");
  const Eigen::Index n = images.front().rows();
  for (const auto& m : images) {
    require_square(m, "representation");
    if (m.rows() != n) throw PreconditionError("representation: image dimensions differ");
    if (!all_finite(m)) throw PreconditionError("representation: non-finite entry");
  }
}

RepresentationCheck verify_representation(const Representation& rep, double tol) {
  const FiniteGroup& g = *rep.group;
  const Eigen::Index n = rep.dim();
  RepresentationCheck out;
  out.ok = true;

  const ComplexMatrix& e = rep(g.identity_index());
  const double id_res = max_abs(ComplexMatrix(e - ComplexMatrix::Identity(n, n)));
  out.max_residual = id_res;
  if (id_res > tol) {
    out.ok = false;
    out.witness = std::make_pair(g.identity_index(), g.identity_index());
  }
  for (int a = 0; a < g.order(); ++a) {
    if (std::abs(rep(a).determinant()) <= tol * std::pow(std::max(1.0, max_abs(rep(a))), double(n))) {
      out.ok = false;
      if (!out.witness) out.witness = std::make_pair(a, a);
    }
  }
  // Residuals are relative to max(1, |D(a)| |D(b)|) so conjugated representations
  // with large entries are judged on the same footing as unitary ones.
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const ComplexMatrix diff = rep(a) * rep(b) - rep(g.multiply(a, b));
      const double scale = std::max(1.0, max_abs(rep(a)) * max_abs(rep(b)));
      const double r = max_abs(diff) / scale;
      out.max_residual = std::max(out.max_residual, r);
      if (r > tol && out.ok) {
        out.ok = false;
        out.witness = std::make_pair(a, b);
      } else if (r > tol && !out.witness) {
        out.witness = std::make_pair(a, b);
      }
    }
  return out;
}

Representation build_regular_representation(const GroupPtr& g) {
  const int n = g->order();
  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    ComplexMatrix k = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j) k(g->multiply(r, j), j) = 1.0;  // k(R) b_j = b_{f(R, j)}
    images.push_back(std::move(k));
  }
  return Representation(g, std::move(images));
}

UnitarizationResult unitarize(const Representation& rep, double tol) {
  const Eigen::Index n = rep.dim();
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (const auto& d : rep.images) s += d.adjoint() * d;
  s = (s + s.adjoint()) / 2.0;

  ComplexMatrix s_half = psd_sqrt(s, tol);
  ComplexMatrix s_half_inv;
  try {
    s_half_inv = psd_inverse_sqrt(s, tol);
  } catch (const PreconditionError&) {
    throw PreconditionError("unitarize: S is numerically singular; input is not a representation");
  }

  std::vector<ComplexMatrix> images;
  images.reserve(rep.images.size());
  for (const auto& d : rep.images) images.push_back(s_half * d * s_half_inv);
  return UnitarizationResult{std::move(s), std::move(s_half), Representation(rep.group, std::move(images))};
}

namespace {

double intertwining_residual(const Representation& rep1, const Representation& rep2, const ComplexMatrix& s) {
  double worst = 0;
  const double s_scale = std::max(1e-300, max_abs(s));
  for (std::size_t k = 0; k < rep1.images.size(); ++k) {
    const double scale = s_scale * std::max({1.0, max_abs(rep1.images[k]), max_abs(rep2.images[k])});
    worst = std::max(worst, max_abs(ComplexMatrix(rep1.images[k] * s - s * rep2.images[k])) / scale);
  }
  return worst;
}

bool well_conditioned(const ComplexMatrix& s) {
  Eigen::JacobiSVD<ComplexMatrix> svd(s);
  const auto& sv = svd.singularValues();
  return sv(0) > 0 && sv(sv.size() - 1) > 1e-10 * sv(0);
}

}  // namespace

std::optional<ComplexMatrix> are_equivalent(const Representation& rep1, const Representation& rep2, double tol) {
  if (rep1.group->order() != rep2.group->order())
    throw PreconditionError("are_equivalent: representations of different groups");
  if (rep1.dim() != rep2.dim()) throw PreconditionError("are_equivalent: dimension mismatch");
  const Eigen::Index n = rep1.dim();
  const Eigen::Index n2 = n * n;
  const auto order = static_cast<Eigen::Index>(rep1.images.size());

  // vec(A S - S B) = (I (x) A - B^T (x) I) vec(S), column-major vec.
  ComplexMatrix system = ComplexMatrix::Zero(order * n2, n2);
  for (Eigen::Index g = 0; g < order; ++g) {
    const ComplexMatrix& a = rep1.images[static_cast<std::size_t>(g)];
    const ComplexMatrix& b = rep2.images[static_cast<std::size_t>(g)];
    const double scale = std::max({1.0, max_abs(a), max_abs(b)});
    auto block = system.block(g * n2, 0, n2, n2);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index col = j * n + i;  // S(i, j)
        for (Eigen::Index r = 0; r < n; ++r) {
          block(j * n + r, col) += a(r, i) / scale;  // (A S)(r, j) picks A(r, i) S(i, j)
          block(r * n + i, col) -= b(j, r) / scale;  // (S B)(i, r) picks S(i, j) B(j, r)
        }
      }
  }

  Eigen::JacobiSVD<ComplexMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index k = 0; k < n2; ++k) {
    const double sigma = k < sv.size() ? sv(k) : 0.0;
    if (sigma <= tol * top) null_cols.push_back(k);
  }
  if (null_cols.empty()) return std::nullopt;

  ComplexMatrix null_basis(n2, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t k = 0; k < null_cols.size(); ++k)
    null_basis.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(null_cols[k]);

  const auto unvec = [n](const ComplexVector& v) {
    ComplexMatrix s(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) s(i, j) = v(j * n + i);
    return s;
  };
  const auto accept = [&](const ComplexMatrix& s) {
    return well_conditioned(s) && intertwining_residual(rep1, rep2, s) <= tol;
  };

  // Projection of the identity first, so equal representations give back 1.
  ComplexVector id_vec = ComplexVector::Zero(n2);
  for (Eigen::Index i = 0; i < n; ++i) id_vec(i * n + i) = 1.0;
  const ComplexVector projected = null_basis * (null_basis.adjoint() * id_vec);
  if (projected.norm() > 1e-12) {
    ComplexMatrix s = unvec(projected);
    if (accept(s)) return s;
  }

  std::mt19937_64 rng(0x1e7e7);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const ComplexMatrix coeffs = random_gaussian_matrix(null_basis.cols(), 1, rng);
    ComplexMatrix s = unvec(null_basis * coeffs.col(0));
    if (accept(s)) return s;
  }
  return std::nullopt;
}

GroupPtr cyclic_group_c4() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % 4;
  return std::make_shared<const FiniteGroup>(verify_group_axioms({"R0", "R90", "R180", "R270"}, std::move(table)));
}

GroupPtr parity_group() {
  return std::make_shared<const FiniteGroup>(verify_group_axioms({"1", "P"}, {{0, 1}, {1, 0}}));
}

namespace {

using Perm = std::array<int, 3>;

const std::array<Perm, 6>& s3_permutations() {
  // e, r, r^2, s, s r, s r^2 with r = (0 1 2) and s = (0 1); (a b)(x) = a[b[x]].
  static const std::array<Perm, 6> perms = [] {
    const Perm e{0, 1, 2};
    const Perm r{1, 2, 0};
    const Perm s{1, 0, 2};
    const auto compose = [](const Perm& a, const Perm& b) {
      return Perm{a[static_cast<std::size_t>(b[0])], a[static_cast<std::size_t>(b[1])], a[static_cast<std::size_t>(b[2])]};
    };
    const Perm r2 = compose(r, r);
    return std::array<Perm, 6>{e, r, r2, s, compose(s, r), compose(s, r2)};
  }();
  return perms;
}

}  // namespace

GroupPtr symmetric_group_s3() {
  const auto& perms = s3_permutations();
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm ab{};
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return std::make_shared<const FiniteGroup>(
      verify_group_axioms({"e", "r", "r2", "s", "sr", "sr2"}, std::move(table)));
}

Representation c4_rotation_representation() {
  std::vector<ComplexMatrix> images;
  for (int k = 0; k < 4; ++k) {
    // exact entries of the rotation by k * 90 degrees
    static constexpr int cs[4] = {1, 0, -1, 0};
    static constexpr int sn[4] = {0, 1, 0, -1};
    ComplexMatrix m(2, 2);
    m << double(cs[k]), double(-sn[k]), double(sn[k]), double(cs[k]);
    images.push_back(m);
  }
  return Representation(cyclic_group_c4(), std::move(images));
}

Representation parity_reflection_representation() {
  ComplexMatrix p(2, 2);
  p << 1.0, 0.0, 0.0, -1.0;
  return Representation(parity_group(), {ComplexMatrix::Identity(2, 2), p});
}

Representation s3_standard_representation() {
  // Permutation action on R^3 restricted to the plane orthogonal to (1, 1, 1).
  Eigen::Matrix<double, 3, 2> basis;
  basis.col(0) << 1.0, -1.0, 0.0;
  basis.col(1) << 1.0, 1.0, -2.0;
  basis.col(0) /= std::sqrt(2.0);
  basis.col(1) /= std::sqrt(6.0);
  std::vector<ComplexMatrix> images;
  for (const auto& p : s3_permutations()) {
    Eigen::Matrix3d perm = Eigen::Matrix3d::Zero();
    for (int x = 0; x < 3; ++x) perm(p[static_cast<std::size_t>(x)], x) = 1.0;
    images.push_back((basis.transpose() * perm * basis).cast<cplx>());
  }
  return Representation(symmetric_group_s3(), std::move(images));
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  return {{"elements", g.elements()}, {"table", g.table()}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
    throw FormatError("group: expected object with \"elements\" and \"table\"");
  try {
    return verify_group_axioms(j["elements"].get<std::vector<std::string>>(),
                               j["table"].get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("group: ") + e.what());
  }
}

nlohmann::json representation_to_json(const Representation& rep) {
  nlohmann::json images = nlohmann::json::array();
  for (const auto& m : rep.images) images.push_back(matrix_to_json(m));
  return {{"group", group_to_json(*rep.group)}, {"images", std::move(images)}};
}

Representation representation_from_json(const nlohmann::json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("images"))
    throw FormatError("representation: expected object with \"images\"");
  GroupPtr group;
  if (j.contains("group")) {
    group = std::make_shared<const FiniteGroup>(group_from_json(j["group"]));
  } else if (j.contains("group_file")) {
    std::filesystem::path p = j["group_file"].get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    group = std::make_shared<const FiniteGroup>(group_from_json(read_json_file(p.string())));
  } else {
    throw FormatError("representation: needs \"group\" or \"group_file\"");
  }
  if (!j["images"].is_array()) throw FormatError("representation: \"images\" must be an array");
  std::vector<ComplexMatrix> images;
  for (const auto& m : j["images"]) images.push_back(matrix_from_json(m));
  try {
    return Representation(group, std::move(images));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace liekit
