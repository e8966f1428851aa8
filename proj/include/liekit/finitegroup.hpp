#pragma once

// Finite groups as validated Cayley tables, matrix representations of them,
// the regular representation, unitarization, and an intertwiner search.

#include "liekit/numkernel.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liekit {

enum class GroupAxiom { closure, associativity, identity, inverse };

const char* to_string(GroupAxiom axiom);

/// Names the first violated axiom. `witness` holds element indices: (a, b, c)
/// for associativity, (a, b, entry) for closure, (a, -1, -1) for a missing
/// inverse and (-1, -1, -1) when no identity exists.
class GroupAxiomError : public std::runtime_error {
public:
  GroupAxiomError(GroupAxiom axiom, std::array<int, 3> witness, const std::string& what)
      : std::runtime_error(what), axiom_(axiom), witness_(witness) {}

  GroupAxiom axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }

private:
  GroupAxiom axiom_;
  std::array<int, 3> witness_;
};

class FiniteGroup {
public:
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  int identity_index() const noexcept { return identity_; }
  int multiply(int a, int b) const { return table_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)); }
  int inverse(int a) const { return inverse_.at(static_cast<std::size_t>(a)); }
  int index_of(const std::string& label) const;

  friend FiniteGroup verify_group_axioms(std::vector<std::string> elements,
                                         std::vector<std::vector<int>> table);

private:
  FiniteGroup() = default;

  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Validates closure, associativity, identity and inverses (in that order).
FiniteGroup verify_group_axioms(std::vector<std::string> elements,
                                std::vector<std::vector<int>> table);

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// One matrix per group element, indexed like the group's element list.
struct Representation {
  GroupPtr group;
  std::vector<ComplexMatrix> images;

  /// Throws PreconditionError unless there is one square image per element and all share a dimension.
  Representation(GroupPtr g, std::vector<ComplexMatrix> imgs);

  Eigen::Index dim() const { return images.front().rows(); }
  const ComplexMatrix& operator()(int element) const { return images.at(static_cast<std::size_t>(element)); }
};

struct RepresentationCheck {
  bool ok = false;
  double max_residual = 0;                   // worst |D(a)D(b) - D(ab)| or |D(e) - 1|
  std::optional<std::pair<int, int>> witness;  // first failing pair (a, b)
  explicit operator bool() const { return ok; }
};

/// Identity condition, invertibility, and the homomorphism property on every pair.
RepresentationCheck verify_representation(const Representation& rep, double tol = kDefaultTol);

/// Permutation-matrix representation of the group acting on itself by left
/// multiplication; basis order is the group's element order.
Representation build_regular_representation(const GroupPtr& g);

struct UnitarizationResult {
  ComplexMatrix s;       // sum_g D(g)^dagger D(g)
  ComplexMatrix s_half;  // Hermitian square root of s
  Representation unitarized;
};

/// D'(g) = S^{1/2} D(g) S^{-1/2}. Throws PreconditionError if S is singular.
UnitarizationResult unitarize(const Representation& rep, double tol = kDefaultTol);

/// Looks for an invertible S with rep2(g) = S^{-1} rep1(g) S for every g.
/// Throws PreconditionError on a group or dimension mismatch.
std::optional<ComplexMatrix> are_equivalent(const Representation& rep1, const Representation& rep2,
                                            double tol = 1e-8);

// Bundled groups.
GroupPtr cyclic_group_c4();   // {R0, R90, R180, R270} under composition
GroupPtr parity_group();      // {1, P}, P^2 = 1
GroupPtr symmetric_group_s3();

/// Unitary representations used as test material: 2D rotations of the square,
/// the reflection diag(1, -1) for parity, and the 2D standard representation of S3.
Representation c4_rotation_representation();
Representation parity_reflection_representation();
Representation s3_standard_representation();

/// Group file: {"elements": [...], "table": [[...], ...]}.
nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

/// Representation file: {"group": <group object> | "group_file": path, "images": [matrix, ...]}.
/// `base_dir` resolves a relative "group_file".
nlohmann::json representation_to_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

}  // namespace liekit
