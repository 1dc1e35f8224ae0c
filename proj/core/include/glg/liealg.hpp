#pragma once

#include <map>
#include <string>
#include <vector>

#include "glg/subspace.hpp"

namespace glg {

struct AxiomViolation {
  enum class Kind { nonzero_diagonal, not_skew, jacobi };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string describe(const std::vector<std::string>& names) const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Finite-dimensional algebra given by structure constants: structure(i, j)
/// holds the coordinates of [e_i, e_j] in the basis e_0..e_{n-1}. The type
/// itself does not enforce the Lie axioms; check_lie_axioms reports every
/// violated instance, and the file parser rejects invalid input.
class LieAlgebra {
 public:
  LieAlgebra(Field field, std::vector<std::string> basis_names,
             std::vector<std::vector<ScalarVec>> structure);

  /// Builds the full table from brackets on pairs i < j; [e_j, e_i] is filled
  /// as the negation and diagonal brackets are zero.
  static LieAlgebra from_brackets(const Field& field, std::vector<std::string> basis_names,
                                  const std::map<std::pair<int, int>, ScalarVec>& upper);

  static LieAlgebra abelian(const Field& field, std::vector<std::string> basis_names);

  const Field& field() const { return field_; }
  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  int basis_index(const std::string& name) const;  // -1 if unknown
  const ScalarVec& structure(int i, int j) const { return structure_[i][j]; }
  ScalarVec basis_vector(int i) const;

  bool operator==(const LieAlgebra& other) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<ScalarVec>> structure_;
};

/// Checks [e_i,e_i] = 0, skew-symmetry and the Jacobi identity on all basis
/// triples, reporting every violated instance. [e_i,e_i] = 0 is a separate
/// axiom because characteristic 2 is allowed.
AxiomReport check_lie_axioms(const LieAlgebra& alg);

/// Bilinear extension of the structure constants.
ScalarVec bracket(const LieAlgebra& alg, const ScalarVec& v, const ScalarVec& w);

/// Canonical span of [a, b] = span{ [x, y] : x over a's basis, y over b's }.
Subspace bracket_subspaces(const LieAlgebra& alg, const Subspace& a, const Subspace& b);

/// Derived ideal [L, L]: the sum of all basis bracket spans.
Subspace derived_ideal(const LieAlgebra& alg);

/// { v : [v, e_i] = 0 for all i }, computed as a kernel.
Subspace center(const LieAlgebra& alg);

}  // namespace glg
