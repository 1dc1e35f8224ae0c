#pragma once

#include <vector>

#include "glg/field.hpp"

namespace glg {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;

ScalarVec zero_vector(const Field& f, int n);
bool is_zero_vector(const ScalarVec& v);
ScalarVec add(const ScalarVec& a, const ScalarVec& b);
ScalarVec sub(const ScalarVec& a, const ScalarVec& b);
ScalarVec scale(const Scalar& c, const ScalarVec& v);

/// A subspace of F^n stored as its reduced row echelon basis (no zero rows).
/// The representation is canonical: two subspaces are equal iff their bases
/// are identical matrices.
class Subspace {
 public:
  static Subspace zero(const Field& f, int ambient);

  const Field& field() const { return field_; }
  int ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const ScalarMat& basis() const { return rows_; }

  bool contains(const ScalarVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  Subspace(Field f, int ambient, ScalarMat rows);
  friend Subspace rref(const Field& f, int ambient, const ScalarMat& rows);

  Field field_;
  int ambient_;
  ScalarMat rows_;
};

/// Canonical reduced row echelon basis of the row space. Idempotent; a zero
/// or empty matrix yields the rank-0 subspace.
Subspace rref(const Field& f, int ambient, const ScalarMat& rows);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Zassenhaus: rref of [A|A; B|0], rows with zero left half span A cap B.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

bool subspace_contains(const Subspace& a, const ScalarVec& v);

/// Basis of { x in F^rows : x * m = 0 } for an m given as a list of rows.
Subspace left_kernel(const Field& f, const ScalarMat& m, int cols);

}  // namespace glg
