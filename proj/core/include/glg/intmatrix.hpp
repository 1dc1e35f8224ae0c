#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace glg {

/// Dense matrix of arbitrary-precision integers. Hermite and Smith
/// computations blow up coefficient sizes, so fixed-width entries are not an
/// option here.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::vector<mpz_class> row(int i) const;

  void swap_rows(int i, int j);
  void negate_row(int i);
  void add_row_multiple(int dst, int src, const mpz_class& q);  // row dst += q * row src
  void swap_cols(int i, int j);
  void negate_col(int i);
  void add_col_multiple(int dst, int src, const mpz_class& q);  // col dst += q * col src

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (Bareiss fraction-free elimination).
mpz_class determinant(const IntMatrix& m);

/// Row Hermite normal form of the lattice generated by the rows of m:
/// echelon shape, positive pivots, entries above each pivot reduced into
/// [0, pivot). Canonical: equal lattices produce identical output. Zero rows
/// are dropped, so a zero matrix yields a 0 x cols result.
IntMatrix hermite_basis(const IntMatrix& m);

/// hermite_basis together with the row-operation record: basis = transform * m.
struct HermiteDecomposition {
  IntMatrix basis;      // r x cols
  IntMatrix transform;  // r x m.rows
};
HermiteDecomposition hermite_decompose(const IntMatrix& m);

/// Coefficients c with c * m = v, if v lies in the row lattice of m.
std::optional<std::vector<mpz_class>> lattice_solve(const IntMatrix& m,
                                                    const std::vector<mpz_class>& v);

/// True iff v is an integer combination of the rows of m (back-substitution
/// against the Hermite basis).
bool lattice_contains(const IntMatrix& m, const std::vector<mpz_class>& v);

/// Smith normal form: unimodular left/right transforms with
/// left * m * right = diagonal, invariant factors d1 | d2 | ... all positive.
struct SmithDecomposition {
  std::vector<mpz_class> invariant_factors;
  IntMatrix left;      // rows x rows, det +-1
  IntMatrix right;     // cols x cols, det +-1
  IntMatrix diagonal;  // rows x cols
};
SmithDecomposition smith_decomposition(const IntMatrix& m);

}  // namespace glg
