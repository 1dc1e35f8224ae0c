#include "glg/intmatrix.hpp"

#include <stdexcept>

namespace glg {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, mpz_class(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(int i) const {
  return std::vector<mpz_class>(a_.begin() + static_cast<std::size_t>(i) * cols_,
                                a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& q) {
  for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& q) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = q;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Shared HNF worker: reduces `a` in place while mirroring every row
// operation on `t` (initially the identity).
void hermite_in_place(IntMatrix& a, IntMatrix& t, int& rank) {
  const int rows = a.rows();
  const int cols = a.cols();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    // Euclidean descent: shrink entries in this column below row r until at
    // most one survives.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (a.at(i, col) != 0 &&
            (best < 0 || cmp(abs(a.at(i, col)), abs(a.at(best, col))) < 0)) {
          best = i;
        }
      }
      if (best < 0) break;  // column clear below r
      bool others = false;
      for (int i = r; i < rows; ++i) {
        if (i == best || a.at(i, col) == 0) continue;
        others = true;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(best, col).get_mpz_t());
        a.add_row_multiple(i, best, -q);
        t.add_row_multiple(i, best, -q);
      }
      if (!others) {
        a.swap_rows(r, best);
        t.swap_rows(r, best);
        if (a.at(r, col) < 0) {
          a.negate_row(r);
          t.negate_row(r);
        }
        // Normalize entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(r, col).get_mpz_t());
          if (q != 0) {
            a.add_row_multiple(i, r, -q);
            t.add_row_multiple(i, r, -q);
          }
        }
        ++r;
        break;
      }
    }
  }
  rank = r;
}

}  // namespace

HermiteDecomposition hermite_decompose(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix t = IntMatrix::identity(m.rows());
  int rank = 0;
  hermite_in_place(a, t, rank);
  IntMatrix basis(rank, m.cols());
  IntMatrix transform(rank, m.rows());
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < m.cols(); ++j) basis.at(i, j) = a.at(i, j);
    for (int j = 0; j < m.rows(); ++j) transform.at(i, j) = t.at(i, j);
  }
  return {std::move(basis), std::move(transform)};
}

IntMatrix hermite_basis(const IntMatrix& m) { return hermite_decompose(m).basis; }

std::optional<std::vector<mpz_class>> lattice_solve(const IntMatrix& m,
                                                    const std::vector<mpz_class>& v) {
  if (static_cast<int>(v.size()) != m.cols()) {
    throw std::invalid_argument("lattice_solve: vector length must match column count");
  }
  HermiteDecomposition hd = hermite_decompose(m);
  std::vector<mpz_class> w = v;
  std::vector<mpz_class> y(static_cast<std::size_t>(hd.basis.rows()), mpz_class(0));
  for (int i = 0; i < hd.basis.rows(); ++i) {
    int p = 0;
    while (hd.basis.at(i, p) == 0) ++p;
    if (w[p] == 0) continue;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[p].get_mpz_t(), hd.basis.at(i, p).get_mpz_t());
    if (r != 0) return std::nullopt;
    y[i] = q;
    for (int j = 0; j < hd.basis.cols(); ++j) w[j] -= q * hd.basis.at(i, j);
  }
  for (const auto& x : w) {
    if (x != 0) return std::nullopt;
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(m.rows()), mpz_class(0));
  for (int i = 0; i < hd.transform.rows(); ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < m.rows(); ++j) c[j] += y[i] * hd.transform.at(i, j);
  }
  return c;
}

bool lattice_contains(const IntMatrix& m, const std::vector<mpz_class>& v) {
  return lattice_solve(m, v).has_value();
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const int rows = m.rows();
  const int cols = m.cols();
  int t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        if (a.at(i, j) != 0 &&
            (pi < 0 || cmp(abs(a.at(i, j)), abs(a.at(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool restart = false;
    for (int i = t + 1; i < rows && !restart; ++i) {
      if (a.at(i, t) == 0) continue;
      mpz_class q = a.at(i, t) / a.at(t, t);  // truncated; |remainder| < |pivot|
      a.add_row_multiple(i, t, -q);
      u.add_row_multiple(i, t, -q);
      if (a.at(i, t) != 0) restart = true;
    }
    if (restart) continue;
    for (int j = t + 1; j < cols && !restart; ++j) {
      if (a.at(t, j) == 0) continue;
      mpz_class q = a.at(t, j) / a.at(t, t);
      a.add_col_multiple(j, t, -q);
      v.add_col_multiple(j, t, -q);
      if (a.at(t, j) != 0) restart = true;
    }
    if (restart) continue;

    // Enforce the divisibility chain: fold any offending row into row t.
    for (int i = t + 1; i < rows && !restart; ++i) {
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(i, j) % a.at(t, t) != 0) {
          a.add_row_multiple(t, i, 1);
          u.add_row_multiple(t, i, 1);
          restart = true;
          break;
        }
      }
    }
    if (restart) continue;

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  SmithDecomposition result;
  for (int i = 0; i < t; ++i) result.invariant_factors.push_back(a.at(i, i));
  result.left = std::move(u);
  result.right = std::move(v);
  result.diagonal = std::move(a);
  return result;
}

}  // namespace glg
