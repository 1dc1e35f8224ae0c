#include "glg/subspace.hpp"

#include <algorithm>

namespace glg {

ScalarVec zero_vector(const Field& f, int n) {
  return ScalarVec(static_cast<std::size_t>(n), Scalar::zero(f));
}

bool is_zero_vector(const ScalarVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

ScalarVec add(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  ScalarVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ScalarVec sub(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  ScalarVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

ScalarVec scale(const Scalar& c, const ScalarVec& v) {
  ScalarVec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Subspace::Subspace(Field f, int ambient, ScalarMat rows)
    : field_(f), ambient_(ambient), rows_(std::move(rows)) {}

Subspace Subspace::zero(const Field& f, int ambient) {
  if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
  return Subspace(f, ambient, {});
}

bool Subspace::contains(const ScalarVec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw std::invalid_argument("vector/subspace dimension mismatch");
  }
  // Reduce v against the echelon basis; membership iff the residue is zero.
  ScalarVec w = v;
  for (const auto& row : rows_) {
    int pivot = 0;
    while (row[pivot].is_zero()) ++pivot;
    if (!w[pivot].is_zero()) w = sub(w, scale(w[pivot], row));
  }
  return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw std::invalid_argument("subspace ambient dimension mismatch");
  }
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const ScalarVec& r) { return contains(r); });
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ && rows_ == other.rows_;
}

Subspace rref(const Field& f, int ambient, const ScalarMat& rows) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient) {
      throw std::invalid_argument("row length does not match ambient dimension");
    }
  }
  ScalarMat m = rows;
  const int nrows = static_cast<int>(m.size());
  int rank = 0;
  for (int col = 0; col < ambient && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    m[rank] = scale(m[rank][col].inverse(), m[rank]);
    for (int i = 0; i < nrows; ++i) {
      if (i != rank && !m[i][col].is_zero()) m[i] = sub(m[i], scale(m[i][col], m[rank]));
    }
    ++rank;
  }
  m.resize(rank);
  return Subspace(f, ambient, std::move(m));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw std::invalid_argument("subspace_sum: ambient dimension or field mismatch");
  }
  ScalarMat rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return rref(a.field(), a.ambient(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw std::invalid_argument("subspace_intersect: ambient dimension or field mismatch");
  }
  const Field& f = a.field();
  const int n = a.ambient();
  ScalarMat block;
  for (const auto& u : a.basis()) {
    ScalarVec row = u;
    row.insert(row.end(), u.begin(), u.end());
    block.push_back(std::move(row));
  }
  for (const auto& v : b.basis()) {
    ScalarVec row = v;
    ScalarVec zeros = zero_vector(f, n);
    row.insert(row.end(), zeros.begin(), zeros.end());
    block.push_back(std::move(row));
  }
  Subspace reduced = rref(f, 2 * n, block);
  ScalarMat meet;
  for (const auto& row : reduced.basis()) {
    bool left_zero = true;
    for (int i = 0; i < n; ++i) {
      if (!row[i].is_zero()) {
        left_zero = false;
        break;
      }
    }
    if (left_zero) meet.emplace_back(row.begin() + n, row.end());
  }
  return rref(f, n, meet);
}

bool subspace_contains(const Subspace& a, const ScalarVec& v) { return a.contains(v); }

Subspace left_kernel(const Field& f, const ScalarMat& m, int cols) {
  const int k = static_cast<int>(m.size());
  // x * m = 0 iff m^T x^T = 0; read the kernel off the rref of m^T.
  ScalarMat mt(static_cast<std::size_t>(cols), zero_vector(f, k));
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(m[i].size()) != cols) {
      throw std::invalid_argument("left_kernel: ragged matrix");
    }
    for (int j = 0; j < cols; ++j) mt[j][i] = m[i][j];
  }
  Subspace r = rref(f, k, mt);
  std::vector<int> pivot_col(r.rank());
  std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
  for (int i = 0; i < r.rank(); ++i) {
    int p = 0;
    while (r.basis()[i][p].is_zero()) ++p;
    pivot_col[i] = p;
    is_pivot[p] = true;
  }
  ScalarMat kernel;
  for (int free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    ScalarVec x = zero_vector(f, k);
    x[free] = Scalar::one(f);
    for (int i = 0; i < r.rank(); ++i) x[pivot_col[i]] = -r.basis()[i][free];
    kernel.push_back(std::move(x));
  }
  return rref(f, k, kernel);
}

}  // namespace glg
