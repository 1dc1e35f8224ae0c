#include "glg/liealg.hpp"

#include <stdexcept>

namespace glg {

std::string AxiomViolation::describe(const std::vector<std::string>& names) const {
  switch (kind) {
    case Kind::nonzero_diagonal:
      return "[" + names[i] + "," + names[i] + "] != 0";
    case Kind::not_skew:
      return "[" + names[i] + "," + names[j] + "] != -[" + names[j] + "," + names[i] + "]";
    case Kind::jacobi:
      return "Jacobi identity fails on (" + names[i] + "," + names[j] + "," + names[k] + ")";
  }
  return "unknown violation";
}

LieAlgebra::LieAlgebra(Field field, std::vector<std::string> basis_names,
                       std::vector<std::vector<ScalarVec>> structure)
    : field_(field), names_(std::move(basis_names)), structure_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
  if (structure_.size() != n) throw std::invalid_argument("structure table has wrong shape");
  for (const auto& row : structure_) {
    if (row.size() != n) throw std::invalid_argument("structure table has wrong shape");
    for (const auto& entry : row) {
      if (entry.size() != n) throw std::invalid_argument("structure vector has wrong length");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate basis name '" + names_[i] + "'");
      }
    }
  }
}

LieAlgebra LieAlgebra::from_brackets(const Field& field, std::vector<std::string> basis_names,
                                     const std::map<std::pair<int, int>, ScalarVec>& upper) {
  const int n = static_cast<int>(basis_names.size());
  std::vector<std::vector<ScalarVec>> structure(
      n, std::vector<ScalarVec>(n, zero_vector(field, n)));
  for (const auto& [pair, value] : upper) {
    auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
      throw std::invalid_argument("from_brackets expects pairs with i < j");
    }
    structure[i][j] = value;
    ScalarVec neg = value;
    for (auto& c : neg) c = -c;
    structure[j][i] = std::move(neg);
  }
  return LieAlgebra(field, std::move(basis_names), std::move(structure));
}

LieAlgebra LieAlgebra::abelian(const Field& field, std::vector<std::string> basis_names) {
  return from_brackets(field, std::move(basis_names), {});
}

int LieAlgebra::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

ScalarVec LieAlgebra::basis_vector(int i) const {
  ScalarVec v = zero_vector(field_, dim());
  v[i] = Scalar::one(field_);
  return v;
}

bool LieAlgebra::operator==(const LieAlgebra& other) const {
  return field_ == other.field_ && names_ == other.names_ && structure_ == other.structure_;
}

AxiomReport check_lie_axioms(const LieAlgebra& alg) {
  AxiomReport report;
  const int n = alg.dim();
  const Field& f = alg.field();
  for (int i = 0; i < n; ++i) {
    if (!is_zero_vector(alg.structure(i, i))) {
      report.violations.push_back({AxiomViolation::Kind::nonzero_diagonal, i, i, -1});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!is_zero_vector(add(alg.structure(i, j), alg.structure(j, i)))) {
        report.violations.push_back({AxiomViolation::Kind::not_skew, i, j, -1});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        ScalarVec sum = zero_vector(f, n);
        sum = add(sum, bracket(alg, alg.structure(i, j), alg.basis_vector(k)));
        sum = add(sum, bracket(alg, alg.structure(j, k), alg.basis_vector(i)));
        sum = add(sum, bracket(alg, alg.structure(k, i), alg.basis_vector(j)));
        if (!is_zero_vector(sum)) {
          report.violations.push_back({AxiomViolation::Kind::jacobi, i, j, k});
        }
      }
    }
  }
  return report;
}

ScalarVec bracket(const LieAlgebra& alg, const ScalarVec& v, const ScalarVec& w) {
  const int n = alg.dim();
  if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n) {
    throw std::invalid_argument("bracket: coordinate vector dimension mismatch");
  }
  ScalarVec result = zero_vector(alg.field(), n);
  for (int i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      result = add(result, scale(v[i] * w[j], alg.structure(i, j)));
    }
  }
  return result;
}

Subspace bracket_subspaces(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  if (a.ambient() != alg.dim() || b.ambient() != alg.dim()) {
    throw std::invalid_argument("bracket_subspaces: ambient dimension mismatch");
  }
  ScalarMat spans;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) spans.push_back(bracket(alg, x, y));
  }
  return rref(alg.field(), alg.dim(), spans);
}

Subspace derived_ideal(const LieAlgebra& alg) {
  const int n = alg.dim();
  ScalarMat spans;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) spans.push_back(alg.structure(i, j));
  }
  return rref(alg.field(), n, spans);
}

Subspace center(const LieAlgebra& alg) {
  const int n = alg.dim();
  // Row i of the big matrix is ad(e_i) flattened; the center is its left kernel.
  ScalarMat ad(static_cast<std::size_t>(n), zero_vector(alg.field(), n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ScalarVec& s = alg.structure(i, j);
      for (int c = 0; c < n; ++c) ad[i][j * n + c] = s[c];
    }
  }
  return left_kernel(alg.field(), ad, n * n);
}

}  // namespace glg
