#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "glg/liealg.hpp"

namespace glg {

enum class GradingErrorKind {
  empty_part,
  not_direct_sum,
  not_spanning,
  bracket_not_homogeneous,
  invalid_partition,
  algebra_mismatch,
  bad_label,
};

class grading_error : public std::runtime_error {
 public:
  grading_error(GradingErrorKind kind, const std::string& message, std::string label_a = {},
                std::string label_b = {}, std::optional<ScalarVec> witness = std::nullopt)
      : std::runtime_error(message),
        kind_(kind),
        label_a_(std::move(label_a)),
        label_b_(std::move(label_b)),
        witness_(std::move(witness)) {}

  GradingErrorKind kind() const { return kind_; }
  const std::string& label_a() const { return label_a_; }
  const std::string& label_b() const { return label_b_; }
  const std::optional<ScalarVec>& witness() const { return witness_; }

 private:
  GradingErrorKind kind_;
  std::string label_a_, label_b_;
  std::optional<ScalarVec> witness_;
};

/// A validated direct-sum decomposition L = (+)_g L_g with nonzero parts whose
/// pairwise bracket spans are each zero or inside a single part. Instances are
/// only created through validate_grading, so holding a Grading is proof of
/// validity. Part order is declaration order and fixes all iteration orders.
class Grading {
 public:
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return alg_; }
  const LieAlgebra& algebra() const { return *alg_; }
  const std::vector<std::pair<std::string, Subspace>>& parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::string& label(int i) const { return parts_[i].first; }
  const Subspace& part(int i) const { return parts_[i].second; }
  int part_index(const std::string& label) const;  // -1 if unknown

 private:
  Grading(std::shared_ptr<const LieAlgebra> alg,
          std::vector<std::pair<std::string, Subspace>> parts)
      : alg_(std::move(alg)), parts_(std::move(parts)) {}
  friend Grading validate_grading(std::shared_ptr<const LieAlgebra> alg,
                                  const std::vector<std::pair<std::string, Subspace>>& parts);

  std::shared_ptr<const LieAlgebra> alg_;
  std::vector<std::pair<std::string, Subspace>> parts_;
};

/// The partial product on labels induced by nonzero brackets of parts:
/// products[(g,g')] = g'' iff 0 != [L_g, L_g'] subset L_g''. Stored on
/// unordered pairs (keys have i <= j); lookups are symmetric.
struct FusionTable {
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, int> products;

  std::optional<int> product(int i, int j) const {
    auto it = products.find(i <= j ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == products.end()) return std::nullopt;
    return it->second;
  }
  bool operator==(const FusionTable&) const = default;
};

/// Checks that each part is nonzero, the parts form a direct sum spanning the
/// algebra, and every pairwise bracket span is zero or inside exactly one
/// part. Throws grading_error naming the offending part or pair.
Grading validate_grading(std::shared_ptr<const LieAlgebra> alg,
                         const std::vector<std::pair<std::string, Subspace>>& parts);

FusionTable fusion_table(const Grading& grading);

/// Merges the given blocks of parts into single parts and re-validates (the
/// merge can break bracket homogeneity). Labels not mentioned in any block
/// stay as singletons. Merged labels default to the block's labels joined
/// with '+'; block_labels overrides them blockwise when non-null.
Grading coarsen(const Grading& grading, const std::vector<std::vector<std::string>>& blocks,
                const std::vector<std::string>* block_labels = nullptr);

/// True iff every part of `fine` is contained in some part of `coarse`.
/// Throws when the gradings live on different algebras.
bool is_refinement(const Grading& fine, const Grading& coarse);

/// True iff dim(s) = sum over g of dim(s intersect L_g).
bool is_graded_subspace(const Subspace& s, const Grading& grading);

}  // namespace glg
