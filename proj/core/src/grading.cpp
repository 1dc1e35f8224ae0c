#include "glg/grading.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace glg {

int Grading::part_index(const std::string& label) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].first == label) return static_cast<int>(i);
  }
  return -1;
}

namespace {

bool valid_label(const std::string& label) {
  // Identifiers, optionally joined with '+' (coarsened parts).
  if (label.empty()) return false;
  bool start = true;
  for (char c : label) {
    if (start) {
      if (!std::isalpha(static_cast<unsigned char>(c))) return false;
      start = false;
    } else if (c == '+') {
      start = true;
    } else if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return !start;
}

}  // namespace

Grading validate_grading(std::shared_ptr<const LieAlgebra> alg,
                         const std::vector<std::pair<std::string, Subspace>>& parts) {
  if (!alg) throw std::invalid_argument("validate_grading: null algebra");
  const int n = alg->dim();
  if (parts.empty()) {
    throw grading_error(GradingErrorKind::not_spanning, "grading has no parts");
  }
  std::set<std::string> seen;
  int total = 0;
  for (const auto& [label, sub] : parts) {
    if (!valid_label(label)) {
      throw grading_error(GradingErrorKind::bad_label, "invalid part label '" + label + "'",
                          label);
    }
    if (!seen.insert(label).second) {
      throw grading_error(GradingErrorKind::bad_label, "duplicate part label '" + label + "'",
                          label);
    }
    if (sub.ambient() != n || !(sub.field() == alg->field())) {
      throw grading_error(GradingErrorKind::not_direct_sum,
                          "part '" + label + "' does not live in the algebra's space", label);
    }
    if (sub.rank() == 0) {
      throw grading_error(GradingErrorKind::empty_part, "part '" + label + "' is zero", label);
    }
    total += sub.rank();
  }
  ScalarMat stacked;
  for (const auto& [label, sub] : parts) {
    stacked.insert(stacked.end(), sub.basis().begin(), sub.basis().end());
  }
  const int joint = rref(alg->field(), n, stacked).rank();
  if (joint < total) {
    throw grading_error(GradingErrorKind::not_direct_sum,
                        "parts overlap: joint rank " + std::to_string(joint) + " < " +
                            std::to_string(total) + " = sum of part dimensions");
  }
  if (joint < n) {
    throw grading_error(GradingErrorKind::not_spanning,
                        "parts span only " + std::to_string(joint) + " of " + std::to_string(n) +
                            " dimensions");
  }

  // Bracket condition: [L_g, L_g'] is zero or inside exactly one part. The
  // parts form a direct sum, so it is enough that every spanning bracket
  // vector lies in one common part.
  const int k = static_cast<int>(parts.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      Subspace span = bracket_subspaces(*alg, parts[i].second, parts[j].second);
      if (span.rank() == 0) continue;
      int home = -1;
      for (const auto& vec : span.basis()) {
        int part = -1;
        for (int p = 0; p < k; ++p) {
          if (parts[p].second.contains(vec)) {
            part = p;
            break;
          }
        }
        if (part < 0 || (home >= 0 && part != home)) {
          throw grading_error(
              GradingErrorKind::bracket_not_homogeneous,
              "[" + parts[i].first + "," + parts[j].first + "] is not inside a single part",
              parts[i].first, parts[j].first, vec);
        }
        home = part;
      }
    }
  }
  return Grading(std::move(alg), parts);
}

FusionTable fusion_table(const Grading& grading) {
  FusionTable table;
  const int k = grading.part_count();
  for (int i = 0; i < k; ++i) table.labels.push_back(grading.label(i));
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      Subspace span = bracket_subspaces(grading.algebra(), grading.part(i), grading.part(j));
      if (span.rank() == 0) continue;
      for (int p = 0; p < k; ++p) {
        if (grading.part(p).contains(span)) {
          table.products[{i, j}] = p;
          break;
        }
      }
    }
  }
  return table;
}

Grading coarsen(const Grading& grading, const std::vector<std::vector<std::string>>& blocks,
                const std::vector<std::string>* block_labels) {
  if (block_labels && block_labels->size() != blocks.size()) {
    throw grading_error(GradingErrorKind::invalid_partition,
                        "override label list does not match the number of blocks");
  }
  const int k = grading.part_count();
  std::vector<int> assignment(static_cast<std::size_t>(k), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw grading_error(GradingErrorKind::invalid_partition, "empty block in partition");
    }
    for (const auto& label : blocks[b]) {
      int idx = grading.part_index(label);
      if (idx < 0) {
        throw grading_error(GradingErrorKind::invalid_partition,
                            "unknown part label '" + label + "'", label);
      }
      if (assignment[idx] != -1) {
        throw grading_error(GradingErrorKind::invalid_partition,
                            "part '" + label + "' appears in more than one block", label);
      }
      assignment[idx] = static_cast<int>(b);
    }
  }
  // Unmentioned parts stay as singleton blocks.
  std::vector<std::vector<std::string>> all_blocks = blocks;
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::string joined;
    for (const auto& l : blocks[b]) {
      if (!joined.empty()) joined += '+';
      joined += l;
    }
    labels.push_back(block_labels ? (*block_labels)[b] : joined);
  }
  for (int i = 0; i < k; ++i) {
    if (assignment[i] == -1) {
      assignment[i] = static_cast<int>(all_blocks.size());
      all_blocks.push_back({grading.label(i)});
      labels.push_back(grading.label(i));
    }
  }
  // Output order: blocks sorted by the first part of the fine grading they
  // contain, so merging into the identity partition is the identity.
  std::vector<int> first_part(all_blocks.size(), k);
  for (int i = k - 1; i >= 0; --i) first_part[assignment[i]] = i;
  std::vector<int> order(all_blocks.size());
  for (std::size_t b = 0; b < order.size(); ++b) order[b] = static_cast<int>(b);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return first_part[x] < first_part[y]; });

  std::vector<std::pair<std::string, Subspace>> parts;
  for (int b : order) {
    Subspace sum = Subspace::zero(grading.algebra().field(), grading.algebra().dim());
    for (int i = 0; i < k; ++i) {
      if (assignment[i] == b) sum = subspace_sum(sum, grading.part(i));
    }
    parts.emplace_back(labels[b], sum);
  }
  return validate_grading(grading.algebra_ptr(), parts);
}

bool is_refinement(const Grading& fine, const Grading& coarse) {
  if (!(fine.algebra() == coarse.algebra())) {
    throw grading_error(GradingErrorKind::algebra_mismatch,
                        "gradings live on different algebras");
  }
  for (const auto& [label, sub] : fine.parts()) {
    bool inside = false;
    for (const auto& [clabel, csub] : coarse.parts()) {
      if (csub.contains(sub)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool is_graded_subspace(const Subspace& s, const Grading& grading) {
  if (s.ambient() != grading.algebra().dim() || !(s.field() == grading.algebra().field())) {
    throw std::invalid_argument("is_graded_subspace: ambient mismatch");
  }
  int pieces = 0;
  for (const auto& [label, part] : grading.parts()) {
    pieces += subspace_intersect(s, part).rank();
  }
  return pieces == s.rank();
}

}  // namespace glg
