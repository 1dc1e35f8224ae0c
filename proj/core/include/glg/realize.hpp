#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "glg/grading.hpp"

namespace glg {

/// One fusion relation g * g' = g'' (labels by index, left_a <= left_b).
/// Certificates and deciders derive everything from these.
struct Relation {
  int left_a, left_b, right;
  bool operator==(const Relation&) const = default;
};

/// The relations of a table, one per defined product, in key order.
std::vector<Relation> relations_of(const FusionTable& table);

/// Commutative word: exponent vector over the label set. Nonnegative except
/// in group-mode certificates, where inverses are allowed.
using AbWord = std::vector<long long>;
/// Noncommutative word: sequence of label indices.
using NcWord = std::vector<int>;

int degree(const AbWord& w);
bool grlex_less(const AbWord& a, const AbWord& b);

/// Justification of one congruence step: an original relation or a previously
/// proven lemma, applied forward (replace left side by right side) or
/// backward, inside an implicit context. `position` locates the replaced
/// occurrence in noncommutative words and is -1 otherwise.
struct ChainJust {
  enum class Kind { relation, lemma };
  Kind kind = Kind::relation;
  int index = 0;
  bool forward = true;
  int position = -1;
  bool operator==(const ChainJust&) const = default;
};

struct AbChain {
  std::vector<AbWord> words;  // steps + 1 entries
  std::vector<ChainJust> justs;
  bool operator==(const AbChain&) const = default;
};
struct NcChain {
  std::vector<NcWord> words;
  std::vector<ChainJust> justs;
  bool operator==(const NcChain&) const = default;
};

/// An auxiliary proven equation lhs ~ rhs; later steps may cite it in context
/// ("multiply both sides by ...").
struct AbLemma {
  AbWord lhs, rhs;
  AbChain chain;
  bool operator==(const AbLemma&) const = default;
};

/// Replayable proof that two labels collapse in the congruence generated by
/// the relations. The main chain runs from the single label `label_a` to the
/// single label `label_b`; each step applies one justified congruence step.
struct DerivationCertificate {
  bool commutative = true;
  bool group = false;  // words may carry negative exponents
  int label_a = -1, label_b = -1;
  std::vector<AbLemma> lemmas;  // commutative mode only
  AbChain ab_steps;
  NcChain nc_steps;  // used when commutative == false
};

/// Assignment of labels into Z^r x (+) Z/d_i satisfying every relation
/// additively, with pairwise distinct images.
struct GroupWitness {
  long free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility chain
  // per label: (free coordinates, torsion coordinates reduced mod d_i)
  std::vector<std::pair<std::vector<mpz_class>, std::vector<mpz_class>>> assignment;
};

/// Finite semigroup containing the labels as distinct elements. The first
/// label_count carrier elements are the labels in order.
struct ModelWitness {
  std::vector<std::string> carrier;
  int label_count = 0;
  std::vector<std::vector<int>> table;
};

/// Confluent, terminating commutative rewrite system presenting the universal
/// abelian semigroup quotient, plus the labels' (distinct) normal forms.
struct QuotientWitness {
  std::vector<std::pair<AbWord, AbWord>> rules;
  std::vector<AbWord> normal_forms;  // one per label
};

struct SearchLimits {
  int max_word_len = 8;
  long max_derived_pairs = 100000;
  int max_model_size = 0;  // 0: defaults to |G| + 2
};

/// Limits that were exhausted before a decision was reached.
struct SearchBounds {
  int max_word_len = 0;
  long words_explored = 0;
  int max_model_size = 0;
};

enum class RealizeStatus { realizable, not_realizable, unknown };

struct RealizeOutcome {
  RealizeStatus status = RealizeStatus::unknown;
  std::vector<std::string> labels;
  std::optional<DerivationCertificate> derivation;  // when not realizable
  std::optional<GroupWitness> group_witness;
  std::optional<ModelWitness> model_witness;
  std::optional<QuotientWitness> quotient_witness;
  std::optional<SearchBounds> bounds;  // when unknown
};

/// Realizability over an abelian group: constructs the universal group
/// Z^G / <e_g + e_g' - e_g''> and decides distinctness of the labels by
/// lattice membership of e_g - e_h. Always decides. NotRealizable outcomes
/// carry a derivation unfolded from the integer combination; Realizable ones
/// a GroupWitness read off the Smith decomposition.
RealizeOutcome realize_abelian_group(const FusionTable& table);

/// Realizability over an abelian semigroup: decides distinctness of the
/// generators in the quotient of the free abelian semigroup by the relation
/// congruence, via graded-lex oriented completion (terminating by Dickson's
/// lemma). Always decides. If two generators collapse in this quotient, no
/// semigroup at all can satisfy the relations with distinct labels.
RealizeOutcome realize_abelian_semigroup(const FusionTable& table);

/// Realizability over an arbitrary semigroup:
///   1. an abelian witness settles it positively;
///   2. otherwise breadth-first congruence closure on noncommutative words up
///      to limits.max_word_len looks for a collapse;
///   3. otherwise backtracking fills a Cayley table on the labels plus up to
///      (max_model_size - |G|) extra elements;
///   4. otherwise Unknown with the exhausted bounds.
RealizeOutcome realize_semigroup(const FusionTable& table, const SearchLimits& limits = {});

/// Independent replay of an outcome against the table's relations only:
/// derivation chains are re-checked step by step, witnesses have their
/// invariants verified exhaustively. Shares no algorithmic code with the
/// deciders. Returns false for any invalid or malformed content.
bool verify_certificate(const FusionTable& table, const RealizeOutcome& outcome);

}  // namespace glg
