#include <cassert>
#include <deque>
#include <functional>
#include <set>

#include "glg/realize.hpp"
#include "realize_internal.hpp"

namespace glg {

namespace {

using detail::shorten_chain;
using detail::unit_word;
using detail::word_apply;
using detail::word_leq;
using detail::word_max;

// Reduction step citing a rule of the completion (not yet a certificate step;
// rules get translated into relations and lemmas at the end).
struct RStep {
  int rule;
  bool forward;
};

struct RChain {
  std::vector<AbWord> words;
  std::vector<RStep> steps;
};

RChain reversed(const RChain& c) {
  RChain r;
  r.words.assign(c.words.rbegin(), c.words.rend());
  for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
    r.steps.push_back({it->rule, !it->forward});
  }
  return r;
}

void append_chain(RChain& dst, const RChain& src) {
  assert(dst.words.back() == src.words.front());
  for (std::size_t i = 0; i < src.steps.size(); ++i) {
    dst.words.push_back(src.words[i + 1]);
    dst.steps.push_back(src.steps[i]);
  }
}

void shorten(RChain& c) {
  struct View {
    std::vector<AbWord>& words;
    std::vector<RStep>& justs;
  } view{c.words, c.steps};
  shorten_chain(view);
}

struct CRule {
  AbWord lhs, rhs;
  int init_relation = -1;  // >= 0: the rule is that relation, oriented as given
  RChain proof;            // derived rules: chain lhs -> rhs citing earlier rules
};

/// Knuth-Bendix completion on the free commutative monoid over the labels.
/// Relations are oriented by graded-lex order; critical pairs are overlaps at
/// the componentwise max of two left-hand sides. Every inserted rule strictly
/// decreases graded-lex order, so rewriting terminates, and completion itself
/// terminates by Dickson's lemma (each new left-hand side is irreducible, so
/// no infinite sequence of rules can exist).
class Completion {
 public:
  Completion(int n, const std::vector<Relation>& relations) : n_(n) {
    for (std::size_t k = 0; k < relations.size(); ++k) {
      AbWord lhs(static_cast<std::size_t>(n_), 0);
      lhs[relations[k].left_a] += 1;
      lhs[relations[k].left_b] += 1;
      AbWord rhs = unit_word(n_, relations[k].right);
      add_rule(std::move(lhs), std::move(rhs), static_cast<int>(k), {});
    }
    saturate();
  }

  const std::vector<CRule>& rules() const { return rules_; }

  RChain reduce(const AbWord& w) const {
    RChain chain;
    chain.words.push_back(w);
    AbWord cur = w;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (word_leq(rules_[r].lhs, cur)) {
          cur = word_apply(cur, rules_[r].lhs, rules_[r].rhs);
          chain.words.push_back(cur);
          chain.steps.push_back({static_cast<int>(r), true});
          changed = true;
          break;
        }
      }
    }
    return chain;
  }

 private:
  void add_rule(AbWord lhs, AbWord rhs, int init_relation, RChain proof) {
    if (lhs == rhs) return;
    // Termination invariant, asserted per rule at insertion.
    assert(grlex_less(rhs, lhs));
    if (grlex_less(lhs, rhs)) throw std::logic_error("completion: rule does not decrease order");
    for (const auto& r : rules_) {
      if (r.lhs == lhs && r.rhs == rhs) return;
    }
    const int idx = static_cast<int>(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs), init_relation, std::move(proof)});
    for (int i = 0; i < idx; ++i) agenda_.push_back({i, idx});
  }

  void saturate() {
    while (!agenda_.empty()) {
      auto [i, j] = agenda_.front();
      agenda_.pop_front();
      const AbWord overlap = word_max(rules_[i].lhs, rules_[j].lhs);

      RChain via_i;
      via_i.words.push_back(overlap);
      via_i.words.push_back(word_apply(overlap, rules_[i].lhs, rules_[i].rhs));
      via_i.steps.push_back({i, true});
      append_chain(via_i, reduce(via_i.words.back()));

      RChain via_j;
      via_j.words.push_back(overlap);
      via_j.words.push_back(word_apply(overlap, rules_[j].lhs, rules_[j].rhs));
      via_j.steps.push_back({j, true});
      append_chain(via_j, reduce(via_j.words.back()));

      const AbWord& nf_i = via_i.words.back();
      const AbWord& nf_j = via_j.words.back();
      if (nf_i == nf_j) continue;

      // Orient the unresolved pair and record how it was derived.
      if (grlex_less(nf_i, nf_j)) {
        RChain proof = reversed(via_j);
        append_chain(proof, via_i);
        shorten(proof);
        add_rule(nf_j, nf_i, -1, std::move(proof));
      } else {
        RChain proof = reversed(via_i);
        append_chain(proof, via_j);
        shorten(proof);
        add_rule(nf_i, nf_j, -1, std::move(proof));
      }
    }
  }

  int n_;
  std::vector<CRule> rules_;
  std::deque<std::pair<int, int>> agenda_;
};

AbChain translate(const RChain& chain, const std::vector<CRule>& rules,
                  const std::map<int, int>& lemma_no) {
  AbChain out;
  out.words = chain.words;
  for (const auto& step : chain.steps) {
    const CRule& r = rules[static_cast<std::size_t>(step.rule)];
    if (r.init_relation >= 0) {
      out.justs.push_back({ChainJust::Kind::relation, r.init_relation, step.forward, -1});
    } else {
      out.justs.push_back({ChainJust::Kind::lemma, lemma_no.at(step.rule), step.forward, -1});
    }
  }
  return out;
}

DerivationCertificate build_collapse_certificate(const Completion& comp, int n, int g, int h,
                                                 const RChain& trace_g, const RChain& trace_h) {
  RChain main = trace_g;
  append_chain(main, reversed(trace_h));
  shorten(main);

  // A one-step chain citing a derived rule merely restates that rule; splice
  // in its proof so the certificate shows the actual derivation.
  if (main.steps.size() == 1) {
    const CRule& r = comp.rules()[static_cast<std::size_t>(main.steps[0].rule)];
    if (r.init_relation < 0) {
      RChain expanded = main.steps[0].forward ? r.proof : reversed(r.proof);
      if (expanded.words.front() == main.words.front() &&
          expanded.words.back() == main.words.back()) {
        main = std::move(expanded);
        shorten(main);
      }
    }
  }

  // Derived rules cited anywhere (transitively) become lemmas, in rule order;
  // a rule's proof only cites older rules, so this order is dependency order.
  std::set<int> needed;
  std::function<void(const RChain&)> scan = [&](const RChain& c) {
    for (const auto& step : c.steps) {
      const CRule& r = comp.rules()[static_cast<std::size_t>(step.rule)];
      if (r.init_relation < 0 && needed.insert(step.rule).second) scan(r.proof);
    }
  };
  scan(main);

  std::map<int, int> lemma_no;
  for (int rule_idx : needed) lemma_no[rule_idx] = static_cast<int>(lemma_no.size());

  DerivationCertificate cert;
  cert.commutative = true;
  cert.group = false;
  cert.label_a = g;
  cert.label_b = h;
  for (int rule_idx : needed) {
    const CRule& r = comp.rules()[static_cast<std::size_t>(rule_idx)];
    cert.lemmas.push_back({r.lhs, r.rhs, translate(r.proof, comp.rules(), lemma_no)});
  }
  cert.ab_steps = translate(main, comp.rules(), lemma_no);
  (void)n;
  return cert;
}

}  // namespace

RealizeOutcome realize_abelian_semigroup(const FusionTable& table) {
  const int n = static_cast<int>(table.labels.size());
  const std::vector<Relation> relations = relations_of(table);
  Completion comp(n, relations);

  std::vector<RChain> traces;
  traces.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) traces.push_back(comp.reduce(unit_word(n, g)));

  RealizeOutcome outcome;
  outcome.labels = table.labels;
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) {
      if (traces[g].words.back() == traces[h].words.back()) {
        outcome.status = RealizeStatus::not_realizable;
        outcome.derivation =
            build_collapse_certificate(comp, n, g, h, traces[g], traces[h]);
        return outcome;
      }
    }
  }

  QuotientWitness witness;
  for (const auto& rule : comp.rules()) witness.rules.emplace_back(rule.lhs, rule.rhs);
  for (int g = 0; g < n; ++g) witness.normal_forms.push_back(traces[g].words.back());
  outcome.status = RealizeStatus::realizable;
  outcome.quotient_witness = std::move(witness);
  return outcome;
}

}  // namespace glg
