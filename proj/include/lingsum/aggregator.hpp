#pragma once

// Sentence aggregation. Structural merging combines phrase
// specifications that share participants or structure; content-level
// conjunction builds a single quantified statement over two properties
// with a t-norm. Both paths are kept side by side so runs can compare
// them.

#include <string>
#include <vector>

#include "lingsum/content.hpp"
#include "lingsum/error.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/lexicalizer.hpp"
#include "lingsum/phrase.hpp"
#include "lingsum/protoform.hpp"
#include "lingsum/series.hpp"

namespace lingsum {

// Conjoins predicates over a shared subject, keeping each complement's
// own premodifier: "the period was predominantly cold and predominantly
// wet". Identical specs collapse to one.
inline PhraseSpec aggregate_shared_participant(const PhraseSpec& p1,
                                               const PhraseSpec& p2) {
  if (p1 == p2) return p1;
  if (!same_subject(p1, p2) || p1.verb != p2.verb ||
      p1.existential != p2.existential) {
    throw ValidationError("shared-participant aggregation needs a common subject");
  }
  if (!p1.modifiers.empty() || !p2.modifiers.empty()) {
    throw ValidationError("cannot aggregate specs carrying trailing modifiers");
  }
  PhraseSpec merged = p1;
  merged.complement.insert(merged.complement.end(), p2.complement.begin(),
                           p2.complement.end());
  return merged;
}

namespace detail {

// The factored premodifier of a spec: the first complement's premod,
// with every later complement unmodified.
inline const std::string* factored_premod(const PhraseSpec& p) {
  if (p.complement.empty()) return nullptr;
  for (std::size_t i = 1; i < p.complement.size(); ++i) {
    if (!p.complement[i].premod.empty()) return nullptr;
  }
  return &p.complement.front().premod;
}

}  // namespace detail

// Factors a shared premodifier once and conjoins the complements:
// "the period was predominantly cold and wet". When the premodifiers
// differ the merge degrades to the shared-participant form.
inline PhraseSpec aggregate_shared_structure(const PhraseSpec& p1,
                                             const PhraseSpec& p2) {
  if (p1 == p2) return p1;
  if (!same_subject(p1, p2) || p1.verb != p2.verb ||
      p1.existential != p2.existential) {
    throw ValidationError("shared-structure aggregation needs a common subject");
  }
  if (!p1.modifiers.empty() || !p2.modifiers.empty()) {
    throw ValidationError("cannot aggregate specs carrying trailing modifiers");
  }
  const std::string* m1 = detail::factored_premod(p1);
  const std::string* m2 = detail::factored_premod(p2);
  if (!m1 || !m2 || *m1 != *m2) {
    return aggregate_shared_participant(p1, p2);
  }
  PhraseSpec merged = p1;
  for (const ComplementItem& item : p2.complement) {
    merged.complement.push_back({"", item.word});
  }
  return merged;
}

// "Q Xs are A and B" evaluated with a t-norm over aligned series:
// FD = mu_Q((1/n) * sum T(mu_A(x_i), mu_B(y_i))).
inline QuantifiedStatement content_level_conjunction(
    const Quantifier& q, const LinguisticTerm& term_a, const DataSeries& xs_a,
    const LinguisticTerm& term_b, const DataSeries& xs_b, Tnorm t) {
  if (xs_a.empty() || xs_b.empty()) {
    throw ValidationError("cannot evaluate a conjunction over an empty series");
  }
  if (!xs_a.aligned_with(xs_b)) {
    throw ValidationError("conjunction series are not aligned on dates");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < xs_a.size(); ++i) {
    sum += tnorm_apply(t, term_a.mf.evaluate(xs_a.points()[i].value),
                       term_b.mf.evaluate(xs_b.points()[i].value));
  }
  QuantifiedStatement s;
  s.form = QuantifiedStatement::Form::Type1;
  s.quantifier = q.name;
  s.summarizer = {xs_a.variable(), term_a.name};
  s.summarizer_b = TermRef{xs_b.variable(), term_b.name};
  s.fd = q.mf.evaluate(sum / static_cast<double>(xs_a.size()));
  s.coverage = coverage_of(q);
  return s;
}

// The quantifier whose membership of the conjunctive proportion is
// highest, earliest declared on ties.
inline const Quantifier& best_conjunction_quantifier(
    const FuzzyKnowledgeBase& kb, const LinguisticTerm& term_a,
    const DataSeries& xs_a, const LinguisticTerm& term_b,
    const DataSeries& xs_b, Tnorm t) {
  const Quantifier* best = nullptr;
  Degree best_fd = -1.0;
  for (const Quantifier& q : kb.quantifiers()) {
    Degree fd =
        content_level_conjunction(q, term_a, xs_a, term_b, xs_b, t).fd;
    if (fd > best_fd + kDegreeEps) {
      best = &q;
      best_fd = fd;
    }
  }
  return *best;
}

// Side-by-side record of the two aggregation routes over the same data:
// component statement degrees for the structural route, conjunctive
// degrees per t-norm for the content route, and both phrase
// specifications. No equivalence is asserted.
struct AggregationComparison {
  std::string variable_a;
  std::string term_a;
  Degree fd_a = 0.0;
  std::string variable_b;
  std::string term_b;
  Degree fd_b = 0.0;
  std::string conjunction_quantifier;
  Degree fd_conj_min = 0.0;
  Degree fd_conj_prod = 0.0;
  PhraseSpec structural_spec;
  PhraseSpec content_spec;
};

inline AggregationComparison compare_aggregation_paths(
    const FuzzyKnowledgeBase& kb, const Lexicon& lex,
    const QuantifiedTrendMessage& trend_a, const DataSeries& xs_a,
    const QuantifiedTrendMessage& trend_b, const DataSeries& xs_b) {
  const QuantifiedStatement& sa = trend_a.dominant();
  const QuantifiedStatement& sb = trend_b.dominant();
  const LinguisticVariable& var_a = kb.variable(sa.summarizer.variable);
  const LinguisticVariable& var_b = kb.variable(sb.summarizer.variable);
  const LinguisticTerm& term_a = *var_a.find_term(sa.summarizer.term);
  const LinguisticTerm& term_b = *var_b.find_term(sb.summarizer.term);

  AggregationComparison cmp;
  cmp.variable_a = sa.summarizer.variable;
  cmp.term_a = term_a.name;
  cmp.fd_a = sa.fd;
  cmp.variable_b = sb.summarizer.variable;
  cmp.term_b = term_b.name;
  cmp.fd_b = sb.fd;

  const Quantifier& q = best_conjunction_quantifier(kb, term_a, xs_a, term_b,
                                                    xs_b, Tnorm::Minimum);
  cmp.conjunction_quantifier = q.name;
  cmp.fd_conj_min =
      content_level_conjunction(q, term_a, xs_a, term_b, xs_b, Tnorm::Minimum).fd;
  cmp.fd_conj_prod =
      content_level_conjunction(q, term_a, xs_a, term_b, xs_b, Tnorm::Product).fd;

  // The record is a standalone diagnostic, so both specs use the literal
  // period subject rather than an entity reference.
  const NounPhrase period_subject{"", lex.subject_period, false, false};

  QuantifiedStatement conj =
      content_level_conjunction(q, term_a, xs_a, term_b, xs_b, Tnorm::Minimum);
  QuantifiedTrendMessage conj_msg{sa.summarizer.variable, {conj}, false};
  cmp.content_spec =
      lexicalize_trend(conj_msg, lex, kb, MultiQuantifierMode::Default);
  if (std::holds_alternative<EntityRef>(cmp.content_spec.subject)) {
    cmp.content_spec.subject = period_subject;
  }

  // The structural route is compared on the canonical shared-subject
  // shape ("the period was <adverb> <word>") so the merge never depends
  // on which literal quantifier subject each trend happened to get.
  auto period_spec = [&](const QuantifiedStatement& s) {
    PhraseSpec spec;
    spec.subject = period_subject;
    spec.complement.push_back(
        {lex.adverb(s.quantifier),
         lex.term_lexeme(s.summarizer.variable, s.summarizer.term).plain});
    return spec;
  };
  cmp.structural_spec =
      aggregate_shared_structure(period_spec(sa), period_spec(sb));
  return cmp;
}

}  // namespace lingsum
