#pragma once

// Lexical choice: maps content messages to phrase specifications. Word
// choice is sensitive to fulfillment degrees (quantifier adverbs for
// high-degree trends, hedged and combined forms for periods) and to the
// multi-quantifier resolution mode.

#include <string>
#include <vector>

#include "lingsum/content.hpp"
#include "lingsum/error.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/lexicon.hpp"
#include "lingsum/phrase.hpp"

namespace lingsum {

// How a two-statement message with a shared term is resolved: keep the
// less specific quantifier (union reading), the more specific one
// (intersection reading), or hedge the whole message ("in general").
enum class MultiQuantifierMode { Coverage, Specificity, Default };

inline constexpr int kReportPeriodEntity = 0;

// Quantifier lexeme for a same-term statement pair. Requires adjacent
// (or equal) quantifiers in the declared order.
inline std::string resolve_multi_quantifier(const QuantifiedStatement& s1,
                                            const QuantifiedStatement& s2,
                                            MultiQuantifierMode mode,
                                            const FuzzyKnowledgeBase& kb,
                                            const Lexicon& lex) {
  if (s1.summarizer != s2.summarizer) {
    throw ValidationError("multi-quantifier resolution needs a shared term");
  }
  int i1 = kb.quantifier_index(s1.quantifier);
  int i2 = kb.quantifier_index(s2.quantifier);
  if (i1 < 0 || i2 < 0 || std::abs(i1 - i2) > 1) {
    throw ValidationError("multi-quantifier resolution needs adjacent quantifiers");
  }
  switch (mode) {
    case MultiQuantifierMode::Coverage:
      return i1 <= i2 ? s1.quantifier : s2.quantifier;
    case MultiQuantifierMode::Specificity:
      return i1 >= i2 ? s1.quantifier : s2.quantifier;
    case MultiQuantifierMode::Default:
      return lex.multi_quantifier_hedge;
  }
  throw ValidationError("unknown multi-quantifier mode");
}

namespace detail {

// "was predominantly cold" applies for the two most specific quantifiers
// of the declared family when the degree is high; otherwise the literal
// quantifier phrase ("most of the days were cold") is used.
inline bool adverb_rule_applies(const std::string& quantifier,
                                Degree fd, const FuzzyKnowledgeBase& kb) {
  int idx = kb.quantifier_index(quantifier);
  return idx >= static_cast<int>(kb.quantifiers().size()) - 2 && fd >= 0.8;
}

inline PhraseSpec single_statement_spec(const QuantifiedStatement& s,
                                        const Lexicon& lex,
                                        const FuzzyKnowledgeBase& kb) {
  PhraseSpec spec;
  const std::string& word =
      lex.term_lexeme(s.summarizer.variable, s.summarizer.term).plain;
  if (adverb_rule_applies(s.quantifier, s.fd, kb)) {
    spec.subject = EntityRef{kReportPeriodEntity};
    spec.complement.push_back({lex.adverb(s.quantifier), word});
  } else {
    spec.subject = NounPhrase{"", s.quantifier + " of the days", true, false};
    spec.complement.push_back({"", word});
  }
  if (s.summarizer_b) {
    spec.complement.push_back(
        {"", lex.term_lexeme(s.summarizer_b->variable, s.summarizer_b->term).plain});
  }
  return spec;
}

}  // namespace detail

inline PhraseSpec lexicalize_trend(const QuantifiedTrendMessage& m,
                                   const Lexicon& lex,
                                   const FuzzyKnowledgeBase& kb,
                                   MultiQuantifierMode mode) {
  if (m.statements.empty() || m.statements.size() > 2) {
    throw ValidationError("trend lexicalization supports one or two statements, got " +
                          std::to_string(m.statements.size()));
  }
  if (m.statements.size() == 1) {
    return detail::single_statement_spec(m.statements.front(), lex, kb);
  }

  const QuantifiedStatement& s1 = m.statements[0];
  const QuantifiedStatement& s2 = m.statements[1];
  if (s1.summarizer == s2.summarizer) {
    std::string resolved = resolve_multi_quantifier(s1, s2, mode, kb, lex);
    if (mode == MultiQuantifierMode::Default) {
      // "the period was cold in general"
      PhraseSpec spec;
      spec.subject = EntityRef{kReportPeriodEntity};
      spec.complement.push_back(
          {"", lex.term_lexeme(s1.summarizer.variable, s1.summarizer.term).plain});
      spec.modifiers.push_back(resolved);
      return spec;
    }
    const QuantifiedStatement& chosen = resolved == s1.quantifier ? s1 : s2;
    return detail::single_statement_spec(chosen, lex, kb);
  }

  // Two summarizers: per-complement quantifier adverbs,
  // "the period was partly almost dry and partly wet".
  PhraseSpec spec;
  spec.subject = EntityRef{kReportPeriodEntity};
  for (const QuantifiedStatement& s : m.statements) {
    spec.complement.push_back(
        {lex.adverb(s.quantifier),
         lex.term_lexeme(s.summarizer.variable, s.summarizer.term).plain});
  }
  return spec;
}

// Property word of a fuzzy period: hedged band [0.5, 0.75] yields the
// hedged form ("warmish") or, with a strong neighbouring term attached,
// the combined form ("warm/coldish"); the plain band (0.75, 1] yields
// the plain word.
inline std::string period_property_word(const FuzzyPeriodMessage& m,
                                        const Lexicon& lex) {
  FdBand band = fd_band(m.avg_fd);
  const TermLexeme& lexeme = lex.term_lexeme(m.variable, m.term);
  if (band == FdBand::Plain) return lexeme.plain;
  if (!m.adjacent.empty()) {
    const AdjacentFd* strongest = &m.adjacent.front();
    for (const AdjacentFd& adj : m.adjacent) {
      if (adj.mean_fd > strongest->mean_fd + kDegreeEps) strongest = &adj;
    }
    return lexeme.plain + "/" +
           lex.term_lexeme(m.variable, strongest->term).hedged;
  }
  return lexeme.hedged;
}

// "there was <period entity>"; the referring stage expands the entity
// into the full indefinite noun phrase.
inline PhraseSpec lexicalize_period(const FuzzyPeriodMessage& m,
                                    const Lexicon& lex, int entity_id) {
  (void)fd_band(m.avg_fd);  // rejects avg_fd < 0.5: a content bug upstream
  (void)lex;
  PhraseSpec spec;
  spec.existential = true;
  spec.subject = EntityRef{entity_id};
  return spec;
}

inline PhraseSpec lexicalize_count(const CountMessage& m, const Lexicon& lex) {
  PhraseSpec spec;
  spec.existential = true;
  if (m.count == 0) {
    spec.subject = NounPhrase{"no", lex.count_noun_plural, true, false};
  } else if (m.count == 1) {
    spec.subject = NounPhrase{"1", lex.count_noun_singular, false, false};
  } else {
    spec.subject =
        NounPhrase{std::to_string(m.count), lex.count_noun_plural, true, false};
  }
  return spec;
}

}  // namespace lingsum
