#pragma once

// Word-choice data: per-term lexemes for each fulfillment-degree band,
// quantifier adverbs and the fixed phrases used by the report templates.
// Ships inside the knowledge-base bundle so deployments can override it.

#include <map>
#include <string>
#include <utility>

#include "lingsum/error.hpp"
#include "lingsum/fuzzy.hpp"
#include "lingsum/knowledge_base.hpp"

namespace lingsum {

// Fulfillment-degree bands for period lexicalization. The hedged band
// owns both closed ends: [0.5, 0.75] reads "warmish", (0.75, 1] reads
// "warm". Degrees below 0.5 never reach the lexicalizer.
enum class FdBand { Hedged, Plain };

inline FdBand fd_band(Degree fd) {
  if (fd < 0.5) {
    throw DomainError("fulfillment degree below 0.5 reached lexical choice");
  }
  return fd <= 0.75 ? FdBand::Hedged : FdBand::Plain;
}

struct TermLexeme {
  std::string plain;   // full-membership word, usually the term name
  std::string hedged;  // weakened form ("warmish"); declared data, not morphology
};

struct Lexicon {
  // (variable, term) -> lexeme pair.
  std::map<std::pair<std::string, std::string>, TermLexeme> term_words;
  // quantifier -> adverb ("nearly all" -> "predominantly").
  std::map<std::string, std::string> quantifier_adverbs;

  std::string subject_period = "the period";
  std::string period_noun = "interval";
  std::string count_noun_plural = "days with rain";
  std::string count_noun_singular = "day with rain";
  std::string multi_quantifier_hedge = "in general";
  std::string fallback_extended = "No remarkable periods were registered.";

  const TermLexeme& term_lexeme(const std::string& variable,
                                const std::string& term) const {
    auto it = term_words.find({variable, term});
    if (it == term_words.end()) {
      throw ValidationError("lexicon has no entry for term '" + term +
                            "' of variable '" + variable + "'");
    }
    return it->second;
  }

  const std::string& term_word(const std::string& variable,
                               const std::string& term, FdBand band) const {
    const TermLexeme& lex = term_lexeme(variable, term);
    return band == FdBand::Plain ? lex.plain : lex.hedged;
  }

  const std::string& adverb(const std::string& quantifier) const {
    auto it = quantifier_adverbs.find(quantifier);
    if (it == quantifier_adverbs.end()) {
      throw ValidationError("lexicon has no adverb for quantifier '" +
                            quantifier + "'");
    }
    return it->second;
  }

  // Every KB term needs a lexeme for every band and every quantifier an
  // adverb; anything missing would surface mid-realization otherwise.
  void validate_against(const FuzzyKnowledgeBase& kb) const {
    for (const auto& v : kb.variables()) {
      for (const auto& t : v.terms) {
        const TermLexeme& lex = term_lexeme(v.name, t.name);
        if (lex.plain.empty() || lex.hedged.empty()) {
          throw ValidationError("lexicon entry for '" + t.name +
                                "' must provide plain and hedged words");
        }
      }
    }
    for (const auto& q : kb.quantifiers()) {
      (void)adverb(q.name);
    }
  }
};

}  // namespace lingsum
