#pragma once

// Loader for the knowledge-base bundle: a flat, line-oriented text format
// holding the linguistic variables, the quantifier family, the lexicon
// and the report configuration. One file fully determines a run.
//
//   # comment                         blank lines and #-comments ignored
//   schema_version 1                  required first directive
//
//   variable <name> unit <unit> domain <lo> <hi> [partition]
//     term <name> mf <a> <b> <c> <d> hedge <word> [plain <word>] [antonym <term>]
//   end
//
//   quantifier <name> mf <a> <b> <c> <d> adverb <word>
//
//   lexicon
//     subject-period <phrase>
//     period-noun <word>
//     count-noun-plural <phrase>
//     count-noun-singular <phrase>
//     multi-quantifier-hedge <phrase>
//     fallback-extended <sentence>
//   end
//
//   report
//     trend <variable>
//     count <variable> threshold <x>
//     periods <variable> [min-length <n>] [fd-floor <x>] [adjacent-floor <x>]
//                        [exclude-trend-terms on|off]
//     fd-threshold <x>
//     coverage-target <x>
//     tie-break highest-fd|most-specific-quantifier
//     tnorm minimum|product|lukasiewicz
//   end
//
// Multi-word values are double-quoted ("very cold"). Variables and terms
// referenced by the report section must exist in the knowledge base.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "lingsum/error.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/lexicon.hpp"
#include "lingsum/protoform.hpp"

namespace lingsum {

struct CountSpec {
  std::string variable;
  double threshold = 0.0;  // a day counts when value > threshold
};

struct PeriodSpec {
  std::string variable;
  int min_length = 4;
  double fd_floor = 0.5;
  double adjacent_floor = 0.3;
  // Drop periods whose term already appears in the variable's trend
  // statements; the extended section is meant for deviations.
  bool exclude_trend_terms = true;
};

struct ReportConfig {
  std::vector<std::string> trend_variables;
  std::vector<CountSpec> counts;
  std::vector<PeriodSpec> periods;
  SelectionCriteria criteria;
  Tnorm tnorm = Tnorm::Minimum;
};

struct Bundle {
  FuzzyKnowledgeBase kb;
  Lexicon lexicon;
  ReportConfig report;
};

namespace detail {

inline std::vector<std::string> tokenize_config_line(const std::string& line,
                                                     int lineno) {
  std::vector<std::string> tokens;
  std::string current;
  bool in_quotes = false;
  bool have_token = false;
  for (char ch : line) {
    if (in_quotes) {
      if (ch == '"') {
        in_quotes = false;
      } else {
        current.push_back(ch);
      }
      continue;
    }
    if (ch == '"') {
      in_quotes = true;
      have_token = true;
      continue;
    }
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (have_token) {
        tokens.push_back(current);
        current.clear();
        have_token = false;
      }
      continue;
    }
    current.push_back(ch);
    have_token = true;
  }
  if (in_quotes) throw ParseError("unterminated quote", lineno);
  if (have_token) tokens.push_back(current);
  return tokens;
}

inline double parse_number(const std::string& tok, int lineno) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + tok + "'", lineno);
  }
}

inline int parse_int(const std::string& tok, int lineno) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", lineno);
  }
}

}  // namespace detail

inline Bundle load_bundle(std::istream& in) {
  using detail::parse_int;
  using detail::parse_number;

  // Raw declarations gathered before knowledge-base validation.
  std::vector<LinguisticVariable> variables;
  std::vector<Quantifier> quantifiers;
  Lexicon lexicon;
  ReportConfig report;

  enum class Block { None, Variable, Lexicon, Report };
  Block block = Block::None;
  bool saw_schema = false;
  LinguisticVariable current_var;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = detail::tokenize_config_line(line, lineno);
    if (tok.empty()) continue;
    const std::string& head = tok[0];

    if (!saw_schema) {
      if (head != "schema_version") {
        throw ParseError("expected schema_version before any declarations", lineno);
      }
      if (tok.size() != 2 || parse_int(tok[1], lineno) != 1) {
        throw ParseError("unsupported schema_version", lineno);
      }
      saw_schema = true;
      continue;
    }

    if (head == "end") {
      if (block == Block::None) throw ParseError("'end' outside a block", lineno);
      if (block == Block::Variable) variables.push_back(std::move(current_var));
      block = Block::None;
      continue;
    }

    switch (block) {
      case Block::None: {
        if (head == "variable") {
          if (tok.size() < 7 || tok[2] != "unit" || tok[4] != "domain") {
            throw ParseError("usage: variable <name> unit <unit> domain <lo> <hi> [partition]",
                             lineno);
          }
          current_var = LinguisticVariable{};
          current_var.name = tok[1];
          current_var.unit = tok[3];
          current_var.domain_lo = parse_number(tok[5], lineno);
          current_var.domain_hi = parse_number(tok[6], lineno);
          current_var.partition = tok.size() > 7 && tok[7] == "partition";
          if (tok.size() > 7 && !current_var.partition) {
            throw ParseError("unknown variable attribute '" + tok[7] + "'", lineno);
          }
          block = Block::Variable;
        } else if (head == "quantifier") {
          if (tok.size() != 9 || tok[2] != "mf" || tok[7] != "adverb") {
            throw ParseError("usage: quantifier <name> mf <a> <b> <c> <d> adverb <word>",
                             lineno);
          }
          quantifiers.push_back(
              {tok[1], MembershipFunction(parse_number(tok[3], lineno),
                                          parse_number(tok[4], lineno),
                                          parse_number(tok[5], lineno),
                                          parse_number(tok[6], lineno))});
          lexicon.quantifier_adverbs[tok[1]] = tok[8];
        } else if (head == "lexicon") {
          block = Block::Lexicon;
        } else if (head == "report") {
          block = Block::Report;
        } else {
          throw ParseError("unknown directive '" + head + "'", lineno);
        }
        break;
      }
      case Block::Variable: {
        if (head != "term" || tok.size() < 8 || tok[2] != "mf") {
          throw ParseError("usage: term <name> mf <a> <b> <c> <d> hedge <word> "
                           "[plain <word>] [antonym <term>]",
                           lineno);
        }
        LinguisticTerm term{tok[1],
                            MembershipFunction(parse_number(tok[3], lineno),
                                               parse_number(tok[4], lineno),
                                               parse_number(tok[5], lineno),
                                               parse_number(tok[6], lineno)),
                            std::nullopt};
        TermLexeme lexeme{term.name, ""};
        std::size_t i = 7;
        while (i < tok.size()) {
          if (tok[i] == "hedge" && i + 1 < tok.size()) {
            lexeme.hedged = tok[i + 1];
          } else if (tok[i] == "plain" && i + 1 < tok.size()) {
            lexeme.plain = tok[i + 1];
          } else if (tok[i] == "antonym" && i + 1 < tok.size()) {
            term.antonym = tok[i + 1];
          } else {
            throw ParseError("unknown term attribute '" + tok[i] + "'", lineno);
          }
          i += 2;
        }
        if (lexeme.hedged.empty()) {
          throw ParseError("term '" + term.name + "' needs a hedge word", lineno);
        }
        lexicon.term_words[{current_var.name, term.name}] = lexeme;
        current_var.terms.push_back(std::move(term));
        break;
      }
      case Block::Lexicon: {
        if (tok.size() != 2) {
          throw ParseError("lexicon entries take exactly one value", lineno);
        }
        if (head == "subject-period") lexicon.subject_period = tok[1];
        else if (head == "period-noun") lexicon.period_noun = tok[1];
        else if (head == "count-noun-plural") lexicon.count_noun_plural = tok[1];
        else if (head == "count-noun-singular") lexicon.count_noun_singular = tok[1];
        else if (head == "multi-quantifier-hedge") lexicon.multi_quantifier_hedge = tok[1];
        else if (head == "fallback-extended") lexicon.fallback_extended = tok[1];
        else throw ParseError("unknown lexicon entry '" + head + "'", lineno);
        break;
      }
      case Block::Report: {
        if (head == "trend" && tok.size() == 2) {
          report.trend_variables.push_back(tok[1]);
        } else if (head == "count" && tok.size() == 4 && tok[2] == "threshold") {
          report.counts.push_back({tok[1], parse_number(tok[3], lineno)});
        } else if (head == "periods" && tok.size() >= 2) {
          PeriodSpec spec;
          spec.variable = tok[1];
          std::size_t i = 2;
          while (i < tok.size()) {
            if (tok[i] == "min-length" && i + 1 < tok.size()) {
              spec.min_length = parse_int(tok[i + 1], lineno);
            } else if (tok[i] == "fd-floor" && i + 1 < tok.size()) {
              spec.fd_floor = parse_number(tok[i + 1], lineno);
            } else if (tok[i] == "adjacent-floor" && i + 1 < tok.size()) {
              spec.adjacent_floor = parse_number(tok[i + 1], lineno);
            } else if (tok[i] == "exclude-trend-terms" && i + 1 < tok.size()) {
              if (tok[i + 1] != "on" && tok[i + 1] != "off") {
                throw ParseError("exclude-trend-terms takes on|off", lineno);
              }
              spec.exclude_trend_terms = tok[i + 1] == "on";
            } else {
              throw ParseError("unknown periods attribute '" + tok[i] + "'", lineno);
            }
            i += 2;
          }
          if (spec.min_length < 2) {
            throw ParseError("periods min-length must be at least 2", lineno);
          }
          report.periods.push_back(std::move(spec));
        } else if (head == "fd-threshold" && tok.size() == 2) {
          report.criteria.fd_threshold = parse_number(tok[1], lineno);
        } else if (head == "coverage-target" && tok.size() == 2) {
          report.criteria.coverage_target = parse_number(tok[1], lineno);
        } else if (head == "tie-break" && tok.size() == 2) {
          if (tok[1] == "highest-fd") {
            report.criteria.tie_break = SelectionCriteria::TieBreak::HighestFd;
          } else if (tok[1] == "most-specific-quantifier") {
            report.criteria.tie_break =
                SelectionCriteria::TieBreak::MostSpecificQuantifier;
          } else {
            throw ParseError("unknown tie-break '" + tok[1] + "'", lineno);
          }
        } else if (head == "tnorm" && tok.size() == 2) {
          if (tok[1] == "minimum") report.tnorm = Tnorm::Minimum;
          else if (tok[1] == "product") report.tnorm = Tnorm::Product;
          else if (tok[1] == "lukasiewicz") report.tnorm = Tnorm::Lukasiewicz;
          else throw ParseError("unknown tnorm '" + tok[1] + "'", lineno);
        } else {
          throw ParseError("unknown report entry '" + head + "'", lineno);
        }
        break;
      }
    }
  }
  if (block != Block::None) throw ParseError("unterminated block at end of file", lineno);
  if (!saw_schema) throw ParseError("empty bundle: missing schema_version", lineno);

  Bundle bundle{FuzzyKnowledgeBase(std::move(variables), std::move(quantifiers)),
                std::move(lexicon), std::move(report)};
  bundle.lexicon.validate_against(bundle.kb);

  const SelectionCriteria& c = bundle.report.criteria;
  if (!(c.fd_threshold > 0.0 && c.fd_threshold <= 1.0)) {
    throw ValidationError("fd-threshold must lie in (0,1]");
  }
  if (!(c.coverage_target > 0.0)) {
    throw ValidationError("coverage-target must be positive");
  }
  for (const std::string& v : bundle.report.trend_variables) {
    bundle.kb.variable(v);
  }
  for (const CountSpec& cs : bundle.report.counts) bundle.kb.variable(cs.variable);
  for (const PeriodSpec& ps : bundle.report.periods) bundle.kb.variable(ps.variable);
  return bundle;
}

inline Bundle load_bundle_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_bundle(in);
}

inline Bundle load_bundle_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bundle file '" + path + "'");
  return load_bundle(in);
}

// Knowledge-base view of a bundle source, for callers that only need the
// variables and quantifiers.
inline FuzzyKnowledgeBase load_kb(std::istream& in) { return load_bundle(in).kb; }
inline FuzzyKnowledgeBase load_kb_from_string(const std::string& text) {
  return load_bundle_from_string(text).kb;
}

}  // namespace lingsum
