#pragma once

// Fuzzy quantified statements over data series: fulfillment-degree
// evaluation for type-1 ("Q Xs are A") and type-2 ("Q DXs are A")
// protoforms, candidate enumeration and best-candidate selection.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lingsum/error.hpp"
#include "lingsum/fuzzy.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/series.hpp"

namespace lingsum {

struct TermRef {
  std::string variable;
  std::string term;

  bool operator==(const TermRef&) const = default;
};

struct QuantifiedStatement {
  enum class Form { Type1, Type2 };

  Form form = Form::Type1;
  std::string quantifier;
  TermRef summarizer;
  std::optional<TermRef> qualifier;      // present exactly for type-2
  std::optional<TermRef> summarizer_b;   // second summarizer of "Q Xs are A and B"
  Degree fd = 0.0;
  Degree coverage = 0.0;

  bool conjunctive() const { return summarizer_b.has_value(); }
};

// Zadeh's quantification: FD = mu_Q((1/n) * sum mu_A(x_i)).
inline Degree evaluate_type1(const Quantifier& q, const LinguisticTerm& a,
                             const DataSeries& xs) {
  if (xs.empty()) {
    throw ValidationError("cannot evaluate a quantified statement over an empty series");
  }
  double sum = 0.0;
  for (const Observation& p : xs.points()) {
    sum += a.mf.evaluate(p.value);
  }
  return q.mf.evaluate(sum / static_cast<double>(xs.size()));
}

struct TypeTwoEvaluation {
  Degree fd = 0.0;
  // Set when the qualifier has zero membership everywhere, i.e. the
  // statement quantifies over an empty fuzzy set.
  bool vacuous = false;
};

// Relative sigma-count with a configurable t-norm:
// FD = mu_Q( sum T(mu_D(d_i), mu_A(a_i)) / sum mu_D(d_i) ).
inline TypeTwoEvaluation evaluate_type2(const Quantifier& q,
                                        const LinguisticTerm& qualifier,
                                        const LinguisticTerm& summarizer,
                                        const DataSeries& xs_d,
                                        const DataSeries& xs_a, Tnorm t) {
  if (xs_d.empty() || xs_a.empty()) {
    throw ValidationError("cannot evaluate a quantified statement over an empty series");
  }
  if (!xs_d.aligned_with(xs_a)) {
    throw ValidationError("qualifier and summarizer series are not aligned on dates");
  }
  double qualified = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < xs_d.size(); ++i) {
    Degree mu_d = qualifier.mf.evaluate(xs_d.points()[i].value);
    Degree mu_a = summarizer.mf.evaluate(xs_a.points()[i].value);
    qualified += tnorm_apply(t, mu_d, mu_a);
    mass += mu_d;
  }
  if (mass == 0.0) return {0.0, true};
  return {q.mf.evaluate(qualified / mass), false};
}

// All quantifier x term type-1 statements for one variable, quantifier-
// major in declared order, with fd and coverage filled in.
inline std::vector<QuantifiedStatement> enumerate_candidates(
    const FuzzyKnowledgeBase& kb, const std::string& variable,
    const DataSeries& xs) {
  const LinguisticVariable& var = kb.variable(variable);
  std::vector<QuantifiedStatement> out;
  out.reserve(kb.quantifiers().size() * var.terms.size());
  for (const Quantifier& q : kb.quantifiers()) {
    for (const LinguisticTerm& term : var.terms) {
      QuantifiedStatement s;
      s.form = QuantifiedStatement::Form::Type1;
      s.quantifier = q.name;
      s.summarizer = {variable, term.name};
      s.fd = evaluate_type1(q, term, xs);
      s.coverage = coverage_of(q);
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct SelectionCriteria {
  enum class TieBreak { HighestFd, MostSpecificQuantifier };

  Degree fd_threshold = 0.8;
  double coverage_target = 1.0;
  TieBreak tie_break = TieBreak::HighestFd;
};

struct Selection {
  std::vector<QuantifiedStatement> statements;
  // Set when no candidate set met the criteria and the single highest-fd
  // statement was returned instead.
  bool low_confidence = false;
};

namespace detail {

// A candidate set under consideration: indices into the normalized
// candidate list plus cached sums and tie-break keys.
struct CandidateSet {
  std::vector<int> members;
  double fd_sum = 0.0;
  double cov_sum = 0.0;
  std::vector<double> fds_desc;
  std::vector<int> q_desc;                   // quantifier indices, descending
  std::vector<std::pair<int, int>> order_key;  // (q index, term index), ascending
};

inline int lex_compare_desc(const std::vector<double>& a,
                            const std::vector<double>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] > b[i] + kDegreeEps) return -1;
    if (b[i] > a[i] + kDegreeEps) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Returns true when lhs is preferred over rhs. Size, then fd sum, then
// the configured tie break, then declared quantifier-major order.
inline bool set_preferred(const CandidateSet& lhs, const CandidateSet& rhs,
                          SelectionCriteria::TieBreak tie_break) {
  if (lhs.members.size() != rhs.members.size()) {
    return lhs.members.size() < rhs.members.size();
  }
  if (lhs.fd_sum > rhs.fd_sum + kDegreeEps) return true;
  if (rhs.fd_sum > lhs.fd_sum + kDegreeEps) return false;
  if (tie_break == SelectionCriteria::TieBreak::HighestFd) {
    int c = lex_compare_desc(lhs.fds_desc, rhs.fds_desc);
    if (c != 0) return c < 0;
  } else {
    if (lhs.q_desc != rhs.q_desc) return lhs.q_desc > rhs.q_desc;
  }
  return lhs.order_key < rhs.order_key;
}

}  // namespace detail

// Selects the content statements for one trend message.
//
// Admissible sets are linguistically coherent: singletons, pairs sharing
// the summarizer term (fd spread across two quantifiers) and pairs
// sharing the quantifier (two summarizers). Larger sets are never
// returned; downstream lexicalization is defined for at most two
// statements.
//
//   1. A set is feasible when every member reaches fd_threshold and the
//      members' quantifier coverages sum to coverage_target. When
//      feasible sets exist the smallest one wins, ties broken by fd sum,
//      then the configured tie break, then declared order.
//   2. Otherwise coherent pairs with both fulfillment degrees positive
//      and coverage sum at target compete on fd sum (the "sum of both
//      fulfillment degrees is the highest" rule).
//   3. Otherwise the single highest-fd candidate is returned flagged
//      low-confidence.
//
// The result is invariant under permutation of the candidate list.
inline Selection select_statements(std::vector<QuantifiedStatement> cands,
                                   const SelectionCriteria& criteria,
                                   const FuzzyKnowledgeBase& kb) {
  if (cands.empty()) {
    throw ValidationError("select_statements needs at least one candidate");
  }

  auto q_index = [&](const QuantifiedStatement& s) {
    int i = kb.quantifier_index(s.quantifier);
    if (i < 0) throw ValidationError("unknown quantifier '" + s.quantifier + "'");
    return i;
  };
  auto t_index = [&](const QuantifiedStatement& s) {
    const LinguisticVariable* v = kb.find_variable(s.summarizer.variable);
    int i = v ? v->term_index(s.summarizer.term) : -1;
    if (i < 0) {
      throw ValidationError("unknown term '" + s.summarizer.term + "'");
    }
    return i;
  };

  // Normalize candidate order so permuted input cannot change the result.
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const QuantifiedStatement& a, const QuantifiedStatement& b) {
                     return std::pair{q_index(a), t_index(a)} <
                            std::pair{q_index(b), t_index(b)};
                   });

  auto make_set = [&](std::vector<int> members) {
    detail::CandidateSet s;
    s.members = std::move(members);
    for (int i : s.members) {
      const QuantifiedStatement& c = cands[static_cast<std::size_t>(i)];
      s.fd_sum += c.fd;
      s.cov_sum += c.coverage;
      s.fds_desc.push_back(c.fd);
      s.q_desc.push_back(q_index(c));
      s.order_key.emplace_back(q_index(c), t_index(c));
    }
    std::sort(s.fds_desc.begin(), s.fds_desc.end(), std::greater<>());
    std::sort(s.q_desc.begin(), s.q_desc.end(), std::greater<>());
    std::sort(s.order_key.begin(), s.order_key.end());
    return s;
  };

  const int n = static_cast<int>(cands.size());
  std::vector<detail::CandidateSet> sets;
  for (int i = 0; i < n; ++i) sets.push_back(make_set({i}));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const QuantifiedStatement& a = cands[static_cast<std::size_t>(i)];
      const QuantifiedStatement& b = cands[static_cast<std::size_t>(j)];
      bool same_term = a.summarizer == b.summarizer;
      bool same_quantifier = a.quantifier == b.quantifier;
      if (same_term == same_quantifier) continue;  // identical or incoherent
      sets.push_back(make_set({i, j}));
    }
  }

  auto passes_fd = [&](const detail::CandidateSet& s) {
    for (int i : s.members) {
      if (cands[static_cast<std::size_t>(i)].fd + kDegreeEps < criteria.fd_threshold) {
        return false;
      }
    }
    return true;
  };
  auto covers = [&](const detail::CandidateSet& s) {
    return s.cov_sum + kDegreeEps >= criteria.coverage_target;
  };

  const detail::CandidateSet* best = nullptr;
  for (const auto& s : sets) {
    if (!passes_fd(s) || !covers(s)) continue;
    if (!best || detail::set_preferred(s, *best, criteria.tie_break)) best = &s;
  }
  bool low_confidence = false;
  if (!best) {
    // Relaxed pair round: drop the fd threshold, keep coverage, require
    // both degrees positive so vacuous statements cannot ride along.
    for (const auto& s : sets) {
      if (s.members.size() != 2 || !covers(s)) continue;
      if (s.fds_desc.back() <= kDegreeEps) continue;
      if (!best || detail::set_preferred(s, *best, criteria.tie_break)) best = &s;
    }
  }
  if (!best) {
    low_confidence = true;
    for (const auto& s : sets) {
      if (s.members.size() != 1) continue;
      if (!best || detail::set_preferred(s, *best, criteria.tie_break)) best = &s;
    }
  }

  Selection out;
  out.low_confidence = low_confidence;
  for (int i : best->members) {
    out.statements.push_back(cands[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace lingsum
