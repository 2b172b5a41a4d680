#pragma once

// The fuzzy knowledge base: linguistic variables over data domains and
// an ordered family of fuzzy quantifiers over the proportion domain
// [0, 1]. Immutable after load; shared read access is safe.

#include <optional>
#include <string>
#include <vector>

#include "lingsum/error.hpp"
#include "lingsum/fuzzy.hpp"

namespace lingsum {

struct LinguisticTerm {
  std::string name;
  MembershipFunction mf;
  std::optional<std::string> antonym;
};

struct LinguisticVariable {
  std::string name;
  std::string unit;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  // When declared a partition, term memberships must sum to >= 1 - eps
  // everywhere on the domain.
  bool partition = false;
  std::vector<LinguisticTerm> terms;  // ordered left to right

  const LinguisticTerm* find_term(const std::string& term) const {
    for (const auto& t : terms) {
      if (t.name == term) return &t;
    }
    return nullptr;
  }

  int term_index(const std::string& term) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].name == term) return static_cast<int>(i);
    }
    return -1;
  }
};

struct Quantifier {
  std::string name;
  MembershipFunction mf;  // over [0, 1]
};

// Coverage of a quantifier: the midpoint of its core. Orders the default
// family few < some < many < most < nearly all.
inline Degree coverage_of(const Quantifier& q) { return (q.mf.b + q.mf.c) / 2.0; }

class FuzzyKnowledgeBase {
 public:
  FuzzyKnowledgeBase() = default;
  FuzzyKnowledgeBase(std::vector<LinguisticVariable> variables,
                     std::vector<Quantifier> quantifiers)
      : variables_(std::move(variables)), quantifiers_(std::move(quantifiers)) {
    validate();
  }

  const std::vector<LinguisticVariable>& variables() const { return variables_; }
  const std::vector<Quantifier>& quantifiers() const { return quantifiers_; }

  const LinguisticVariable* find_variable(const std::string& name) const {
    for (const auto& v : variables_) {
      if (v.name == name) return &v;
    }
    return nullptr;
  }

  const LinguisticVariable& variable(const std::string& name) const {
    const LinguisticVariable* v = find_variable(name);
    if (!v) throw ValidationError("unknown variable '" + name + "'");
    return *v;
  }

  int variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (variables_[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }

  const Quantifier* find_quantifier(const std::string& name) const {
    for (const auto& q : quantifiers_) {
      if (q.name == name) return &q;
    }
    return nullptr;
  }

  const Quantifier& quantifier(const std::string& name) const {
    const Quantifier* q = find_quantifier(name);
    if (!q) throw ValidationError("unknown quantifier '" + name + "'");
    return *q;
  }

  int quantifier_index(const std::string& name) const {
    for (std::size_t i = 0; i < quantifiers_.size(); ++i) {
      if (quantifiers_[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }

 private:
  void validate() const {
    if (variables_.empty()) {
      throw ValidationError("knowledge base needs at least one variable");
    }
    if (quantifiers_.size() < 2) {
      throw ValidationError("knowledge base needs at least two quantifiers");
    }
    for (std::size_t i = 0; i < quantifiers_.size(); ++i) {
      const Quantifier& q = quantifiers_[i];
      if (q.mf.a < 0.0 || q.mf.d > 1.0) {
        throw ValidationError("quantifier '" + q.name +
                              "' must be defined over the proportion domain [0,1]");
      }
      for (std::size_t j = i + 1; j < quantifiers_.size(); ++j) {
        if (quantifiers_[j].name == q.name) {
          throw ValidationError("duplicate quantifier '" + q.name + "'");
        }
      }
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      validate_variable(variables_[i]);
      for (std::size_t j = i + 1; j < variables_.size(); ++j) {
        if (variables_[j].name == variables_[i].name) {
          throw ValidationError("duplicate variable '" + variables_[i].name + "'");
        }
      }
    }
  }

  void validate_variable(const LinguisticVariable& v) const {
    if (v.domain_lo >= v.domain_hi) {
      throw ValidationError("variable '" + v.name + "': empty domain");
    }
    if (v.terms.empty()) {
      throw ValidationError("variable '" + v.name + "' has no terms");
    }
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
      const LinguisticTerm& t = v.terms[i];
      for (std::size_t j = i + 1; j < v.terms.size(); ++j) {
        if (v.terms[j].name == t.name) {
          throw ValidationError("variable '" + v.name + "': duplicate term '" +
                                t.name + "'");
        }
      }
      if (i > 0 && !(v.terms[i - 1].mf.c < t.mf.b)) {
        throw ValidationError("variable '" + v.name +
                              "': term cores must be disjoint and ordered "
                              "left to right ('" +
                              v.terms[i - 1].name + "' vs '" + t.name + "')");
      }
      if (t.antonym) {
        if (*t.antonym == t.name || !v.find_term(*t.antonym)) {
          throw ValidationError("variable '" + v.name + "': term '" + t.name +
                                "' names antonym '" + *t.antonym +
                                "' which is not another term of the variable");
        }
      }
    }
    if (v.partition) validate_partition(v);
  }

  // Term memberships are piecewise linear, so their sum attains its
  // minima at breakpoints; checking every breakpoint plus the domain
  // ends is exact.
  void validate_partition(const LinguisticVariable& v) const {
    constexpr double kEps = 1e-6;
    std::vector<double> xs{v.domain_lo, v.domain_hi};
    for (const auto& t : v.terms) {
      for (double x : {t.mf.a, t.mf.b, t.mf.c, t.mf.d}) {
        if (x >= v.domain_lo && x <= v.domain_hi) xs.push_back(x);
      }
    }
    for (double x : xs) {
      double sum = 0.0;
      for (const auto& t : v.terms) sum += t.mf.evaluate(x);
      if (sum < 1.0 - kEps) {
        throw ValidationError("terms of '" + v.name +
                              "' do not cover domain (gap near " +
                              std::to_string(x) + ")");
      }
    }
  }

  std::vector<LinguisticVariable> variables_;
  std::vector<Quantifier> quantifiers_;
};

}  // namespace lingsum
