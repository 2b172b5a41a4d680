#pragma once

// Document structuring: the two-part report layout (general information,
// then extended information) plus discourse-relation detection between
// trends and periods. A detected contrast or emphasis merges the period
// into the trend's slot as a single extended protoform
// ("Q Xs are A, but R Ys are B").

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lingsum/content.hpp"
#include "lingsum/knowledge_base.hpp"

namespace lingsum {

enum class RelationKind { Contrast, Emphasis, Sequence };

struct DiscourseRelation {
  RelationKind kind = RelationKind::Sequence;
  Message left;
  Message right;
  Degree strength = 0.0;
};

using PlanNode = std::variant<Message, DiscourseRelation>;

enum class ParagraphRole { General, Extended };

struct Paragraph {
  ParagraphRole role = ParagraphRole::General;
  std::vector<PlanNode> nodes;
};

struct DocumentPlan {
  std::vector<Paragraph> paragraphs;
};

namespace detail {

inline int term_distance(const LinguisticVariable& var, const std::string& a,
                         const std::string& b) {
  int ia = var.term_index(a);
  int ib = var.term_index(b);
  if (ia < 0 || ib < 0) {
    throw ValidationError("term distance over unknown terms '" + a + "', '" + b + "'");
  }
  return ia > ib ? ia - ib : ib - ia;
}

inline bool declared_antonyms(const LinguisticVariable& var, const std::string& a,
                              const std::string& b) {
  const LinguisticTerm* ta = var.find_term(a);
  const LinguisticTerm* tb = var.find_term(b);
  return (ta && ta->antonym && *ta->antonym == b) ||
         (tb && tb->antonym && *tb->antonym == a);
}

}  // namespace detail

// Contrast between a trend and a period of the same variable: the period
// term is the declared antonym of the trend's dominant term, or at least
// two positions away in the term order. Strength is the minimum of the
// two fulfillment degrees.
inline std::optional<DiscourseRelation> detect_contrast(
    const QuantifiedTrendMessage& trend, const FuzzyPeriodMessage& period,
    const FuzzyKnowledgeBase& kb) {
  if (trend.variable != period.variable) return std::nullopt;
  const LinguisticVariable& var = kb.variable(trend.variable);
  const std::string& dominant = trend.dominant().summarizer.term;
  bool contrasting = detail::declared_antonyms(var, dominant, period.term) ||
                     detail::term_distance(var, dominant, period.term) >= 2;
  if (!contrasting) return std::nullopt;
  DiscourseRelation rel;
  rel.kind = RelationKind::Contrast;
  rel.left = trend;
  rel.right = period;
  rel.strength = std::min(trend.dominant().fd, period.avg_fd);
  return rel;
}

// Emphasis when a sub-period restates or intensifies the trend term
// ("very cold" intensifies "cold") with at least the trend's degree.
inline std::optional<DiscourseRelation> detect_emphasis(
    const QuantifiedTrendMessage& trend, const FuzzyPeriodMessage& period,
    const FuzzyKnowledgeBase& kb) {
  if (trend.variable != period.variable) return std::nullopt;
  const LinguisticVariable& var = kb.variable(trend.variable);
  const std::string& dominant = trend.dominant().summarizer.term;
  if (detail::declared_antonyms(var, dominant, period.term)) return std::nullopt;
  bool intensifies =
      period.term == dominant || period.term == "very " + dominant;
  if (!intensifies) return std::nullopt;
  if (period.avg_fd + kDegreeEps < trend.dominant().fd) return std::nullopt;
  DiscourseRelation rel;
  rel.kind = RelationKind::Emphasis;
  rel.left = trend;
  rel.right = period;
  rel.strength = std::min(trend.dominant().fd, period.avg_fd);
  return rel;
}

// Orders the content plan into the fixed two-paragraph structure.
// General nodes are normalized to knowledge-base variable order, trends
// before counts; extended periods are sorted by start date. Every
// message appears exactly once: a period consumed by a contrast or
// emphasis relation moves into its trend's general slot.
inline DocumentPlan plan_document(const ContentPlan& cp,
                                  const FuzzyKnowledgeBase& kb,
                                  bool detect_relations = true) {
  std::vector<QuantifiedTrendMessage> trends;
  std::vector<CountMessage> counts;
  for (const Message& m : cp.general) {
    if (const auto* trend = std::get_if<QuantifiedTrendMessage>(&m)) {
      trends.push_back(*trend);
    } else if (const auto* count = std::get_if<CountMessage>(&m)) {
      counts.push_back(*count);
    } else {
      throw ValidationError("period message found in the general section");
    }
  }
  auto by_variable = [&](const auto& a, const auto& b) {
    return kb.variable_index(a.variable) < kb.variable_index(b.variable);
  };
  std::stable_sort(trends.begin(), trends.end(), by_variable);
  std::stable_sort(counts.begin(), counts.end(), by_variable);

  std::vector<FuzzyPeriodMessage> periods;
  for (const Message& m : cp.extended) {
    periods.push_back(std::get<FuzzyPeriodMessage>(m));
  }
  std::sort(periods.begin(), periods.end(),
            [](const FuzzyPeriodMessage& a, const FuzzyPeriodMessage& b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.end != b.end) return a.end < b.end;
              return a.term < b.term;
            });

  // Pair each trend with at most one relation-worthy period; contrast is
  // checked before emphasis so the two can never both fire for a pair.
  std::vector<std::optional<DiscourseRelation>> trend_relation(trends.size());
  std::vector<bool> period_consumed(periods.size(), false);
  if (detect_relations) {
    for (std::size_t ti = 0; ti < trends.size(); ++ti) {
      for (std::size_t pi = 0; pi < periods.size(); ++pi) {
        if (period_consumed[pi]) continue;
        std::optional<DiscourseRelation> rel =
            detect_contrast(trends[ti], periods[pi], kb);
        if (!rel) rel = detect_emphasis(trends[ti], periods[pi], kb);
        if (rel) {
          trend_relation[ti] = std::move(rel);
          period_consumed[pi] = true;
          break;
        }
      }
    }
  }

  DocumentPlan plan;
  Paragraph general{ParagraphRole::General, {}};
  for (std::size_t ti = 0; ti < trends.size(); ++ti) {
    if (trend_relation[ti]) {
      general.nodes.emplace_back(*trend_relation[ti]);
    } else {
      general.nodes.emplace_back(Message{trends[ti]});
    }
  }
  for (const CountMessage& count : counts) general.nodes.emplace_back(Message{count});

  Paragraph extended{ParagraphRole::Extended, {}};
  for (std::size_t pi = 0; pi < periods.size(); ++pi) {
    if (!period_consumed[pi]) extended.nodes.emplace_back(Message{periods[pi]});
  }
  plan.paragraphs.push_back(std::move(general));
  plan.paragraphs.push_back(std::move(extended));
  return plan;
}

}  // namespace lingsum
