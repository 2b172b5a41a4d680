#pragma once

// Referring expression generation. The report period is unique and
// always "the period". Fuzzy periods are introduced with an indefinite
// noun phrase carrying their content (property word and date range) and
// referred back to with a definite form built from the minimal feature
// set that still distinguishes them from every competitor.

#include <string>
#include <vector>

#include "lingsum/content.hpp"
#include "lingsum/date.hpp"
#include "lingsum/error.hpp"
#include "lingsum/lexicalizer.hpp"
#include "lingsum/lexicon.hpp"
#include "lingsum/phrase.hpp"

namespace lingsum {

struct DiscourseEntity {
  enum class Kind { ReportPeriod, FuzzyPeriod };

  int id = -1;
  Kind kind = Kind::ReportPeriod;
  std::string term;
  std::string property_word;  // FD-banded, fixed at registration
  Degree avg_fd = 0.0;
  Date start;
  Date end;
  int mention_count = 0;
};

enum class ReferenceFeature { Property, DateRange };

struct Reference {
  int entity_id = -1;
  NounPhrase np;
  // Features realized in the noun phrase.
  std::vector<ReferenceFeature> surface;
  // Minimal subset that distinguishes the entity from all competitors.
  std::vector<ReferenceFeature> identifying;
};

namespace detail {

inline bool entity_matches(const DiscourseEntity& candidate,
                           const DiscourseEntity& target,
                           const std::vector<ReferenceFeature>& features) {
  for (ReferenceFeature f : features) {
    switch (f) {
      case ReferenceFeature::Property:
        if (candidate.property_word != target.property_word) return false;
        break;
      case ReferenceFeature::DateRange:
        if (candidate.start != target.start || candidate.end != target.end) {
          return false;
        }
        break;
    }
  }
  return true;
}

inline std::string indefinite_article(const std::string& word) {
  if (word.empty()) return "a";
  switch (word.front()) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
    case 'A': case 'E': case 'I': case 'O': case 'U':
      return "an";
    default:
      return "a";
  }
}

}  // namespace detail

// Document-scoped entity set. Mention counts mutate during the single
// realization-order traversal; reset_mentions() rewinds for a rerun.
class EntityRegistry {
 public:
  explicit EntityRegistry(const Lexicon& lex) : lex_(&lex) {
    DiscourseEntity report;
    report.id = kReportPeriodEntity;
    report.kind = DiscourseEntity::Kind::ReportPeriod;
    entities_.push_back(report);
  }

  int register_period(const FuzzyPeriodMessage& msg) {
    DiscourseEntity e;
    e.id = static_cast<int>(entities_.size());
    e.kind = DiscourseEntity::Kind::FuzzyPeriod;
    e.term = msg.term;
    e.property_word = period_property_word(msg, *lex_);
    e.avg_fd = msg.avg_fd;
    e.start = msg.start;
    e.end = msg.end;
    entities_.push_back(std::move(e));
    return entities_.back().id;
  }

  const std::vector<DiscourseEntity>& entities() const { return entities_; }

  void reset_mentions() {
    for (DiscourseEntity& e : entities_) e.mention_count = 0;
  }

  Reference refer(int entity_id) {
    DiscourseEntity& e = entity(entity_id);
    Reference ref;
    ref.entity_id = entity_id;

    if (e.kind == DiscourseEntity::Kind::ReportPeriod) {
      // Unique in every report; no features needed.
      ref.np = NounPhrase{"", lex_->subject_period, false, false};
      ++e.mention_count;
      return ref;
    }

    ref.identifying = minimal_identifying_features(e);
    if (e.mention_count == 0) {
      // Indefinite introduction carrying the period's content.
      ref.surface = {ReferenceFeature::Property, ReferenceFeature::DateRange};
      ref.np.determiner = detail::indefinite_article(e.property_word);
      ref.np.head = e.property_word + " " + lex_->period_noun + " " +
                    render_day_range(e.start, e.end);
    } else {
      ref.surface = ref.identifying;
      ref.np.determiner = "that";
      ref.np.head = head_for(e, ref.identifying);
    }
    ref.np.highlight = true;
    ++e.mention_count;
    return ref;
  }

 private:
  DiscourseEntity& entity(int id) {
    for (DiscourseEntity& e : entities_) {
      if (e.id == id) return e;
    }
    throw ValidationError("reference to unregistered entity " + std::to_string(id));
  }

  // Exhaustive search over the feature subsets in preference order:
  // nothing, property alone, dates alone, both. Competitors are the
  // other fuzzy-period entities of the document.
  std::vector<ReferenceFeature> minimal_identifying_features(
      const DiscourseEntity& target) const {
    static const std::vector<std::vector<ReferenceFeature>> kSubsets = {
        {},
        {ReferenceFeature::Property},
        {ReferenceFeature::DateRange},
        {ReferenceFeature::Property, ReferenceFeature::DateRange},
    };
    for (const auto& subset : kSubsets) {
      int matches = 0;
      for (const DiscourseEntity& e : entities_) {
        if (e.kind != DiscourseEntity::Kind::FuzzyPeriod) continue;
        if (detail::entity_matches(e, target, subset)) ++matches;
      }
      if (matches == 1) return subset;
    }
    throw ValidationError(
        "no feature combination distinguishes the period starting " +
        target.start.to_iso() + "; duplicate periods in the document");
  }

  std::string head_for(const DiscourseEntity& e,
                       const std::vector<ReferenceFeature>& features) const {
    bool with_property = false;
    bool with_dates = false;
    for (ReferenceFeature f : features) {
      with_property |= f == ReferenceFeature::Property;
      with_dates |= f == ReferenceFeature::DateRange;
    }
    std::string head;
    if (with_property) head += e.property_word + " ";
    head += lex_->period_noun;
    if (with_dates) head += " " + render_day_range(e.start, e.end);
    return head;
  }

  const Lexicon* lex_;
  std::vector<DiscourseEntity> entities_;
};

}  // namespace lingsum
