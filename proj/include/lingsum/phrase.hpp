#pragma once

// Phrase specifications: the intermediate sentence syntax between
// messages and realized text. Subjects are either literal noun phrases
// or references to discourse entities that the referring-expression
// stage resolves later.

#include <string>
#include <variant>
#include <vector>

namespace lingsum {

struct NounPhrase {
  std::string determiner;  // "the", "a", "that", "77", "no" or empty
  std::string head;
  bool plural = false;
  // Marks referring expressions for fuzzy periods; markup output may
  // highlight these.
  bool highlight = false;

  bool operator==(const NounPhrase&) const = default;
};

// Placeholder for an entity mention, resolved during referring
// expression generation.
struct EntityRef {
  int id = -1;

  bool operator==(const EntityRef&) const = default;
};

using Subject = std::variant<NounPhrase, EntityRef>;

enum class VerbForm { PastBe };  // realized as was/were

struct ComplementItem {
  std::string premod;  // optional adverb: "predominantly"
  std::string word;

  bool operator==(const ComplementItem&) const = default;
};

struct PhraseSpec {
  Subject subject;
  VerbForm verb = VerbForm::PastBe;
  bool existential = false;  // "there was/were <subject>"
  std::vector<ComplementItem> complement;
  std::vector<std::string> modifiers;  // trailing phrases: "in general"
  int provenance = -1;                 // plan-node index this spec came from

  bool operator==(const PhraseSpec&) const = default;
};

inline bool same_subject(const PhraseSpec& a, const PhraseSpec& b) {
  return a.subject == b.subject;
}

}  // namespace lingsum
