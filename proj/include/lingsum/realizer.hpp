#pragma once

// Surface realization: phrase specifications to grammatical sentences,
// document plans to formatted output. Template-based; the only
// morphology is was/were agreement and ordinal day numbers.

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "lingsum/document_plan.hpp"
#include "lingsum/error.hpp"
#include "lingsum/lexicon.hpp"
#include "lingsum/phrase.hpp"

namespace lingsum {

enum class OutputFormat { Text, Html };

struct RelationSpec {
  RelationKind kind = RelationKind::Sequence;
  PhraseSpec left;
  PhraseSpec right;
};

using SentenceItem = std::variant<PhraseSpec, RelationSpec>;

struct LexicalizedParagraph {
  ParagraphRole role = ParagraphRole::General;
  std::vector<SentenceItem> items;
};

struct LexicalizedDocument {
  std::vector<LexicalizedParagraph> paragraphs;
};

namespace detail {

inline std::string render_noun_phrase(const NounPhrase& np, OutputFormat format) {
  std::string text = np.determiner.empty() ? np.head : np.determiner + " " + np.head;
  if (format == OutputFormat::Html && np.highlight) {
    return "<em>" + text + "</em>";
  }
  return text;
}

inline std::string sentence_body(const PhraseSpec& spec, OutputFormat format) {
  const NounPhrase* np = std::get_if<NounPhrase>(&spec.subject);
  if (!np) {
    throw Error("unresolved entity reference reached the realizer");
  }
  if (np->head.empty()) throw Error("phrase spec without a subject");
  const char* be = np->plural ? "were" : "was";

  std::string out;
  if (spec.existential) {
    out = std::string("there ") + be + " " + render_noun_phrase(*np, format);
  } else {
    if (spec.complement.empty()) {
      throw Error("phrase spec without a complement");
    }
    out = render_noun_phrase(*np, format) + " " + be;
    for (std::size_t i = 0; i < spec.complement.size(); ++i) {
      const ComplementItem& item = spec.complement[i];
      if (item.word.empty()) throw Error("unmapped lexeme in complement");
      out += i == 0 ? " " : " and ";
      if (!item.premod.empty()) out += item.premod + " ";
      out += item.word;
    }
  }
  for (const std::string& mod : spec.modifiers) {
    if (mod.empty()) throw Error("empty modifier in phrase spec");
    out += " " + mod;
  }
  if (out.find("  ") != std::string::npos) {
    throw Error("double space in realized sentence: '" + out + "'");
  }
  return out;
}

inline std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace detail

inline std::string realize_sentence(const PhraseSpec& spec,
                                    OutputFormat format = OutputFormat::Text) {
  return detail::capitalize(detail::sentence_body(spec, format)) + ".";
}

// Contrast joins with ", but", emphasis with ", especially"; the second
// clause keeps lowercase.
inline std::string realize_relation(const RelationSpec& rel, OutputFormat format) {
  std::string left = detail::sentence_body(rel.left, format);
  std::string right = detail::sentence_body(rel.right, format);
  const char* connective = nullptr;
  switch (rel.kind) {
    case RelationKind::Contrast: connective = ", but "; break;
    case RelationKind::Emphasis: connective = ", especially "; break;
    case RelationKind::Sequence:
      return detail::capitalize(left) + ". " + detail::capitalize(right) + ".";
  }
  return detail::capitalize(left) + connective + right + ".";
}

inline std::string realize_item(const SentenceItem& item, OutputFormat format) {
  if (const PhraseSpec* spec = std::get_if<PhraseSpec>(&item)) {
    return realize_sentence(*spec, format);
  }
  return realize_relation(std::get<RelationSpec>(item), format);
}

// Paragraphs become blank-line separated text or <p> elements. An empty
// extended paragraph realizes the configured fallback sentence.
inline std::string realize_document(const LexicalizedDocument& doc,
                                    const Lexicon& lex, OutputFormat format) {
  std::vector<std::string> paragraphs;
  for (const LexicalizedParagraph& paragraph : doc.paragraphs) {
    std::vector<std::string> sentences;
    for (const SentenceItem& item : paragraph.items) {
      sentences.push_back(realize_item(item, format));
    }
    if (sentences.empty()) {
      if (paragraph.role != ParagraphRole::Extended) continue;
      sentences.push_back(lex.fallback_extended);
    }
    std::string joined;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (i > 0) joined += " ";
      joined += sentences[i];
    }
    paragraphs.push_back(std::move(joined));
  }

  std::string out;
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    if (format == OutputFormat::Html) {
      out += "<p>" + paragraphs[i] + "</p>\n";
    } else {
      if (i > 0) out += "\n";
      out += paragraphs[i] + "\n";
    }
  }
  return out;
}

}  // namespace lingsum
