#pragma once

// End-to-end orchestration in the fixed stage order: content
// determination, document structuring, lexicalization, aggregation,
// referring expression generation, realization. Stages communicate only
// through the typed intermediate values, each of which is kept on the
// result for inspection and tracing.

#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lingsum/aggregator.hpp"
#include "lingsum/config.hpp"
#include "lingsum/content.hpp"
#include "lingsum/document_plan.hpp"
#include "lingsum/ingestion.hpp"
#include "lingsum/lexicalizer.hpp"
#include "lingsum/realizer.hpp"
#include "lingsum/referring.hpp"

namespace lingsum {

enum class AggregationPath { Structural, Content, Both };

struct PipelineOptions {
  OutputFormat format = OutputFormat::Text;
  AggregationPath aggregation = AggregationPath::Structural;
  MultiQuantifierMode mode = MultiQuantifierMode::Default;
  bool trace = false;
};

struct PipelineResult {
  std::string report;
  ContentPlan content;
  DocumentPlan plan;
  LexicalizedDocument lexicalized;  // after aggregation and referring
  std::vector<Reference> references;
  std::vector<DiscourseEntity> entities;
  std::optional<AggregationComparison> comparison;
  std::string trace;
};

namespace detail {

inline std::string fmt_degree(Degree d) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", d);
  return buf;
}

inline std::string describe_statement(const QuantifiedStatement& s) {
  std::string out = "(" + s.quantifier + ", " + s.summarizer.term;
  if (s.summarizer_b) out += " and " + s.summarizer_b->term;
  out += ", fd=" + fmt_degree(s.fd) + ", cov=" + fmt_degree(s.coverage) + ")";
  return out;
}

inline std::string describe_message(const Message& m) {
  if (const auto* trend = std::get_if<QuantifiedTrendMessage>(&m)) {
    std::string out = "trend " + trend->variable + ":";
    for (const auto& s : trend->statements) out += " " + describe_statement(s);
    if (trend->low_confidence) out += " [low-confidence]";
    return out;
  }
  if (const auto* count = std::get_if<CountMessage>(&m)) {
    return "count " + count->variable + ": " + std::to_string(count->count) +
           " days > " + fmt_degree(count->threshold) + " over " +
           count->start.to_iso() + ".." + count->end.to_iso();
  }
  const auto& period = std::get<FuzzyPeriodMessage>(m);
  std::string out = "period " + period.variable + "/" + period.term + " " +
                    period.start.to_iso() + ".." + period.end.to_iso() +
                    " avg_fd=" + fmt_degree(period.avg_fd);
  for (const auto& adj : period.adjacent) {
    out += " adjacent(" + adj.term + "=" + fmt_degree(adj.mean_fd) + ")";
  }
  return out;
}

inline const char* relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::Contrast: return "contrast";
    case RelationKind::Emphasis: return "emphasis";
    case RelationKind::Sequence: return "sequence";
  }
  return "?";
}

inline std::string describe_spec(const PhraseSpec& spec) {
  std::string out;
  if (const auto* np = std::get_if<NounPhrase>(&spec.subject)) {
    out += "subject='" +
           (np->determiner.empty() ? np->head : np->determiner + " " + np->head) +
           "'";
  } else {
    out += "subject=entity#" + std::to_string(std::get<EntityRef>(spec.subject).id);
  }
  if (spec.existential) out += " existential";
  for (const auto& item : spec.complement) {
    out += " [" + (item.premod.empty() ? item.word : item.premod + " " + item.word) +
           "]";
  }
  for (const auto& mod : spec.modifiers) out += " +" + mod;
  return out;
}

struct TraceLog {
  bool enabled = false;
  std::string text;

  void section(const std::string& title) {
    if (enabled) text += "== " + title + " ==\n";
  }
  void line(const std::string& s) {
    if (enabled) text += s + "\n";
  }
};

}  // namespace detail

// Candidate fulfillment/coverage table for every trend variable, tab
// delimited: variable, quantifier, term, fd, coverage.
inline std::string dump_candidates(const Bundle& bundle,
                                   const ObservationTable& table) {
  std::string out = "variable\tquantifier\tterm\tfd\tcoverage\n";
  for (const std::string& variable : bundle.report.trend_variables) {
    DataSeries xs = table.series(variable);
    for (const QuantifiedStatement& s :
         enumerate_candidates(bundle.kb, variable, xs)) {
      out += variable + "\t" + s.quantifier + "\t" + s.summarizer.term + "\t" +
             detail::fmt_degree(s.fd) + "\t" + detail::fmt_degree(s.coverage) +
             "\n";
    }
  }
  return out;
}

inline PipelineResult run_pipeline(const Bundle& bundle,
                                   const ObservationTable& table,
                                   const PipelineOptions& options = {}) {
  detail::TraceLog trace;
  trace.enabled = options.trace;
  PipelineResult result;

  // Content determination.
  result.content = build_content_plan(bundle, table);
  if (options.aggregation == AggregationPath::Content &&
      bundle.report.trend_variables.size() >= 2) {
    // Content-level route: one conjunctive statement replaces the first
    // two trend messages.
    std::vector<const QuantifiedTrendMessage*> trends;
    for (const Message& m : result.content.general) {
      if (const auto* t = std::get_if<QuantifiedTrendMessage>(&m)) trends.push_back(t);
    }
    const QuantifiedStatement& sa = trends[0]->dominant();
    const QuantifiedStatement& sb = trends[1]->dominant();
    DataSeries xs_a = table.series(sa.summarizer.variable);
    DataSeries xs_b = table.series(sb.summarizer.variable);
    const LinguisticTerm& term_a =
        *bundle.kb.variable(sa.summarizer.variable).find_term(sa.summarizer.term);
    const LinguisticTerm& term_b =
        *bundle.kb.variable(sb.summarizer.variable).find_term(sb.summarizer.term);
    const Quantifier& q = best_conjunction_quantifier(
        bundle.kb, term_a, xs_a, term_b, xs_b, bundle.report.tnorm);
    QuantifiedTrendMessage conj{sa.summarizer.variable,
                                {content_level_conjunction(q, term_a, xs_a, term_b,
                                                           xs_b, bundle.report.tnorm)},
                                false};
    std::vector<Message> general{Message{conj}};
    for (const Message& m : result.content.general) {
      if (std::holds_alternative<CountMessage>(m)) general.push_back(m);
    }
    result.content.general = std::move(general);
  }
  trace.section("content plan");
  for (const Message& m : result.content.general) {
    trace.line("general: " + detail::describe_message(m));
  }
  for (const Message& m : result.content.extended) {
    trace.line("extended: " + detail::describe_message(m));
  }

  // Document structuring.
  result.plan = plan_document(result.content, bundle.kb);
  trace.section("document plan");
  for (const Paragraph& paragraph : result.plan.paragraphs) {
    const char* role =
        paragraph.role == ParagraphRole::General ? "general" : "extended";
    for (const PlanNode& node : paragraph.nodes) {
      if (const auto* m = std::get_if<Message>(&node)) {
        trace.line(std::string(role) + ": " + detail::describe_message(*m));
      } else {
        const auto& rel = std::get<DiscourseRelation>(node);
        trace.line(std::string(role) + ": " + detail::relation_name(rel.kind) +
                   "{" + detail::describe_message(rel.left) + " | " +
                   detail::describe_message(rel.right) +
                   "} strength=" + detail::fmt_degree(rel.strength));
      }
    }
  }

  // Lexicalization. Period entities register in document order.
  EntityRegistry registry(bundle.lexicon);
  LexicalizedDocument doc;
  auto lexicalize_message = [&](const Message& m, int provenance) {
    PhraseSpec spec;
    if (const auto* trend = std::get_if<QuantifiedTrendMessage>(&m)) {
      spec = lexicalize_trend(*trend, bundle.lexicon, bundle.kb, options.mode);
    } else if (const auto* count = std::get_if<CountMessage>(&m)) {
      spec = lexicalize_count(*count, bundle.lexicon);
    } else {
      const auto& period = std::get<FuzzyPeriodMessage>(m);
      spec = lexicalize_period(period, bundle.lexicon,
                               registry.register_period(period));
    }
    spec.provenance = provenance;
    return spec;
  };
  int node_counter = 0;
  for (const Paragraph& paragraph : result.plan.paragraphs) {
    LexicalizedParagraph out{paragraph.role, {}};
    for (const PlanNode& node : paragraph.nodes) {
      int provenance = node_counter++;
      if (const auto* m = std::get_if<Message>(&node)) {
        out.items.emplace_back(lexicalize_message(*m, provenance));
      } else {
        const auto& rel = std::get<DiscourseRelation>(node);
        RelationSpec spec;
        spec.kind = rel.kind;
        spec.left = lexicalize_message(rel.left, provenance);
        spec.right = lexicalize_message(rel.right, provenance);
        out.items.emplace_back(std::move(spec));
      }
    }
    doc.paragraphs.push_back(std::move(out));
  }
  trace.section("phrase specs");
  for (const LexicalizedParagraph& paragraph : doc.paragraphs) {
    for (const SentenceItem& item : paragraph.items) {
      if (const auto* spec = std::get_if<PhraseSpec>(&item)) {
        trace.line(detail::describe_spec(*spec));
      } else {
        const auto& rel = std::get<RelationSpec>(item);
        trace.line(std::string(detail::relation_name(rel.kind)) + "{" +
                   detail::describe_spec(rel.left) + " | " +
                   detail::describe_spec(rel.right) + "}");
      }
    }
  }

  // Structural aggregation: merge runs of adjacent, compatible sentences
  // within a paragraph, at most three originals per merged sentence.
  // Relations are left untouched, which also stops merging across them.
  if (options.aggregation != AggregationPath::Content) {
    for (LexicalizedParagraph& paragraph : doc.paragraphs) {
      std::vector<SentenceItem> merged;
      std::vector<int> chain_len;
      for (SentenceItem& item : paragraph.items) {
        PhraseSpec* prev = merged.empty()
                               ? nullptr
                               : std::get_if<PhraseSpec>(&merged.back());
        PhraseSpec* cur = std::get_if<PhraseSpec>(&item);
        if (prev && cur && chain_len.back() < 3 && !prev->existential &&
            !cur->existential && same_subject(*prev, *cur) &&
            prev->verb == cur->verb && prev->modifiers.empty() &&
            cur->modifiers.empty()) {
          *prev = aggregate_shared_structure(*prev, *cur);
          ++chain_len.back();
          continue;
        }
        merged.push_back(std::move(item));
        chain_len.push_back(1);
      }
      paragraph.items = std::move(merged);
    }
    trace.section("aggregated specs");
    for (const LexicalizedParagraph& paragraph : doc.paragraphs) {
      for (const SentenceItem& item : paragraph.items) {
        if (const auto* spec = std::get_if<PhraseSpec>(&item)) {
          trace.line(detail::describe_spec(*spec));
        }
      }
    }
  }

  // Referring expression generation, in realization order.
  auto resolve = [&](PhraseSpec& spec) {
    if (const auto* ref = std::get_if<EntityRef>(&spec.subject)) {
      Reference reference = registry.refer(ref->id);
      spec.subject = reference.np;
      result.references.push_back(std::move(reference));
    }
  };
  for (LexicalizedParagraph& paragraph : doc.paragraphs) {
    for (SentenceItem& item : paragraph.items) {
      if (auto* spec = std::get_if<PhraseSpec>(&item)) {
        resolve(*spec);
      } else {
        auto& rel = std::get<RelationSpec>(item);
        resolve(rel.left);
        resolve(rel.right);
      }
    }
  }
  result.entities = registry.entities();
  trace.section("referring expressions");
  for (const Reference& ref : result.references) {
    trace.line("entity#" + std::to_string(ref.entity_id) + " -> '" +
               (ref.np.determiner.empty() ? ref.np.head
                                          : ref.np.determiner + " " + ref.np.head) +
               "'");
  }

  // Comparison record for the content-vs-structural question.
  if (options.aggregation == AggregationPath::Both &&
      bundle.report.trend_variables.size() >= 2) {
    std::vector<const QuantifiedTrendMessage*> trends;
    for (const Message& m : result.content.general) {
      if (const auto* t = std::get_if<QuantifiedTrendMessage>(&m)) trends.push_back(t);
    }
    if (trends.size() >= 2) {
      result.comparison = compare_aggregation_paths(
          bundle.kb, bundle.lexicon, *trends[0],
          table.series(trends[0]->variable), *trends[1],
          table.series(trends[1]->variable));
    }
  }

  // Realization.
  result.lexicalized = doc;
  result.report = realize_document(doc, bundle.lexicon, options.format);
  trace.section("report");
  trace.line(result.report);
  result.trace = std::move(trace.text);
  return result;
}

}  // namespace lingsum
