#pragma once

// Content determination: the typed message set for a report. General
// messages cover quantified trends and the rainy-day count; extended
// messages are the remarkable fuzzy periods.

#include <string>
#include <variant>
#include <vector>

#include "lingsum/config.hpp"
#include "lingsum/ingestion.hpp"
#include "lingsum/knowledge_base.hpp"
#include "lingsum/protoform.hpp"
#include "lingsum/series.hpp"

namespace lingsum {

struct QuantifiedTrendMessage {
  std::string variable;
  std::vector<QuantifiedStatement> statements;  // nonempty, at most two
  bool low_confidence = false;

  // Statement with the highest fulfillment degree; first on ties.
  const QuantifiedStatement& dominant() const {
    const QuantifiedStatement* best = &statements.front();
    for (const auto& s : statements) {
      if (s.fd > best->fd + kDegreeEps) best = &s;
    }
    return *best;
  }
};

struct CountMessage {
  std::string variable;
  double threshold = 0.0;  // crisp predicate: value > threshold
  int count = 0;
  Date start;
  Date end;
};

struct AdjacentFd {
  std::string term;
  Degree mean_fd = 0.0;
};

struct FuzzyPeriodMessage {
  std::string variable;
  std::string term;
  Date start;
  Date end;
  Degree avg_fd = 0.0;  // always >= 0.5; lower periods are discarded
  std::vector<AdjacentFd> adjacent;
};

using Message = std::variant<QuantifiedTrendMessage, CountMessage, FuzzyPeriodMessage>;

struct ContentPlan {
  std::vector<Message> general;
  std::vector<Message> extended;
  Date period_start;
  Date period_end;
};

inline QuantifiedTrendMessage build_trend_message(const FuzzyKnowledgeBase& kb,
                                                  const std::string& variable,
                                                  const DataSeries& xs,
                                                  const SelectionCriteria& criteria) {
  Selection sel = select_statements(enumerate_candidates(kb, variable, xs),
                                    criteria, kb);
  return {variable, std::move(sel.statements), sel.low_confidence};
}

inline CountMessage count_days(const DataSeries& xs, double threshold,
                               Date period_start, Date period_end) {
  if (xs.empty()) throw ValidationError("cannot count days of an empty series");
  if (period_start > period_end || period_start < xs.start() ||
      period_end > xs.end()) {
    throw ValidationError("count period " + period_start.to_iso() + ".." +
                          period_end.to_iso() + " outside series range");
  }
  int count = 0;
  for (const Observation& p : xs.points()) {
    if (p.date >= period_start && p.date <= period_end && p.value > threshold) {
      ++count;
    }
  }
  return {xs.variable(), threshold, count, period_start, period_end};
}

// Maximal runs of consecutive days whose term membership stays at or
// above fd_floor, at least min_len days long. A run's message carries
// the mean membership over the run and the mean membership of the
// neighbouring terms when these reach adjacent_floor. Runs averaging
// below 0.5 are discarded here, never lexicalized.
inline std::vector<FuzzyPeriodMessage> extract_fuzzy_periods(
    const FuzzyKnowledgeBase& kb, const std::string& variable,
    const DataSeries& xs, int min_len, double fd_floor = 0.5,
    double adjacent_floor = 0.3) {
  if (min_len < 2) throw ValidationError("period min length must be at least 2");
  const LinguisticVariable& var = kb.variable(variable);
  std::vector<FuzzyPeriodMessage> out;
  const auto& points = xs.points();

  for (std::size_t ti = 0; ti < var.terms.size(); ++ti) {
    const LinguisticTerm& term = var.terms[ti];
    std::size_t i = 0;
    while (i < points.size()) {
      if (term.mf.evaluate(points[i].value) < fd_floor) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < points.size() &&
             days_between(points[j].date, points[j + 1].date) == 1 &&
             term.mf.evaluate(points[j + 1].value) >= fd_floor) {
        ++j;
      }
      std::size_t len = j - i + 1;
      if (len >= static_cast<std::size_t>(min_len)) {
        double sum = 0.0;
        for (std::size_t k = i; k <= j; ++k) {
          sum += term.mf.evaluate(points[k].value);
        }
        double avg = sum / static_cast<double>(len);
        if (avg >= 0.5) {
          FuzzyPeriodMessage msg;
          msg.variable = variable;
          msg.term = term.name;
          msg.start = points[i].date;
          msg.end = points[j].date;
          msg.avg_fd = avg;
          for (std::size_t ni : {ti - 1, ti + 1}) {
            if (ni >= var.terms.size()) continue;  // wraps for ti == 0
            const LinguisticTerm& neighbour = var.terms[ni];
            double nsum = 0.0;
            for (std::size_t k = i; k <= j; ++k) {
              nsum += neighbour.mf.evaluate(points[k].value);
            }
            double navg = nsum / static_cast<double>(len);
            if (navg >= adjacent_floor) {
              msg.adjacent.push_back({neighbour.name, navg});
            }
          }
          out.push_back(std::move(msg));
        }
      }
      i = j + 1;
    }
  }
  return out;
}

// Assembles the full content plan for a report run: one trend message
// per configured trend variable, the configured counts, then the period
// messages sorted by start date.
inline ContentPlan build_content_plan(const Bundle& bundle,
                                      const ObservationTable& table) {
  ContentPlan plan;
  plan.period_start = table.start();
  plan.period_end = table.end();

  std::vector<QuantifiedTrendMessage> trends;
  for (const std::string& variable : bundle.report.trend_variables) {
    trends.push_back(build_trend_message(bundle.kb, variable,
                                         table.series(variable),
                                         bundle.report.criteria));
  }
  for (const QuantifiedTrendMessage& m : trends) plan.general.push_back(m);
  for (const CountSpec& spec : bundle.report.counts) {
    DataSeries xs = table.series(spec.variable);
    plan.general.push_back(
        count_days(xs, spec.threshold, table.start(), table.end()));
  }

  std::vector<FuzzyPeriodMessage> periods;
  for (const PeriodSpec& spec : bundle.report.periods) {
    std::vector<FuzzyPeriodMessage> extracted = extract_fuzzy_periods(
        bundle.kb, spec.variable, table.series(spec.variable), spec.min_length,
        spec.fd_floor, spec.adjacent_floor);
    for (FuzzyPeriodMessage& msg : extracted) {
      if (spec.exclude_trend_terms) {
        bool shadowed = false;
        for (const QuantifiedTrendMessage& trend : trends) {
          if (trend.variable != msg.variable) continue;
          for (const QuantifiedStatement& s : trend.statements) {
            if (s.summarizer.term == msg.term) shadowed = true;
          }
        }
        if (shadowed) continue;
      }
      periods.push_back(std::move(msg));
    }
  }
  std::sort(periods.begin(), periods.end(),
            [](const FuzzyPeriodMessage& a, const FuzzyPeriodMessage& b) {
              if (a.start != b.start) return a.start < b.start;
              if (a.end != b.end) return a.end < b.end;
              return a.term < b.term;
            });
  for (FuzzyPeriodMessage& msg : periods) plan.extended.push_back(std::move(msg));
  return plan;
}

}  // namespace lingsum
