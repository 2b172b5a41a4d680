#pragma once

// Numeric kernel shared by every fuzzy operation: trapezoidal membership
// functions, t-norm / t-conorm pairs and ordered weighted averaging.
// Everything here is a pure function on immutable values.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lingsum/error.hpp"

namespace lingsum {

// Truth degrees live in [0, 1].
using Degree = double;

// Tolerance for degree comparisons in selection logic and for weight
// normalization checks.
inline constexpr double kDegreeEps = 1e-9;

inline bool is_degree(double x) { return x >= 0.0 && x <= 1.0; }

inline bool nearly_equal(double x, double y) {
  return x >= y - kDegreeEps && x <= y + kDegreeEps;
}

// Trapezoid over breakpoints a <= b <= c <= d. Triangle when b == c,
// crisp interval when a == b and c == d. Membership is 1 on the closed
// core [b, c] and 0 outside the open support (a, d); a degenerate
// vertical edge (a == b or c == d) is a crisp jump, which the core
// check already covers.
struct MembershipFunction {
  double a;
  double b;
  double c;
  double d;

  MembershipFunction(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {
    if (!(a <= b && b <= c && c <= d)) {
      throw ValidationError("membership breakpoints must satisfy a <= b <= c <= d");
    }
  }

  Degree evaluate(double x) const {
    if (x >= b && x <= c) return 1.0;
    if (x > a && x < b) return (x - a) / (b - a);
    if (x > c && x < d) return (d - x) / (d - c);
    return 0.0;
  }

  // True when the function never decreases over [lo, hi], i.e. its
  // falling edge starts at or beyond hi.
  bool is_nondecreasing_on(double lo, double hi) const {
    (void)lo;
    return c >= hi;
  }

  bool operator==(const MembershipFunction&) const = default;
};

enum class Tnorm { Minimum, Product, Lukasiewicz };
enum class Tconorm { Maximum, ProbabilisticSum, BoundedSum };

inline Degree tnorm_apply(Tnorm op, Degree x, Degree y) {
  if (!is_degree(x) || !is_degree(y)) {
    throw DomainError("t-norm arguments must lie in [0,1]");
  }
  switch (op) {
    case Tnorm::Minimum: return std::min(x, y);
    case Tnorm::Product: return x * y;
    case Tnorm::Lukasiewicz: return std::max(0.0, x + y - 1.0);
  }
  throw DomainError("unknown t-norm");
}

inline Degree tconorm_apply(Tconorm op, Degree x, Degree y) {
  if (!is_degree(x) || !is_degree(y)) {
    throw DomainError("t-conorm arguments must lie in [0,1]");
  }
  switch (op) {
    case Tconorm::Maximum: return std::max(x, y);
    case Tconorm::ProbabilisticSum: return x + y - x * y;
    case Tconorm::BoundedSum: return std::min(1.0, x + y);
  }
  throw DomainError("unknown t-conorm");
}

inline const char* tnorm_name(Tnorm op) {
  switch (op) {
    case Tnorm::Minimum: return "minimum";
    case Tnorm::Product: return "product";
    case Tnorm::Lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

// Yager's ordered weighted averaging. Weights are nonnegative and sum
// to 1 within kDegreeEps; values are sorted descending before the dot
// product, so (1,0,...,0) is max, (0,...,0,1) is min and uniform
// weights are the mean.
class OwaWeights {
 public:
  explicit OwaWeights(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw ValidationError("owa weights must be nonempty");
    double sum = 0.0;
    for (double wi : w_) {
      if (wi < 0.0) throw ValidationError("owa weights must be nonnegative");
      sum += wi;
    }
    if (!nearly_equal(sum, 1.0)) {
      throw ValidationError("owa weights must sum to 1");
    }
  }

  std::size_t size() const { return w_.size(); }
  const std::vector<double>& weights() const { return w_; }

 private:
  std::vector<double> w_;
};

inline Degree owa_aggregate(const OwaWeights& w, std::vector<Degree> values) {
  if (w.size() != values.size()) {
    throw ValidationError("owa weight/value length mismatch");
  }
  for (Degree v : values) {
    if (!is_degree(v)) throw DomainError("owa values must lie in [0,1]");
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    acc += w.weights()[i] * values[i];
  }
  return acc;
}

}  // namespace lingsum
