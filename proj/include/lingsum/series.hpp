#pragma once

// Daily observation series for one linguistic variable.

#include <string>
#include <utility>
#include <vector>

#include "lingsum/date.hpp"
#include "lingsum/error.hpp"

namespace lingsum {

struct Observation {
  Date date;
  double value;
};

// Ordered samples of one variable. Dates are strictly increasing;
// emptiness is rejected by the operations that need data rather than
// here, so ingestion can build series incrementally.
class DataSeries {
 public:
  DataSeries() = default;
  DataSeries(std::string variable, std::vector<Observation> points)
      : variable_(std::move(variable)), points_(std::move(points)) {
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i - 1].date < points_[i].date)) {
        throw ValidationError("series '" + variable_ +
                              "': dates must be strictly increasing");
      }
    }
  }

  const std::string& variable() const { return variable_; }
  const std::vector<Observation>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  Date start() const { return points_.front().date; }
  Date end() const { return points_.back().date; }

  // True when both series sample exactly the same dates.
  bool aligned_with(const DataSeries& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (points_[i].date != other.points_[i].date) return false;
    }
    return true;
  }

 private:
  std::string variable_;
  std::vector<Observation> points_;
};

}  // namespace lingsum
