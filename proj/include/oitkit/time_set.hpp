#pragma once

#include <utility>
#include <vector>

#include "oitkit/seconds.hpp"

namespace oit {

struct Interval {
  Seconds lo;
  Seconds hi;

  Seconds length() const { return hi - lo; }
  bool contains(Seconds t) const { return lo <= t && t <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of closed intervals and isolated points.
//
// Always held in canonical form: intervals sorted and pairwise disjoint
// (touching or overlapping inputs are merged), points sorted, unique and
// outside every interval. Degenerate intervals [t, t] become points.
class TimeSet {
 public:
  // The singleton {0}.
  TimeSet() : points_{Seconds{}} {}

  // Throws Error(InvalidModel) when empty or when some interval has lo > hi.
  TimeSet(std::vector<Interval> intervals, std::vector<Seconds> points);

  static TimeSet interval(Seconds lo, Seconds hi) { return TimeSet({{lo, hi}}, {}); }
  static TimeSet point(Seconds t) { return TimeSet({}, {t}); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<Seconds>& points() const { return points_; }

  Seconds inf() const;
  Seconds sup() const;
  // Lebesgue measure; points contribute nothing.
  Seconds lebesgue() const;

  bool contains(Seconds t) const;
  bool contains(const TimeSet& other) const;
  bool intersects(const TimeSet& other) const;

  // Maximal open gaps of the set inside [inf, sup], returned as the closures
  // of those gaps, in increasing order.
  std::vector<Interval> gaps() const;

  friend TimeSet unite(const TimeSet& a, const TimeSet& b);
  friend bool operator==(const TimeSet&, const TimeSet&) = default;

 private:
  std::vector<Interval> intervals_;
  std::vector<Seconds> points_;
};

}  // namespace oit
