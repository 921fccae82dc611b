#include "oitkit/time_set.hpp"

#include <algorithm>

#include "oitkit/error.hpp"

namespace oit {

TimeSet::TimeSet(std::vector<Interval> intervals, std::vector<Seconds> points) {
  if (intervals.empty() && points.empty()) {
    throw Error(ErrorKind::InvalidModel, "time set must contain at least one interval or point");
  }
  for (const auto& iv : intervals) {
    if (iv.hi < iv.lo) {
      throw Error(ErrorKind::InvalidModel,
                  "interval [" + iv.lo.to_string() + ", " + iv.hi.to_string() + "] has lo > hi");
    }
  }

  std::vector<Interval> proper;
  for (const auto& iv : intervals) {
    if (iv.lo == iv.hi) {
      points.push_back(iv.lo);
    } else {
      proper.push_back(iv);
    }
  }
  std::sort(proper.begin(), proper.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : proper) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(iv);
    }
  }

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (Seconds t : points) {
    if (!contains(t)) points_.push_back(t);
  }
}

Seconds TimeSet::inf() const {
  if (intervals_.empty()) return points_.front();
  if (points_.empty()) return intervals_.front().lo;
  return std::min(intervals_.front().lo, points_.front());
}

Seconds TimeSet::sup() const {
  if (intervals_.empty()) return points_.back();
  if (points_.empty()) return intervals_.back().hi;
  return std::max(intervals_.back().hi, points_.back());
}

Seconds TimeSet::lebesgue() const {
  Seconds total;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

bool TimeSet::contains(Seconds t) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                             [](Seconds v, const Interval& iv) { return v < iv.lo; });
  if (it != intervals_.begin() && std::prev(it)->contains(t)) return true;
  return std::binary_search(points_.begin(), points_.end(), t);
}

bool TimeSet::contains(const TimeSet& other) const {
  for (Seconds t : other.points_) {
    if (!contains(t)) return false;
  }
  for (const auto& iv : other.intervals_) {
    const bool covered = std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& mine) {
      return mine.lo <= iv.lo && iv.hi <= mine.hi;
    });
    if (!covered) return false;
  }
  return true;
}

bool TimeSet::intersects(const TimeSet& other) const {
  for (Seconds t : other.points_) {
    if (contains(t)) return true;
  }
  for (Seconds t : points_) {
    if (other.contains(t)) return true;
  }
  for (const auto& a : intervals_) {
    for (const auto& b : other.intervals_) {
      if (a.lo <= b.hi && b.lo <= a.hi) return true;
    }
  }
  return false;
}

std::vector<Interval> TimeSet::gaps() const {
  // Walk the sorted pieces; a point is a zero-length piece.
  std::vector<Interval> pieces = intervals_;
  for (Seconds t : points_) pieces.push_back({t, t});
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  std::vector<Interval> out;
  Seconds reach = pieces.front().hi;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (reach < pieces[i].lo) out.push_back({reach, pieces[i].lo});
    reach = std::max(reach, pieces[i].hi);
  }
  return out;
}

TimeSet unite(const TimeSet& a, const TimeSet& b) {
  std::vector<Interval> ivs = a.intervals_;
  ivs.insert(ivs.end(), b.intervals_.begin(), b.intervals_.end());
  std::vector<Seconds> pts = a.points_;
  pts.insert(pts.end(), b.points_.begin(), b.points_.end());
  return TimeSet(std::move(ivs), std::move(pts));
}

}  // namespace oit
