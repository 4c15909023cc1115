#include "hkdisc/staircase.hpp"

#include "hkdisc/error.hpp"

#include <algorithm>
#include <limits>

namespace hkdisc {

Staircase2::Staircase2(const std::vector<Point2>& exponents) {
  std::vector<Point2> pts = exponents;
  for (const auto& [a, b] : pts)
    if (a < 0 || b < 0) throw DomainError("staircase exponents must be nonnegative");
  std::sort(pts.begin(), pts.end());
  long best_b = std::numeric_limits<long>::max();
  for (const auto& p : pts) {
    // sorted by a, so p is minimal iff its b beats every earlier generator
    if (p.second < best_b) {
      gens_.push_back(p);
      best_b = p.second;
    }
  }
}

bool Staircase2::zero_dimensional() const {
  return !gens_.empty() && gens_.front().first == 0 && gens_.back().second == 0;
}

bool Staircase2::contains(long a, long b) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Point2& g) { return g.first <= a && g.second <= b; });
}

namespace {

long cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

void require_zero_dimensional(const Staircase2& s, const char* message) {
  if (!s.zero_dimensional()) throw DomainError(message);
}

long complement_volume(const Staircase2& s) {
  // Lower hull of the generators, walked from (0, b) to (a, 0). Collinear
  // points are dropped; they do not change the area.
  std::vector<Point2> hull;
  for (const auto& p : s.gens()) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // Polygon (0,0), (a,0), ..., (0,b) in counterclockwise order; shoelace.
  std::vector<Point2> poly{{0, 0}};
  for (auto it = hull.rbegin(); it != hull.rend(); ++it) poly.push_back(*it);
  long twice_area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    twice_area += p.first * q.second - q.first * p.second;
  }
  return twice_area;
}

} // namespace

long staircase_multiplicity(const Staircase2& s) {
  require_zero_dimensional(s, "not zero-dimensional");
  return complement_volume(s);
}

long colength(const Staircase2& s) {
  require_zero_dimensional(s, "not zero-dimensional");
  long count = 0;
  const auto& g = s.gens();
  // Between consecutive generators the staircase height is the earlier b.
  for (std::size_t i = 0; i + 1 < g.size(); ++i) count += (g[i + 1].first - g[i].first) * g[i].second;
  return count;
}

long sparse_origin_multiplicity(const std::vector<Point2>& exponents) {
  Staircase2 s(exponents);
  require_zero_dimensional(s, "hypothesis violated: need a pure power of each variable");
  return complement_volume(s);
}

} // namespace hkdisc
