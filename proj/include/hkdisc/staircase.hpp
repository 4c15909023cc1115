#pragma once
#include <utility>
#include <vector>

namespace hkdisc {

using Point2 = std::pair<long, long>;

/// Minimal generators of a monomial ideal in two variables, sorted by
/// increasing first coordinate (hence strictly decreasing second).
class Staircase2 {
public:
  /// Accepts any finite list of exponents with nonnegative entries; duplicates
  /// and non-minimal generators are removed.
  explicit Staircase2(const std::vector<Point2>& exponents);

  const std::vector<Point2>& gens() const { return gens_; }
  /// The upset contains a pure power of each variable.
  bool zero_dimensional() const;
  /// Whether x^a y^b lies in the ideal.
  bool contains(long a, long b) const;

private:
  std::vector<Point2> gens_;
};

/// Twice the area of the region between the axes and the lower-left convex
/// hull of the upset (normalized volume of the complement).
long staircase_multiplicity(const Staircase2& s);

/// Number of monomials outside the ideal.
long colength(const Staircase2& s);

/// Multiplicity at the origin of generic sparse polynomials with the given
/// exponents; requires a pure power of each variable among them.
long sparse_origin_multiplicity(const std::vector<Point2>& exponents);

} // namespace hkdisc
