#pragma once
#include "hkdisc/hornparam.hpp"
#include "hkdisc/staircase.hpp"

#include <optional>
#include <vector>

namespace hkdisc {

/// Point of P^{m-1} where at least two non-proportional forms vanish.
struct BasePoint {
  std::vector<Rat> coords;           ///< first nonzero coordinate is 1
  std::vector<std::size_t> vanishing; ///< sorted, 0-based form indices
};

/// The base-point ideal <f_0, ..., f_m> localized at a point. Forms not
/// vanishing there are units and drop out; the vanishing ones are grouped by
/// projective direction.
struct LocalIdeal {
  BasePoint base;
  std::vector<std::vector<std::size_t>> directions; ///< form indices per direction class
  /// gens[k][d]: exponent of direction class d in f_k restricted to the point.
  std::vector<std::vector<long>> gens;
  bool monomial = false; ///< at most two direction classes

  /// Minimal monomial generators; throws unless `monomial`.
  Staircase2 staircase() const;
};

/// Base points of the parametrization for m = 3, sorted by vanishing set.
/// Throws DomainError for other m ("unsupported dimension") and when some
/// line of the arrangement is basic ("base locus not finite").
std::vector<BasePoint> base_points(const ParamSpec& spec);

LocalIdeal localize(const ParamSpec& spec, const BasePoint& p);

/// Every 3x3 minor nonzero.
bool is_uniform(const IntMatrix& c);

} // namespace hkdisc
