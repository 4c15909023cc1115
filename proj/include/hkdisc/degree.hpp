#pragma once
#include "hkdisc/arrangement.hpp"

#include <cstdint>

namespace hkdisc {

struct DegreeReport {
  struct Entry {
    BasePoint point;
    long multiplicity = 0;
  };
  long d = 0;             ///< common degree of f_0..f_3
  long deg_psi = 1;       ///< the parametrization is birational
  std::vector<Entry> points;
  long degree = 0;        ///< d^2 - sum of multiplicities
};

/// Degree of the discriminant surface for a uniform n x 3 matrix from the
/// base-point multiplicities. Throws DomainError for non-uniform or
/// defective input.
DegreeReport degree_uniform(const IntMatrix& c, std::uint64_t seed = 0, int trials = kDefaultTrials);

} // namespace hkdisc
