#pragma once
#include "hkdisc/mpoly.hpp"

#include <random>
#include <string>

namespace testing_support {

using hkdisc::Exponent;
using hkdisc::Int;
using hkdisc::MPoly;

/// Terse polynomial literal: {{coeff, {e1, e2, ...}}, ...}.
inline MPoly poly(std::size_t nvars, std::initializer_list<std::pair<long, Exponent>> terms) {
  MPoly p(nvars);
  for (const auto& [c, e] : terms) p.add_term(e, Int(c));
  return p;
}

inline MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, long max_deg, int max_terms, long coeff = 9) {
  std::uniform_int_distribution<long> deg(0, max_deg), cf(-coeff, coeff);
  std::uniform_int_distribution<int> count(1, max_terms);
  MPoly p(nvars);
  for (int t = count(rng); t > 0; --t) {
    Exponent e(nvars);
    for (auto& x : e) x = deg(rng);
    p.add_term(e, Int(cf(rng)));
  }
  return p;
}

inline long rand_in(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

} // namespace testing_support
