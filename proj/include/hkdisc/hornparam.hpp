#pragma once
#include "hkdisc/intmatrix.hpp"
#include "hkdisc/numeric.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace hkdisc {

/// Multiplicative torus translate: coordinatewise scaling by nonzero rationals.
class TorusTranslate {
public:
  explicit TorusTranslate(std::vector<Rat> lambda);
  static TorusTranslate identity(std::size_t m);
  const std::vector<Rat>& values() const { return lambda_; }
  bool is_identity() const;

private:
  std::vector<Rat> lambda_;
};

/// A validated regular matrix C together with the data of its rational
/// parametrization y_k = prod_i l_i(u)^{c_ik} = f_k / f_0.
class ParamSpec {
public:
  /// Validates C (regular, no zero rows, n >= m >= 2), builds the numerator
  /// exponent table and removes any linear factor common to f_0..f_m.
  static ParamSpec build(const IntMatrix& c);

  const IntMatrix& matrix() const { return c_; }
  std::size_t n() const { return c_.rows(); }
  std::size_t m() const { return c_.cols(); }
  /// exps[k][i] is the exponent of l_i in f_k, k = 0..m.
  const std::vector<std::vector<long>>& numer_exps() const { return exps_; }
  /// Per-form exponent removed as a common factor of all f_k.
  const std::vector<long>& removed_factor() const { return removed_; }
  long degree() const { return degree_; }
  /// Exponent entries of C as machine integers.
  long entry(std::size_t i, std::size_t k) const { return entries_[i][k]; }

  /// l_i(u) for every form.
  std::vector<Rat> forms_at(std::span<const Rat> u) const;

private:
  IntMatrix c_;
  std::vector<std::vector<long>> entries_;
  std::vector<std::vector<long>> exps_;
  std::vector<long> removed_;
  long degree_ = 0;
};

struct MergedRows {
  IntMatrix matrix;
  TorusTranslate lambda;
};

/// Replace rows lying on a common line through the origin by their sum (zero
/// sums are dropped). psi_C = lambda * psi_{C'} as rational maps.
MergedRows merge_proportional_rows(const IntMatrix& c);

/// Exact psi_C(u), optionally translated. Throws DomainError("point on
/// arrangement ...") when some l_i(u) = 0.
std::vector<Rat> evaluate_psi(const ParamSpec& spec, std::span<const Rat> u,
                              const std::optional<TorusTranslate>& lambda = std::nullopt);

using RatMatrix = std::vector<std::vector<Rat>>;

/// J_jk = sum_i c_ij c_ik / l_i(u). Symmetric and annihilates u; both are
/// checked on every call.
RatMatrix log_jacobian(const ParamSpec& spec, std::span<const Rat> u);

std::size_t rational_rank(RatMatrix a);

enum class DefectVerdict { NonDefective, ProbablyDefective };
const char* to_string(DefectVerdict v);

inline constexpr int kDefaultTrials = 5;

/// Probabilistic defectiveness test on the generic rank of the log-Jacobian.
DefectVerdict defect_test(const ParamSpec& spec, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Seeded source of sample points u with integer coordinates in [-10^4, 10^4].
class PointSampler {
public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  std::vector<Rat> any_point(std::size_t dim);
  /// Resamples until no linear form of `spec` vanishes.
  std::vector<Rat> off_arrangement(const ParamSpec& spec);
  long integer(long lo, long hi);

private:
  std::mt19937_64 rng_;
};

} // namespace hkdisc
