#pragma once
#include "hkdisc/hornparam.hpp"
#include "hkdisc/lattice.hpp"
#include "hkdisc/mpoly.hpp"

#include <cstdint>
#include <vector>

namespace hkdisc {

/// Kernel of the monomial map y -> y^M on the torus: a finite abelian group
/// of order |det M| whose structure is read off the Smith form.
struct GroupSpec {
  IntMatrix m;
  SNFDecomposition snf;
  Int order;

  explicit GroupSpec(IntMatrix matrix);
};

/// Implicit equation of the image of psi_C for m = 2, by eliminating the
/// parameter from the per-coordinate pencils den_k * y_k - num_k with a
/// Sylvester resultant. The result is primitive with positive leading
/// coefficient and is validated on exact sample points of the image.
MPoly implicitize_m2(const ParamSpec& spec, std::uint64_t seed = 0);

/// (y_1 dD/dy_1 : ... : y_m dD/dy_m) at y.
std::vector<Rat> gauss_map(const MPoly& delta, std::span<const Rat> y);

/// At `trials` seeded points u, checks that gauss_map(delta, psi(u)) is
/// proportional to u.
bool gauss_inverse_check(const ParamSpec& spec, const MPoly& delta, int trials = 20, std::uint64_t seed = 0);

/// M * u.
std::vector<Rat> lambda_map(const IntMatrix& m, std::span<const Rat> u);

/// y -> (y^{M^(1)}, ..., y^{M^(m)}) on rational points.
std::vector<Rat> alpha_map(const IntMatrix& m, std::span<const Rat> y);

/// psi_{C1}(u) == alpha_M(psi_{C2}(M u)) at seeded points. Requires C1 == C2 * M.
bool diagram_check(const IntMatrix& c1, const IntMatrix& c2, const IntMatrix& m, int trials = 20,
                   std::uint64_t seed = 0);

/// prod over epsilon in ker(alpha_M) of f(epsilon * y), computed through the
/// Smith form with resultants against t^d - y_k^d (no roots of unity needed).
MPoly group_product(const MPoly& f, const IntMatrix& m);

struct TransferResult {
  MPoly delta;          ///< discriminant for C2 * M, primitive, leading coefficient positive
  std::vector<Int> v;   ///< delta(alpha_M(y)) == sign * y^v * group_product(input, M)
  int sign = 1;
};

/// Discriminant of C2 * M from the discriminant of C2.
TransferResult transfer(const MPoly& delta_c2, const IntMatrix& m);

/// Substitute y_j -> x^{B^(j)}, clear the monomial denominator and make the
/// result primitive: the homogeneous discriminant in n variables.
MPoly homogenize_to_DA(const MPoly& delta, const IntMatrix& b);

} // namespace hkdisc
