#pragma once
#include "hkdisc/intmatrix.hpp"

#include <optional>
#include <vector>

namespace hkdisc {

/// Determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Column-style Hermite normal form of the lattice spanned by the columns:
/// lower echelon, positive pivots, entries left of a pivot reduced into
/// [0, pivot). Zero columns are dropped, so the result has rank-many columns.
IntMatrix column_hermite_form(const IntMatrix& m);

/// Saturated Z-basis of {x in Z^n : A x = 0} as columns, canonicalized by
/// column Hermite form. Trivial kernel gives an n x 0 matrix.
IntMatrix kernel_basis(const IntMatrix& a);

/// gcd of all maximal minors; 0 iff the matrix is rank deficient.
Int gcd_maximal_minors(const IntMatrix& c);

struct SNFDecomposition {
  IntMatrix u;  ///< rows x rows, unimodular
  IntMatrix d;  ///< rows x cols, diagonal
  IntMatrix v;  ///< cols x cols, unimodular
  std::vector<Int> invariant_factors;
};

/// M = U * D * V with d_1 | d_2 | ... and d_i >= 0. Accepts rectangular
/// input; the pivot rule (smallest magnitude, then row-major position) is
/// fixed, so the decomposition is deterministic.
SNFDecomposition smith_normal_form(const IntMatrix& m);

/// M * adj(M) == det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

/// LLL reduction (delta = 3/4) of the columns, exact rational Gram-Schmidt.
/// Throws DomainError("rank deficient") on dependent columns.
IntMatrix lll_reduce(const IntMatrix& b);

/// x with M x = v when v lies in the column lattice of M, nullopt otherwise.
/// Throws DomainError on singular M.
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& m, const std::vector<Int>& v);

/// Same column lattice (compared through Hermite forms).
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

Int max_norm(const IntMatrix& m);

/// Divide by the gcd and make the first nonzero entry positive.
std::vector<Int> primitive_direction(const std::vector<Int>& v);

} // namespace hkdisc
