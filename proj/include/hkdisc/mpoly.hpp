#pragma once
#include "hkdisc/intmatrix.hpp"
#include "hkdisc/numeric.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hkdisc {

using Exponent = std::vector<long>;

/// Graded-lexicographic order with y1 < y2 < ... ; `operator()` is "greater",
/// so maps keyed by it iterate from the leading term down.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with integer coefficients. Exponents may be
/// negative, in which case the value is a Laurent polynomial (`is_laurent()`).
/// Terms never carry zero coefficients.
class MPoly {
public:
  using Terms = std::map<Exponent, Int, GradedLexGreater>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Int& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(const Int& c, Exponent e);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_laurent() const;

  const Exponent& lead_exponent() const;
  const Int& lead_coeff() const;
  /// Coefficient of x^e, zero when absent.
  Int coeff(const Exponent& e) const;

  long total_degree() const;
  /// Largest exponent of `var`, or -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  /// Componentwise minimum exponent over the support.
  Exponent min_exponents() const;

  void add_term(const Exponent& e, const Int& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Int& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Int& c) { return a *= c; }
  friend MPoly operator*(const Int& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  /// Multiply by the monomial x^shift (shift entries may be negative).
  MPoly shifted(const Exponent& shift) const;
  MPoly pow(unsigned long e) const;

  /// Coefficients with respect to `var`: result[d] has no `var` in it.
  /// Requires nonnegative exponents in `var`.
  std::vector<MPoly> coeffs_in(std::size_t var) const;
  static MPoly from_coeffs(std::size_t nvars, std::size_t var, const std::vector<MPoly>& coeffs);

  /// Same polynomial in a ring with extra trailing variables.
  MPoly extended(std::size_t nvars) const;
  /// Remove variable `var`; it must not occur.
  MPoly without_variable(std::size_t var) const;
  /// Rename variables: variable i goes to slot perm[i] of a ring with `nvars` variables.
  MPoly permuted(const std::vector<std::size_t>& perm, std::size_t nvars) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  void check_compatible(const MPoly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem = "y");

/// Square integer matrix with nonzero determinant, acting on Laurent
/// monomials by y_j -> y^{column j}.
class MonoMap {
public:
  explicit MonoMap(IntMatrix matrix);
  const IntMatrix& matrix() const { return matrix_; }

private:
  IntMatrix matrix_;
};

struct ContentPrimitive {
  Int content;  ///< positive
  int sign = 1; ///< p == sign * content * primitive
  MPoly primitive;
};

/// Integer content and sign-normalized primitive part. Throws on zero input.
ContentPrimitive content_primitive(const MPoly& p);

/// Primitive and leading coefficient positive; zero stays zero.
MPoly normalize(const MPoly& p);

/// Divide out the largest monomial dividing every term (Laurent input becomes
/// an honest polynomial). Returns the removed exponent through `removed`.
MPoly strip_monomial(const MPoly& p, Exponent* removed = nullptr);

MPoly partial_derivative(const MPoly& p, std::size_t var);

/// Quotient when `den` divides `num` exactly in Z[y] (or the Laurent ring when
/// either side is Laurent); throws DomainError otherwise.
MPoly exact_divide(const MPoly& num, const MPoly& den);
bool divides(const MPoly& den, const MPoly& num);

/// Greatest common divisor in Z[y], primitive with positive leading coefficient
/// times the integer gcd of the contents.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Remove repeated factors; result is primitive and sign-normalized.
MPoly squarefree_part(const MPoly& p);

/// Determinant of the Sylvester matrix of p and q with respect to `var`.
/// The result lives in the same ring and does not involve `var`.
MPoly sylvester_resultant(const MPoly& p, const MPoly& q, std::size_t var);

/// p(y^{M^(1)}, ..., y^{M^(m)}).
MPoly substitute_monomial(const MPoly& p, const MonoMap& map);

/// Substitute y_j -> x^{B^(j)} for an n x m integer matrix B; result has n variables.
MPoly substitute_columns(const MPoly& p, const IntMatrix& b);

/// Exact value at a rational point; throws DomainError("pole") when a
/// negative exponent meets a zero coordinate.
Rat evaluate(const MPoly& p, std::span<const Rat> point);

} // namespace hkdisc
