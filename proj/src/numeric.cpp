#include "hkdisc/numeric.hpp"

#include "hkdisc/error.hpp"

namespace hkdisc {

Int pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rat pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Int num = pow(Int(base.get_num()), e);
  Int den = pow(Int(base.get_den()), e);
  if (exp < 0) {
    if (num == 0) throw DomainError("division by zero in rational power");
    std::swap(num, den);
  }
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int floor_div(const Int& a, const Int& b) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

long to_long(const Int& value, const char* what) {
  if (!value.fits_slong_p())
    throw DomainError(std::string(what) + " does not fit a machine integer");
  return value.get_si();
}

Rat parse_rat(const std::string& text) {
  Rat out;
  if (text.empty() || out.set_str(text, 10) != 0)
    throw ParseError("not a rational number: '" + text + "'");
  if (out.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  out.canonicalize();
  return out;
}

std::string to_string(const Int& value) { return value.get_str(10); }

std::string to_string(const Rat& value) { return value.get_str(10); }

} // namespace hkdisc
