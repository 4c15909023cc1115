#include "hkdisc/mpoly.hpp"

#include "hkdisc/error.hpp"
#include "hkdisc/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hkdisc {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

MPoly MPoly::constant(std::size_t nvars, const Int& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(Int(1), std::move(e));
}

MPoly MPoly::monomial(const Int& c, Exponent e) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
}

bool MPoly::is_laurent() const {
  for (const auto& [e, c] : terms_)
    for (long x : e)
      if (x < 0) return true;
  return false;
}

const Exponent& MPoly::lead_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Int& MPoly::lead_coeff() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Int MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

long MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0L);
}

long MPoly::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Exponent MPoly::min_exponents() const {
  Exponent m;
  for (const auto& [e, c] : terms_) {
    if (m.empty()) {
      m = e;
      continue;
    }
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  }
  if (m.empty()) m.assign(nvars_, 0);
  return m;
}

void MPoly::add_term(const Exponent& e, const Int& c) {
  if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw DomainError("polynomials live in rings of different dimension");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.nvars_);
  Exponent e(a.nvars_);
  Int prod;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(e, prod);
    }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::shifted(const Exponent& shift) const {
  if (shift.size() != nvars_) throw DomainError("shift length does not match variable count");
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly result = constant(nvars_, Int(1));
  MPoly base = *this;
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t var) const {
  long deg = degree_in(var);
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(deg + 1, 0L)), MPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    if (e[var] < 0) throw DomainError("negative exponent in elimination variable");
    Exponent f = e;
    f[var] = 0;
    out[static_cast<std::size_t>(e[var])].terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::from_coeffs(std::size_t nvars, std::size_t var, const std::vector<MPoly>& coeffs) {
  MPoly out(nvars);
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    for (const auto& [e, c] : coeffs[d].terms_) {
      Exponent f = e;
      f[var] += static_cast<long>(d);
      out.add_term(f, c);
    }
  return out;
}

MPoly MPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw DomainError("cannot shrink a ring by extension");
  MPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(nvars, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::without_variable(std::size_t var) const {
  MPoly out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) throw DomainError("variable still occurs; cannot drop it");
    Exponent f;
    f.reserve(nvars_ - 1);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != var) f.push_back(e[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::permuted(const std::vector<std::size_t>& perm, std::size_t nvars) const {
  if (perm.size() != nvars_) throw DomainError("permutation length mismatch");
  MPoly out(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f.at(perm[i]) += e[i];
    out.add_term(f, c);
  }
  return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto vars = names.empty() ? default_var_names(nvars_) : names;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
    Int mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (mag != 1 || unit) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << (wrote ? "*" : "") << vars[i];
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

MonoMap::MonoMap(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw DomainError("monomial map matrix must be square");
  if (determinant(matrix_) == 0) throw DomainError("monomial map matrix must have nonzero determinant");
}

ContentPrimitive content_primitive(const MPoly& p) {
  if (p.is_zero()) throw DomainError("zero input");
  Int g(0);
  for (const auto& [e, c] : p.terms()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  ContentPrimitive out;
  out.sign = p.lead_coeff() < 0 ? -1 : 1;
  out.content = g;
  MPoly prim(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (out.sign < 0) q = -q;
    prim.add_term(e, q);
  }
  out.primitive = std::move(prim);
  return out;
}

MPoly normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  return content_primitive(p).primitive;
}

MPoly strip_monomial(const MPoly& p, Exponent* removed) {
  Exponent m = p.min_exponents();
  if (removed) *removed = m;
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

MPoly partial_derivative(const MPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError("derivative variable out of range");
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

namespace {

bool monomial_divides(const Exponent& d, const Exponent& n, bool laurent) {
  if (laurent) return true;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > n[i]) return false;
  return true;
}

// Division by the leading term of `den` until the remainder vanishes. Returns
// false as soon as a leading term is not divisible.
bool try_exact_divide(const MPoly& num, const MPoly& den, MPoly& quot) {
  if (den.is_zero()) throw DomainError("division by zero polynomial");
  quot = MPoly(num.nvars());
  if (num.is_zero()) return true;
  bool laurent = num.is_laurent() || den.is_laurent();
  const Exponent& de = den.lead_exponent();
  const Int& dc = den.lead_coeff();
  MPoly rem = num;
  Exponent qe(num.nvars());
  Int qc, r;
  while (!rem.is_zero()) {
    const Exponent& re = rem.lead_exponent();
    if (!monomial_divides(de, re, laurent)) return false;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.lead_coeff().get_mpz_t(), dc.get_mpz_t());
    if (r != 0) return false;
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = re[i] - de[i];
    // A leading term that cannot be cancelled means `den` does not divide.
    if (!laurent) {
      for (long x : qe)
        if (x < 0) return false;
    }
    quot.add_term(qe, qc);
    for (const auto& [e, c] : den.terms()) {
      Exponent f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += qe[i];
      rem.add_term(f, -(qc * c));
    }
  }
  return true;
}

} // namespace

MPoly exact_divide(const MPoly& num, const MPoly& den) {
  MPoly q;
  if (!try_exact_divide(num, den, q)) throw DomainError("polynomial division is not exact");
  return q;
}

bool divides(const MPoly& den, const MPoly& num) {
  MPoly q;
  return try_exact_divide(num, den, q);
}

namespace {

long highest_variable(const MPoly& p) {
  for (std::size_t v = p.nvars(); v-- > 0;)
    if (p.degree_in(v) > 0) return static_cast<long>(v);
  return -1;
}

Int integer_content(const MPoly& p) {
  Int g(0);
  for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  return g;
}

MPoly content_in(const MPoly& p, std::size_t var) {
  MPoly g(p.nvars());
  for (const auto& c : p.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && g.lead_coeff() == 1) break;
  }
  return g;
}

// a - (lc(a)/lc(b)) x^k b, scaled to stay integral: prem with respect to `var`.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  long db = b.degree_in(var);
  auto bc = b.coeffs_in(var);
  const MPoly& lcb = bc.back();
  MPoly r = a;
  long dr = r.degree_in(var);
  while (!r.is_zero() && dr >= db) {
    MPoly lcr = r.coeffs_in(var).back();
    Exponent shift(a.nvars(), 0);
    shift[var] = dr - db;
    r = lcb * r - (lcr * b).shifted(shift);
    dr = r.degree_in(var);
  }
  return r;
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("gcd of polynomials in different rings");
  if (a.is_laurent() || b.is_laurent()) throw DomainError("gcd requires honest polynomials");
  if (a.is_zero()) return b.is_zero() ? b : (b.lead_coeff() < 0 ? -b : b);
  if (b.is_zero()) return a.lead_coeff() < 0 ? -a : a;
  long va = highest_variable(a);
  long vb = highest_variable(b);
  long v = std::max(va, vb);
  if (v < 0) return MPoly::constant(a.nvars(), gcd(integer_content(a), integer_content(b)));
  auto var = static_cast<std::size_t>(v);
  if (va < v) return gcd(a, content_in(b, var));
  if (vb < v) return gcd(content_in(a, var), b);

  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly g_content = gcd(ca, cb);
  MPoly pa = exact_divide(a, ca);
  MPoly pb = exact_divide(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    MPoly r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) <= 0) {
      pb = MPoly::constant(a.nvars(), Int(1));
      break;
    }
    pa = std::move(pb);
    pb = exact_divide(r, content_in(r, var));
  }
  MPoly out = g_content * normalize(pb);
  return out.lead_coeff() < 0 ? -out : out;
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_zero()) throw DomainError("zero input");
  if (p.is_laurent()) throw DomainError("square-free part requires an honest polynomial");
  long v = highest_variable(p);
  if (v < 0) return MPoly::constant(p.nvars(), Int(1));
  auto var = static_cast<std::size_t>(v);
  MPoly c = content_in(p, var);
  MPoly q = exact_divide(p, c);
  MPoly g = gcd(q, partial_derivative(q, var));
  MPoly s = exact_divide(q, g);
  return normalize(squarefree_part(c) * s);
}

MPoly sylvester_resultant(const MPoly& p, const MPoly& q, std::size_t var) {
  if (p.nvars() != q.nvars()) throw DomainError("resultant of polynomials in different rings");
  if (var >= p.nvars()) throw DomainError("elimination variable out of range");
  long dp = p.degree_in(var);
  long dq = q.degree_in(var);
  if (dp <= 0 || dq <= 0) throw DomainError("nothing to eliminate");
  auto pc = p.coeffs_in(var);
  auto qc = q.coeffs_in(var);
  auto m = static_cast<std::size_t>(dp);
  auto n = static_cast<std::size_t>(dq);
  std::size_t size = m + n;
  const std::size_t nv = p.nvars();
  std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size, MPoly(nv)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];

  // Fraction-free (Bareiss) elimination; each division is exact.
  int sign = 1;
  MPoly prev = MPoly::constant(nv, Int(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < size && s[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == size) return MPoly(nv);
      std::swap(s[k], s[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        MPoly t = s[k][k] * s[i][j];
        if (!s[i][k].is_zero() && !s[k][j].is_zero()) t -= s[i][k] * s[k][j];
        s[i][j] = exact_divide(t, prev);
      }
      s[i][k] = MPoly(nv);
    }
    prev = s[k][k];
  }
  MPoly det = s[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

MPoly substitute_columns(const MPoly& p, const IntMatrix& b) {
  if (b.cols() != p.nvars()) throw DomainError("substitution matrix has wrong number of columns");
  std::vector<std::vector<long>> cols(b.cols(), std::vector<long>(b.rows()));
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) cols[j][i] = to_long(b(i, j), "monomial map entry");
  MPoly out(b.rows());
  for (const auto& [e, c] : p.terms()) {
    Exponent f(b.rows(), 0);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0)
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += e[j] * cols[j][i];
    out.add_term(f, c);
  }
  return out;
}

MPoly substitute_monomial(const MPoly& p, const MonoMap& map) {
  return substitute_columns(p, map.matrix());
}

Rat evaluate(const MPoly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars()) throw DomainError("evaluation point has wrong dimension");
  Rat total(0);
  for (const auto& [e, c] : p.terms()) {
    Rat term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) throw DomainError("pole: zero coordinate under a negative exponent");
      term *= pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

} // namespace hkdisc
