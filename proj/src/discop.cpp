#include "hkdisc/discop.hpp"

#include "hkdisc/error.hpp"

#include <algorithm>

namespace hkdisc {

GroupSpec::GroupSpec(IntMatrix matrix) : m(std::move(matrix)), snf(smith_normal_form(m)) {
  if (m.rows() != m.cols()) throw DomainError("group needs a square matrix");
  order = abs(determinant(m));
  if (order == 0) throw DomainError("singular matrix: the kernel of the monomial map is infinite");
}

namespace {

// Ring (t, y_1, y_2): the kept parameter t and the two image coordinates.
// keep_u: dehomogenize at v = 1, otherwise at u = 1.
MPoly pencil(const ParamSpec& spec, std::size_t k, bool keep_u) {
  const auto& c = spec.matrix();
  MPoly num = MPoly::constant(3, 1), den = MPoly::constant(3, 1);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const Int& a = c(i, 0);
    const Int& b = c(i, 1);
    MPoly form(3);
    if (keep_u) {
      form.add_term({1, 0, 0}, a);
      form.add_term({0, 0, 0}, b);
    } else {
      form.add_term({0, 0, 0}, a);
      form.add_term({1, 0, 0}, b);
    }
    long e = spec.entry(i, k);
    if (e > 0) num = num * form.pow(static_cast<unsigned long>(e));
    if (e < 0) den = den * form.pow(static_cast<unsigned long>(-e));
  }
  return den * MPoly::variable(3, k + 1) - num;
}

// Resultant in t, cleaned: monomial factors and content removed. Empty when
// this chart has nothing to eliminate.
std::optional<MPoly> chart_resultant(const ParamSpec& spec, bool keep_u) {
  auto g1 = pencil(spec, 0, keep_u);
  auto g2 = pencil(spec, 1, keep_u);
  if (g1.degree_in(0) <= 0 || g2.degree_in(0) <= 0) return std::nullopt;
  auto r = sylvester_resultant(g1, g2, 0).without_variable(0);
  if (r.is_zero() || r.is_constant()) return std::nullopt;
  return normalize(strip_monomial(r));
}

bool vanishes_on_image(const ParamSpec& spec, const MPoly& p, std::uint64_t seed, int samples) {
  PointSampler sampler(seed);
  for (int s = 0; s < samples; ++s) {
    auto y = evaluate_psi(spec, sampler.off_arrangement(spec));
    if (evaluate(p, y) != 0) return false;
  }
  return true;
}

bool is_power_of(const MPoly& r, const MPoly& base) {
  long db = base.total_degree();
  if (db <= 0 || r.total_degree() % db != 0) return false;
  return normalize(base.pow(static_cast<unsigned long>(r.total_degree() / db))) == normalize(r);
}

constexpr int kValidationSamples = 12;

} // namespace

MPoly implicitize_m2(const ParamSpec& spec, std::uint64_t seed) {
  if (spec.m() != 2) throw DomainError("unsupported dimension: implicitization needs m = 2");
  if (defect_test(spec, kDefaultTrials, seed) != DefectVerdict::NonDefective)
    throw DomainError("defective configuration: the image is not a hypersurface");

  auto primary = chart_resultant(spec, true);
  if (primary) {
    auto candidate = squarefree_part(*primary);
    if (is_power_of(*primary, candidate) && vanishes_on_image(spec, candidate, seed, kValidationSamples))
      return candidate;
  }
  // The v = 1 chart can pick up spurious factors (or lose the parameter
  // entirely); intersect with the u = 1 chart.
  auto other = chart_resultant(spec, false);
  std::optional<MPoly> candidate;
  if (primary && other) candidate = normalize(gcd(squarefree_part(*primary), squarefree_part(*other)));
  else if (other) candidate = squarefree_part(*other);
  if (candidate && !candidate->is_constant() && vanishes_on_image(spec, *candidate, seed, kValidationSamples))
    return *candidate;
  throw DomainError("implicitization validation failed");
}

std::vector<Rat> gauss_map(const MPoly& delta, std::span<const Rat> y) {
  if (y.size() != delta.nvars()) throw DomainError("point dimension does not match the polynomial");
  std::vector<Rat> out;
  bool any = false;
  for (std::size_t k = 0; k < y.size(); ++k) {
    out.push_back(y[k] * evaluate(partial_derivative(delta, k), y));
    any = any || out.back() != 0;
  }
  if (!any) throw DomainError("Gauss map undefined here: all partial derivatives vanish");
  return out;
}

bool gauss_inverse_check(const ParamSpec& spec, const MPoly& delta, int trials, std::uint64_t seed) {
  if (delta.nvars() != spec.m()) throw DomainError("polynomial has the wrong number of variables");
  PointSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    auto u = sampler.off_arrangement(spec);
    auto y = evaluate_psi(spec, u);
    std::vector<Rat> g;
    try {
      g = gauss_map(delta, y);
    } catch (const DomainError&) {
      return false;
    }
    for (std::size_t j = 0; j < u.size(); ++j)
      for (std::size_t k = j + 1; k < u.size(); ++k)
        if (g[j] * u[k] != g[k] * u[j]) return false;
  }
  return true;
}

std::vector<Rat> lambda_map(const IntMatrix& m, std::span<const Rat> u) {
  if (u.size() != m.cols()) throw DomainError("dimension mismatch in linear map");
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += Rat(m(i, j)) * u[j];
  return out;
}

std::vector<Rat> alpha_map(const IntMatrix& m, std::span<const Rat> y) {
  if (y.size() != m.rows()) throw DomainError("dimension mismatch in monomial map");
  std::vector<Rat> out;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Rat v = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) v *= pow(y[i], to_long(m(i, k), "monomial exponent"));
    out.push_back(v);
  }
  return out;
}

bool diagram_check(const IntMatrix& c1, const IntMatrix& c2, const IntMatrix& m, int trials,
                   std::uint64_t seed) {
  if (m.rows() != m.cols() || c2.cols() != m.rows() || c1 != c2 * m)
    throw DomainError("matrix relation violated: need C1 = C2 * M");
  if (determinant(m) == 0) throw DomainError("singular matrix");
  auto s1 = ParamSpec::build(c1);
  auto s2 = ParamSpec::build(c2);
  PointSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    auto u = sampler.off_arrangement(s1);
    auto lhs = evaluate_psi(s1, u);
    auto rhs = alpha_map(m, evaluate_psi(s2, lambda_map(m, u)));
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

// prod over w^d = 1 of h(..., w z_k, ...), by a resultant against t^d - z_k^d.
MPoly root_product(const MPoly& h, std::size_t k, unsigned long d) {
  const std::size_t m = h.nvars();
  Exponent shift = h.min_exponents();
  MPoly h0 = h.shifted([&] {
    Exponent neg(shift);
    for (auto& e : neg) e = -e;
    return neg;
  }());

  MPoly prod;
  if (h0.degree_in(k) <= 0) {
    prod = h0.pow(d);
  } else {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    perm[k] = m; // z_k -> t
    MPoly b = h0.permuted(perm, m + 1);
    Exponent td(m + 1, 0), zd(m + 1, 0);
    td[m] = static_cast<long>(d);
    zd[k] = static_cast<long>(d);
    MPoly a = MPoly::monomial(1, td) - MPoly::monomial(1, zd);
    prod = sylvester_resultant(a, b, m).without_variable(m);
  }
  // prod over the roots of w^{shift_k} is ((-1)^{d+1})^{shift_k}.
  Exponent back(shift);
  for (auto& e : back) e *= static_cast<long>(d);
  prod = prod.shifted(back);
  if (d % 2 == 0 && shift[k] % 2 != 0) prod = -prod;
  return prod;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  Int det = determinant(u);
  auto adj = adjugate(u);
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) out(i, j) = adj(i, j) * det;
  return out;
}

} // namespace

MPoly group_product(const MPoly& f, const IntMatrix& m) {
  GroupSpec g(m);
  if (f.nvars() != m.rows()) throw DomainError("polynomial has the wrong number of variables");
  if (f.is_zero()) return f;
  // ker alpha_M = alpha_{U^-1}(ker alpha_D), so with h = f o alpha_{U^-1}
  // the product is Q(alpha_U(y)), Q(z) = prod over eta in ker alpha_D of h(eta z).
  const auto& u = g.snf.u;
  MPoly h = substitute_monomial(f, MonoMap(unimodular_inverse(u)));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    auto d = static_cast<unsigned long>(to_long(g.snf.d(k, k), "invariant factor"));
    if (d > 1) h = root_product(h, k, d);
  }
  return substitute_monomial(h, MonoMap(u));
}

TransferResult transfer(const MPoly& delta_c2, const IntMatrix& m) {
  if (m.rows() != m.cols() || delta_c2.nvars() != m.rows())
    throw DomainError("transfer needs a square matrix matching the polynomial");
  const Int det = determinant(m);
  if (det == 0) throw DomainError("singular matrix");
  if (delta_c2.is_zero() || delta_c2.is_laurent() || content_primitive(delta_c2).content != 1)
    throw DomainError("transfer expects a primitive polynomial");

  const auto p = group_product(delta_c2, m);
  // alpha_M o alpha_adj(M) is z -> z^det, so p o alpha_adj(M) is the new
  // discriminant evaluated at z^det, up to a monomial.
  const auto q = substitute_monomial(p, MonoMap(adjugate(m)));
  const long g = to_long(det, "determinant");
  MPoly scaled(q.nvars());
  for (const auto& [e, c] : q.terms()) {
    Exponent r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % g != 0) throw DomainError("transfer consistency failure: exponent not divisible by det M");
      r[i] = e[i] / g;
    }
    scaled.add_term(r, c);
  }
  TransferResult out;
  out.delta = normalize(strip_monomial(scaled));

  const auto lhs = substitute_monomial(out.delta, MonoMap(m));
  const auto& le = lhs.lead_exponent();
  const auto& pe = p.lead_exponent();
  Exponent v(le.size());
  for (std::size_t i = 0; i < le.size(); ++i) v[i] = le[i] - pe[i];
  // Graded order is shift invariant, so leading terms correspond.
  out.sign = sgn(lhs.lead_coeff()) == sgn(p.lead_coeff()) ? 1 : -1;
  MPoly expected = p.shifted(v);
  if (out.sign < 0) expected = -expected;
  if (expected != lhs) throw DomainError("transfer consistency failure: identity does not hold");
  for (long x : v) out.v.emplace_back(x);
  if (!solve_in_lattice(m, out.v)) throw DomainError("transfer consistency failure: exponent shift outside ZM");
  return out;
}

MPoly homogenize_to_DA(const MPoly& delta, const IntMatrix& b) {
  if (b.cols() != delta.nvars()) throw DomainError("matrix columns must match the polynomial variables");
  if (rank(b) != b.cols()) throw DomainError("matrix must have full column rank");
  return normalize(strip_monomial(substitute_columns(delta, b)));
}

} // namespace hkdisc
