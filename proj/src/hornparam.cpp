#include "hkdisc/hornparam.hpp"

#include "hkdisc/error.hpp"
#include "hkdisc/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hkdisc {

TorusTranslate::TorusTranslate(std::vector<Rat> lambda) : lambda_(std::move(lambda)) {
  for (const auto& x : lambda_)
    if (x == 0) throw DomainError("torus translate must have nonzero coordinates");
}

TorusTranslate TorusTranslate::identity(std::size_t m) { return TorusTranslate(std::vector<Rat>(m, Rat(1))); }

bool TorusTranslate::is_identity() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](const Rat& x) { return x == 1; });
}

ParamSpec ParamSpec::build(const IntMatrix& c) {
  const std::size_t n = c.rows(), m = c.cols();
  if (m < 2 || n < m) throw DomainError("matrix must satisfy n >= m >= 2");
  for (std::size_t k = 0; k < m; ++k) {
    Int s(0);
    for (std::size_t i = 0; i < n; ++i) s += c(i, k);
    if (s != 0) throw DomainError("not regular: column " + std::to_string(k + 1) + " does not sum to zero");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t k = 0; k < m; ++k) zero = zero && c(i, k) == 0;
    if (zero) throw DomainError("zero row: row " + std::to_string(i + 1));
  }

  ParamSpec spec;
  spec.c_ = c;
  spec.entries_.assign(n, std::vector<long>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) spec.entries_[i][k] = to_long(c(i, k), "matrix entry");

  spec.exps_.assign(m + 1, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    long lo = 0;
    for (long x : spec.entries_[i]) lo = std::min(lo, x);
    spec.exps_[0][i] = -lo;
    for (std::size_t k = 0; k < m; ++k) spec.exps_[k + 1][i] = spec.entries_[i][k] - lo;
  }
  spec.removed_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long common = spec.exps_[0][i];
    for (std::size_t k = 1; k <= m; ++k) common = std::min(common, spec.exps_[k][i]);
    spec.removed_[i] = common;
    for (std::size_t k = 0; k <= m; ++k) spec.exps_[k][i] -= common;
  }
  for (long e : spec.exps_[0]) spec.degree_ += e;
  return spec;
}

std::vector<Rat> ParamSpec::forms_at(std::span<const Rat> u) const {
  if (u.size() != m()) throw DomainError("parameter point has wrong dimension");
  std::vector<Rat> out(n(), Rat(0));
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t k = 0; k < m(); ++k)
      if (entries_[i][k] != 0) out[i] += Rat(entries_[i][k]) * u[k];
  return out;
}

MergedRows merge_proportional_rows(const IntMatrix& c) {
  const std::size_t m = c.cols();
  std::vector<std::vector<Int>> dirs;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    auto row = c.row(i);
    if (std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; }))
      throw DomainError("zero row: row " + std::to_string(i + 1));
    auto dir = primitive_direction(row);
    auto it = std::find(dirs.begin(), dirs.end(), dir);
    if (it == dirs.end()) {
      dirs.push_back(dir);
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - dirs.begin())].push_back(i);
    }
  }
  std::vector<Rat> lambda(m, Rat(1));
  std::vector<std::vector<Int>> rows;
  for (std::size_t g = 0; g < dirs.size(); ++g) {
    const auto& r = dirs[g];
    std::size_t lead = 0;
    while (r[lead] == 0) ++lead;
    Int s(0);
    std::vector<Int> scale;
    for (std::size_t i : members[g]) {
      scale.push_back(c(i, lead) / r[lead]);
      s += scale.back();
    }
    if (members[g].size() > 1 || s == 0) {
      // prod_i (a_i l)^{a_i r_k} = (prod_i a_i^{a_i r_k} / s^{s r_k}) (s l)^{s r_k}
      for (std::size_t k = 0; k < m; ++k) {
        if (r[k] == 0) continue;
        long rk = to_long(r[k], "matrix entry");
        for (const auto& a : scale) lambda[k] *= pow(Rat(a), to_long(a, "row multiple") * rk);
        if (s != 0) lambda[k] /= pow(Rat(s), to_long(s, "row multiple") * rk);
      }
    }
    if (s == 0) continue;
    std::vector<Int> merged(m);
    for (std::size_t k = 0; k < m; ++k) merged[k] = s * r[k];
    rows.push_back(std::move(merged));
  }
  return {IntMatrix::from_rows(rows, m), TorusTranslate(std::move(lambda))};
}

namespace {

std::string vanishing_message(const std::vector<Rat>& forms) {
  std::ostringstream os;
  os << "point on arrangement: vanishing forms";
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i] == 0) os << " l" << (i + 1);
  return os.str();
}

std::vector<Rat> nonvanishing_forms(const ParamSpec& spec, std::span<const Rat> u) {
  auto forms = spec.forms_at(u);
  for (const auto& f : forms)
    if (f == 0) throw DomainError(vanishing_message(forms));
  return forms;
}

} // namespace

std::vector<Rat> evaluate_psi(const ParamSpec& spec, std::span<const Rat> u,
                              const std::optional<TorusTranslate>& lambda) {
  auto forms = nonvanishing_forms(spec, u);
  std::vector<Rat> y(spec.m(), Rat(1));
  for (std::size_t k = 0; k < spec.m(); ++k) {
    for (std::size_t i = 0; i < spec.n(); ++i)
      if (spec.entry(i, k) != 0) y[k] *= pow(forms[i], spec.entry(i, k));
    if (lambda) y[k] *= lambda->values().at(k);
  }
  return y;
}

RatMatrix log_jacobian(const ParamSpec& spec, std::span<const Rat> u) {
  auto forms = nonvanishing_forms(spec, u);
  const std::size_t m = spec.m();
  RatMatrix j(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < spec.n(); ++i) {
    Rat inv = 1 / forms[i];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) j[a][b] += Rat(spec.entry(i, a) * spec.entry(i, b)) * inv;
  }
  for (std::size_t a = 0; a < m; ++a) {
    Rat euler(0);
    for (std::size_t b = 0; b < m; ++b) {
      if (j[a][b] != j[b][a]) throw std::logic_error("log-Jacobian is not symmetric");
      euler += j[a][b] * u[b];
    }
    if (euler != 0) throw std::logic_error("log-Jacobian does not annihilate u");
  }
  return j;
}

std::size_t rational_rank(RatMatrix a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

const char* to_string(DefectVerdict v) {
  return v == DefectVerdict::NonDefective ? "NonDefective" : "ProbablyDefective";
}

DefectVerdict defect_test(const ParamSpec& spec, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("defect test needs at least one trial");
  PointSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    auto u = sampler.off_arrangement(spec);
    if (rational_rank(log_jacobian(spec, u)) == spec.m() - 1) return DefectVerdict::NonDefective;
  }
  return DefectVerdict::ProbablyDefective;
}

long PointSampler::integer(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

std::vector<Rat> PointSampler::any_point(std::size_t dim) {
  std::vector<Rat> u;
  u.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) u.emplace_back(integer(-10000, 10000));
  return u;
}

std::vector<Rat> PointSampler::off_arrangement(const ParamSpec& spec) {
  while (true) {
    auto u = any_point(spec.m());
    auto forms = spec.forms_at(u);
    if (std::none_of(forms.begin(), forms.end(), [](const Rat& f) { return f == 0; })) return u;
  }
}

} // namespace hkdisc
