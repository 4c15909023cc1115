#include "hkdisc/lattice.hpp"

#include "hkdisc/error.hpp"

#include <algorithm>

namespace hkdisc {

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return Int(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int det = a(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int f = a(i, c), g = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

namespace {

struct Xgcd {
  Int g, s, t; // s*a + t*b == g >= 0
};

Xgcd xgcd(const Int& a, const Int& b) {
  Xgcd out;
  mpz_gcdext(out.g.get_mpz_t(), out.s.get_mpz_t(), out.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

void col_combine(IntMatrix& h, std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                 const Int& d) {
  // (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Int x = h(r, i), y = h(r, j);
    h(r, i) = a * x + b * y;
    h(r, j) = c * x + d * y;
  }
}

void col_swap(IntMatrix& h, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < h.rows(); ++r) std::swap(h(r, i), h(r, j));
}

void col_negate(IntMatrix& h, std::size_t i) {
  for (std::size_t r = 0; r < h.rows(); ++r) h(r, i) = -h(r, i);
}

void col_axpy(IntMatrix& h, std::size_t dst, const Int& f, std::size_t src) {
  for (std::size_t r = 0; r < h.rows(); ++r) h(r, dst) += f * h(r, src);
}

// Column Hermite reduction of h in place, mirroring every column operation on
// u. Returns the number of pivots; columns from there on are zero.
std::size_t hermite_in_place(IntMatrix& h, IntMatrix* u) {
  std::size_t pc = 0;
  for (std::size_t i = 0; i < h.rows() && pc < h.cols(); ++i) {
    for (std::size_t j = pc + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      if (h(i, pc) == 0) {
        col_swap(h, pc, j);
        if (u) col_swap(*u, pc, j);
        continue;
      }
      Int a = h(i, pc), b = h(i, j);
      auto [g, s, t] = xgcd(a, b);
      Int bg = b / g, ag = a / g;
      col_combine(h, pc, j, s, t, -bg, ag);
      if (u) col_combine(*u, pc, j, s, t, -bg, ag);
    }
    if (h(i, pc) == 0) continue;
    if (h(i, pc) < 0) {
      col_negate(h, pc);
      if (u) col_negate(*u, pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      Int q = floor_div(h(i, j), h(i, pc));
      if (q == 0) continue;
      col_axpy(h, j, -q, pc);
      if (u) col_axpy(*u, j, -q, pc);
    }
    ++pc;
  }
  return pc;
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

} // namespace

IntMatrix column_hermite_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = hermite_in_place(h, nullptr);
  return h.select_cols(iota(0, r));
}

IntMatrix kernel_basis(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.cols());
  std::size_t r = hermite_in_place(h, &u);
  IntMatrix k = u.select_cols(iota(r, a.cols()));
  if (k.cols() == 0) return k;
  return column_hermite_form(k);
}

Int gcd_maximal_minors(const IntMatrix& c) {
  const bool tall = c.rows() >= c.cols();
  const std::size_t n = tall ? c.rows() : c.cols();
  const std::size_t k = tall ? c.cols() : c.rows();
  if (k == 0) return Int(1);
  std::vector<std::size_t> pick = iota(0, k);
  Int g(0);
  while (true) {
    IntMatrix sub = tall ? c.select_rows(pick) : c.select_cols(pick);
    g = gcd(g, determinant(sub));
    if (g == 1) return g;
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

namespace {

// Elementary operations applied to D, with U and V updated so U * D * V
// stays equal to the input.
struct SnfWork {
  IntMatrix d, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    col_swap(u, i, j);
  }
  void col_swap_d(std::size_t i, std::size_t j) {
    col_swap(d, i, j);
    for (std::size_t c = 0; c < v.cols(); ++c) std::swap(v(i, c), v(j, c));
  }
  // row_i += f * row_j
  void row_add(std::size_t i, const Int& f, std::size_t j) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) += f * d(j, c);
    col_axpy(u, j, -f, i);
  }
  // col_i += f * col_j
  void col_add(std::size_t i, const Int& f, std::size_t j) {
    col_axpy(d, i, f, j);
    for (std::size_t c = 0; c < v.cols(); ++c) v(j, c) -= f * v(i, c);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
    col_negate(u, i);
  }
};

} // namespace

SNFDecomposition smith_normal_form(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero magnitude in the trailing block
      std::size_t pr = rows, pcol = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.d(i, j) != 0 && (pr == rows || abs(w.d(i, j)) < abs(w.d(pr, pcol)))) {
            pr = i;
            pcol = j;
          }
      if (pr == rows) break;
      if (pr != t) w.row_swap(pr, t);
      if (pcol != t) w.col_swap_d(pcol, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.d(i, t) == 0) continue;
        Int q = floor_div(w.d(i, t), w.d(t, t));
        w.row_add(i, -q, t);
        if (w.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.d(t, j) == 0) continue;
        Int q = floor_div(w.d(t, j), w.d(t, t));
        w.col_add(j, -q, t);
        if (w.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: pull an offending row into row t and retry
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.row_add(t, Int(1), bad);
    }
    if (w.d(t, t) < 0) w.row_negate(t);
  }
  SNFDecomposition out{w.u, w.d, w.v, {}};
  for (std::size_t t = 0; t < steps; ++t) out.invariant_factors.push_back(w.d(t, t));
  return out;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (!m.square()) throw DomainError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rs.push_back(k);
        if (k != j) cs.push_back(k);
      }
      Int minor = determinant(m.select_rows(rs).select_cols(cs));
      adj(j, i) = ((i + j) % 2 == 0) ? minor : Int(-minor);
    }
  return adj;
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct GramSchmidt {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> norms; // |b*_i|^2
};

GramSchmidt gram_schmidt(const std::vector<std::vector<Rat>>& basis) {
  const std::size_t k = basis.size();
  GramSchmidt gs{std::vector<std::vector<Rat>>(k, std::vector<Rat>(k, Rat(0))), std::vector<Rat>(k)};
  std::vector<std::vector<Rat>> star(k);
  for (std::size_t i = 0; i < k; ++i) {
    star[i] = basis[i];
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = gs.norms[j] == 0 ? Rat(0) : dot(basis[i], star[j]) / gs.norms[j];
      for (std::size_t r = 0; r < star[i].size(); ++r) star[i][r] -= gs.mu[i][j] * star[j][r];
    }
    gs.norms[i] = dot(star[i], star[i]);
  }
  return gs;
}

Int round_nearest(const Rat& x) {
  Rat shifted = x + Rat(1, 2);
  return floor_div(Int(shifted.get_num()), Int(shifted.get_den()));
}

} // namespace

IntMatrix lll_reduce(const IntMatrix& b) {
  const std::size_t n = b.cols();
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = 0; c < n; ++c) basis.push_back(b.col(c));
  auto as_rat = [&] {
    std::vector<std::vector<Rat>> out;
    for (const auto& v : basis) out.emplace_back(v.begin(), v.end());
    return out;
  };
  GramSchmidt gs = gram_schmidt(as_rat());
  for (const auto& nrm : gs.norms)
    if (nrm == 0) throw DomainError("rank deficient");
  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Int q = round_nearest(gs.mu[k][j]);
      if (q == 0) continue;
      for (std::size_t r = 0; r < basis[k].size(); ++r) basis[k][r] -= q * basis[j][r];
      gs = gram_schmidt(as_rat());
    }
    const Rat& m = gs.mu[k][k - 1];
    if (gs.norms[k] >= (delta - m * m) * gs.norms[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gs = gram_schmidt(as_rat());
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  IntMatrix out(b.rows(), n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < b.rows(); ++r) out(r, c) = basis[c][r];
  return out;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& m, const std::vector<Int>& v) {
  if (!m.square() || m.rows() != v.size()) throw DomainError("solve_in_lattice: shape mismatch");
  Int det = determinant(m);
  if (det == 0) throw DomainError("singular matrix");
  std::vector<Int> x = adjugate(m) * v;
  for (auto& xi : x) {
    if (xi % det != 0) return std::nullopt;
    xi /= det;
  }
  return x;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && column_hermite_form(a) == column_hermite_form(b);
}

Int max_norm(const IntMatrix& m) {
  Int best(0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, Int(abs(m(r, c))));
  return best;
}

std::vector<Int> primitive_direction(const std::vector<Int>& v) {
  Int g(0);
  for (const auto& x : v) g = gcd(g, x);
  std::vector<Int> out = v;
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

} // namespace hkdisc
