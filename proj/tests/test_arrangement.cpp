#include "hkdisc/arrangement.hpp"
#include "hkdisc/degree.hpp"
#include "hkdisc/error.hpp"
#include "hkdisc/staircase.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hkdisc;
using testing_support::rand_in;

namespace {

const IntMatrix kPlane{{2, 1, 3}, {-2, -1, -2}, {1, 1, 0}, {-1, -1, -1}};
const IntMatrix kNonUniform{{1, -1, 0}, {1, -1, 1}, {1, -1, 0}, {-1, 2, 0}, {-1, 1, -2}, {-1, 0, 1}};
const IntMatrix kUniform{{1, 1, 2}, {1, -1, 0}, {-1, 1, -1}, {-1, -1, -1}};
const IntMatrix kConcurrent{{1, 1, 2}, {-1, 0, 1}, {0, 1, 3}, {0, -1, -2}, {0, -1, -4}};

std::vector<Rat> pt(long a, long b, long c) {
  std::vector<Rat> v{Rat(a), Rat(b), Rat(c)};
  Rat lead = a != 0 ? v[0] : (b != 0 ? v[1] : v[2]);
  for (auto& x : v) x /= lead;
  return v;
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (auto i : one_based) out.push_back(i - 1);
  return out;
}

Rat slope(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Lower convex envelope of the generators at integer x, by brute force over
// all pairs: the value of the hull of the upset above x.
Rat envelope_at(const std::vector<Point2>& g, long x) {
  std::optional<Rat> best;
  for (const auto& p : g)
    for (const auto& q : g) {
      if (p.first > x || q.first < x) continue;
      Rat y = p.first == q.first ? Rat(std::min(p.second, q.second))
                                 : Rat(p.second) + slope(q.second - p.second, q.first - p.first) * (x - p.first);
      if (!best || y < *best) best = y;
    }
  return *best;
}

long axis_x(const std::vector<Point2>& g) {
  long a = -1;
  for (const auto& p : g)
    if (p.second == 0 && (a < 0 || p.first < a)) a = p.first;
  return a;
}

// Twice the area below the envelope by the trapezoid rule (exact: the
// envelope is linear between integer abscissae).
Rat trapezoid_twice_area(const std::vector<Point2>& g) {
  Rat total = 0;
  for (long x = 0; x < axis_x(g); ++x) total += envelope_at(g, x) + envelope_at(g, x + 1);
  return total;
}

// Twice the area by counting lattice points (2A = 2I + B - 2), which is the
// number of triangles in a unimodular triangulation.
long lattice_twice_area(const std::vector<Point2>& g) {
  const long a = axis_x(g);
  const Rat b = envelope_at(g, 0);
  long interior = 0, boundary = 0;
  for (long x = 0; x <= a; ++x) {
    Rat h = envelope_at(g, x);
    for (long y = 0; Rat(y) <= h; ++y) {
      bool on_edge = x == 0 || y == 0 || Rat(y) == h;
      (on_edge ? boundary : interior) += 1;
    }
  }
  (void)b;
  return a == 0 ? 0 : 2 * interior + boundary - 2;
}

} // namespace

TEST_CASE("staircase goldens") {
  CHECK(staircase_multiplicity(Staircase2({{4, 0}, {0, 3}, {2, 1}})) == 10);
  CHECK(colength(Staircase2({{4, 0}, {0, 3}, {2, 1}})) == 8);
  CHECK(staircase_multiplicity(Staircase2({{3, 0}, {2, 1}, {1, 3}, {0, 4}})) == 11);
  CHECK(staircase_multiplicity(Staircase2({{6, 0}, {4, 1}, {0, 3}})) == 18);
  CHECK(colength(Staircase2({{2, 0}, {1, 1}, {0, 2}})) == 3);
  CHECK(staircase_multiplicity(Staircase2({{2, 0}, {0, 3}, {1, 1}})) == 5);
}

TEST_CASE("complete intersections") {
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      Staircase2 s({{a, 0}, {0, b}});
      CHECK(staircase_multiplicity(s) == a * b);
      CHECK(colength(s) == a * b);
    }
}

TEST_CASE("generator minimalization") {
  Staircase2 s({{4, 0}, {0, 3}, {2, 1}, {5, 5}, {2, 1}, {4, 2}});
  CHECK(s.gens() == std::vector<Point2>{{0, 3}, {2, 1}, {4, 0}});
  CHECK(staircase_multiplicity(s) == 10);
  CHECK(s.contains(3, 1));
  CHECK_FALSE(s.contains(1, 2));
  CHECK_THROWS_AS(Staircase2({{-1, 2}}), DomainError);
}

TEST_CASE("staircases without pure powers are rejected") {
  Staircase2 s({{2, 1}, {0, 3}});
  CHECK_FALSE(s.zero_dimensional());
  CHECK_THROWS_WITH_AS(staircase_multiplicity(s), doctest::Contains("not zero-dimensional"), DomainError);
  CHECK_THROWS_WITH_AS(colength(s), doctest::Contains("not zero-dimensional"), DomainError);
}

TEST_CASE("multiplicity agrees with two independent area oracles") {
  std::mt19937_64 rng(100);
  for (int t = 0; t < 100; ++t) {
    std::vector<Point2> g{{rand_in(rng, 1, 6), 0}, {0, rand_in(rng, 1, 6)}};
    for (long k = rand_in(rng, 0, 4); k > 0; --k) g.emplace_back(rand_in(rng, 0, 6), rand_in(rng, 0, 6));
    Staircase2 s(g);
    long e = staircase_multiplicity(s);
    CHECK(Rat(e) == trapezoid_twice_area(s.gens()));
    CHECK(e == lattice_twice_area(s.gens()));
    CHECK(e >= colength(s));
    // adding points inside the upset changes nothing
    auto more = g;
    more.emplace_back(s.gens().front().first + 1, s.gens().front().second + 2);
    CHECK(staircase_multiplicity(Staircase2(more)) == e);
  }
}

TEST_CASE("colength counts standard monomials") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point2> g{{rand_in(rng, 1, 7), 0}, {0, rand_in(rng, 1, 7)}};
    for (long k = rand_in(rng, 0, 3); k > 0; --k) g.emplace_back(rand_in(rng, 0, 7), rand_in(rng, 0, 7));
    Staircase2 s(g);
    long count = 0;
    for (long x = 0; x <= 7; ++x)
      for (long y = 0; y <= 7; ++y) count += s.contains(x, y) ? 0 : 1;
    CHECK(colength(s) == count);
  }
}

TEST_CASE("sparse origin multiplicity") {
  CHECK(sparse_origin_multiplicity({{2, 0}, {0, 2}}) == 4);
  CHECK(sparse_origin_multiplicity({{2, 0}, {0, 3}, {1, 1}}) == 5);
  CHECK(sparse_origin_multiplicity({{4, 0}, {0, 3}, {2, 1}}) == 10);
  CHECK_THROWS_WITH_AS(sparse_origin_multiplicity({{2, 1}, {0, 2}}), doctest::Contains("hypothesis violated"),
                       DomainError);
}

TEST_CASE("uniformity") {
  CHECK(is_uniform(kPlane));
  CHECK(is_uniform(kUniform));
  CHECK_FALSE(is_uniform(kNonUniform));
  CHECK_FALSE(is_uniform(IntMatrix{{1, 0, 0}, {0, 0, 0}, {0, 1, 0}, {-1, -1, 0}}));
}

TEST_CASE("base points of the plane example") {
  auto s = ParamSpec::build(kPlane);
  auto pts = base_points(s);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].coords == pt(1, -2, 0));
  CHECK(pts[0].vanishing == idx({1, 2}));
  CHECK(pts[1].coords == pt(-2, 1, 1));
  CHECK(pts[1].vanishing == idx({1, 4}));
  auto local = localize(s, pts[0]);
  CHECK(local.monomial);
  CHECK(local.staircase().gens() == std::vector<Point2>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("base points of the derived uniform matrix") {
  auto pts = base_points(ParamSpec::build(kUniform));
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& p : pts) sets.push_back(p.vanishing);
  CHECK(sets == std::vector<std::vector<std::size_t>>{idx({1, 2}), idx({1, 3}), idx({1, 4}), idx({2, 3})});
}

TEST_CASE("base points of the non-uniform example") {
  auto s = ParamSpec::build(kNonUniform);
  auto pts = base_points(s);
  CHECK(pts.size() == 7);
  std::set<std::vector<std::size_t>> sets;
  for (const auto& p : pts) sets.insert(p.vanishing);
  for (auto v : {idx({1, 3, 4}), idx({1, 2, 3, 5}), idx({1, 3, 6}), idx({2, 4}), idx({2, 6}), idx({4, 5}),
                 idx({5, 6})})
    CHECK(sets.count(v) == 1);

  auto origin = std::find_if(pts.begin(), pts.end(), [](const BasePoint& p) { return p.vanishing == idx({1, 3, 4}); });
  REQUIRE(origin != pts.end());
  CHECK(origin->coords == pt(0, 0, 1));
  auto local = localize(s, *origin);
  CHECK(local.monomial);
  CHECK(local.directions == std::vector<std::vector<std::size_t>>{idx({1, 3}), idx({4})});
  auto st = local.staircase();
  CHECK(st.gens() == std::vector<Point2>{{0, 3}, {2, 1}, {4, 0}});
  CHECK(staircase_multiplicity(st) == 10);
  CHECK(colength(st) == 8);

  auto line = std::find_if(pts.begin(), pts.end(), [](const BasePoint& p) { return p.vanishing == idx({1, 2, 3, 5}); });
  REQUIRE(line != pts.end());
  CHECK(line->coords == pt(1, 1, 0));
  CHECK_FALSE(localize(s, *line).monomial);
}

TEST_CASE("three concurrent directions are not monomial") {
  auto s = ParamSpec::build(kConcurrent);
  auto pts = base_points(s);
  auto it = std::find_if(pts.begin(), pts.end(), [](const BasePoint& p) { return p.vanishing == idx({3, 4, 5}); });
  REQUIRE(it != pts.end());
  CHECK(it->coords == pt(1, 0, 0));
  auto local = localize(s, *it);
  CHECK_FALSE(local.monomial);
  CHECK(local.directions.size() == 3);
  CHECK_THROWS_AS(local.staircase(), DomainError);
}

TEST_CASE("every base point zeroes all numerators") {
  for (const auto& c : {kPlane, kNonUniform, kUniform, kConcurrent}) {
    auto s = ParamSpec::build(c);
    for (const auto& p : base_points(s)) {
      auto forms = s.forms_at(p.coords);
      for (const auto& row : s.numer_exps()) {
        Rat f = 1;
        for (std::size_t i = 0; i < forms.size(); ++i) f *= pow(forms[i], row[i]);
        CHECK(f == 0);
      }
      CHECK(p.vanishing.size() >= 2);
    }
  }
}

TEST_CASE("base points agree with a direct scan of all pair intersections") {
  std::mt19937_64 rng(21);
  for (const auto& c : {kPlane, kNonUniform, kUniform, kConcurrent}) {
    auto s = ParamSpec::build(c);
    std::set<std::vector<std::size_t>> scan;
    for (std::size_t i = 0; i < s.n(); ++i)
      for (std::size_t j = i + 1; j < s.n(); ++j) {
        // solve l_i = l_j = 0 via the cross product
        std::vector<Rat> x{Rat(c(i, 1) * c(j, 2) - c(i, 2) * c(j, 1)), Rat(c(i, 2) * c(j, 0) - c(i, 0) * c(j, 2)),
                           Rat(c(i, 0) * c(j, 1) - c(i, 1) * c(j, 0))};
        if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
        auto forms = s.forms_at(x);
        bool all_vanish = true;
        for (const auto& row : s.numer_exps()) {
          bool hit = false;
          for (std::size_t k = 0; k < forms.size(); ++k) hit = hit || (forms[k] == 0 && row[k] > 0);
          all_vanish = all_vanish && hit;
        }
        if (!all_vanish) continue;
        std::vector<std::size_t> v;
        for (std::size_t k = 0; k < forms.size(); ++k)
          if (forms[k] == 0) v.push_back(k);
        scan.insert(v);
      }
    std::set<std::vector<std::size_t>> got;
    for (const auto& p : base_points(s)) got.insert(p.vanishing);
    CHECK(got == scan);
  }
}

TEST_CASE("base points are stable under row permutations") {
  std::mt19937_64 rng(33);
  for (const auto& c : {kPlane, kNonUniform, kUniform}) {
    auto reference = base_points(ParamSpec::build(c));
    for (int t = 0; t < 5; ++t) {
      std::vector<std::size_t> perm(c.rows());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      auto permuted = base_points(ParamSpec::build(c.select_rows(perm)));
      std::set<std::vector<Rat>> a, b;
      for (const auto& p : reference) a.insert(p.coords);
      for (const auto& p : permuted) b.insert(p.coords);
      CHECK(a == b);
      for (const auto& p : permuted) {
        std::vector<std::size_t> back;
        for (auto i : p.vanishing) back.push_back(perm[i]);
        std::sort(back.begin(), back.end());
        auto ref = std::find_if(reference.begin(), reference.end(),
                                [&](const BasePoint& q) { return q.coords == p.coords; });
        REQUIRE(ref != reference.end());
        CHECK(ref->vanishing == back);
      }
    }
  }
}

TEST_CASE("base point errors") {
  CHECK_THROWS_WITH_AS(base_points(ParamSpec::build(IntMatrix{{1, 2}, {-2, -3}, {1, 0}, {0, 1}})),
                       doctest::Contains("unsupported dimension"), DomainError);
  // an antipodal pair of rows makes its line basic
  CHECK_THROWS_WITH_AS(base_points(ParamSpec::build(IntMatrix{{1, 0, 0}, {-1, 0, 0}, {0, 1, -1}, {0, -1, 2}, {0, 0, -1}})),
                       doctest::Contains("base locus not finite"), DomainError);
}

TEST_CASE("degree formula") {
  auto r = degree_uniform(kPlane);
  CHECK(r.d == 3);
  CHECK(r.deg_psi == 1);
  CHECK(r.degree == 4);
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].point.coords == pt(1, -2, 0));
  CHECK(r.points[0].multiplicity == 4);
  CHECK(r.points[1].point.coords == pt(-2, 1, 1));
  CHECK(r.points[1].multiplicity == 1);

  auto u = degree_uniform(kUniform);
  CHECK(u.d == 3);
  CHECK(u.degree == 4);
  std::vector<long> es;
  for (const auto& e : u.points) es.push_back(e.multiplicity);
  CHECK(es == std::vector<long>{1, 1, 1, 2});

  for (const auto& rep : {r, u}) {
    long sum = 0;
    for (const auto& e : rep.points) sum += e.multiplicity;
    CHECK(rep.degree == rep.d * rep.d - sum);
  }

  CHECK_THROWS_WITH_AS(degree_uniform(kNonUniform), doctest::Contains("non-uniform"), DomainError);
  CHECK_THROWS_WITH_AS(degree_uniform(IntMatrix{{1, 2}, {-1, -2}}), doctest::Contains("unsupported dimension"),
                       DomainError);
}
