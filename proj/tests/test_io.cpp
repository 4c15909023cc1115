#include "hkdisc/error.hpp"
#include "hkdisc/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace hkdisc;
using testing_support::poly;

TEST_CASE("polynomial JSON round trip") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    auto p = testing_support::random_poly(rng, 3, 5, 8, 1000);
    p *= pow(Int(10), 30);
    auto j = io::poly_to_json(p);
    CHECK(j["vars"] == io::json::array({"y1", "y2", "y3"}));
    for (const auto& t : j["terms"]) CHECK(t["c"].is_string());
    CHECK(io::poly_from_json(io::json::parse(j.dump())) == p);
  }
}

TEST_CASE("polynomial terms are written in descending order") {
  auto p = poly(2, {{4, {0, 1}}, {27, {0, 2}}, {-1, {2, 0}}, {-18, {1, 1}}, {4, {3, 0}}});
  auto j = io::poly_to_json(p);
  CHECK(j["terms"][0]["e"] == io::json::array({3, 0}));
  CHECK(j["terms"][4]["e"] == io::json::array({0, 1}));
  CHECK(j["terms"][1]["c"] == "27");
}

TEST_CASE("malformed polynomial JSON") {
  CHECK_THROWS_AS(io::poly_from_json(io::json::parse(R"({"terms": []})")), ParseError);
  CHECK_THROWS_AS(io::poly_from_json(io::json::parse(R"({"vars": ["y1"], "terms": [{"c": "1", "e": [1, 2]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::poly_from_json(io::json::parse(R"({"vars": ["y1"], "terms": [{"c": "x", "e": [1]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::poly_from_json(io::json::parse(R"({"vars": ["y1"], "terms": [{"c": "1/2", "e": [1]}]})")),
                  ParseError);
}

TEST_CASE("matrix JSON") {
  auto m = io::matrix_from_json(io::json::parse(R"({"rows": [["-3", 0], [2, "123456789012345678901234567890"]]})"));
  CHECK(m(0, 0) == -3);
  CHECK(m(1, 1) == Int("123456789012345678901234567890"));
  auto back = io::matrix_from_json(io::matrix_to_json(m));
  CHECK(back == m);
  CHECK(io::matrix_to_json(IntMatrix{{1, -2}}).dump() == R"({"rows":[[1,-2]]})");
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"rows": [[1, 2], [3]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"rows": []})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"({"rows": [[1.5]]})")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(io::json::parse(R"([1, 2])")), ParseError);
}

TEST_CASE("base points and degree reports use 1-based form indices") {
  BasePoint p{{Rat(1), Rat(-1, 2), Rat(-1, 2)}, {0, 3}};
  auto j = io::base_point_to_json(p, true);
  CHECK(j["point"] == io::json::array({"1", "-1/2", "-1/2"}));
  CHECK(j["vanishing"] == io::json::array({1, 4}));
  CHECK(j["monomial"] == true);

  DegreeReport r;
  r.d = 3;
  r.degree = 8;
  r.points.push_back({p, 1});
  auto d = io::degree_report_to_json(r);
  CHECK(d["d"] == 3);
  CHECK(d["degree"] == 8);
  CHECK(d["base_points"][0]["e"] == 1);
  CHECK(d["base_points"][0]["vanishing"] == io::json::array({1, 4}));
}

TEST_CASE("exponent pair files") {
  auto pts = io::points_from_json(io::json::parse(R"({"gens": [[4, 0], [0, 3]]})"), "gens");
  CHECK(pts == std::vector<Point2>{{4, 0}, {0, 3}});
  CHECK_THROWS_AS(io::points_from_json(io::json::parse(R"({"gens": [[4]]})"), "gens"), ParseError);
  CHECK_THROWS_AS(io::points_from_json(io::json::parse(R"({"exponents": [[4, 0]]})"), "gens"), ParseError);
}

TEST_CASE("file reading") {
  CHECK_THROWS_WITH_AS(io::read_json_file("/nonexistent/file.json"), doctest::Contains("cannot open"), ParseError);
}
