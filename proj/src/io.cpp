#include "hkdisc/io.hpp"

#include "hkdisc/error.hpp"

#include <fstream>
#include <sstream>

namespace hkdisc::io {

namespace {

Int int_from_json(const json& v) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Int(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) {
    auto r = parse_rat(v.get<std::string>());
    if (r.get_den() != 1) throw ParseError("expected an integer, got " + v.get<std::string>());
    return r.get_num();
  }
  throw ParseError("expected an integer, got " + v.dump());
}

long small_from_json(const json& v) {
  if (!v.is_number_integer()) throw ParseError("expected a machine integer, got " + v.dump());
  return v.get<long>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

} // namespace

json poly_to_json(const MPoly& p, const std::vector<std::string>& vars) {
  json out;
  out["vars"] = vars.empty() ? default_var_names(p.nvars()) : vars;
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", to_string(c)}, {"e", e}});
  out["terms"] = std::move(terms);
  return out;
}

MPoly poly_from_json(const json& j) {
  const auto& vars = field(j, "vars");
  if (!vars.is_array()) throw ParseError("\"vars\" must be an array");
  const std::size_t n = vars.size();
  MPoly p(n);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const auto& e = field(t, "e");
    if (!e.is_array() || e.size() != n) throw ParseError("term exponent has the wrong length");
    Exponent ex;
    for (const auto& x : e) ex.push_back(small_from_json(x));
    p.add_term(ex, int_from_json(field(t, "c")));
  }
  return p;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Int& x = m(i, k);
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(to_string(x));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

IntMatrix matrix_from_json(const json& j) {
  const auto& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) throw ParseError("\"rows\" must be a non-empty array");
  std::vector<std::vector<Int>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Int> row;
    for (const auto& x : r) row.push_back(int_from_json(x));
    if (!out.empty() && row.size() != out.front().size()) throw ParseError("ragged matrix rows");
    out.push_back(std::move(row));
  }
  return IntMatrix::from_rows(out);
}

json rat_vector_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json int_vector_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json base_point_to_json(const BasePoint& p, bool monomial) {
  json vanishing = json::array();
  for (auto i : p.vanishing) vanishing.push_back(i + 1);
  return {{"point", rat_vector_to_json(p.coords)}, {"vanishing", vanishing}, {"monomial", monomial}};
}

json degree_report_to_json(const DegreeReport& r) {
  json pts = json::array();
  for (const auto& e : r.points) {
    json vanishing = json::array();
    for (auto i : e.point.vanishing) vanishing.push_back(i + 1);
    pts.push_back({{"point", rat_vector_to_json(e.point.coords)}, {"vanishing", vanishing}, {"e", e.multiplicity}});
  }
  return {{"d", r.d}, {"degree", r.degree}, {"base_points", std::move(pts)}};
}

std::vector<Point2> points_from_json(const json& j, const char* key) {
  const auto& arr = field(j, key);
  if (!arr.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<Point2> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw ParseError("expected an exponent pair");
    out.emplace_back(small_from_json(p[0]), small_from_json(p[1]));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace hkdisc::io
