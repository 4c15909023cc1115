#pragma once
#include "hkdisc/degree.hpp"
#include "hkdisc/mpoly.hpp"

#include <json.hpp>

#include <string>

namespace hkdisc::io {

using nlohmann::json;

/// {"vars": [...], "terms": [{"c": "<integer>", "e": [...]}, ...]}, terms in
/// descending canonical order, coefficients as decimal strings.
json poly_to_json(const MPoly& p, const std::vector<std::string>& vars = {});
MPoly poly_from_json(const json& j);

/// {"rows": [[...], ...]}; entries may be JSON integers or decimal strings.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json rat_vector_to_json(const std::vector<Rat>& v);
json int_vector_to_json(const std::vector<Int>& v);

/// Form indices are written 1-based.
json base_point_to_json(const BasePoint& p, bool monomial);
json degree_report_to_json(const DegreeReport& r);

/// {"gens": [[a, b], ...]} for staircases, {"exponents": [[a, b], ...]} for
/// sparse supports.
std::vector<Point2> points_from_json(const json& j, const char* key);

/// Whole-file reads; malformed content raises ParseError.
json read_json_file(const std::string& path);

} // namespace hkdisc::io
