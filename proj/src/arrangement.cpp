#include "hkdisc/arrangement.hpp"

#include "hkdisc/error.hpp"
#include "hkdisc/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hkdisc {

namespace {

// Direction class id per form: equal ids iff the rows are proportional.
std::vector<std::size_t> direction_ids(const IntMatrix& c) {
  std::vector<std::vector<Int>> seen;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    auto dir = primitive_direction(c.row(i));
    auto it = std::find(seen.begin(), seen.end(), dir);
    ids.push_back(static_cast<std::size_t>(it - seen.begin()));
    if (it == seen.end()) seen.push_back(std::move(dir));
  }
  return ids;
}

std::vector<Rat> normalized(std::vector<Int> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) throw DomainError("zero projective point");
  std::vector<Rat> out;
  for (const auto& x : v) out.emplace_back(x, v[lead]);
  for (auto& x : out) x.canonicalize();
  return out;
}

bool is_basic(const ParamSpec& spec, const std::vector<std::size_t>& vanishing) {
  for (const auto& row : spec.numer_exps()) {
    long total = 0;
    for (std::size_t i : vanishing) total += row[i];
    if (total == 0) return false;
  }
  return true;
}

} // namespace

std::vector<BasePoint> base_points(const ParamSpec& spec) {
  if (spec.m() != 3) throw DomainError("unsupported dimension: base points need m = 3");
  const auto& c = spec.matrix();
  const auto ids = direction_ids(c);

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < ids.size(); ++i) classes[ids[i]].push_back(i);
  for (const auto& [id, members] : classes)
    if (is_basic(spec, members)) throw DomainError("base locus not finite: a line of the arrangement is basic");

  std::set<std::vector<Rat>> candidates;
  for (std::size_t i = 0; i < spec.n(); ++i)
    for (std::size_t j = i + 1; j < spec.n(); ++j) {
      if (ids[i] == ids[j]) continue;
      std::vector<Int> cross{c(i, 1) * c(j, 2) - c(i, 2) * c(j, 1), c(i, 2) * c(j, 0) - c(i, 0) * c(j, 2),
                             c(i, 0) * c(j, 1) - c(i, 1) * c(j, 0)};
      candidates.insert(normalized(std::move(cross)));
    }

  std::vector<BasePoint> out;
  for (const auto& pt : candidates) {
    auto forms = spec.forms_at(pt);
    BasePoint bp{pt, {}};
    for (std::size_t i = 0; i < forms.size(); ++i)
      if (forms[i] == 0) bp.vanishing.push_back(i);
    if (is_basic(spec, bp.vanishing)) out.push_back(std::move(bp));
  }
  std::sort(out.begin(), out.end(),
            [](const BasePoint& a, const BasePoint& b) { return a.vanishing < b.vanishing; });
  return out;
}

LocalIdeal localize(const ParamSpec& spec, const BasePoint& p) {
  const auto ids = direction_ids(spec.matrix());
  LocalIdeal li{p, {}, {}, false};
  std::vector<std::size_t> class_ids;
  for (std::size_t i : p.vanishing) {
    auto it = std::find(class_ids.begin(), class_ids.end(), ids[i]);
    if (it == class_ids.end()) {
      class_ids.push_back(ids[i]);
      li.directions.push_back({i});
    } else {
      li.directions[static_cast<std::size_t>(it - class_ids.begin())].push_back(i);
    }
  }
  for (const auto& row : spec.numer_exps()) {
    std::vector<long> g;
    for (const auto& members : li.directions) {
      long e = 0;
      for (std::size_t i : members) e += row[i];
      g.push_back(e);
    }
    li.gens.push_back(std::move(g));
  }
  li.monomial = li.directions.size() <= 2;
  return li;
}

Staircase2 LocalIdeal::staircase() const {
  if (!monomial || directions.size() != 2)
    throw DomainError("local ideal is not monomial in two directions");
  std::vector<Point2> pts;
  for (const auto& g : gens) pts.emplace_back(g[0], g[1]);
  return Staircase2(pts);
}

bool is_uniform(const IntMatrix& c) {
  if (c.cols() != 3) throw DomainError("uniformity test expects an n x 3 matrix");
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = i + 1; j < c.rows(); ++j)
      for (std::size_t k = j + 1; k < c.rows(); ++k)
        if (determinant(c.select_rows({i, j, k})) == 0) return false;
  return c.rows() >= 3;
}

} // namespace hkdisc
