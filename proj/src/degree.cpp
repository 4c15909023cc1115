#include "hkdisc/degree.hpp"

#include "hkdisc/error.hpp"

#include <future>

namespace hkdisc {

DegreeReport degree_uniform(const IntMatrix& c, std::uint64_t seed, int trials) {
  if (c.cols() != 3) throw DomainError("unsupported dimension: degree formula needs m = 3");
  auto spec = ParamSpec::build(c);
  if (!is_uniform(c)) throw DomainError("non-uniform: degree formula unsupported");
  if (defect_test(spec, trials, seed) != DefectVerdict::NonDefective)
    throw DomainError("defective configuration: the image is not a surface");

  DegreeReport report;
  report.d = spec.degree();
  auto points = base_points(spec);
  std::vector<std::future<long>> pending;
  for (const auto& p : points)
    pending.push_back(std::async(std::launch::async, [&spec, &p] {
      auto local = localize(spec, p);
      if (!local.monomial) throw DomainError("non-monomial local ideal at a base point of a uniform matrix");
      return staircase_multiplicity(local.staircase());
    }));
  long total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    long e = pending[i].get();
    total += e;
    report.points.push_back({points[i], e});
  }
  report.degree = report.d * report.d - total;
  if (report.degree < 1) throw DomainError("degree formula produced a non-positive degree");
  return report;
}

} // namespace hkdisc
