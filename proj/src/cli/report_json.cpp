#include "birkhoff/cli.hpp"

namespace birkhoff {

namespace {

nlohmann::ordered_json point_json(const ProjPoint& p) {
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  // Adding 0.0 turns -0.0 into 0.0.
  for (std::size_t i = 0; i < 3; ++i) coords.push_back({p[i].real() + 0.0, p[i].imag() + 0.0});
  return coords;
}

nlohmann::ordered_json points_json(const std::vector<ReportedPoint>& pts) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pts)
    arr.push_back({{"point", point_json(p.point)}, {"residual", p.residual}, {"multiplicity", p.multiplicity}});
  return arr;
}

}  // namespace

nlohmann::ordered_json report_json(const ObstructionReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(report.verdict);
  j["d"] = report.d;
  j["k"] = report.k;
  j["alpha"] = report.alpha;
  j["c"] = nullptr;
  j["least_squares_c"] = nullptr;
  if (report.hess_identity) {
    if (report.hess_identity->c) j["c"] = to_string(*report.hess_identity->c);
    j["least_squares_c"] = to_string(report.hess_identity->least_squares_c);
  }
  j["singular"] = points_json(report.singular_points);
  j["inflections"] = points_json(report.inflection_points);
  j["offending_point"] = nullptr;
  if (report.offending_point) j["offending_point"] = points_json({*report.offending_point}).at(0);
  return j;
}

}  // namespace birkhoff
