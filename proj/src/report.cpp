#include "gybe/report.hpp"

#include <algorithm>
#include <cmath>

namespace gybe {

ResidualRecord make_record(std::string relation, nlohmann::json params, double residual, double tolerance) {
  // NaN never passes.
  const bool pass = std::isfinite(residual) && residual <= tolerance;
  return {std::move(relation), std::move(params), residual, tolerance, pass};
}

void to_json(nlohmann::json& j, const ResidualRecord& r) {
  j = nlohmann::json{{"relation", r.relation},
                     {"params", r.params},
                     {"residual", r.residual},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}};
}

void from_json(const nlohmann::json& j, ResidualRecord& r) {
  j.at("relation").get_to(r.relation);
  r.params = j.at("params");
  j.at("residual").get_to(r.residual);
  j.at("tolerance").get_to(r.tolerance);
  j.at("pass").get_to(r.pass);
}

bool ResidualReport::all_pass() const {
  return std::all_of(records_.begin(), records_.end(), [](const ResidualRecord& r) { return r.pass; });
}

std::size_t ResidualReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const ResidualRecord& r) { return !r.pass; }));
}

nlohmann::json ResidualReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records_) arr.push_back(r);
  return arr;
}

}  // namespace gybe
