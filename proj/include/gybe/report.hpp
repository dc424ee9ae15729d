#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gybe {

/// One verified relation: {"relation", "params", "residual", "tolerance", "pass"}.
struct ResidualRecord {
  std::string relation;
  nlohmann::json params = nlohmann::json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

ResidualRecord make_record(std::string relation, nlohmann::json params, double residual, double tolerance);

void to_json(nlohmann::json& j, const ResidualRecord& r);
void from_json(const nlohmann::json& j, ResidualRecord& r);

/// Ordered collection of records.
class ResidualReport {
 public:
  void add(ResidualRecord r) { records_.push_back(std::move(r)); }
  const std::vector<ResidualRecord>& records() const { return records_; }
  bool all_pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;

 private:
  std::vector<ResidualRecord> records_;
};

}  // namespace gybe
