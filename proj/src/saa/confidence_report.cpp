#include "hydrosp/saa/confidence_report.hpp"

#include <json.hpp>

namespace hydrosp::saa {

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kUpper: return "upper";
    case EstimatorKind::kLower: return "lower";
    case EstimatorKind::kVrp: return "VRP";
    case EstimatorKind::kEev: return "EEV";
    case EstimatorKind::kVss: return "VSS";
  }
  return "unknown";
}

std::string to_json(const ConfidenceReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(report.kind));
  j["lo"] = report.lo;
  j["hi"] = report.hi;
  j["estimate"] = report.estimate;
  j["N"] = report.N;
  j["M"] = report.M;
  j["T"] = report.T;
  j["alpha"] = report.alpha;
  j["seed"] = report.seed;
  if (report.kind == EstimatorKind::kVss) j["significant"] = report.significant;
  return j.dump();
}

}  // namespace hydrosp::saa
