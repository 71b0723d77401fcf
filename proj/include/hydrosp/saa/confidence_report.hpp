#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hydrosp::saa {

enum class EstimatorKind { kUpper, kLower, kVrp, kEev, kVss };

std::string_view to_string(EstimatorKind kind);

struct ConfidenceReport {
  EstimatorKind kind = EstimatorKind::kVrp;
  double lo = 0.0;
  double hi = 0.0;
  double estimate = 0.0;
  int N = 0;  // scenarios per instance (N-bar for EEV)
  int M = 0;  // independent instances solved
  int T = 0;  // evaluation batches
  double alpha = 0.05;
  std::uint64_t seed = 0;
  bool significant = false;  // VSS only

  double width() const { return hi - lo; }
};

// {kind, lo, hi, estimate, N, M, T, alpha, seed}, plus significant for VSS.
std::string to_json(const ConfidenceReport& report);

}  // namespace hydrosp::saa
