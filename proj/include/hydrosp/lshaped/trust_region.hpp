#pragma once

namespace hydrosp::lshaped {

struct TrustRegionConfig {
  bool enabled = false;
  // Non-positive values select 10% of the first-stage bound range and the
  // full range respectively.
  double initial_radius = 0.0;
  double max_radius = 0.0;
  double accept_ratio = 0.1;
  double expand = 2.0;
  double shrink = 0.5;
};

// Ratio at or above which an accepted step also enlarges the region.
inline constexpr double kStrongStepRatio = 0.75;

struct TrustRegionUpdate {
  bool accept = false;
  double radius = 0.0;
};

TrustRegionUpdate trust_region_step(double predicted_decrease, double actual_decrease, double radius,
                                    double max_radius, const TrustRegionConfig& config);

// Throws StructuralError unless 0 < accept_ratio < 1 < expand and 0 < shrink < 1.
void validate(const TrustRegionConfig& config);

}  // namespace hydrosp::lshaped
