#include "hydrosp/lshaped/trust_region.hpp"

#include <algorithm>

#include "hydrosp/errors.hpp"

namespace hydrosp::lshaped {

TrustRegionUpdate trust_region_step(double predicted_decrease, double actual_decrease, double radius,
                                    double max_radius, const TrustRegionConfig& config) {
  if (!(radius > 0.0)) throw StructuralError("trust-region radius must be positive");
  if (!(predicted_decrease > 0.0)) return {false, config.shrink * radius};
  const double ratio = actual_decrease / predicted_decrease;
  if (ratio < config.accept_ratio) return {false, config.shrink * radius};
  if (ratio >= kStrongStepRatio) return {true, std::min(config.expand * radius, max_radius)};
  return {true, radius};
}

void validate(const TrustRegionConfig& config) {
  if (!(config.accept_ratio > 0.0 && config.accept_ratio < 1.0 && config.expand > 1.0)) {
    throw StructuralError("trust region needs 0 < accept_ratio < 1 < expand");
  }
  if (!(config.shrink > 0.0 && config.shrink < 1.0)) throw StructuralError("trust region needs 0 < shrink < 1");
}

}  // namespace hydrosp::lshaped
