#pragma once

#include <optional>
#include <vector>

#include "hyte/manifold.hpp"

namespace hyte {

// A nonempty token sequence with optional nonnegative aggregation weights.
struct PoolInput {
  std::vector<LorentzPoint> tokens;
  std::optional<std::vector<double>> weights;  // same length, not all zero

  // Throws on empty tokens, mixed curvature/dim, bad weights.
  void validate() const;
  Curvature curvature() const { return tokens.front().curvature(); }
};

// Radius-dependent weighting exponent phi(x) = x0^p.
struct OEMConfig {
  double p = 2.0;
};

// Arithmetic mean of the ambient coordinates followed by Lorentz projection.
// Ignores weights (the contraction statement is about the unweighted mean);
// see weighted_mean_pool for the weighted variant.
LorentzPoint euclidean_mean_pool(const PoolInput& in);

// Weighted ambient mean + projection, exposed for parity experiments.
LorentzPoint weighted_mean_pool(const PoolInput& in);

// Lorentz-factor weighted barycenter; identical to the outward midpoint at p=0.
LorentzPoint einstein_midpoint(const PoolInput& in);

// Outward Einstein midpoint: weights proportional to w_i * x0_i^(p+1),
// normalized, combined in the ambient space, then projected back.
LorentzPoint outward_einstein_midpoint(const PoolInput& in, const OEMConfig& cfg);

// The pre-projection combination v~ = sum w~_i x_i. Its time component equals
// sum(w x0^{p+2}) / sum(w x0^{p+1}).
AmbientVector oem_pre_projection(const PoolInput& in, const OEMConfig& cfg);

struct DeficitReport {
  double lorentz_growth = 0.0;            // x0(rho) = cosh(sqrt(kappa) rho)/sqrt(kappa)
  double volume_growth = 0.0;             // omega_{d-1} kappa^{-(d-1)/2} * int_0^rho sinh^{d-1}(sqrt(kappa) t) dt
  double deficit_exponent_estimate = 0.0;  // local d/drho log(volume/lorentz); -> (d-2) sqrt(kappa)
};

// Quantifies how the Lorentz-factor weighting undercompensates volume growth.
DeficitReport lorentz_factor_deficit(double rho, int dim, Curvature curvature);

}  // namespace hyte
