#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyte/errors.hpp"

namespace hyte {

// Relative tolerance for the hyperboloid constraint K<x,x>_L = 1.
inline constexpr double kManifoldTol = 1e-6;

// Curvature magnitude kappa > 0. The ambient sectional curvature is K = -kappa;
// everything in this library stores the positive magnitude so the time
// component is always sqrt(||spatial||^2 + 1/kappa).
class Curvature {
 public:
  explicit Curvature(double kappa);
  double kappa() const { return kappa_; }
  double sqrt_kappa() const { return sqrt_kappa_; }
  // 1/kappa, the squared "radius" of the hyperboloid.
  double inv_kappa() const { return 1.0 / kappa_; }

  friend bool operator==(const Curvature& a, const Curvature& b) { return a.kappa_ == b.kappa_; }
  friend bool operator!=(const Curvature& a, const Curvature& b) { return !(a == b); }

 private:
  double kappa_;
  double sqrt_kappa_;
};

// Unconstrained vector of the ambient Minkowski space R^{d+1}, index 0 is the
// time component. Used for pre-projection values.
struct AmbientVector {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  double time() const { return coords[0]; }
  std::span<const double> spatial() const { return {coords.data() + 1, coords.size() - 1}; }
};

// A point on the upper sheet of the curvature-kappa hyperboloid:
// kappa*(x0^2 - ||spatial||^2) = 1, x0 > 0. Index 0 is the time component.
class LorentzPoint {
 public:
  // Validates finiteness, x0 > 0 and the constraint at kManifoldTol.
  LorentzPoint(std::vector<double> coords, Curvature curvature);

  // Construction that skips the constraint check, for operations whose output
  // satisfies the constraint by construction (lift, projection, maps).
  static LorentzPoint unchecked(std::vector<double> coords, Curvature curvature);

  static LorentzPoint origin(int spatial_dim, Curvature curvature);

  std::span<const double> coords() const { return coords_; }
  double time() const { return coords_[0]; }
  std::span<const double> spatial() const { return {coords_.data() + 1, coords_.size() - 1}; }
  int dim() const { return static_cast<int>(coords_.size()) - 1; }
  Curvature curvature() const { return curvature_; }

 private:
  LorentzPoint(std::vector<double> coords, Curvature curvature, bool /*unchecked*/);
  std::vector<double> coords_;
  Curvature curvature_;
};

// A vector in the tangent space at `base`: Lorentz-orthogonal to the base point.
class TangentVector {
 public:
  // Validates |<base, coords>_L| <= kManifoldTol * ||coords||.
  TangentVector(LorentzPoint base, std::vector<double> coords);
  static TangentVector unchecked(LorentzPoint base, std::vector<double> coords);

  const LorentzPoint& base() const { return base_; }
  std::span<const double> coords() const { return coords_; }
  // Riemannian norm sqrt(<v,v>_L); nonnegative on tangent vectors.
  double riemannian_norm() const;

 private:
  TangentVector(LorentzPoint base, std::vector<double> coords, bool /*unchecked*/);
  LorentzPoint base_;
  std::vector<double> coords_;
};

// Minkowski bilinear form -x0*y0 + sum_i xi*yi.
double lorentz_inner(std::span<const double> x, std::span<const double> y);
double lorentz_inner(const LorentzPoint& x, const LorentzPoint& y);
double lorentz_inner(const LorentzPoint& x, const AmbientVector& y);
double lorentz_inner(const AmbientVector& x, const AmbientVector& y);

// Geodesic distance (1/sqrt(kappa)) * acosh(K<x,y>_L); the acosh argument is
// clamped below at 1 to absorb rounding on near-identical points.
double geodesic_distance(const LorentzPoint& x, const LorentzPoint& y);

// Distance given a precomputed Lorentzian inner product.
double geodesic_distance_from_inner(double inner, Curvature curvature);

// Def. "Lorentz projection": v / sqrt(K<v,v>_L) for timelike, future-pointing v.
LorentzPoint project_to_hyperboloid(const AmbientVector& v, Curvature curvature);

// Time component x0; strictly increasing in geodesic distance from the origin.
double radial_depth(const LorentzPoint& x);

// Geodesic flow: exp_x(v) = cosh(s r) x + sinh(s r) v/(s r), s = sqrt(kappa),
// r = riemannian norm of v.
LorentzPoint exp_map(const LorentzPoint& x, const TangentVector& v);

// Inverse of exp_map.
TangentVector log_map(const LorentzPoint& x, const LorentzPoint& y);

// Re-centering lift (sqrt(||z||^2 + 1/kappa), z). Exact up to rounding.
LorentzPoint lift_from_spatial(std::span<const double> spatial, Curvature curvature);

// Poincare-ball norm of the point (monotone-equivalent alternative radius).
double poincare_radius(const LorentzPoint& x);

struct PointReport {
  double constraint_residual = 0.0;  // |kappa*(x0^2 - ||s||^2) - 1|
  bool time_positive = false;
  bool finite = false;
  bool ok = false;
  std::string describe() const;
};

// Reports constraint residual, time-component sign and finiteness; ok iff all
// pass at `tol`.
PointReport validate_point(std::span<const double> coords, Curvature curvature, double tol = kManifoldTol);
PointReport validate_point(const LorentzPoint& x, double tol = kManifoldTol);

}  // namespace hyte
