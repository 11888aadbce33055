#include "hyte/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyte {

namespace {

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void require_same_dim(size_t a, size_t b, const char* who) {
  if (a != b) {
    std::ostringstream os;
    os << who << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

void require_same_curvature(const Curvature& a, const Curvature& b, const char* who) {
  if (a != b) {
    std::ostringstream os;
    os << who << ": curvature mismatch (kappa " << a.kappa() << " vs " << b.kappa() << ")";
    throw CurvatureError(os.str());
  }
}

}  // namespace

Curvature::Curvature(double kappa) : kappa_(kappa), sqrt_kappa_(std::sqrt(kappa)) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw DegenerateInputError("Curvature: kappa must be positive and finite");
}

LorentzPoint::LorentzPoint(std::vector<double> coords, Curvature curvature, bool)
    : coords_(std::move(coords)), curvature_(curvature) {}

LorentzPoint::LorentzPoint(std::vector<double> coords, Curvature curvature)
    : LorentzPoint(std::move(coords), curvature, true) {
  PointReport rep = validate_point(coords_, curvature_);
  if (!rep.ok) throw DegenerateInputError("LorentzPoint: " + rep.describe());
}

LorentzPoint LorentzPoint::unchecked(std::vector<double> coords, Curvature curvature) {
  return LorentzPoint(std::move(coords), curvature, true);
}

LorentzPoint LorentzPoint::origin(int spatial_dim, Curvature curvature) {
  std::vector<double> c(static_cast<size_t>(spatial_dim) + 1, 0.0);
  c[0] = 1.0 / curvature.sqrt_kappa();
  return unchecked(std::move(c), curvature);
}

TangentVector::TangentVector(LorentzPoint base, std::vector<double> coords, bool)
    : base_(std::move(base)), coords_(std::move(coords)) {}

TangentVector::TangentVector(LorentzPoint base, std::vector<double> coords)
    : TangentVector(std::move(base), std::move(coords), true) {
  require_same_dim(base_.coords().size(), coords_.size(), "TangentVector");
  double norm = 0.0;
  for (double c : coords_) norm += c * c;
  norm = std::sqrt(norm);
  const double ip = lorentz_inner(base_.coords(), coords_);
  if (std::abs(ip) > kManifoldTol * std::max(norm, 1e-300) && norm > 0.0)
    throw DegenerateInputError("TangentVector: not Lorentz-orthogonal to base point");
}

TangentVector TangentVector::unchecked(LorentzPoint base, std::vector<double> coords) {
  return TangentVector(std::move(base), std::move(coords), true);
}

double TangentVector::riemannian_norm() const {
  const double q = lorentz_inner(coords_, coords_);
  return std::sqrt(std::max(q, 0.0));
}

double lorentz_inner(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x.size(), y.size(), "lorentz_inner");
  double s = 0.0;
  for (size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s - x[0] * y[0];
}

double lorentz_inner(const LorentzPoint& x, const LorentzPoint& y) {
  return lorentz_inner(x.coords(), y.coords());
}

double lorentz_inner(const LorentzPoint& x, const AmbientVector& y) {
  return lorentz_inner(x.coords(), std::span<const double>(y.coords));
}

double lorentz_inner(const AmbientVector& x, const AmbientVector& y) {
  return lorentz_inner(std::span<const double>(x.coords), std::span<const double>(y.coords));
}

double geodesic_distance_from_inner(double inner, Curvature curvature) {
  if (!std::isfinite(inner)) throw DegenerateInputError("geodesic_distance: non-finite inner product");
  // K<x,y>_L = -kappa * inner >= 1 on the manifold; clamp absorbs rounding.
  const double arg = std::max(-curvature.kappa() * inner, 1.0);
  return std::acosh(arg) / curvature.sqrt_kappa();
}

double geodesic_distance(const LorentzPoint& x, const LorentzPoint& y) {
  require_same_curvature(x.curvature(), y.curvature(), "geodesic_distance");
  require_same_dim(x.coords().size(), y.coords().size(), "geodesic_distance");
  return geodesic_distance_from_inner(lorentz_inner(x, y), x.curvature());
}

LorentzPoint project_to_hyperboloid(const AmbientVector& v, Curvature curvature) {
  if (!all_finite(v.coords)) throw DegenerateInputError("project_to_hyperboloid: non-finite input");
  const double q = lorentz_inner(v, v);
  if (!(q < 0.0))
    throw DegenerateInputError("project_to_hyperboloid: non-timelike input (degenerate aggregation)");
  if (!(v.coords[0] > 0.0))
    throw DegenerateInputError("project_to_hyperboloid: time component must be positive");
  const double scale = 1.0 / std::sqrt(-curvature.kappa() * q);
  std::vector<double> out(v.coords.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = v.coords[i] * scale;
  return LorentzPoint::unchecked(std::move(out), curvature);
}

double radial_depth(const LorentzPoint& x) { return x.time(); }

LorentzPoint exp_map(const LorentzPoint& x, const TangentVector& v) {
  require_same_dim(x.coords().size(), v.coords().size(), "exp_map");
  require_same_curvature(x.curvature(), v.base().curvature(), "exp_map");
  {
    const double norm = v.riemannian_norm();
    const double ip = lorentz_inner(x.coords(), v.coords());
    if (std::abs(ip) > kManifoldTol * std::max(norm, 1.0))
      throw DegenerateInputError("exp_map: tangency violation beyond tolerance");
  }
  const double sk = x.curvature().sqrt_kappa();
  const double r = v.riemannian_norm();
  const double t = sk * r;
  // exp_x(v) = cosh(t) x + (sinh(t)/t) v with t = sqrt(kappa)*||v||_riem;
  // sinh(t)/t -> 1 keeps the zero-vector case exact.
  const double c = std::cosh(t);
  const double vcoef = t < 1e-8 ? 1.0 + t * t / 6.0 : std::sinh(t) / t;
  std::vector<double> out(x.coords().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * x.coords()[i] + vcoef * v.coords()[i];
  return LorentzPoint::unchecked(std::move(out), x.curvature());
}

TangentVector log_map(const LorentzPoint& x, const LorentzPoint& y) {
  require_same_curvature(x.curvature(), y.curvature(), "log_map");
  require_same_dim(x.coords().size(), y.coords().size(), "log_map");
  const double kappa = x.curvature().kappa();
  const double beta = std::max(-kappa * lorentz_inner(x, y), 1.0);  // = K<x,y>_L
  // log_x(y) = acosh(beta) * (y - beta*x) / sqrt(beta^2 - 1); the prefactor
  // tends to 1 as beta -> 1.
  const double excess = beta - 1.0;
  double factor;
  if (excess < 1e-9) {
    factor = 1.0 - excess / 3.0;
  } else {
    factor = std::acosh(beta) / std::sqrt(beta * beta - 1.0);
  }
  std::vector<double> out(x.coords().size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = factor * (y.coords()[i] - beta * x.coords()[i]);
  return TangentVector::unchecked(x, std::move(out));
}

LorentzPoint lift_from_spatial(std::span<const double> spatial, Curvature curvature) {
  if (!all_finite(spatial)) throw DegenerateInputError("lift_from_spatial: non-finite input");
  double sq = 0.0;
  for (double z : spatial) sq += z * z;
  std::vector<double> out(spatial.size() + 1);
  out[0] = std::sqrt(sq + curvature.inv_kappa());
  std::copy(spatial.begin(), spatial.end(), out.begin() + 1);
  return LorentzPoint::unchecked(std::move(out), curvature);
}

double poincare_radius(const LorentzPoint& x) {
  const double sk = x.curvature().sqrt_kappa();
  const double rho = std::acosh(std::max(sk * x.time(), 1.0)) / sk;  // distance to origin
  return std::tanh(sk * rho / 2.0) / sk;
}

std::string PointReport::describe() const {
  std::ostringstream os;
  os << "constraint residual " << constraint_residual << ", time "
     << (time_positive ? "positive" : "non-positive") << ", "
     << (finite ? "finite" : "non-finite") << " -> " << (ok ? "ok" : "violation");
  return os.str();
}

PointReport validate_point(std::span<const double> coords, Curvature curvature, double tol) {
  PointReport rep;
  rep.finite = all_finite(coords) && !coords.empty();
  if (!rep.finite) {
    rep.constraint_residual = std::numeric_limits<double>::infinity();
    return rep;
  }
  rep.time_positive = coords[0] > 0.0;
  double sq = 0.0;
  for (size_t i = 1; i < coords.size(); ++i) sq += coords[i] * coords[i];
  rep.constraint_residual = std::abs(curvature.kappa() * (coords[0] * coords[0] - sq) - 1.0);
  rep.ok = rep.finite && rep.time_positive && rep.constraint_residual <= tol;
  return rep;
}

PointReport validate_point(const LorentzPoint& x, double tol) {
  return validate_point(x.coords(), x.curvature(), tol);
}

}  // namespace hyte
