#include "vpair/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vpair {

AsymptoticParams asymptotic_params(const DensityMatrix& rho0) {
  auto p = [&](int l, int m) { return rho0.entry(l, m); };
  AsymptoticParams out;
  out.x = (p(2, 2).real() + 2.0 * p(3, 3).real() + p(4, 4).real() +
           2.0 * p(7, 7).real() - 2.0 * p(2, 4).real() - 4.0 * p(3, 7).real()) /
          8.0;
  out.z = (p(3, 6) - p(3, 8) - p(7, 6) + p(7, 8)) / 4.0;
  out.w = (p(2, 6) + p(2, 8) + 2.0 * p(3, 9) - p(4, 6) - p(4, 8) -
           2.0 * p(7, 9)) /
          4.0;
  out.y = (p(2, 2).real() + p(4, 4).real() + 2.0 * p(6, 6).real() +
           2.0 * p(8, 8).real() - 2.0 * p(2, 4).real() - 4.0 * p(6, 8).real()) /
          8.0;
  out.v = (-p(2, 3) - p(2, 7) + p(4, 3) + p(4, 7) + 2.0 * p(6, 9) -
           2.0 * p(8, 9)) /
          4.0;
  out.t = 1.0 - 2.0 * out.x - 2.0 * out.y;
  return out;
}

DensityMatrix asymptotic_state(const AsymptoticParams& p) {
  ComplexMatrix m(kDim, kDim);
  auto set = [&](int l, int mm, Complex val) { m(l - 1, mm - 1) = val; };
  const Complex zc = std::conj(p.z), wc = std::conj(p.w), vc = std::conj(p.v);
  set(3, 3, p.x);  set(3, 6, p.z);  set(3, 7, -p.x); set(3, 8, -p.z); set(3, 9, p.w);
  set(6, 3, zc);   set(6, 6, p.y);  set(6, 7, -zc);  set(6, 8, -p.y); set(6, 9, p.v);
  set(7, 3, -p.x); set(7, 6, -p.z); set(7, 7, p.x);  set(7, 8, p.z);  set(7, 9, -p.w);
  set(8, 3, -zc);  set(8, 6, -p.y); set(8, 7, zc);   set(8, 8, p.y);  set(8, 9, -p.v);
  set(9, 3, wc);   set(9, 6, vc);   set(9, 7, -wc);  set(9, 8, -vc);  set(9, 9, p.t);

  auto result = validate_density(m);
  if (auto* diag = std::get_if<DensityDiagnostic>(&result))
    throw NumericalError("asymptotic_state produced an invalid state (" +
                         diag->message() + "); transcription bug");
  return std::get<DensityMatrix>(std::move(result));
}

DensityMatrix asymptotic_state(const DensityMatrix& rho0) {
  return asymptotic_state(asymptotic_params(rho0));
}

double diag_asymptotic_negativity(double x, double y, double t) {
  if (x < -1e-12 || y < -1e-12)
    throw ValidationError("diag_asymptotic_negativity: x, y must be >= 0");
  if (std::abs(t - (1.0 - 2.0 * x - 2.0 * y)) > 1e-9 || t < -1e-12)
    throw ValidationError(
        "diag_asymptotic_negativity: inconsistent (x, y, t) triple");
  // rationalized form of (1/2)[sqrt(4(x^2+y^2)+t^2) - t]; no cancellation
  // for small x, y
  const double q = 4.0 * (x * x + y * y);
  return q / (std::sqrt(q + t * t) + t) / 2.0;
}

double mixture_negativity(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("mixture_negativity: p outside [0,1]");
  return std::sqrt(4.0 - 2.0 * p + p * p) / std::sqrt(32.0) - 0.25;
}

std::pair<double, double> boundary_curve_domain(BoundaryCurve which) {
  switch (which) {
    case BoundaryCurve::k1: return {3.0, 8.0};
    case BoundaryCurve::k2: return {1.0, 2.0};
    case BoundaryCurve::k3: return {3.0, 4.0};
  }
  throw ValidationError("boundary_curve_domain: bad curve");
}

CurvePoint boundary_curve(BoundaryCurve which, double s) {
  const auto [lo, hi] = boundary_curve_domain(which);
  if (!(s >= lo - 1e-12 && s <= hi + 1e-12))
    throw ValidationError("boundary_curve: s outside [" + std::to_string(lo) +
                          "," + std::to_string(hi) + "]");
  s = std::min(std::max(s, lo), hi);
  CurvePoint pt;
  pt.s = s;
  switch (which) {
    case BoundaryCurve::k1:
      pt.negativity = std::sqrt(2.0 * s) / 8.0 -
                      0.25 * (1.0 + (std::sqrt(3.0 * s - 8.0) - 1.0) / 3.0);
      pt.linear_entropy = 9.0 * (8.0 - s) / 64.0;
      break;
    case BoundaryCurve::k2:
      pt.negativity =
          0.25 * (std::sqrt(2.0 * s) - std::sqrt(s - 1.0) - 1.0);
      pt.linear_entropy = 9.0 * (2.0 - s) / 16.0;
      break;
    case BoundaryCurve::k3:
      pt.negativity = std::sqrt(2.0 * s) / 8.0 - 0.25;
      pt.linear_entropy = 9.0 * (8.0 - s) / 64.0;
      break;
  }
  if (pt.negativity < 0.0 && pt.negativity > -1e-12) pt.negativity = 0.0;
  return pt;
}

std::string_view to_string(RegionClass c) {
  switch (c) {
    case RegionClass::inside: return "inside";
    case RegionClass::boundary: return "boundary";
    case RegionClass::outside: return "outside";
  }
  return "?";
}

RegionBoundary::RegionBoundary(int samples_per_curve) {
  if (samples_per_curve < 2)
    throw ValidationError("RegionBoundary: need at least 2 samples per curve");
  const int n = samples_per_curve;
  polygon_.reserve(3 * n + 1);
  // Loop: (0,0) --k2--> |1,3> corner --k3--> |1,2> corner --k1--> (0,0).
  // k2 has a sqrt singularity at s = 1, so its parameter is clustered there.
  for (int i = 0; i < n; ++i) {
    const double u = 1.0 - static_cast<double>(i) / n;
    const auto pt = boundary_curve(BoundaryCurve::k2, 1.0 + u * u);
    polygon_.emplace_back(pt.linear_entropy, pt.negativity);
  }
  for (int i = 0; i < n; ++i) {
    const double s = 4.0 - static_cast<double>(i) / n;
    const auto pt = boundary_curve(BoundaryCurve::k3, s);
    polygon_.emplace_back(pt.linear_entropy, pt.negativity);
  }
  for (int i = 0; i < n; ++i) {
    const double s = 3.0 + 5.0 * static_cast<double>(i) / n;
    const auto pt = boundary_curve(BoundaryCurve::k1, s);
    polygon_.emplace_back(pt.linear_entropy, pt.negativity);
  }
  polygon_.emplace_back(polygon_.front());
}

namespace {

double point_segment_distance(double px, double py, double x1, double y1,
                              double x2, double y2) {
  const double dx = x2 - x1, dy = y2 - y1;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((px - x1) * dx + (py - y1) * dy) / len2;
    t = std::min(1.0, std::max(0.0, t));
  }
  const double cx = x1 + t * dx, cy = y1 + t * dy;
  return std::hypot(px - cx, py - cy);
}

}  // namespace

RegionMembership RegionBoundary::classify(double linear_entropy,
                                          double negativity,
                                          double band) const {
  if (!std::isfinite(linear_entropy) || !std::isfinite(negativity))
    throw ValidationError("region membership: non-finite point");
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polygon_.size(); ++i) {
    const auto& [x1, y1] = polygon_[i];
    const auto& [x2, y2] = polygon_[i + 1];
    dmin = std::min(dmin, point_segment_distance(linear_entropy, negativity,
                                                 x1, y1, x2, y2));
    if (dmin == 0.0) break;
  }
  if (dmin <= band) return {RegionClass::boundary, dmin};

  // even-odd ray cast toward +x
  bool in = false;
  for (std::size_t i = 0; i + 1 < polygon_.size(); ++i) {
    const auto& [x1, y1] = polygon_[i];
    const auto& [x2, y2] = polygon_[i + 1];
    if ((y1 > negativity) != (y2 > negativity)) {
      const double xint = x1 + (negativity - y1) * (x2 - x1) / (y2 - y1);
      if (xint > linear_entropy) in = !in;
    }
  }
  return {in ? RegionClass::inside : RegionClass::outside, dmin};
}

RegionMembership region_membership(double linear_entropy, double negativity,
                                   double band) {
  static const RegionBoundary shared_boundary(10000);
  return shared_boundary.classify(linear_entropy, negativity, band);
}

}  // namespace vpair
