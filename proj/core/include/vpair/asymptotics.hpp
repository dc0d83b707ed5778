#pragma once

#include <utility>

#include "vpair/states.hpp"

namespace vpair {

/// Scalars of the closed-form asymptotic state: x, y, t real populations of
/// the dark sector, z, w, v coherences, with t = 1 - 2x - 2y.
struct AsymptoticParams {
  double x = 0.0;
  double y = 0.0;
  double t = 1.0;
  Complex z{};
  Complex w{};
  Complex v{};
};

/// The linear functionals of the initial matrix elements rho_lm.
AsymptoticParams asymptotic_params(const DensityMatrix& rho0);

/// The asymptotic 9x9 matrix assembled by explicit index placement.
DensityMatrix asymptotic_state(const AsymptoticParams& p);
DensityMatrix asymptotic_state(const DensityMatrix& rho0);

/// N = (1/2)[sqrt(4(x^2+y^2)+t^2) - t] for the diagonal class (z=w=v=0).
double diag_asymptotic_negativity(double x, double y, double t);

/// N = sqrt(4-2p+p^2)/sqrt(32) - 1/4 for the |1,2>/|1,3> mixture family.
double mixture_negativity(double p);

/// Boundary curves of the entropy-negativity region for diagonal initial
/// states. Domains: k1 on [3,8], k2 on [1,2], k3 on [3,4].
enum class BoundaryCurve { k1, k2, k3 };

struct CurvePoint {
  double s = 0.0;
  double linear_entropy = 0.0;
  double negativity = 0.0;
};

CurvePoint boundary_curve(BoundaryCurve which, double s);
std::pair<double, double> boundary_curve_domain(BoundaryCurve which);

enum class RegionClass { inside, boundary, outside };
std::string_view to_string(RegionClass c);

struct RegionMembership {
  RegionClass cls = RegionClass::outside;
  double distance = 0.0;  // to the sampled boundary
};

/// The region enclosed by the three boundary curves, sampled as a closed
/// polygon. Points within `band` of the polygon classify as boundary.
class RegionBoundary {
 public:
  explicit RegionBoundary(int samples_per_curve = 10000);

  RegionMembership classify(double linear_entropy, double negativity,
                            double band = 1e-6) const;
  const std::vector<std::pair<double, double>>& polygon() const noexcept {
    return polygon_;
  }

 private:
  std::vector<std::pair<double, double>> polygon_;  // closed loop
};

/// Membership against a shared default-resolution boundary.
RegionMembership region_membership(double linear_entropy, double negativity,
                                   double band = 1e-6);

}  // namespace vpair
