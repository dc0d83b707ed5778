#pragma once

#include "vpair/states.hpp"

namespace vpair {

inline constexpr int kSuperDim = kDim * kDim;  // 81

enum class Atom { A, B };

/// Rates of the master equation, in units of the single-atom decay rate
/// gamma. Both excited levels decay at the same rate gamma; the collective
/// damping constants and dipole-dipole shifts enter as direct parameters.
struct SystemParams {
  double gamma = 1.0;
  double gamma_coll_13 = 0.0;
  double gamma_coll_23 = 0.0;
  double omega_13 = 0.0;
  double omega_23 = 0.0;

  /// Small interatomic separation: Gamma_j3 = gamma, Omega_j3 = omega.
  static SystemParams small_separation(double omega = 0.0, double gamma = 1.0);
  /// Large separation: all collective couplings vanish.
  static SystemParams large_separation(double gamma = 1.0);

  void validate() const;  // throws ValidationError
};

/// sigma_jk on one atom: |j><k| tensored with the identity on the other.
ComplexMatrix transition_operator(Atom atom, int j, int k);

/// (L^A + L^B + L^AB) rho: both single-atom decay channels, both collective
/// damping terms and both dipole-dipole commutators. Traceless Hermitian.
ComplexMatrix lindblad_rhs(const DensityMatrix& rho, const SystemParams& params);
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const SystemParams& params);

/// Row-major vectorization: vec(rho)[9 r + c] = rho(r, c).
std::vector<Complex> vectorize(const ComplexMatrix& m);
ComplexMatrix devectorize(std::span<const Complex> v);

/// 81x81 generator acting on vectorized 9x9 matrices.
class Superoperator {
 public:
  explicit Superoperator(ComplexMatrix mat);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::vector<Complex> apply(std::span<const Complex> vec) const;
  ComplexMatrix apply_to(const ComplexMatrix& rho) const;

 private:
  ComplexMatrix mat_;
};

Superoperator build_liouvillian(const SystemParams& params);

struct EvolveResult {
  DensityMatrix state;
  /// Accumulated |trace - 1| removed by the per-step renormalization.
  double renormalization_defect = 0.0;
  long steps = 0;
};

/// Classical fixed-step RK4 on the master equation. After every step the
/// state is re-symmetrized and trace-renormalized; positivity is checked
/// every 100 steps and at the end, and a violation beyond -1e-6 raises
/// NumericalError suggesting a smaller dt.
EvolveResult evolve(const DensityMatrix& rho0, double t_final, double dt,
                    const SystemParams& params);

struct StationaryAnalysis {
  std::vector<Complex> eigenvalues;       // sorted by real part, descending
  int kernel_dimension = 0;               // |lambda| < 1e-9
  double spectral_abscissa = 0.0;         // max Re(lambda)
  std::vector<Complex> purely_imaginary;  // |Re| < 1e-9 and |Im| >= 1e-9
};

/// Spectrum of the Liouvillian with the stationary-structure summary.
StationaryAnalysis stationary_analysis(const SystemParams& params);

}  // namespace vpair
