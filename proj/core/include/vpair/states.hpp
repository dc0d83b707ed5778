#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "vpair/linalg.hpp"

namespace vpair {

inline constexpr int kLevels = 3;  // 1,2 excited; 3 ground
inline constexpr int kDim = 9;     // two-atom Hilbert space

/// Product-basis label |j_A> ⊗ |k_B| with j,k in {1,2,3}. The flat index is
/// 1-based lexicographic, flat = 3(j-1) + k, matching the rho_lm numbering
/// used on every external surface; index() is the 0-based row/column.
class BasisIndex {
 public:
  BasisIndex(int level_a, int level_b);
  static BasisIndex from_flat(int flat);  // flat in 1..9

  int level_a() const noexcept { return level_a_; }
  int level_b() const noexcept { return level_b_; }
  int flat() const noexcept { return 3 * (level_a_ - 1) + level_b_; }
  int index() const noexcept { return flat() - 1; }

 private:
  int level_a_;
  int level_b_;
};

/// Normalized 9-component state vector. Construction requires unit Euclidean
/// norm within 1e-12.
class StateVector {
 public:
  static constexpr double kNormTol = 1e-12;

  explicit StateVector(const std::array<Complex, kDim>& amplitudes);

  const std::array<Complex, kDim>& amplitudes() const noexcept { return amp_; }
  Complex amplitude(int flat) const;  // 1-based
  Complex amplitude(BasisIndex b) const { return amp_[b.index()]; }

  ComplexMatrix projector() const;  // |psi><psi|

 private:
  std::array<Complex, kDim> amp_;
};

struct DensityDiagnostic {
  enum class Kind {
    wrong_dimension,
    non_finite,
    hermitian_defect,
    trace_defect,
    negative_eigenvalue,
  };
  Kind kind;
  double magnitude;
  std::string message() const;
};

/// Validated 9x9 density matrix: Hermitian (defect <= 1e-10), unit trace
/// within 1e-10, minimum eigenvalue >= -1e-9.
class DensityMatrix {
 public:
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigenFloor = -1e-9;

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  /// rho_lm with 1-based flat indices.
  Complex entry(int l, int m) const;

  static DensityMatrix from_pure(const StateVector& psi);

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  friend std::variant<DensityMatrix, DensityDiagnostic> validate_density(
      const ComplexMatrix& m);

  ComplexMatrix mat_;
};

/// Checks the density-matrix invariants; on failure the diagnostic names the
/// violated condition and its magnitude.
std::variant<DensityMatrix, DensityDiagnostic> validate_density(
    const ComplexMatrix& m);

/// validate_density that throws ValidationError instead of returning the
/// diagnostic.
DensityMatrix require_density(const ComplexMatrix& m);

/// (1/2) ||rho - sigma||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

enum class DickeKind { symmetric, antisymmetric };

/// Pure projector onto |j_A> ⊗ |k_B>.
DensityMatrix product_state(int level_a, int level_b);

/// (|k_A l_B> ± |l_A k_B>)/sqrt(2) for k < l.
StateVector dicke_state(DickeKind kind, int k, int l);

/// Projector onto cos(phi)|1_A 2_B> + sin(phi)|1_A 3_B>, phi in [0, pi/2].
DensityMatrix superposition_state(double phi);

/// p |first><first| + (1-p) |second><second|, p in [0,1].
DensityMatrix mixture_two(BasisIndex first, BasisIndex second, double p);

/// The PPT entangled family rho_a, 0 < a < 1: diagonal weight a except for
/// alpha = (1+a)/2 at positions 7 and 9, off-diagonal a at (1,5),(1,9),(5,9)
/// and beta = sqrt(1-a^2)/2 at (7,9), all divided by 8a+1.
DensityMatrix bound_entangled_state(double a);

/// identity / 9.
DensityMatrix maximally_mixed();

/// Collective basis, fixed ordering (e1, e2, s12, a12, s13, a13, s23, a23, g).
enum class CollectiveState { e1, e2, s12, a12, s13, a13, s23, a23, g };
inline constexpr int kCollectiveCount = 9;

std::string_view collective_name(CollectiveState c);
StateVector collective_vector(CollectiveState c);

/// <c|rho|c> for every collective basis vector, indexed by CollectiveState.
std::array<double, kCollectiveCount> collective_populations(
    const DensityMatrix& rho);

inline double collective_population(
    const std::array<double, kCollectiveCount>& pops, CollectiveState c) {
  return pops[static_cast<int>(c)];
}

// --- JSON density-matrix document ----------------------------------------
// {"dim": 9, "re": [81 numbers], "im": [81 numbers]}, row-major; parsing
// also accepts nested 9x9 arrays and always goes through validate_density.

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);
DensityMatrix load_density(const std::string& path);
void save_density(const DensityMatrix& rho, const std::string& path);

}  // namespace vpair
