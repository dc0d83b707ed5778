#pragma once

#include "vpair/states.hpp"

namespace vpair {

enum class Subsystem { A, B };

/// Partial transposition of one subsystem; involutive, Hermitian, trace 1.
HermitianMatrix partial_transpose(const DensityMatrix& rho,
                                  Subsystem which = Subsystem::B);
/// The same index permutation on a raw 9x9 matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                Subsystem which = Subsystem::B);

/// N(rho) = (||rho^PT||_1 - 1)/2, returned as the clamped absolute value of
/// the sum of negative partial-transpose eigenvalues. Both characterizations
/// are computed and must agree within 1e-10.
double negativity(const DensityMatrix& rho);

/// Realignment R(rho): output entry ((j,l),(k,m)) = rho((j,k),(l,m)), rows
/// grouped by (A-row, A-column) and columns by (B-row, B-column).
ComplexMatrix realign(const DensityMatrix& rho);

/// N_R(rho) = ||R(rho)||_1 - 1. May be negative for separable states;
/// entanglement is certified only when the value is positive.
double realignment_negativity(const DensityMatrix& rho);

/// S_L(rho) = (9/8) tr(rho - rho^2), in [0, 1].
double linear_entropy(const DensityMatrix& rho);

struct MeasureReport {
  double negativity = 0.0;
  double realignment_negativity = 0.0;
  double linear_entropy = 0.0;
  bool ppt = true;
  double min_pt_eigenvalue = 0.0;
};

/// All section-diagnostics for one state; ppt holds iff the minimum
/// partial-transpose eigenvalue is >= -tol.
MeasureReport measure_report(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace vpair
