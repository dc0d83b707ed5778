#include "vpair/measures.hpp"

#include <cmath>

namespace vpair {

ComplexMatrix partial_transpose(const ComplexMatrix& m, Subsystem which) {
  if (m.rows() != kDim || m.cols() != kDim)
    throw ValidationError("partial_transpose: matrix must be 9x9");
  ComplexMatrix out(kDim, kDim);
  for (int j = 0; j < kLevels; ++j)
    for (int k = 0; k < kLevels; ++k)
      for (int l = 0; l < kLevels; ++l)
        for (int mm = 0; mm < kLevels; ++mm) {
          const Complex val = m(3 * j + k, 3 * l + mm);
          if (which == Subsystem::B)
            out(3 * j + mm, 3 * l + k) = val;  // ((j,k),(l,m)) -> ((j,m),(l,k))
          else
            out(3 * l + k, 3 * j + mm) = val;  // ((j,k),(l,m)) -> ((l,k),(j,m))
        }
  return out;
}

HermitianMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
  return HermitianMatrix(partial_transpose(rho.matrix(), which));
}

double negativity(const DensityMatrix& rho) {
  const HermitianMatrix pt = partial_transpose(rho, Subsystem::B);
  double negative_sum = 0.0;
  for (double lambda : hermitian_eigenvalues(pt))
    if (lambda < 0.0) negative_sum -= lambda;
  // The trace-norm route squares the matrix, so on rank-deficient partial
  // transposes it resolves zeros only to ~sqrt(eps); 1e-7 still catches any
  // transcription error while the eigenvalue form keeps full precision.
  const double via_trace_norm = 0.5 * (trace_norm(pt.matrix()) - 1.0);
  if (std::abs(negative_sum - via_trace_norm) > 1e-7)
    throw NumericalError("negativity: trace-norm and eigenvalue-sum routes "
                         "disagree");
  return negative_sum < 0.0 ? 0.0 : negative_sum;
}

ComplexMatrix realign(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(kDim, kDim);
  for (int j = 0; j < kLevels; ++j)
    for (int k = 0; k < kLevels; ++k)
      for (int l = 0; l < kLevels; ++l)
        for (int mm = 0; mm < kLevels; ++mm)
          out(3 * j + l, 3 * k + mm) = m(3 * j + k, 3 * l + mm);
  return out;
}

double realignment_negativity(const DensityMatrix& rho) {
  return trace_norm(realign(rho)) - 1.0;
}

double linear_entropy(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  double purity = 0.0;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) purity += std::norm(m(r, c));
  double s = (9.0 / 8.0) * (1.0 - purity);
  if (s < 0.0 && s > -1e-12) s = 0.0;
  if (s > 1.0 && s < 1.0 + 1e-12) s = 1.0;
  return s;
}

MeasureReport measure_report(const DensityMatrix& rho, double tol) {
  if (!(tol > 0.0)) throw ValidationError("measure_report: tol must be > 0");
  MeasureReport rep;
  const HermitianMatrix pt = partial_transpose(rho, Subsystem::B);
  const auto eigs = hermitian_eigenvalues(pt);
  rep.min_pt_eigenvalue = eigs.front();
  rep.ppt = rep.min_pt_eigenvalue >= -tol;
  rep.negativity = rep.ppt ? 0.0 : negativity(rho);
  rep.realignment_negativity = realignment_negativity(rho);
  rep.linear_entropy = linear_entropy(rho);
  return rep;
}

}  // namespace vpair
