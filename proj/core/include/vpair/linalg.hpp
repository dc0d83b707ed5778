#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace vpair {

using Complex = std::complex<double>;

/// Thrown when an input violates an operation's contract (bad levels,
/// parameters out of range, malformed state files, non-finite entries).
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iteration fails to converge or an integration goes
/// unstable.
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major storage, double precision.
/// Entry access is bounds-checked; equality comparisons always take an
/// explicit absolute tolerance.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) bounds_failure(r, c);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const Complex& operator()(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) bounds_failure(r, c);
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;
  double one_norm() const;  // max column absolute sum
  double max_abs() const;
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other, double abs_tol) const;
  bool all_finite() const noexcept;
  /// max |M - M†| entry magnitude; requires a square matrix.
  double hermitian_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) {
    m *= s;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  /// Matrix-vector product M v.
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  [[noreturn]] void bounds_failure(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Hermitian matrix wrapper. Construction symmetrizes the input via
/// (M + M†)/2 and records the pre-symmetrization defect, which must not
/// exceed kDefectTol.
class HermitianMatrix {
 public:
  static constexpr double kDefectTol = 1e-10;

  explicit HermitianMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  int dim() const noexcept { return mat_.rows(); }
  double symmetrization_defect() const noexcept { return defect_; }

 private:
  ComplexMatrix mat_;
  double defect_ = 0.0;
};

struct HermitianEigensystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
};

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
/// rotations; converged when the off-diagonal Frobenius mass drops below
/// 1e-14 * ||M||_F.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);
HermitianEigensystem hermitian_eigensystem(const HermitianMatrix& m);

/// Sum of singular values, computed as the square roots of the eigenvalues
/// of M†M. Eigenvalues in [-1e-12, 0) are clamped to zero.
double trace_norm(const ComplexMatrix& m);

/// Eigenvalues of a general complex square matrix (Hessenberg reduction
/// followed by shifted QR iteration). Eigenvalues only, unsorted.
std::vector<Complex> general_eigenvalues(const ComplexMatrix& m);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Solve A X = B by LU factorization with partial pivoting.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(M) via Pade-13 approximation with scaling and squaring.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

/// exp(t L) v for t >= 0. Backed by matrix_exponential; the approximation
/// error stays below 1e-10 for ||t L|| <= 50.
std::vector<Complex> matrix_exponential_action(const ComplexMatrix& l,
                                               std::span<const Complex> v,
                                               double t);

}  // namespace vpair
