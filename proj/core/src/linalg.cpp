#include "vpair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vpair {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw ValidationError("ComplexMatrix: negative dimensions");
  data_.assign(static_cast<std::size_t>(rows) * cols, Complex{});
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

void ComplexMatrix::bounds_failure(int r, int c) const {
  throw std::out_of_range("ComplexMatrix: entry (" + std::to_string(r) + "," +
                          std::to_string(c) + ") outside " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw ValidationError("trace: matrix not square");
  Complex t{};
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::one_norm() const {
  double best = 0.0;
  for (int c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (int r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("max_abs_diff: shape mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    best = std::max(best, std::abs(data_[i] - other.data_[i]));
  return best;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other,
                                 double abs_tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return max_abs_diff(other) <= abs_tol;
}

bool ComplexMatrix::all_finite() const noexcept {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double ComplexMatrix::hermitian_defect() const {
  if (!is_square()) throw ValidationError("hermitian_defect: not square");
  double best = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      best = std::max(best, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
  for (auto& z : data_) z *= factor;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product: shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  const Complex* pa = a.data_.data();
  const Complex* pb = b.data_.data();
  Complex* po = out.data_.data();
  const int n = a.rows_, k = a.cols_, m = b.cols_;
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < k; ++i) {
      const Complex arv = pa[static_cast<std::size_t>(r) * k + i];
      if (arv == Complex{}) continue;
      const Complex* brow = pb + static_cast<std::size_t>(i) * m;
      Complex* orow = po + static_cast<std::size_t>(r) * m;
      for (int c = 0; c < m; ++c) orow[c] += arv * brow[c];
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw ValidationError("apply: vector length mismatch");
  std::vector<Complex> out(rows_, Complex{});
  const Complex* p = data_.data();
  for (int r = 0; r < rows_; ++r) {
    Complex s{};
    const Complex* row = p + static_cast<std::size_t>(r) * cols_;
    for (int c = 0; c < cols_; ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (!m.is_square()) throw ValidationError("HermitianMatrix: not square");
  if (!m.all_finite()) throw ValidationError("HermitianMatrix: non-finite entries");
  defect_ = m.hermitian_defect();
  if (defect_ > kDefectTol)
    throw ValidationError("HermitianMatrix: Hermitian defect " +
                          std::to_string(defect_) + " exceeds tolerance");
  const int n = m.rows();
  mat_ = ComplexMatrix(n, n);
  for (int r = 0; r < n; ++r) {
    mat_(r, r) = Complex(m(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      mat_(r, c) = avg;
      mat_(c, r) = std::conj(avg);
    }
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ra = 0; ra < a.rows(); ++ra)
    for (int ca = 0; ca < a.cols(); ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex{}) continue;
      for (int rb = 0; rb < b.rows(); ++rb)
        for (int cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
    }
  return out;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square()) throw ValidationError("solve: A not square");
  if (a.rows() != b.rows()) throw ValidationError("solve: shape mismatch");
  const int n = a.rows();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;

  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(lu(k, k));
    for (int r = k + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, k));
      if (mag > best) {
        best = mag;
        p = r;
      }
    }
    if (best == 0.0) throw NumericalError("solve: singular matrix");
    if (p != k) {
      for (int c = 0; c < n; ++c) std::swap(lu(k, c), lu(p, c));
      for (int c = 0; c < x.cols(); ++c) std::swap(x(k, c), x(p, c));
    }
    const Complex pivot = lu(k, k);
    for (int r = k + 1; r < n; ++r) {
      const Complex f = lu(r, k) / pivot;
      lu(r, k) = f;
      if (f == Complex{}) continue;
      for (int c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
      for (int c = 0; c < x.cols(); ++c) x(r, c) -= f * x(k, c);
    }
  }
  // back substitution
  for (int c = 0; c < x.cols(); ++c) {
    for (int r = n - 1; r >= 0; --r) {
      Complex s = x(r, c);
      for (int k = r + 1; k < n; ++k) s -= lu(r, k) * x(k, c);
      x(r, c) = s / lu(r, r);
    }
  }
  return x;
}

}  // namespace vpair
