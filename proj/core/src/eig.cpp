#include <algorithm>
#include <cmath>
#include <numeric>

#include "vpair/linalg.hpp"

namespace vpair {

namespace {

double offdiagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). V picks up the rotation
// on the right so its columns converge to the eigenvectors.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double beta = (app - aqq) / (2.0 * r);
  const double sign = beta >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(beta) + std::hypot(beta, 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const int n = a.rows();

  // columns: A <- A V with V(p,p)=c, V(p,q)=-phase*s, V(q,p)=conj(phase)*s
  for (int i = 0; i < n; ++i) {
    const Complex aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip + std::conj(phase) * s * aiq;
    a(i, q) = -phase * s * aip + c * aiq;
  }
  // rows: A <- V† A
  for (int j = 0; j < n; ++j) {
    const Complex apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj + phase * s * aqj;
    a(q, j) = -std::conj(phase) * s * apj + c * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (int i = 0; i < v.rows(); ++i) {
    const Complex vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip + std::conj(phase) * s * viq;
    v(i, q) = -phase * s * vip + c * viq;
  }
}

// Givens rotation [c, s; -conj(s), c] with real c mapping (f,g) to (r,0).
void make_givens(Complex f, Complex g, double& c, Complex& s) {
  if (g == Complex{}) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (f == Complex{}) {
    c = 0.0;
    s = std::conj(g) / std::abs(g);
    return;
  }
  const double af = std::abs(f);
  const double d = std::hypot(af, std::abs(g));
  c = af / d;
  s = (f / af) * std::conj(g) / d;
}

// Householder reduction to upper Hessenberg form (in place).
void hessenberg_reduce(ComplexMatrix& h) {
  const int n = h.rows();
  std::vector<Complex> u(n);
  for (int k = 0; k + 2 < n; ++k) {
    double normx = 0.0;
    for (int i = k + 1; i < n; ++i) normx = std::hypot(normx, std::abs(h(i, k)));
    if (normx == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex phase = (x0 == Complex{}) ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * normx;
    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) {
      u[i] = h(i, k);
      if (i == k + 1) u[i] -= alpha;
      vnorm2 += std::norm(u[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;
    // left: H <- H - tau u (u† H) on rows k+1..n-1
    for (int j = k; j < n; ++j) {
      Complex dot{};
      for (int i = k + 1; i < n; ++i) dot += std::conj(u[i]) * h(i, j);
      dot *= tau;
      for (int i = k + 1; i < n; ++i) h(i, j) -= dot * u[i];
    }
    // right: H <- H - tau (H u) u† on columns k+1..n-1
    for (int i = 0; i < n; ++i) {
      Complex dot{};
      for (int j = k + 1; j < n; ++j) dot += h(i, j) * u[j];
      dot *= tau;
      for (int j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(u[j]);
    }
    h(k + 1, k) = alpha;
    for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {half_tr + disc, half_tr - disc};
}

// Explicit single-shift QR sweep on the active block h[lo..hi].
void qr_sweep(ComplexMatrix& h, int lo, int hi, Complex shift) {
  const int m = hi - lo + 1;
  std::vector<double> cs(m - 1);
  std::vector<Complex> ss(m - 1);
  for (int k = lo; k <= hi; ++k) h(k, k) -= shift;
  for (int k = lo; k < hi; ++k) {
    double c;
    Complex s;
    make_givens(h(k, k), h(k + 1, k), c, s);
    cs[k - lo] = c;
    ss[k - lo] = s;
    const int jend = hi;
    for (int j = k; j <= jend; ++j) {
      const Complex t1 = h(k, j), t2 = h(k + 1, j);
      h(k, j) = c * t1 + s * t2;
      h(k + 1, j) = -std::conj(s) * t1 + c * t2;
    }
  }
  for (int k = lo; k < hi; ++k) {
    const double c = cs[k - lo];
    const Complex s = ss[k - lo];
    const int iend = std::min(k + 2, hi);
    for (int i = lo; i <= iend; ++i) {
      const Complex t1 = h(i, k), t2 = h(i, k + 1);
      h(i, k) = c * t1 + std::conj(s) * t2;
      h(i, k + 1) = -s * t1 + c * t2;
    }
  }
  for (int k = lo; k <= hi; ++k) h(k, k) += shift;
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const HermitianMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  if (n == 0) return {{}, v};

  const double norm = a.frobenius_norm();
  const double stop = 1e-14 * norm;
  if (norm > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < 64 && !converged; ++sweep) {
      if (offdiagonal_mass(a) <= stop) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
    if (!converged && offdiagonal_mass(a) > stop)
      throw NumericalError("hermitian_eigensystem: Jacobi failed to converge");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigensystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
  return hermitian_eigensystem(m).eigenvalues;
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.is_square()) throw ValidationError("trace_norm: matrix not square");
  if (!m.all_finite()) throw ValidationError("trace_norm: non-finite entries");
  const ComplexMatrix gram = m.adjoint() * m;
  const auto eigs = hermitian_eigenvalues(HermitianMatrix(gram));
  const double neg_tol = std::max(1e-12, 1e-13 * gram.frobenius_norm());
  // eigenvalues below the eigensolver's relative resolution are exact zeros;
  // taking their square root would otherwise inject sqrt(eps) noise
  const double zero_tol = 1e-14 * gram.frobenius_norm();
  double sum = 0.0;
  for (double lambda : eigs) {
    if (lambda < -neg_tol)
      throw NumericalError("trace_norm: M†M eigenvalue below roundoff floor");
    if (lambda < zero_tol) continue;
    sum += std::sqrt(lambda);
  }
  return sum;
}

std::vector<Complex> general_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw ValidationError("general_eigenvalues: not square");
  if (!m.all_finite())
    throw ValidationError("general_eigenvalues: non-finite entries");
  const int n = m.rows();
  std::vector<Complex> eig(n);
  if (n == 0) return eig;
  if (n == 1) {
    eig[0] = m(0, 0);
    return eig;
  }

  ComplexMatrix h = m;
  hessenberg_reduce(h);

  const double eps = 2.3e-16;
  const double tiny = 1e-300 + eps * h.frobenius_norm();
  int hi = n - 1;
  long iterations = 0;
  int since_deflation = 0;
  const long max_iterations = 120L * n;

  while (hi >= 0) {
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      if (sub <= eps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo))) ||
          sub <= tiny * eps) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      since_deflation = 0;
      continue;
    }
    if (lo == hi - 1) {
      auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eig[lo] = l1;
      eig[hi] = l2;
      hi -= 2;
      since_deflation = 0;
      continue;
    }

    Complex shift;
    if (++since_deflation % 16 == 0) {
      // exceptional shift breaks rare convergence stalls
      shift = h(hi, hi) + 1.5 * std::abs(h(hi, hi - 1));
    } else {
      auto [l1, l2] =
          eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = (std::abs(l1 - h(hi, hi)) <= std::abs(l2 - h(hi, hi))) ? l1 : l2;
    }
    qr_sweep(h, lo, hi, shift);
    if (++iterations > max_iterations)
      throw NumericalError("general_eigenvalues: QR iteration did not converge");
  }
  return eig;
}

}  // namespace vpair
