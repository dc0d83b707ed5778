#pragma once

// Shared generators for the test suites. Everything is seeded explicitly so
// runs are reproducible.

#include <array>
#include <random>

#include "vpair/linalg.hpp"
#include "vpair/states.hpp"

namespace vpair::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(dist(rng), dist(rng));
  return m;
}

inline HermitianMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix g = random_matrix(rng, n, n);
  ComplexMatrix h = g + g.adjoint();
  h *= Complex(0.5);
  return HermitianMatrix(h);
}

/// Hilbert-Schmidt random state: G G† / tr(G G†) with Ginibre G.
inline DensityMatrix random_density(std::mt19937_64& rng) {
  ComplexMatrix g = random_matrix(rng, kDim, kDim);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return require_density(rho);
}

/// Dirichlet(1,...,1) diagonal state.
inline DensityMatrix random_diagonal_density(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::array<double, kDim> d{};
  double sum = 0.0;
  for (auto& v : d) {
    v = exp1(rng);
    sum += v;
  }
  ComplexMatrix m(kDim, kDim);
  for (int i = 0; i < kDim; ++i) m(i, i) = d[i] / sum;
  return require_density(m);
}

/// Haar-ish random unitary via Gram-Schmidt of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  ComplexMatrix g = random_matrix(rng, n, n);
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      Complex dot{};
      for (int r = 0; r < n; ++r) dot += std::conj(g(r, prev)) * g(r, c);
      for (int r = 0; r < n; ++r) g(r, c) -= dot * g(r, prev);
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) g(r, c) /= norm;
  }
  return g;
}

}  // namespace vpair::testing
