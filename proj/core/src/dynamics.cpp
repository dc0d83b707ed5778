#include "vpair/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace vpair {

namespace {

void check_level(int level, const char* what) {
  if (level < 1 || level > kLevels)
    throw ValidationError(std::string(what) + " level " +
                          std::to_string(level) + " outside {1,2,3}");
}

ComplexMatrix single_atom_unit(int j, int k) {
  ComplexMatrix m(kLevels, kLevels);
  m(j - 1, k - 1) = 1.0;
  return m;
}

struct Channel {
  ComplexMatrix lower_a;  // sigma_3j^A
  ComplexMatrix raise_a;  // sigma_j3^A
  ComplexMatrix lower_b;
  ComplexMatrix raise_b;
  double gamma;       // single-atom rate
  double gamma_coll;  // collective damping
  double omega;       // dipole-dipole shift
};

std::array<Channel, 2> make_channels(const SystemParams& p) {
  std::array<Channel, 2> ch{};
  const double coll[2] = {p.gamma_coll_13, p.gamma_coll_23};
  const double omega[2] = {p.omega_13, p.omega_23};
  for (int j = 1; j <= 2; ++j) {
    Channel& c = ch[j - 1];
    c.lower_a = transition_operator(Atom::A, 3, j);
    c.raise_a = transition_operator(Atom::A, j, 3);
    c.lower_b = transition_operator(Atom::B, 3, j);
    c.raise_b = transition_operator(Atom::B, j, 3);
    c.gamma = p.gamma;
    c.gamma_coll = coll[j - 1];
    c.omega = omega[j - 1];
  }
  return ch;
}

// 2 J rho K - K J rho - rho K J, the building block of every damping term.
ComplexMatrix damping_term(const ComplexMatrix& j, const ComplexMatrix& k,
                           const ComplexMatrix& rho) {
  const ComplexMatrix kj = k * j;
  return Complex(2.0) * (j * rho * k) - kj * rho - rho * kj;
}

}  // namespace

SystemParams SystemParams::small_separation(double omega, double gamma) {
  SystemParams p;
  p.gamma = gamma;
  p.gamma_coll_13 = gamma;
  p.gamma_coll_23 = gamma;
  p.omega_13 = omega;
  p.omega_23 = omega;
  p.validate();
  return p;
}

SystemParams SystemParams::large_separation(double gamma) {
  SystemParams p;
  p.gamma = gamma;
  p.validate();
  return p;
}

void SystemParams::validate() const {
  for (double v : {gamma, gamma_coll_13, gamma_coll_23, omega_13, omega_23})
    if (!std::isfinite(v))
      throw ValidationError("SystemParams: non-finite parameter");
  if (!(gamma > 0.0)) throw ValidationError("SystemParams: gamma must be > 0");
  if (gamma_coll_13 < 0.0 || gamma_coll_23 < 0.0)
    throw ValidationError("SystemParams: collective damping must be >= 0");
  // complete positivity needs the damping matrix [[gamma, Gamma], [Gamma,
  // gamma]] of each channel positive semidefinite
  if (gamma_coll_13 > gamma || gamma_coll_23 > gamma)
    throw ValidationError(
        "SystemParams: collective damping cannot exceed gamma");
}

ComplexMatrix transition_operator(Atom atom, int j, int k) {
  check_level(j, "transition j");
  check_level(k, "transition k");
  if (j == k)
    throw ValidationError("transition_operator: j and k must differ");
  const ComplexMatrix unit = single_atom_unit(j, k);
  const ComplexMatrix id = ComplexMatrix::identity(kLevels);
  return atom == Atom::A ? kron(unit, id) : kron(id, unit);
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho,
                           const SystemParams& params) {
  params.validate();
  if (rho.rows() != kDim || rho.cols() != kDim)
    throw ValidationError("lindblad_rhs: state must be 9x9");
  ComplexMatrix out(kDim, kDim);
  for (const Channel& c : make_channels(params)) {
    out += Complex(c.gamma) * damping_term(c.lower_a, c.raise_a, rho);
    out += Complex(c.gamma) * damping_term(c.lower_b, c.raise_b, rho);
    if (c.gamma_coll != 0.0) {
      out += Complex(c.gamma_coll) * damping_term(c.lower_a, c.raise_b, rho);
      out += Complex(c.gamma_coll) * damping_term(c.lower_b, c.raise_a, rho);
    }
    if (c.omega != 0.0) {
      const ComplexMatrix x = c.raise_a * c.lower_b + c.raise_b * c.lower_a;
      out += Complex(0.0, c.omega) * (x * rho - rho * x);
    }
  }
  return out;
}

ComplexMatrix lindblad_rhs(const DensityMatrix& rho,
                           const SystemParams& params) {
  return lindblad_rhs(rho.matrix(), params);
}

std::vector<Complex> vectorize(const ComplexMatrix& m) {
  return {m.data().begin(), m.data().end()};
}

ComplexMatrix devectorize(std::span<const Complex> v) {
  if (v.size() != kSuperDim)
    throw ValidationError("devectorize: expected 81 components");
  ComplexMatrix m(kDim, kDim);
  std::copy(v.begin(), v.end(), m.data().begin());
  return m;
}

Superoperator::Superoperator(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() != kSuperDim || mat_.cols() != kSuperDim)
    throw ValidationError("Superoperator: matrix must be 81x81");
}

std::vector<Complex> Superoperator::apply(std::span<const Complex> vec) const {
  return mat_.apply(vec);
}

ComplexMatrix Superoperator::apply_to(const ComplexMatrix& rho) const {
  if (rho.rows() != kDim || rho.cols() != kDim)
    throw ValidationError("Superoperator: state must be 9x9");
  return devectorize(mat_.apply(vectorize(rho)));
}

Superoperator build_liouvillian(const SystemParams& params) {
  params.validate();
  const ComplexMatrix id = ComplexMatrix::identity(kDim);
  ComplexMatrix t(kSuperDim, kSuperDim);

  // With row-major vectorization, A rho B lifts to kron(A, B^T).
  auto add_damping = [&](double rate, const ComplexMatrix& j,
                         const ComplexMatrix& k) {
    if (rate == 0.0) return;
    const ComplexMatrix kj = k * j;
    t += Complex(2.0 * rate) * kron(j, k.transpose());
    t -= Complex(rate) * kron(kj, id);
    t -= Complex(rate) * kron(id, kj.transpose());
  };

  for (const Channel& c : make_channels(params)) {
    add_damping(c.gamma, c.lower_a, c.raise_a);
    add_damping(c.gamma, c.lower_b, c.raise_b);
    add_damping(c.gamma_coll, c.lower_a, c.raise_b);
    add_damping(c.gamma_coll, c.lower_b, c.raise_a);
    if (c.omega != 0.0) {
      const ComplexMatrix x = c.raise_a * c.lower_b + c.raise_b * c.lower_a;
      t += Complex(0.0, c.omega) * kron(x, id);
      t -= Complex(0.0, c.omega) * kron(id, x.transpose());
    }
  }
  return Superoperator(std::move(t));
}

namespace {

struct SparseEntry {
  int row;
  int col;
  Complex val;
};

std::vector<SparseEntry> sparsify(const ComplexMatrix& m) {
  std::vector<SparseEntry> entries;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != Complex{}) entries.push_back({r, c, m(r, c)});
  return entries;
}

void sparse_apply(const std::vector<SparseEntry>& op,
                  const std::array<Complex, kSuperDim>& in,
                  std::array<Complex, kSuperDim>& out) {
  out.fill(Complex{});
  for (const auto& e : op) out[e.row] += e.val * in[e.col];
}

// (1/2)(v + v†) in place, then divide by the trace; returns |trace - 1|.
double resymmetrize_renormalize(std::array<Complex, kSuperDim>& v) {
  for (int r = 0; r < kDim; ++r) {
    v[kDim * r + r] = Complex(v[kDim * r + r].real(), 0.0);
    for (int c = r + 1; c < kDim; ++c) {
      const Complex avg = 0.5 * (v[kDim * r + c] + std::conj(v[kDim * c + r]));
      v[kDim * r + c] = avg;
      v[kDim * c + r] = std::conj(avg);
    }
  }
  double tr = 0.0;
  for (int r = 0; r < kDim; ++r) tr += v[kDim * r + r].real();
  if (!std::isfinite(tr) || tr <= 0.0)
    throw NumericalError("evolve: state trace became non-positive or "
                         "non-finite; reduce dt");
  const double inv = 1.0 / tr;
  for (auto& z : v) z *= inv;
  return std::abs(tr - 1.0);
}

double min_eigenvalue(const std::array<Complex, kSuperDim>& v) {
  ComplexMatrix m(kDim, kDim);
  std::copy(v.begin(), v.end(), m.data().begin());
  return hermitian_eigenvalues(HermitianMatrix(m)).front();
}

}  // namespace

EvolveResult evolve(const DensityMatrix& rho0, double t_final, double dt,
                    const SystemParams& params) {
  params.validate();
  if (!(t_final >= 0.0)) throw ValidationError("evolve: t_final must be >= 0");
  if (t_final == 0.0)
    return EvolveResult{rho0, 0.0, 0};
  if (!(dt > 0.0 && dt <= t_final))
    throw ValidationError("evolve: need 0 < dt <= t_final");

  const auto op = sparsify(build_liouvillian(params).matrix());
  std::array<Complex, kSuperDim> v{};
  {
    const auto vec = vectorize(rho0.matrix());
    std::copy(vec.begin(), vec.end(), v.begin());
  }

  const long n_steps = static_cast<long>(std::ceil(t_final / dt - 1e-12));
  double renorm = 0.0;
  std::array<Complex, kSuperDim> k1, k2, k3, k4, tmp;

  for (long step = 0; step < n_steps; ++step) {
    const double h = (step == n_steps - 1)
                         ? t_final - dt * static_cast<double>(n_steps - 1)
                         : dt;
    sparse_apply(op, v, k1);
    for (int i = 0; i < kSuperDim; ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
    sparse_apply(op, tmp, k2);
    for (int i = 0; i < kSuperDim; ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
    sparse_apply(op, tmp, k3);
    for (int i = 0; i < kSuperDim; ++i) tmp[i] = v[i] + h * k3[i];
    sparse_apply(op, tmp, k4);
    const double w = h / 6.0;
    for (int i = 0; i < kSuperDim; ++i)
      v[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    renorm += resymmetrize_renormalize(v);

    if (step % 100 == 99 || step == n_steps - 1) {
      const double min_eig = min_eigenvalue(v);
      if (min_eig < -1e-6)
        throw NumericalError(
            "evolve: integration unstable, state positivity violated "
            "(min eigenvalue " + std::to_string(min_eig) +
            "); reduce dt");
    }
  }

  ComplexMatrix out(kDim, kDim);
  std::copy(v.begin(), v.end(), out.data().begin());
  EvolveResult result{require_density(out), renorm, n_steps};
  return result;
}

StationaryAnalysis stationary_analysis(const SystemParams& params) {
  const Superoperator liouv = build_liouvillian(params);
  StationaryAnalysis out;
  out.eigenvalues = general_eigenvalues(liouv.matrix());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  out.spectral_abscissa = out.eigenvalues.front().real();
  for (const Complex& lambda : out.eigenvalues) {
    if (std::abs(lambda) < 1e-9) ++out.kernel_dimension;
    else if (std::abs(lambda.real()) < 1e-9 && std::abs(lambda.imag()) >= 1e-9)
      out.purely_imaginary.push_back(lambda);
  }
  return out;
}

}  // namespace vpair
