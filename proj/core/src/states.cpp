#include "vpair/states.hpp"

#include <cmath>

namespace vpair {

namespace {

void check_level(int level, const char* what) {
  if (level < 1 || level > kLevels)
    throw ValidationError(std::string(what) + " level " +
                          std::to_string(level) + " outside {1,2,3}");
}

}  // namespace

BasisIndex::BasisIndex(int level_a, int level_b)
    : level_a_(level_a), level_b_(level_b) {
  check_level(level_a, "atom A");
  check_level(level_b, "atom B");
}

BasisIndex BasisIndex::from_flat(int flat) {
  if (flat < 1 || flat > kDim)
    throw ValidationError("flat index " + std::to_string(flat) +
                          " outside 1..9");
  return BasisIndex((flat - 1) / 3 + 1, (flat - 1) % 3 + 1);
}

StateVector::StateVector(const std::array<Complex, kDim>& amplitudes)
    : amp_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ValidationError("StateVector: non-finite amplitude");
    norm2 += std::norm(a);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol)
    throw ValidationError("StateVector: norm " +
                          std::to_string(std::sqrt(norm2)) + " not unit");
}

Complex StateVector::amplitude(int flat) const {
  return amplitude(BasisIndex::from_flat(flat));
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix m(kDim, kDim);
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) m(r, c) = amp_[r] * std::conj(amp_[c]);
  return m;
}

std::string DensityDiagnostic::message() const {
  switch (kind) {
    case Kind::wrong_dimension:
      return "density matrix must be 9x9 (got dimension " +
             std::to_string(static_cast<int>(magnitude)) + ")";
    case Kind::non_finite:
      return "density matrix has non-finite entries";
    case Kind::hermitian_defect:
      return "Hermitian defect " + std::to_string(magnitude) +
             " exceeds 1e-10";
    case Kind::trace_defect:
      return "trace defect " + std::to_string(magnitude) + " exceeds 1e-10";
    case Kind::negative_eigenvalue:
      return "negative eigenvalue " + std::to_string(magnitude) +
             " below -1e-9";
  }
  return "unknown density diagnostic";
}

std::variant<DensityMatrix, DensityDiagnostic> validate_density(
    const ComplexMatrix& m) {
  using Kind = DensityDiagnostic::Kind;
  if (m.rows() != kDim || m.cols() != kDim)
    return DensityDiagnostic{Kind::wrong_dimension,
                             static_cast<double>(m.rows())};
  if (!m.all_finite()) return DensityDiagnostic{Kind::non_finite, 0.0};
  const double defect = m.hermitian_defect();
  if (defect > HermitianMatrix::kDefectTol)
    return DensityDiagnostic{Kind::hermitian_defect, defect};
  const double trace_defect = std::abs(m.trace() - Complex(1.0));
  if (trace_defect > DensityMatrix::kTraceTol)
    return DensityDiagnostic{Kind::trace_defect, trace_defect};
  const HermitianMatrix herm(m);
  const auto eigs = hermitian_eigenvalues(herm);
  if (!eigs.empty() && eigs.front() < DensityMatrix::kEigenFloor)
    return DensityDiagnostic{Kind::negative_eigenvalue, eigs.front()};
  return DensityMatrix(herm.matrix());
}

DensityMatrix require_density(const ComplexMatrix& m) {
  auto result = validate_density(m);
  if (auto* diag = std::get_if<DensityDiagnostic>(&result))
    throw ValidationError("invalid density matrix: " + diag->message());
  return std::get<DensityMatrix>(std::move(result));
}

Complex DensityMatrix::entry(int l, int m) const {
  return mat_(BasisIndex::from_flat(l).index(), BasisIndex::from_flat(m).index());
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.projector());
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return 0.5 * trace_norm(a.matrix() - b.matrix());
}

DensityMatrix product_state(int level_a, int level_b) {
  const BasisIndex b(level_a, level_b);
  std::array<Complex, kDim> amp{};
  amp[b.index()] = 1.0;
  return DensityMatrix::from_pure(StateVector(amp));
}

StateVector dicke_state(DickeKind kind, int k, int l) {
  check_level(k, "Dicke k");
  check_level(l, "Dicke l");
  if (k >= l)
    throw ValidationError("dicke_state requires k < l, got k=" +
                          std::to_string(k) + " l=" + std::to_string(l));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::array<Complex, kDim> amp{};
  amp[BasisIndex(k, l).index()] = inv_sqrt2;
  amp[BasisIndex(l, k).index()] =
      (kind == DickeKind::symmetric) ? inv_sqrt2 : -inv_sqrt2;
  return StateVector(amp);
}

DensityMatrix superposition_state(double phi) {
  if (!(phi >= 0.0 && phi <= std::acos(-1.0) / 2.0 + 1e-15))
    throw ValidationError("superposition_state: phi outside [0, pi/2]");
  std::array<Complex, kDim> amp{};
  amp[BasisIndex(1, 2).index()] = std::cos(phi);
  amp[BasisIndex(1, 3).index()] = std::sin(phi);
  return DensityMatrix::from_pure(StateVector(amp));
}

DensityMatrix mixture_two(BasisIndex first, BasisIndex second, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("mixture_two: p outside [0,1]");
  ComplexMatrix m(kDim, kDim);
  m(first.index(), first.index()) += p;
  m(second.index(), second.index()) += 1.0 - p;
  return require_density(m);
}

DensityMatrix bound_entangled_state(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw ValidationError("bound_entangled_state: a outside (0,1)");
  const double alpha = (1.0 + a) / 2.0;
  const double beta = std::sqrt(1.0 - a * a) / 2.0;
  const double scale = 1.0 / (8.0 * a + 1.0);
  ComplexMatrix m(kDim, kDim);
  for (int i = 0; i < kDim; ++i) m(i, i) = a;
  m(6, 6) = alpha;
  m(8, 8) = alpha;
  m(0, 4) = m(4, 0) = a;
  m(0, 8) = m(8, 0) = a;
  m(4, 8) = m(8, 4) = a;
  m(6, 8) = m(8, 6) = beta;
  m *= Complex(scale);
  return require_density(m);
}

DensityMatrix maximally_mixed() {
  ComplexMatrix m = ComplexMatrix::identity(kDim);
  m *= Complex(1.0 / kDim);
  return require_density(m);
}

std::string_view collective_name(CollectiveState c) {
  switch (c) {
    case CollectiveState::e1: return "e1";
    case CollectiveState::e2: return "e2";
    case CollectiveState::s12: return "s12";
    case CollectiveState::a12: return "a12";
    case CollectiveState::s13: return "s13";
    case CollectiveState::a13: return "a13";
    case CollectiveState::s23: return "s23";
    case CollectiveState::a23: return "a23";
    case CollectiveState::g: return "g";
  }
  return "?";
}

StateVector collective_vector(CollectiveState c) {
  switch (c) {
    case CollectiveState::e1: {
      std::array<Complex, kDim> amp{};
      amp[BasisIndex(1, 1).index()] = 1.0;
      return StateVector(amp);
    }
    case CollectiveState::e2: {
      std::array<Complex, kDim> amp{};
      amp[BasisIndex(2, 2).index()] = 1.0;
      return StateVector(amp);
    }
    case CollectiveState::g: {
      std::array<Complex, kDim> amp{};
      amp[BasisIndex(3, 3).index()] = 1.0;
      return StateVector(amp);
    }
    case CollectiveState::s12: return dicke_state(DickeKind::symmetric, 1, 2);
    case CollectiveState::a12: return dicke_state(DickeKind::antisymmetric, 1, 2);
    case CollectiveState::s13: return dicke_state(DickeKind::symmetric, 1, 3);
    case CollectiveState::a13: return dicke_state(DickeKind::antisymmetric, 1, 3);
    case CollectiveState::s23: return dicke_state(DickeKind::symmetric, 2, 3);
    case CollectiveState::a23: return dicke_state(DickeKind::antisymmetric, 2, 3);
  }
  throw ValidationError("collective_vector: bad state");
}

std::array<double, kCollectiveCount> collective_populations(
    const DensityMatrix& rho) {
  std::array<double, kCollectiveCount> pops{};
  const ComplexMatrix& m = rho.matrix();
  for (int ci = 0; ci < kCollectiveCount; ++ci) {
    const auto vec = collective_vector(static_cast<CollectiveState>(ci));
    const auto& amp = vec.amplitudes();
    Complex s{};
    for (int r = 0; r < kDim; ++r) {
      if (amp[r] == Complex{}) continue;
      for (int c = 0; c < kDim; ++c) {
        if (amp[c] == Complex{}) continue;
        s += std::conj(amp[r]) * m(r, c) * amp[c];
      }
    }
    pops[ci] = s.real();
  }
  return pops;
}

}  // namespace vpair
