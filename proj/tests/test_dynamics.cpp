#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "vpair/asymptotics.hpp"
#include "vpair/dynamics.hpp"
#include "vpair/states.hpp"

using namespace vpair;

namespace {

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-3.0, 3.0);
  SystemParams p;
  p.gamma = 0.2 + rate(rng);
  p.gamma_coll_13 = fraction(rng) * p.gamma;
  p.gamma_coll_23 = fraction(rng) * p.gamma;
  p.omega_13 = shift(rng);
  p.omega_23 = shift(rng);
  return p;
}

std::vector<Complex> apply_to_vector(const ComplexMatrix& op,
                                     const StateVector& v) {
  return op.apply(std::span<const Complex>(v.amplitudes()));
}

}  // namespace

TEST_CASE("SystemParams presets and validation") {
  const auto small = SystemParams::small_separation(2.5);
  CHECK(small.gamma == 1.0);
  CHECK(small.gamma_coll_13 == 1.0);
  CHECK(small.gamma_coll_23 == 1.0);
  CHECK(small.omega_13 == 2.5);
  CHECK(small.omega_23 == 2.5);

  const auto large = SystemParams::large_separation();
  CHECK(large.gamma_coll_13 == 0.0);
  CHECK(large.omega_13 == 0.0);

  SystemParams bad;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.gamma = 1.0;
  bad.gamma_coll_13 = -0.5;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.gamma_coll_13 = 1.5;  // breaks complete positivity
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("transition operators move single-atom excitations") {
  const auto sigma31_a = transition_operator(Atom::A, 3, 1);
  const auto sigma31_b = transition_operator(Atom::B, 3, 1);

  std::array<Complex, kDim> e13{};
  e13[BasisIndex(1, 3).index()] = 1.0;
  const StateVector psi(e13);

  auto moved = apply_to_vector(sigma31_a, psi);
  CHECK(std::abs(moved[BasisIndex(3, 3).index()] - Complex(1.0)) < 1e-15);
  moved[BasisIndex(3, 3).index()] = 0.0;
  for (const auto& z : moved) CHECK(std::abs(z) == 0.0);

  const auto zero = apply_to_vector(sigma31_b, psi);
  for (const auto& z : zero) CHECK(std::abs(z) == 0.0);

  // the collective lowering operator annihilates the dark state
  const auto dark = dicke_state(DickeKind::antisymmetric, 1, 3);
  const auto collective = sigma31_a + sigma31_b;
  for (const auto& z : apply_to_vector(collective, dark))
    CHECK(std::abs(z) < 1e-15);

  CHECK_THROWS_AS(transition_operator(Atom::A, 1, 1), ValidationError);
  CHECK_THROWS_AS(transition_operator(Atom::B, 0, 3), ValidationError);
}

TEST_CASE("lindblad_rhs: stationary states and decay rates") {
  const auto ground = product_state(3, 3);
  CHECK(lindblad_rhs(ground, SystemParams::small_separation(1.0)).max_abs() <
        1e-15);

  const auto dark = DensityMatrix::from_pure(
      dicke_state(DickeKind::antisymmetric, 1, 3));
  CHECK(lindblad_rhs(dark, SystemParams::small_separation(4.2)).max_abs() <
        1e-13);

  const auto rhs = lindblad_rhs(product_state(1, 3),
                                SystemParams::large_separation());
  CHECK(std::abs(rhs(2, 2) - Complex(-2.0)) < 1e-14);  // d rho_33/dt = -2 gamma
}

TEST_CASE("lindblad_rhs output is traceless Hermitian for random inputs") {
  std::mt19937_64 rng(60);
  for (int rep = 0; rep < 100; ++rep) {
    const auto rho = testing::random_density(rng);
    const auto params = random_params(rng);
    const auto rhs = lindblad_rhs(rho, params);
    CHECK(std::abs(rhs.trace()) <= 1e-12);
    CHECK(rhs.hermitian_defect() <= 1e-12);
  }
}

TEST_CASE("build_liouvillian reproduces lindblad_rhs on the matrix-unit basis") {
  std::mt19937_64 rng(61);
  const auto params = random_params(rng);
  const auto liouv = build_liouvillian(params);
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) {
      ComplexMatrix unit(kDim, kDim);
      unit(r, c) = 1.0;
      CHECK(liouv.apply_to(unit).max_abs_diff(lindblad_rhs(unit, params)) <=
            1e-12);
    }
  for (int rep = 0; rep < 20; ++rep) {
    const auto h = testing::random_hermitian(rng, kDim);
    CHECK(liouv.apply_to(h.matrix())
              .max_abs_diff(lindblad_rhs(h.matrix(), params)) <= 1e-12);
  }
}

TEST_CASE("Superoperator preserves trace and Hermiticity") {
  std::mt19937_64 rng(62);
  const auto liouv = build_liouvillian(random_params(rng));

  // vec(identity) is a left null vector
  std::vector<Complex> left(kSuperDim, Complex{});
  const auto& m = liouv.matrix();
  for (int col = 0; col < kSuperDim; ++col) {
    Complex s{};
    for (int d = 0; d < kDim; ++d) s += m(kDim * d + d, col);
    left[col] = s;
  }
  for (const auto& z : left) CHECK(std::abs(z) < 1e-10);

  for (int rep = 0; rep < 10; ++rep) {
    const auto h = testing::random_hermitian(rng, kDim);
    CHECK(liouv.apply_to(h.matrix()).hermitian_defect() <= 1e-10);
  }
}

TEST_CASE("Liouvillian spectrum is dissipative") {
  std::mt19937_64 rng(63);
  for (const auto& params :
       {SystemParams::small_separation(0.0), SystemParams::small_separation(5.0),
        SystemParams::large_separation(), random_params(rng)}) {
    const auto analysis = stationary_analysis(params);
    CHECK(analysis.spectral_abscissa <= 1e-10);
  }
}

TEST_CASE("stationary structure: large separation is uniquely relaxing") {
  const auto analysis = stationary_analysis(SystemParams::large_separation());
  CHECK(analysis.kernel_dimension == 1);
  CHECK(analysis.purely_imaginary.empty());
}

TEST_CASE("stationary structure: small separation traps a 9-dim kernel") {
  const auto analysis = stationary_analysis(SystemParams::small_separation(0.0));
  CHECK(analysis.kernel_dimension == 9);
  CHECK(analysis.purely_imaginary.empty());
}

TEST_CASE("stationary structure: dipole-dipole shift rotates dark-ground "
          "coherences") {
  const double omega = 5.0;
  const auto analysis =
      stationary_analysis(SystemParams::small_separation(omega));
  CHECK(analysis.kernel_dimension == 5);
  REQUIRE(analysis.purely_imaginary.size() == 4);
  std::vector<double> imags;
  for (const auto& l : analysis.purely_imaginary) imags.push_back(l.imag());
  std::sort(imags.begin(), imags.end());
  CHECK(imags[0] == doctest::Approx(-omega).epsilon(1e-8));
  CHECK(imags[1] == doctest::Approx(-omega).epsilon(1e-8));
  CHECK(imags[2] == doctest::Approx(omega).epsilon(1e-8));
  CHECK(imags[3] == doctest::Approx(omega).epsilon(1e-8));
}

TEST_CASE("evolve: zero time returns the initial state") {
  std::mt19937_64 rng(64);
  const auto rho = testing::random_density(rng);
  const auto res = evolve(rho, 0.0, 1e-3, SystemParams::small_separation(0.0));
  CHECK(res.state.matrix().max_abs_diff(rho.matrix()) == 0.0);
  CHECK(res.steps == 0);
}

TEST_CASE("evolve rejects bad step sizes") {
  const auto rho = product_state(1, 3);
  const auto params = SystemParams::large_separation();
  CHECK_THROWS_AS(evolve(rho, -1.0, 1e-3, params), ValidationError);
  CHECK_THROWS_AS(evolve(rho, 1.0, 0.0, params), ValidationError);
  CHECK_THROWS_AS(evolve(rho, 1.0, 2.0, params), ValidationError);
}

TEST_CASE("evolve flags an unstable step size") {
  // dt far outside the RK4 stability region blows the state up
  const auto rho = product_state(1, 1);
  CHECK_THROWS_AS(evolve(rho, 40.0, 1.0, SystemParams::small_separation(0.0)),
                  NumericalError);
}

TEST_CASE("evolve: full decay to the ground state at large separation") {
  const auto res = evolve(product_state(1, 1), 40.0, 1e-3,
                          SystemParams::large_separation());
  CHECK(res.state.entry(9, 9).real() >= 1.0 - 1e-6);
  CHECK(res.renormalization_defect <= 1e-8);
}

TEST_CASE("evolve matches the exponential of the Liouvillian") {
  // matrix_exponential_action is the independent oracle for the integrator
  std::mt19937_64 rng(65);
  const auto params = SystemParams::small_separation(0.0);
  const auto liouv = build_liouvillian(params);
  for (int rep = 0; rep < 5; ++rep) {
    const auto rho0 = testing::random_density(rng);
    const auto direct = evolve(rho0, 7.0, 1e-3, params).state;
    const auto via_exp = matrix_exponential_action(
        liouv.matrix(), vectorize(rho0.matrix()), 7.0);
    const auto exp_state = require_density(devectorize(via_exp));
    CHECK(trace_distance(direct, exp_state) < 1e-8);
  }
}

TEST_CASE("evolve reaches the closed-form asymptotic state") {
  const auto rho0 = product_state(1, 3);
  const auto res =
      evolve(rho0, 40.0, 1e-3, SystemParams::small_separation(0.0));
  CHECK(trace_distance(res.state, asymptotic_state(rho0)) < 1e-6);

  // vectorized oracle at t = 40/gamma, cross-checked against the closed form
  const auto liouv = build_liouvillian(SystemParams::small_separation(0.0));
  const auto via_exp = matrix_exponential_action(
      liouv.matrix(), vectorize(rho0.matrix()), 40.0);
  CHECK(trace_distance(require_density(devectorize(via_exp)),
                       asymptotic_state(rho0)) < 1e-6);
}

TEST_CASE("evolve preserves trace and Hermiticity along the trajectory") {
  std::mt19937_64 rng(66);
  const auto params = SystemParams::small_separation(1.0);
  auto state = testing::random_density(rng);
  double renorm_total = 0.0;
  for (int chunk = 0; chunk < 8; ++chunk) {
    const auto res = evolve(state, 5.0, 1e-3, params);
    renorm_total += res.renormalization_defect;
    state = res.state;
    CHECK(std::abs(state.matrix().trace() - Complex(1.0)) <= 1e-10);
    CHECK(state.matrix().hermitian_defect() <= 1e-10);
  }
  CHECK(renorm_total <= 1e-8);
}

TEST_CASE("semigroup composition") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> tdist(0.5, 10.0);
  const auto params = SystemParams::small_separation(0.7);
  for (int rep = 0; rep < 3; ++rep) {
    const auto rho0 = testing::random_density(rng);
    const double t1 = tdist(rng), t2 = tdist(rng);
    const auto joint = evolve(rho0, t1 + t2, 1e-3, params).state;
    const auto stepped =
        evolve(evolve(rho0, t1, 1e-3, params).state, t2, 1e-3, params).state;
    CHECK(trace_distance(joint, stepped) < 1e-8);
  }
}

TEST_CASE("dark-state populations are constant once |a12> is unpopulated") {
  // generic states first transfer their |a12> weight into the dark states,
  // so strict constancy holds for initial states with no |a12> population
  std::mt19937_64 rng(68);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto params = SystemParams::small_separation(0.0);

  ComplexMatrix m(kDim, kDim);
  std::array<double, 5> weights{};
  double sum = 0.0;
  for (auto& w : weights) {
    w = unit(rng);
    sum += w;
  }
  // diagonal support outside |1,2> and |2,1|, plus an s12 component
  const int flats[4] = {3, 6, 7, 9};
  for (int i = 0; i < 4; ++i)
    m(flats[i] - 1, flats[i] - 1) = weights[i] / sum;
  const auto s12 = dicke_state(DickeKind::symmetric, 1, 2).projector();
  m += Complex(weights[4] / sum) * s12;
  auto state = require_density(m);

  const auto pops0 = collective_populations(state);
  CHECK(collective_population(pops0, CollectiveState::a12) < 1e-14);
  const double a13_0 = collective_population(pops0, CollectiveState::a13);
  const double a23_0 = collective_population(pops0, CollectiveState::a23);
  for (int chunk = 0; chunk < 10; ++chunk) {
    state = evolve(state, 4.0, 1e-3, params).state;
    const auto pops = collective_populations(state);
    CHECK(std::abs(collective_population(pops, CollectiveState::a13) - a13_0) <=
          1e-8);
    CHECK(std::abs(collective_population(pops, CollectiveState::a23) - a23_0) <=
          1e-8);
  }
}

TEST_CASE("x and y are conserved along every trajectory") {
  // the |a12> reservoir drains into the dark states exactly so that the
  // combinations x and y stay fixed
  std::mt19937_64 rng(70);
  for (int rep = 0; rep < 3; ++rep) {
    auto state = testing::random_density(rng);
    const auto params0 = asymptotic_params(state);
    const auto a12_initial = collective_population(
        collective_populations(state), CollectiveState::a12);
    for (int chunk = 0; chunk < 4; ++chunk) {
      state = evolve(state, 3.0, 1e-3, SystemParams::small_separation(0.0)).state;
      const auto params = asymptotic_params(state);
      CHECK(std::abs(params.x - params0.x) <= 1e-8);
      CHECK(std::abs(params.y - params0.y) <= 1e-8);
    }
    // the reservoir itself must have drained
    const auto a12_final = collective_population(collective_populations(state),
                                                 CollectiveState::a12);
    CHECK(a12_final < 1e-6);
    CHECK(a12_initial > 1e-3);
  }
}

TEST_CASE("evolved dark-sector parameters are insensitive to the shift") {
  std::mt19937_64 rng(69);
  for (int rep = 0; rep < 2; ++rep) {
    const auto rho0 = testing::random_diagonal_density(rng);
    const auto expect = asymptotic_params(rho0);
    for (double omega : {0.0, 1.0, 10.0}) {
      const auto fin =
          evolve(rho0, 40.0, 1e-3, SystemParams::small_separation(omega)).state;
      const auto got = asymptotic_params(fin);
      CHECK(std::abs(got.x - expect.x) < 1e-6);
      CHECK(std::abs(got.y - expect.y) < 1e-6);
      CHECK(std::abs(got.t - expect.t) < 1e-6);
      CHECK(std::abs(got.z - expect.z) < 1e-6);
      CHECK(std::abs(std::abs(got.w) - std::abs(expect.w)) < 1e-6);
      CHECK(std::abs(std::abs(got.v) - std::abs(expect.v)) < 1e-6);
    }
  }

  // nonzero dark-ground coherence: only its magnitude survives the rotation
  const auto psi = superposition_state(0.7);
  const auto expect = asymptotic_params(psi);
  REQUIRE(std::abs(expect.v) > 0.01);
  for (double omega : {0.0, 10.0}) {
    const auto fin =
        evolve(psi, 40.0, 1e-3, SystemParams::small_separation(omega)).state;
    const auto got = asymptotic_params(fin);
    CHECK(std::abs(got.x - expect.x) < 1e-6);
    CHECK(std::abs(got.y - expect.y) < 1e-6);
    CHECK(std::abs(std::abs(got.v) - std::abs(expect.v)) < 1e-6);
    if (omega == 0.0) CHECK(std::abs(got.v - expect.v) < 1e-6);
  }
}
