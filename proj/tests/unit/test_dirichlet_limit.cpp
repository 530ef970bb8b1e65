#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/errors.hpp"
#include "qscatter/numeric_oracle.hpp"

using namespace qscatter;

namespace {
constexpr cplx I{0.0, 1.0};
}

TEST_CASE("two-delta Dirichlet momenta") {
  const auto m = delta_dirichlet_momenta(1.0, 3);
  REQUIRE(m.size() == 3);
  CHECK(m[0].k == doctest::Approx(kPi / 2));
  CHECK(m[1].k == doctest::Approx(kPi));
  CHECK(m[2].k == doctest::Approx(3 * kPi / 2));
  CHECK(m[0].parity == Parity::Even);
  CHECK(m[1].parity == Parity::Odd);
  const std::vector<double> grid{-1.0, -0.5, 0.0, 0.25, 1.0};
  const auto psi = delta_mode_wavefunction(m[1], grid);
  CHECK(std::abs(psi.values.front()) < 1e-15);
  CHECK(std::abs(psi.values.back()) < 1e-15);
  CHECK(std::abs(psi.values[3] - std::sin(kPi * 0.25)) < 1e-15);
}

TEST_CASE("strong-coupling roots approach k_n") {
  const auto roots = strong_coupling_roots(DeltaPairParams(1e8, 1e8, 1.0), 3);
  REQUIRE(roots.size() == 3);
  for (int n = 1; n <= 3; ++n) CHECK(std::abs(roots[n - 1] - n * kPi / 2) < 1e-4);
}

TEST_CASE("spectral functions") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 8.0);
  for (int i = 0; i < 10; ++i) {
    const double a = u(rng);
    CHECK(std::abs(h_odd(I, a)) < 1e-14);
    CHECK(std::abs(h_even(0.0, a)) < 1e-15);
  }
  CHECK(std::abs(h_even(cplx(0, 0.9986), 4.0)) < 5e-4);
}

TEST_CASE("critical separation") {
  const double ac = critical_separation();
  CHECK(std::abs(ac - 1.1996786) < 1e-6);
  CHECK(std::abs(ac * std::tanh(ac) - 1.0) < 1e-12);
  CHECK(kink_ground_state(ac + 0.01).has_value());
  CHECK(kink_ground_state(ac + 0.01)->kappa_b < 0.3);
  CHECK_FALSE(kink_ground_state(ac - 0.01).has_value());
}

TEST_CASE("kink ground state") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = kink_ground_state(4.0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  REQUIRE(g.has_value());
  CHECK(std::abs(g->kappa_b - 0.9986) < 5e-4);
  CHECK(std::abs(h_even(cplx(0, g->kappa_b), 4.0)) < 1e-12);
  CHECK(g->omega == doctest::Approx(std::sqrt(1 - g->kappa_b * g->kappa_b)));
  CHECK(secs < 1.0);
  CHECK(kink_ground_state(12.0)->kappa_b > kink_ground_state(4.0)->kappa_b);
  CHECK(1.0 - kink_ground_state(12.0)->kappa_b < 1e-9);
  CHECK_FALSE(kink_ground_state(1.0).has_value());
}

TEST_CASE("kink Dirichlet spectrum at a = 4") {
  const auto modes = kink_dirichlet_spectrum(4.0, 6);
  REQUIRE(modes.size() == 6);
  CHECK(modes[0].parity == Parity::Odd);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const auto& m = modes[i];
    const cplx h = m.parity == Parity::Odd ? h_odd(m.k, 4.0) : h_even(m.k, 4.0);
    CHECK(std::abs(h) < 1e-10);
    if (i) {
      CHECK(m.parity != modes[i - 1].parity);
      CHECK(m.k > modes[i - 1].k);
    }
    const std::vector<double> ends{-4.0, 4.0};
    const auto psi = kink_mode_wavefunction(m.k, m.parity, 4.0, ends);
    CHECK(std::abs(psi.values[0]) < 1e-8);
    CHECK(std::abs(psi.values[1]) < 1e-8);

    const auto grid = uniform_grid(-4.0, 4.0, 8001);
    const auto shape = kink_mode_wavefunction(m.k, m.parity, 4.0, grid, Normalization::L2);
    CHECK(ode_residual(shape, PotentialSpec::kink_delta(0, 0, 4.0), m.k * m.k + 1.0) < 1e-5);
  }
  CHECK_THROWS_AS(kink_dirichlet_spectrum(1.0, 3), OutOfRegime);
}

TEST_CASE("ground-state wave function solves the ODE") {
  const auto g = kink_ground_state(4.0);
  const auto grid = uniform_grid(-4.0, 4.0, 8001);
  const auto psi = kink_mode_wavefunction(cplx(0, g->kappa_b), Parity::Even, 4.0, grid,
                                          Normalization::L2);
  CHECK(std::abs(psi.values.front()) < 1e-8);
  CHECK(ode_residual(psi, PotentialSpec::kink_delta(0, 0, 4.0), 1 - g->kappa_b * g->kappa_b) < 1e-5);
}

TEST_CASE("root spacing at large separation") {
  const double a = 50.0;
  const auto modes = kink_dirichlet_spectrum(a, 12);
  for (std::size_t i = 1; i < modes.size(); ++i)
    CHECK(std::abs((modes[i].k - modes[i - 1].k) / (kPi / (2 * a)) - 1.0) < 0.05);
}

TEST_CASE("shapes at k = i") {
  const auto grid = uniform_grid(-3.0, 3.0, 61);
  const auto odd = kink_mode_wavefunction(I, Parity::Odd, 3.0, grid);
  const auto even = kink_mode_wavefunction(I, Parity::Even, 3.0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(odd.values[i]) < 1e-12);
    CHECK(std::abs(even.values[i] - I / std::cosh(grid[i])) < 1e-12);
  }
}

TEST_CASE("L2 normalisation") {
  const auto grid = uniform_grid(-4.0, 4.0, 4001);
  const auto modes = kink_dirichlet_spectrum(4.0, 2);
  const auto psi = kink_mode_wavefunction(modes[1].k, modes[1].parity, 4.0, grid, Normalization::L2);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    sum += 0.5 * (std::norm(psi.values[i]) + std::norm(psi.values[i + 1])) * (grid[i + 1] - grid[i]);
  CHECK(std::abs(sum - 1.0) < 1e-8);
}
