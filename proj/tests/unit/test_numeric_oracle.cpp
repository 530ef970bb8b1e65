#include <doctest.h>

#include <cmath>
#include <random>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/errors.hpp"
#include "qscatter/numeric_oracle.hpp"

using namespace qscatter;

TEST_CASE("free potential is transparent") {
  PotentialSpec p;
  for (double k : {0.1, 1.0, 4.0}) {
    const auto r = solve_scattering_numeric(p, k);
    CHECK(std::abs(r.sigma - 1.0) < 1e-10);
    CHECK(std::abs(r.rho_r) < 1e-10);
    CHECK(std::abs(r.rho_l) < 1e-10);
  }
}

TEST_CASE("truncated PT at a wide window") {
  const auto r = solve_scattering_numeric(PotentialSpec::kink_delta(0, 0, 10), 1.0);
  CHECK(std::abs(r.rho_r) < 1e-3);
  CHECK(std::abs(std::norm(r.sigma) + std::norm(r.rho_r) - 1.0) < 1e-6);
}

TEST_CASE("fourth-order convergence") {
  // A large momentum makes the RK4 error visible at the admissible step sizes.
  const double k = 30.0;
  const Amplitudes exact = double_delta_amplitudes(DeltaPairParams(2, 1, 1), k);
  const auto err = [&](double h) {
    const auto r = solve_scattering_numeric(PotentialSpec::two_delta(2, 1, 1), k, h);
    return std::abs(r.sigma - exact.sigma_r) + std::abs(r.rho_r - exact.rho_r);
  };
  CHECK(err(1e-3) / err(5e-4) >= 8.0);
}

TEST_CASE("accuracy contract") {
  CHECK_THROWS_AS(solve_scattering_numeric(PotentialSpec::two_delta(1, 1, 1), 1.0, 2e-3),
                  AccuracyError);
  CHECK_THROWS_AS(solve_scattering_numeric(PotentialSpec::two_delta(1, 1, 1), 0.0), InvalidArgument);
  PotentialSpec bad = PotentialSpec::single_delta(1.0, 5.0);
  bad.x_max = 4.0;
  CHECK_THROWS_AS(solve_scattering_numeric(bad, 1.0), InvalidArgument);
}

TEST_CASE("bound states by shooting") {
  const auto single = solve_bound_states_numeric(PotentialSpec::single_delta(-2.0), 0.05, 3.0);
  REQUIRE(single.kappas.size() == 1);
  CHECK(std::abs(single.kappas[0] - 1.0) < 1e-8);

  const auto pt = solve_bound_states_numeric(PotentialSpec::full_line_pt(20.0), 0.05, 3.0);
  REQUIRE(pt.kappas.size() == 1);
  CHECK(std::abs(pt.kappas[0] - 1.0) < 1e-6);

  const auto shallow = solve_bound_states_numeric(PotentialSpec::full_line_pt(3.0), 0.05, 3.0);
  CHECK_FALSE(shallow.warnings.empty());

  CHECK(solve_bound_states_numeric(PotentialSpec::two_delta(1, 1, 1), 0.01, 3.0).kappas.empty());
  CHECK_THROWS_AS(solve_bound_states_numeric(PotentialSpec::two_delta(1, 1, 1), 1.0, 0.5),
                  InvalidArgument);
}

TEST_CASE("ode residual") {
  const double k = 1.7, h = 1e-3;
  SampledWaveFunction s;
  s.x = uniform_grid(-0.9, 0.9, 1801);
  for (double x : s.x) s.values.push_back(std::sin(k * x));
  const PotentialSpec free;
  const double r = ode_residual(s, free, k * k);
  CHECK(r < k * k * k * k * h * h);

  SampledWaveFunction noise = s;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& v : noise.values) v = u(rng);
  CHECK(ode_residual(noise, free, k * k) > 1.0);

  CHECK_THROWS_AS(ode_residual(s, PotentialSpec::two_delta(1, 1, 0.5), k * k), InvalidGrid);
  // deltas on the grid end points are allowed
  CHECK_NOTHROW(ode_residual(s, PotentialSpec::two_delta(1, 1, 0.9), k * k));
  SampledWaveFunction uneven = s;
  uneven.x[10] += 1e-4;
  CHECK_THROWS_AS(ode_residual(uneven, free, k * k), InvalidGrid);
}

TEST_CASE("even kink-Dirichlet mode residual") {
  const auto modes = kink_dirichlet_spectrum(4.0, 2);
  const DirichletMode& even = modes[1].parity == Parity::Even ? modes[1] : modes[0];
  const auto grid = uniform_grid(-4.0, 4.0, 8001);
  const auto psi = kink_mode_wavefunction(even.k, Parity::Even, 4.0, grid, Normalization::L2);
  CHECK(ode_residual(psi, PotentialSpec::kink_delta(0, 0, 4), even.k * even.k + 1) < 1e-5);
}
