#include <doctest.h>

#include <cmath>
#include <random>

#include "qscatter/errors.hpp"
#include "qscatter/numeric_oracle.hpp"
#include "qscatter/scattering_core.hpp"

using namespace qscatter;

namespace {
constexpr cplx I{0.0, 1.0};

double max_gap(const Amplitudes& x, const Amplitudes& y) {
  const cplx a[] = {x.sigma_r, x.sigma_l, x.rho_r, x.rho_l, x.A_r, x.B_r, x.A_l, x.B_l};
  const cplx b[] = {y.sigma_r, y.sigma_l, y.rho_r, y.rho_l, y.A_r, y.B_r, y.A_l, y.B_l};
  double g = 0.0;
  for (int i = 0; i < 8; ++i) g = std::max(g, std::abs(a[i] - b[i]));
  return g;
}
}  // namespace

TEST_CASE("params reject bad input") {
  CHECK_THROWS_AS(DeltaPairParams(1.0, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(DeltaPairParams(1.0, 1.0, -2.0), InvalidArgument);
  CHECK_THROWS_AS(DeltaPairParams(NAN, 1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(DeltaPairParams(1.0, INFINITY, 1.0), InvalidArgument);
  CHECK(DeltaPairParams(-3.0, 2.0, 0.5).alpha() == -3.0);
}

TEST_CASE("nondimensionalize") {
  PhysicalQuantities q;
  q.alpha = 0.5;
  q.beta = -0.25;
  q.a = 1.0;
  q.t = 4.0;
  q.x = 3.0;
  CHECK(nondimensionalize(q, 1.0).params.alpha() == doctest::Approx(0.5));
  const auto two = nondimensionalize(q, 2.0);
  CHECK(two.params.alpha() == doctest::Approx(1.0));
  CHECK(two.params.beta() == doctest::Approx(-0.5));
  CHECK(two.t == doctest::Approx(2.0));
  CHECK(two.x + two.params.a() == doctest::Approx((3.0 + 1.0) / 2.0));
  const auto kink = nondimensionalize(q, 3.0, NondimModel::Kink);
  CHECK(kink.params.alpha() == doctest::Approx(1.5));
  CHECK(kink.x == doctest::Approx(1.0));
  CHECK_THROWS_AS(nondimensionalize(q, 0.0), InvalidArgument);
  CHECK_THROWS_AS(nondimensionalize(q, -1.0), InvalidArgument);
}

TEST_CASE("denominator examples") {
  CHECK(std::abs(delta_denominator(DeltaPairParams(0, 0, 1), 1.0) - 4.0) < 1e-15);
  CHECK(std::abs(delta_denominator(DeltaPairParams(2, 0, 1), 1.0) - cplx(4, 4)) < 1e-15);
  const cplx k(0.7, 0.3);
  const JostPair j = jost_factors(-2.0, 1.0, k);
  const cplx d = delta_denominator(DeltaPairParams(-2, -2, 1), k);
  CHECK(std::abs(d - 4.0 * j.J0 * j.J1) / std::abs(d) < 1e-12);
}

TEST_CASE("amplitudes: free and single delta") {
  const Amplitudes f = double_delta_amplitudes(DeltaPairParams(0, 0, 1.7), 1.0);
  CHECK(std::abs(f.sigma_r - 1.0) < 1e-15);
  CHECK(std::abs(f.sigma_l - 1.0) < 1e-15);
  CHECK(std::abs(f.rho_r) < 1e-15);
  CHECK(std::abs(f.rho_l) < 1e-15);
  CHECK(std::abs(f.A_r - 1.0) < 1e-15);
  CHECK(std::abs(f.B_r) < 1e-15);

  const Amplitudes s = double_delta_amplitudes(DeltaPairParams(2, 0, 1), 1.0);
  CHECK(std::abs(s.sigma_r - cplx(0.5, -0.5)) < 1e-14);
  CHECK(std::norm(s.sigma_r) == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(double_delta_amplitudes(DeltaPairParams(1, 1, 1), 0.0), InvalidArgument);
  CHECK_THROWS_AS(double_delta_amplitudes(DeltaPairParams(1, 1, 1), -1.0), InvalidArgument);
}

TEST_CASE("amplitudes match the ODE oracle (alpha=2, beta=1, a=1, k=1.3)") {
  const auto o = solve_scattering_numeric(PotentialSpec::two_delta(2, 1, 1), 1.3);
  CHECK(max_gap(o.amplitudes(), double_delta_amplitudes(DeltaPairParams(2, 1, 1), 1.3)) < 1e-10);
}

TEST_CASE("S-matrix structure") {
  const SMatrix2x2 id = s_matrix(double_delta_amplitudes(DeltaPairParams(0, 0, 1), 0.8));
  CHECK(std::abs(id(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(id(0, 1)) < 1e-15);
  CHECK(std::abs(id(1, 0)) < 1e-15);
  CHECK(std::abs(id(1, 1) - 1.0) < 1e-15);

  CHECK(s_matrix(double_delta_amplitudes(DeltaPairParams(2, 2, 1), 1.0)).unitarity_defect() < 1e-12);

  const Amplitudes sym = double_delta_amplitudes(DeltaPairParams(-0.5, -0.5, 2), 0.4);
  const SMatrix2x2 S = s_matrix(sym);
  CHECK(std::abs(S(0, 1) - S(1, 0)) < 1e-12);
  CHECK(std::abs(sym.rho_r - sym.rho_l) < 1e-12);
}

TEST_CASE("phase shifts") {
  const auto free = phase_shifts(s_matrix(double_delta_amplitudes(DeltaPairParams(0, 0, 1), 1.0)), 1.0);
  CHECK(std::abs(free.delta_plus) < 1e-15);
  CHECK(std::abs(free.delta_minus) < 1e-15);

  SUBCASE("eigenvalue consistency and continuity") {
    const DeltaPairParams p(2, 0, 1);
    std::vector<double> ks;
    for (int i = 0; i < 2000; ++i) ks.push_back(0.1 + i * (20.0 - 0.1) / 1999.0);
    const auto sweep = phase_shift_sweep([&](double k) { return double_delta_amplitudes(p, k); }, ks);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      CHECK(std::abs(std::exp(2.0 * I * sweep[i].delta_plus) - sweep[i].lambda_plus) < 1e-10);
      CHECK(std::abs(std::exp(2.0 * I * sweep[i].delta_minus) - sweep[i].lambda_minus) < 1e-10);
      if (i) {
        CHECK(std::abs(sweep[i].delta_plus - sweep[i - 1].delta_plus) < kPi);
        CHECK(std::abs(sweep[i].delta_minus - sweep[i - 1].delta_minus) < kPi);
      }
    }
    // transparency at high energy, modulo the branch of the unwrapped phase
    const auto& last = sweep.back();
    CHECK(std::abs(std::remainder(last.delta_plus, kPi)) < 0.06);
    CHECK(std::abs(std::remainder(last.delta_minus, kPi)) < 0.06);
  }

  SUBCASE("non-unitary input is rejected") {
    SMatrix2x2 bad = s_matrix(double_delta_amplitudes(DeltaPairParams(1, 1, 1), 1.0));
    bad.m[0][0] *= 1.1;
    CHECK_THROWS_AS(phase_shifts(bad, 1.0), InconsistentInput);
  }
}

TEST_CASE("spectral density") {
  CHECK(spectral_density_shift(DeltaPairParams(0, 0, 1), 1.0) == 0.0);
  const DeltaPairParams p(2, 2, 1);
  const double h = spectral_density_shift(p, 1.0, DensityConvention::HalfLine, 1e-5);
  const double h2 = spectral_density_shift(p, 1.0, DensityConvention::HalfLine, 5e-6);
  CHECK(std::abs(h - h2) < 1e-6);
  CHECK(spectral_density_shift(p, 1.0, DensityConvention::FullLine) == doctest::Approx(h / 2.0));
  CHECK_THROWS_AS(spectral_density_shift(p, 1e-6), InvalidArgument);
}

TEST_CASE("Jost factors") {
  const JostPair z = jost_factors(0.0, 1.0, cplx(0.3, -0.2));
  CHECK(std::abs(z.J0 - cplx(0.3, -0.2)) < 1e-15);
  CHECK(std::abs(z.J1 - cplx(0.3, -0.2)) < 1e-15);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const DeltaPairParams p(-2, -2, 1);
  for (int i = 0; i < 100; ++i) {
    const cplx k(u(rng), 0.5 * u(rng));
    const JostPair j = jost_factors(-2.0, 1.0, k);
    const cplx d = delta_denominator(p, k);
    CHECK(std::abs(d - 4.0 * j.J0 * j.J1) / std::abs(d) < 1e-12);
  }
}

TEST_CASE("high-energy transparency") {
  for (double al : {-2.0, -1.0, 0.5, 2.0})
    for (double be : {-2.0, 1.0, 2.0}) {
      const Amplitudes m = double_delta_amplitudes(DeltaPairParams(al, be, 1.0), 100.0);
      CHECK(std::abs(m.rho_r) < 0.05);
      CHECK(std::abs(m.sigma_r) > 0.99);
    }
}
