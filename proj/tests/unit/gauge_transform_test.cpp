#include <doctest.h>

#include <random>

#include "msm/gauge_transform.hpp"
#include "support.hpp"

using namespace msm;
using testing::kPi;

namespace {

ComplexField smooth_map(const Grid& g, std::uint64_t seed, double amplitude = 0.5) {
  const auto f = testing::smooth_field(g, seed, 3);
  return Complex(amplitude / max_abs(f)) * f;
}

ComplexField single_mode_map(const Grid& g, double eps, Complex offset = 0.0) {
  return ComplexField::constant(g, offset) + testing::plane_wave(g, 1, 0, eps);
}

}  // namespace

TEST_SUITE("gauge_transform") {

TEST_CASE("stereographic projection") {
  const auto check = [](Complex z, std::array<double, 3> e) {
    const auto s = stereographic(z);
    for (int i = 0; i < 3; ++i) CHECK(s[i] == doctest::Approx(e[i]).epsilon(1e-15));
  };
  check(0.0, {0, 0, 1});
  check(1.0, {1, 0, 0});
  check(Complex(0, 1), {0, 1, 0});
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const auto s = stereographic({n(rng), n(rng)});
    CHECK(std::abs(std::hypot(s[0], s[1], s[2]) - 1.0) < 1e-14);
  }
}

TEST_CASE("covariant frame") {
  const Grid g(32, 2 * kPi);
  SUBCASE("constant map") {
    const auto b = covariant_frame(ComplexField::constant(g, Complex(0.3, -0.2)));
    CHECK(max_abs(b.u1) < 1e-15);
    CHECK(max_abs(b.u2) < 1e-15);
  }
  SUBCASE("single mode: exact form and third-order agreement with i eps e^{ix1}") {
    double last = 0.0;
    for (const double eps : {0.1, 0.05, 0.025}) {
      const auto b = covariant_frame(single_mode_map(g, eps));
      const auto lead = testing::plane_wave(g, 1, 0, Complex(0, eps));
      CHECK(testing::max_difference(b.u1, Complex(1.0 / (1.0 + eps * eps)) * lead) < 1e-15);
      CHECK(max_abs(b.u2) < 1e-15);
      const double err = testing::max_difference(b.u1, lead);
      if (last > 0.0) CHECK(last / err == doctest::Approx(8.0).epsilon(0.01));
      last = err;
    }
  }
  SUBCASE("frame is bounded by the derivative") {
    const auto z = smooth_map(g, 3, 2.0);
    const auto b = covariant_frame(z);
    const auto dz = derivative(z, Axis::x2);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(b.u2.samples()[i]) <= std::abs(dz.samples()[i]) + 1e-15);
  }
}

TEST_CASE("psi for simple maps") {
  const Grid g(32, 2 * kPi);
  CHECK(max_abs(solve_psi(ComplexField::constant(g, 0.7))) == 0.0);
  CHECK(max_abs(solve_psi(single_mode_map(g, 0.2))) < 1e-15);
  SUBCASE("real maps have no source") {
    const auto z = smooth_map(g, 5).real_part();
    CHECK(max_abs(gauge_source(z)) < 1e-13);
    CHECK(max_abs(solve_psi(z)) < 1e-13);
  }
  SUBCASE("shifted single mode: psi = -eps sin(x1) + O(eps^2)") {
    double last = 0.0;
    for (const double eps : {0.02, 0.01, 0.005}) {
      const auto psi = solve_psi(single_mode_map(g, eps, 1.0));
      const auto lead = ComplexField::from_function(g, [eps](double x1, double) { return -eps * std::sin(x1); });
      const double err = testing::max_difference(psi, lead);
      CHECK(err < eps * eps);
      if (last > 0.0) CHECK(last / err == doctest::Approx(4.0).epsilon(0.05));
      last = err;
      CHECK(std::abs(psi.mean()) < 1e-16);
    }
  }
}

TEST_CASE("gauge source against a finite-difference divergence") {
  // Sixth-order central differences on a fine grid; the tolerance reflects
  // their truncation error.
  const Grid g(128, 2 * kPi);
  const auto z = smooth_map(g, 8);
  const auto b = covariant_frame(z);
  std::vector<double> d1(g.size()), d2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    d1[i] = 2.0 * (std::conj(b.u1.samples()[i]) * z.samples()[i]).imag();
    d2[i] = 2.0 * (std::conj(b.u2.samples()[i]) * z.samples()[i]).imag();
  }
  const double h = g.spacing();
  const std::size_t n = g.n();
  const auto at = [&](const std::vector<double>& f, long i1, long i2) {
    const auto w = [n](long i) { return static_cast<std::size_t>((i % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n)); };
    return f[g.index(w(i1), w(i2))];
  };
  const double c[] = {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
  const auto source = gauge_source(z);
  double err = 0.0;
  for (long i1 = 0; i1 < static_cast<long>(n); ++i1) {
    for (long i2 = 0; i2 < static_cast<long>(n); ++i2) {
      double fd = 0.0;
      for (long k = 1; k <= 3; ++k) {
        fd += c[k - 1] * (at(d1, i1 + k, i2) - at(d1, i1 - k, i2) + at(d2, i1, i2 + k) - at(d2, i1, i2 - k));
      }
      fd /= h;
      err = std::max(err, std::abs(fd - source.at(i1, i2).real()));
    }
  }
  CHECK(err < 1e-6);
}

TEST_CASE("derived fields and identities for a smooth map") {
  const Grid g(64, 2 * kPi);
  const auto z = smooth_map(g, 11);
  const auto frame = derive_u(z);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(std::abs(frame.u.u1.samples()[i]) - std::abs(frame.b.u1.samples()[i])) < 1e-15);
    CHECK(std::abs(frame.u.u2.samples()[i] - std::polar(1.0, frame.psi.samples()[i].real()) * frame.b.u2.samples()[i]) < 1e-15);
  }
  CHECK(std::abs(frame.psi.mean()) < 1e-15);
  CHECK(divergence_check(frame.connection) < 1e-8);
  CHECK(curvature_check(frame.u, frame.connection, CurvatureSign::geometric) < 1e-8);
  CHECK(compatibility_residual(frame.u, frame.connection) < 1e-8);
  const auto formula = compute_A_frame(frame.u);
  CHECK(relative_l2_difference(mean_free(frame.connection), formula) < 1e-6);
  const auto coupling = compute_A(frame.u, frame.u);
  CHECK(relative_l2_difference(mean_free(frame.connection), {-coupling.a1, -coupling.a2}) < 1e-6);
  const double half_mass = 0.5 * (std::pow(lp_norm(frame.u.u1, 2.0), 2) + std::pow(lp_norm(frame.u.u2, 2.0), 2));
  CHECK(energy(z) == doctest::Approx(half_mass).epsilon(1e-12));
}

TEST_CASE("constant map gives vanishing fields") {
  const Grid g(16, 2 * kPi);
  const auto frame = derive_u(ComplexField::constant(g, Complex(0.2, 0.1)));
  CHECK(max_abs(frame.u.u1) == 0.0);
  CHECK(max_abs(frame.connection.a1) == 0.0);
  CHECK(max_abs(frame.connection.a2) == 0.0);
  CHECK(energy(ComplexField::constant(g, 3.0)) == 0.0);
}

TEST_CASE("a global phase leaves moduli and energy unchanged") {
  const Grid g(64, 2 * kPi);
  const auto frame = derive_u(smooth_map(g, 2));
  const Complex phase = std::polar(1.0, 0.7);
  const FieldPair shifted = phase * frame.u;
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(shifted.u1.samples()[i]) == doctest::Approx(std::abs(frame.u.u1.samples()[i])).epsilon(1e-15));
  }
  CHECK(compatibility_residual(shifted, frame.connection) ==
        doctest::Approx(compatibility_residual(frame.u, frame.connection)).epsilon(1e-6));
}

TEST_CASE("u0 of a single mode") {
  const Grid g(16, 2 * kPi);
  const auto wave = testing::plane_wave(g, 1, 0);
  const FieldPair u{wave, ComplexField::zeros(g)};
  const VectorPotential zero{ComplexField::zeros(g), ComplexField::zeros(g)};
  CHECK(testing::max_difference(u0_from_u(u, zero), -wave) < 1e-14);
  CHECK(max_abs(u0_from_u(zero_pair(g), zero)) == 0.0);
}

TEST_CASE("energy of a single mode") {
  const Grid g(16, 2 * kPi);
  for (const double eps : {0.1, 0.5, 1.0}) {
    CHECK(energy(single_mode_map(g, eps)) == doctest::Approx(eps * eps / (2 * std::pow(1 + eps * eps, 2))).epsilon(1e-14));
  }
}

}
