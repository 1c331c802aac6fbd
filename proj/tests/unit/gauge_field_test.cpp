#include <doctest.h>

#include "msm/gauge_field.hpp"
#include "support.hpp"

using namespace msm;
using testing::kPi;

namespace {

const Grid kSmall(16, 2 * kPi);

// u1 = 1, u2 = i sin(x2): Im(u1 conj(u2)) = -sin(x2).
FieldPair sine_pair(const Grid& g = kSmall) {
  return {ComplexField::constant(g, 1.0),
          ComplexField::from_function(g, [](double, double x2) { return Complex(0.0, std::sin(x2)); })};
}

double potential_difference(const VectorPotential& a, const VectorPotential& b) {
  return std::max(max_abs(a.a1 - b.a1), max_abs(a.a2 - b.a2));
}

double potential_scale(const VectorPotential& a) { return std::max(max_abs(a.a1), max_abs(a.a2)); }

}  // namespace

TEST_SUITE("gauge_field") {

TEST_CASE("kernel spot values") {
  CHECK(biot_savart_kernel(Axis::x1, 0.0, 1.0) == doctest::Approx(1.0 / (2 * kPi)));
  CHECK(biot_savart_kernel(Axis::x2, 1.0, 0.0) == doctest::Approx(-1.0 / (2 * kPi)));
  CHECK_THROWS_AS(biot_savart_kernel(Axis::x1, 0.0, 0.0), std::domain_error);
}

TEST_CASE("Riesz transform examples") {
  const auto wave = testing::plane_wave(kSmall, 1, 0);
  CHECK(testing::max_difference(riesz(wave, Axis::x1), Complex(0, 1) * wave) < 1e-14);
  const auto f = ComplexField::from_function(kSmall, [](double x1, double) { return std::exp(std::cos(x1)); });
  CHECK(max_abs(riesz(f, Axis::x2)) < 1e-14);
}

TEST_CASE("closed form potential of the sine pair") {
  const auto u = sine_pair();
  const auto a = compute_A(u, u);
  const auto expected = ComplexField::from_function(kSmall, [](double, double x2) { return 4 * std::cos(x2); });
  CHECK(testing::max_difference(a.a1, expected) < 1e-13);
  CHECK(max_abs(a.a2) < 1e-14);
  CHECK(divergence_check(a) < 1e-14);
  CHECK(curvature_check(u, a) < 1e-13);
  // d1 a2 - d2 a1 = 4 sin(x2) = -4 Im(u1 conj(u2)).
  const auto curl = derivative(a.a2, Axis::x1) - derivative(a.a1, Axis::x2);
  const auto four_sin = ComplexField::from_function(kSmall, [](double, double x2) { return 4 * std::sin(x2); });
  CHECK(testing::max_difference(curl, four_sin) < 1e-13);
  CHECK(curvature_check(u, a, CurvatureSign::geometric) > 1.0);
}

TEST_CASE("zero inputs") {
  const auto z = zero_pair(kSmall);
  const auto a = compute_A(z, z);
  CHECK(max_abs(a.a1) == 0.0);
  CHECK(max_abs(a.a2) == 0.0);
  CHECK(max_abs(compute_A0(z, z)) == 0.0);
  CHECK(divergence_check(a) == 0.0);
  CHECK(curvature_check(z, a) == 0.0);
}

TEST_CASE("A0 of a constant first component") {
  const FieldPair u{ComplexField::constant(kSmall, 1.0), ComplexField::zeros(kSmall)};
  CHECK(testing::max_difference(compute_A0(u, u), ComplexField::constant(kSmall, 2.0)) < 1e-14);
  CHECK(testing::max_difference(compute_A0_diagonal(u), ComplexField::constant(kSmall, 2.0)) < 1e-14);
}

TEST_CASE("random pairs: Coulomb gauge, curvature, reality, A0 forms") {
  const Grid g(64, 16 * kPi);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto u = testing::smooth_pair(g, seed, 20);
    const auto v = testing::smooth_pair(g, seed + 100, 20);
    const auto a = compute_A(u, u);
    CHECK(divergence_check(a) < 1e-11);
    CHECK(curvature_check(u, a) < 1e-8);
    CHECK(reality_defect(a) < 1e-12);
    CHECK(reality_defect(compute_A(u, v)) < 1e-12);
    const auto a0 = compute_A0(u, u);
    CHECK(testing::max_difference(a0, compute_A0_diagonal(u)) < 1e-11 * std::max(1.0, max_abs(a0)));
    double imag = 0.0;
    const auto a0uv = compute_A0(u, v);
    for (const auto& x : a0uv.samples()) imag = std::max(imag, std::abs(x.imag()));
    CHECK(imag < 1e-12 * std::max(1.0, max_abs(a0)));
  }
}

TEST_CASE("mean conventions") {
  const Grid g(32, 2 * kPi);
  const auto u = testing::smooth_pair(g, 3, 10);
  const auto v = testing::smooth_pair(g, 4, 10);
  const auto a = compute_A(u, v);
  CHECK(std::abs(a.a1.mean()) < 1e-15);
  CHECK(std::abs(a.a2.mean()) < 1e-15);
  const auto local = Complex(2.0) * (pointwise_product(u.u1, v.u1.conj()) + pointwise_product(v.u2.conj(), u.u2)).real_part();
  CHECK(std::abs(compute_A0(u, v).mean() - local.mean()) < 1e-13);
}

TEST_CASE("bilinearity, symmetry and polarization") {
  const Grid g(32, 2 * kPi);
  const auto u = testing::smooth_pair(g, 5, 10);
  const auto v = testing::smooth_pair(g, 6, 10);
  const auto uv = compute_A(u, v);
  CHECK(potential_difference(uv, compute_A(v, u)) < 1e-13 * potential_scale(uv));
  const auto s = u + v;
  const auto lhs = compute_A(s, s);
  const auto uu = compute_A(u, u), vv = compute_A(v, v);
  const VectorPotential rhs{uu.a1 + Complex(2.0) * uv.a1 + vv.a1, uu.a2 + Complex(2.0) * uv.a2 + vv.a2};
  CHECK(potential_difference(lhs, rhs) < 1e-11 * potential_scale(lhs));
  const auto scaled = compute_A(Complex(2.5) * u, v);
  CHECK(potential_difference(scaled, {Complex(2.5) * uv.a1, Complex(2.5) * uv.a2}) < 1e-12 * potential_scale(scaled));
  const auto a0 = compute_A0(s, s);
  const auto a0_rhs = compute_A0(u, u) + Complex(2.0) * compute_A0(u, v) + compute_A0(v, v);
  CHECK(testing::max_difference(a0, a0_rhs) < 1e-11 * max_abs(a0));
}

TEST_CASE("vanishing second component gives no vector potential") {
  const Grid g(32, 2 * kPi);
  const FieldPair u{testing::smooth_field(g, 1, 10), ComplexField::zeros(g)};
  const auto a = compute_A(u, u);
  CHECK(max_abs(a.a1) == 0.0);
  CHECK(max_abs(a.a2) == 0.0);
}

TEST_CASE("frame closed form is the opposite potential") {
  const Grid g(32, 2 * kPi);
  const auto u = testing::smooth_pair(g, 9, 10);
  const auto app = compute_A_frame(u);
  const auto a = compute_A(u, u);
  CHECK(potential_difference(app, {-a.a1, -a.a2}) < 1e-12 * potential_scale(a));
  // -Lap A1 = -4 d2 Im(conj(u1) u2) for the mean-free part.
  const auto m = pointwise_product(u.u1.conj(), u.u2).imag_part();
  CHECK(testing::max_difference(-laplacian(app.a1), Complex(-4.0) * derivative(m, Axis::x2)) < 1e-11 * max_abs(m));
  CHECK(testing::max_difference(-laplacian(app.a2), Complex(4.0) * derivative(m, Axis::x1)) < 1e-11 * max_abs(m));
  CHECK(curvature_check(u, app, CurvatureSign::geometric) < 1e-8);
}

TEST_CASE("grid mismatch is rejected") {
  const auto u = sine_pair();
  const auto a = compute_A(sine_pair(Grid(32, 2 * kPi)), sine_pair(Grid(32, 2 * kPi)));
  CHECK_THROWS_AS(curvature_check(u, a), std::invalid_argument);
}

TEST_CASE("gauge survey") {
  const DyadicPartition p(kSmall);
  SUBCASE("empty sample set") {
    CHECK_THROWS_AS(survey_gauge_bounds(p, {}, 6.0, 1), std::invalid_argument);
  }
  SUBCASE("zero samples give zero ratios") {
    const GaugeSample zero{zero_pair(kSmall), zero_pair(kSmall), ComplexField::zeros(kSmall)};
    for (const auto& r : survey_gauge_bounds(p, std::span(&zero, 1), 6.0, 1)) CHECK(r.max_ratio == 0.0);
  }
  SUBCASE("closed forms for the sine pair") {
    const GaugeSample s{sine_pair(), sine_pair(), testing::plane_wave(kSmall, 1, 0)};
    const auto reports = survey_gauge_bounds(p, std::span(&s, 1), 6.0, 1);
    REQUIRE(reports.size() == 3);
    const double b2 = 1.0 + std::cbrt(5.0 / 16.0);  // ||u||_B^2
    const double rhs = b2 + 1.5;
    CHECK(reports[0].inequality_id == "A");
    CHECK(reports[0].max_ratio == doctest::Approx(4.0 / rhs).epsilon(1e-13));
    CHECK(reports[1].inequality_id == "Abesov");
    CHECK(reports[1].max_ratio == doctest::Approx(4.0 * std::pow(5.0 / 16.0, 1.0 / 6.0) / rhs).epsilon(1e-13));
    CHECK(reports[2].inequality_id == "Abi");
    const double lhs = 4.0 / std::sqrt(2.0) * std::pow(3.0, -0.25);
    const double right = (std::sqrt(1.0 + std::pow(2.0, -0.5)) * std::pow(2.0, 0.25) + std::sqrt(b2)) *
                         std::sqrt(1.0 + 0.5 * std::pow(2.0, -0.5));
    CHECK(reports[2].max_ratio == doctest::Approx(lhs / right).epsilon(1e-13));
  }
}

}
