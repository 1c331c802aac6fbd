#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "msm/littlewood_paley.hpp"
#include "support.hpp"

using namespace msm;
using testing::kPi;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE("littlewood_paley") {

TEST_CASE("cutoff profile") {
  CHECK(cutoff_profile(0.0) == 1.0);
  CHECK(cutoff_profile(1.0) == 1.0);
  CHECK(cutoff_profile(1.25) == 0.0);
  CHECK(cutoff_profile(7.0) == 0.0);
  CHECK(cutoff_profile(1.125) == doctest::Approx(0.5).epsilon(1e-15));
  double last = 1.0;
  for (double r = 1.0; r <= 1.25; r += 0.005) {
    const double v = cutoff_profile(r);
    CHECK(v <= last);
    CHECK(v >= 0.0);
    last = v;
  }
  CHECK(block_symbol(-1, 0.5) == 0.0);
  CHECK(block_symbol(0, 0.5) == 1.0);
  CHECK(block_symbol(2, 3.0) == 1.0);  // phi(3/4) - phi(3/2)
}

TEST_CASE("partition of unity on several grids") {
  for (const auto& g : {Grid(64, 16 * kPi), Grid(64, 2 * kPi), Grid(128, 2 * kPi), Grid(32, 1.0)}) {
    const DyadicPartition p(g);
    std::vector<FourierMultiplier> symbols;
    for (int j = 0; j <= p.max_block(); ++j) symbols.push_back(p.symbol(j, BlockKind::single));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      double sum = 0.0;
      for (const auto& s : symbols) sum += s.values()[i].real();
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    CHECK(worst < 1e-14);
  }
}

TEST_CASE("block range") {
  const DyadicPartition p(Grid(64, 2 * kPi));
  CHECK(p.max_block() == 6);
  CHECK_THROWS_AS(p.symbol(7, BlockKind::single), std::out_of_range);
  CHECK_THROWS_AS(p.symbol(-1, BlockKind::tilde), std::out_of_range);
  const Grid& g = p.grid();
  for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
      CHECK(block_symbol(7, std::hypot(g.wavenumber(k1), g.wavenumber(k2))) == 0.0);
    }
  }
}

TEST_CASE("blocks two apart are orthogonal") {
  const Grid g(64, 2 * kPi);
  const DyadicPartition p(g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = testing::smooth_field(g, seed, 31);
    const double scale = max_abs(f);
    for (int j = 0; j <= p.max_block(); ++j) {
      for (int k = j + 2; k <= p.max_block(); ++k) {
        const auto jk = block_project(p, block_project(p, f, k), j);
        CHECK(max_abs(jk) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("decomposition reconstructs the field") {
  const Grid g(64, 16 * kPi);
  const DyadicPartition p(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = testing::smooth_field(g, seed, 31);
    CHECK(testing::max_difference(decompose(p, f).reconstruct(), f) < 1e-12 * max_abs(f));
  }
}

TEST_CASE("cumulative and tilde blocks") {
  const Grid g(32, 2 * kPi);
  const DyadicPartition p(g);
  const auto f = testing::smooth_field(g, 3, 15);
  auto sum = block_project(p, f, 0);
  for (int j = 1; j <= 3; ++j) sum = sum + block_project(p, f, j);
  CHECK(testing::max_difference(block_project(p, f, 3, BlockKind::cumulative), sum) < 1e-13);
  const auto tilde = block_project(p, f, 2) + block_project(p, f, 3) + block_project(p, f, 4);
  CHECK(testing::max_difference(block_project(p, f, 3, BlockKind::tilde), tilde) < 1e-13);
  CHECK(testing::max_difference(block_project(p, f, 0, BlockKind::tilde), block_project(p, f, 0) + block_project(p, f, 1)) < 1e-13);
}

TEST_CASE("Besov norm of a single mode") {
  const Grid g(32, 2 * kPi);
  const DyadicPartition p(g);
  const auto wave = testing::plane_wave(g, 2, 0);  // |xi| = 2 lies only in block 1
  for (const double s : {-0.5, 0.0, 0.5, 1.0}) {
    for (const double pp : {2.0, 6.0, kInf}) {
      for (const double q : {1.0, 2.0, kInf}) {
        CHECK(besov_norm(p, wave, s, pp, q) == doctest::Approx(std::exp2(s)).epsilon(1e-14));
      }
    }
  }
  CHECK(holder_norm(p, wave, 0.5) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(holder_norm(p, wave, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(holder_norm(p, wave, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(holder_norm(p, wave, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(besov_norm(p, wave, 0.0, 0.5, 2.0), std::invalid_argument);
}

TEST_CASE("B^0_{2,2} is equivalent to L^2 with constants 1/2 and 1") {
  const Grid g(64, 16 * kPi);
  const DyadicPartition p(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = testing::smooth_field(g, seed, 31);
    const double b = besov_norm(p, f, 0.0, 2.0, 2.0);
    const double l2 = lp_norm(f, 2.0);
    CHECK(b <= l2 * (1 + 1e-12));
    CHECK(b * b >= 0.5 * l2 * l2 * (1 - 1e-12));
  }
}

TEST_CASE("Besov monotonicity in s and q") {
  const Grid g(64, 2 * kPi);
  const DyadicPartition p(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = testing::smooth_field(g, seed, 31);
    const auto blocks = decompose(p, f);
    for (const double pp : {2.0, 6.0, kInf}) {
      double last = 0.0;
      for (const double s : {-1.0, -0.5, 0.0, 0.25, 0.5, 1.0}) {
        const double v = besov_norm(blocks, s, pp, 2.0);
        CHECK(v >= last);
        last = v;
      }
      last = kInf;
      for (const double q : {1.0, 1.5, 2.0, 4.0, 10.0, kInf}) {
        const double v = besov_norm(blocks, 0.5, pp, q);
        CHECK(v <= last * (1 + 1e-14));
        last = v;
      }
    }
  }
}

TEST_CASE("paraproduct decomposition reproduces the product") {
  const Grid g(64, 2 * kPi);
  const DyadicPartition p(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = testing::smooth_field(g, 2 * seed, 31);
    const auto h = testing::smooth_field(g, 2 * seed + 1, 31);
    const auto sum = paraproduct(p, f, h, ParaproductTerm::low_high) +
                     paraproduct(p, f, h, ParaproductTerm::resonant) +
                     paraproduct(p, h, f, ParaproductTerm::low_high);
    const auto fh = pointwise_product(f, h);
    CHECK(testing::max_difference(sum, fh) <= 1e-10 * max_abs(fh));
  }
}

TEST_CASE("low-high terms live in dyadic annuli") {
  const Grid g(64, 2 * kPi);
  const DyadicPartition p(g);
  const auto f = testing::smooth_field(g, 1, 31);
  const auto h = testing::smooth_field(g, 2, 31);
  for (int k = 2; k <= p.max_block(); ++k) {
    const auto term = low_high_term(p, f, h, k);
    const double scale = coefficient_norm(term);
    for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
      for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
        const double r = std::hypot(g.wavenumber(k1), g.wavenumber(k2));
        if (r < std::ldexp(1.0, k - 3) || r > std::ldexp(1.0, k + 1)) {
          CHECK(std::abs(term.coefficient(k1, k2)) <= 1e-14 * scale);
        }
      }
    }
  }
  CHECK_THROWS_AS(low_high_term(p, f, h, 1), std::out_of_range);
}

TEST_CASE("interpolation inequality") {
  const Grid g(64, 2 * kPi);
  const DyadicPartition p(g);
  const auto f = testing::smooth_field(g, 7, 31);
  SUBCASE("endpoints are equalities") {
    const auto a = interpolation_check(p, f, 0.3, 1.1, 2.0, kInf, 0.0);
    CHECK(a.lhs == doctest::Approx(a.rhs).epsilon(1e-14));
    CHECK(a.q == 2.0);
    const auto b = interpolation_check(p, f, 0.3, 1.1, 2.0, kInf, 1.0);
    CHECK(b.lhs == doctest::Approx(b.rhs).epsilon(1e-14));
    CHECK(std::isinf(b.q));
  }
  SUBCASE("midpoint with equal integrability") {
    const auto r = interpolation_check(p, f, 0.0, 1.0, 2.0, 2.0, 0.5);
    CHECK(r.s == doctest::Approx(0.5));
    CHECK(r.lhs <= r.rhs * (1 + 1e-10));
  }
  SUBCASE("random admissible tuples") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      const auto h = testing::smooth_field(g, 100 + trial, 31);
      const double q0 = 2.0 + 8.0 * u(rng);
      const double q1 = trial % 3 == 0 ? kInf : 2.0 + 8.0 * u(rng);
      const auto r = interpolation_check(p, h, -1.0 + 2.0 * u(rng), -1.0 + 2.0 * u(rng), q0, q1, u(rng));
      CHECK(r.lhs <= r.rhs * (1 + 1e-10));
    }
  }
  CHECK_THROWS_AS(interpolation_check(p, f, 0, 1, 2, 2, 1.5), std::invalid_argument);
}

TEST_CASE("norm table CSV") {
  std::ostringstream out;
  write_norm_table(out, {{"f0", 0.5, 6.0, 2.0, 1.25}, {"f1", 0.0, kInf, 1.0, 3.0}});
  CHECK(out.str() == "field_id,s,p,q,value\nf0,0.5,6,2,1.25\nf1,0,inf,1,3\n");
}

}
