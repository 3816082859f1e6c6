#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "nfmin/constants.hpp"
#include "nfmin/roots.hpp"

using namespace nfmin;

TEST_CASE("quadratic formula oracle") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int b = d(rng), c = d(rng);
    if (c == 0 || b * b == 4 * c) continue;
    auto z = approximate_roots(IntPoly{c, b, 1});
    REQUIRE(z.size() == 2);
    const std::complex<double> disc = std::sqrt(std::complex<double>(b * b - 4.0 * c, 0.0));
    const std::complex<double> r1 = (-double(b) + disc) / 2.0, r2 = (-double(b) - disc) / 2.0;
    const double err = std::min(std::abs(z[0] - r1) + std::abs(z[1] - r2), std::abs(z[0] - r2) + std::abs(z[1] - r1));
    CHECK(err < 1e-10 * (1 + std::abs(r1) + std::abs(r2)));
  }
}

TEST_CASE("certified conjugates") {
  ConjugateSet cs = find_roots(IntPoly::parse("x^3+x^2+x-1"));
  CHECK(cs.s == 1);
  CHECK(cs.t == 1);
  // The real root r and the pair satisfy r |z|^2 = 1.
  CHECK(cs.real_roots[0] * std::norm(cs.complex_reps[0]) == doctest::Approx(1.0).epsilon(1e-14));

  ConjugateSet p = find_roots(IntPoly::parse("x^3-x-1"));
  CHECK(p.real_roots[0] == doctest::Approx(constants::plastic()).epsilon(1e-15));
  CHECK_THROWS_AS(find_roots(IntPoly::parse("2x^2-1")), Error);
}

TEST_CASE("signature agrees with Sturm across families") {
  for (int n = 2; n <= 60; ++n) {
    IntPoly f = make_family({Family::truncated_geom, n});
    ConjugateSet cs = find_roots(f);
    CHECK(static_cast<std::size_t>(cs.s) == sturm_real_count(f));
    CHECK(cs.s == (n % 2 == 0 ? 2 : 1));
    CHECK(cs.max_residual <= 1e-10);
  }
  for (int n = 1; n <= 10; ++n) {
    ConjugateSet cs = find_roots(make_family({Family::root_power, n}));
    CHECK(cs.s == (n % 2 ? 1 : 2));
  }
}

TEST_CASE("high degree residuals") {
  IntPoly f = make_family({Family::truncated_geom, 800});
  auto z = approximate_roots(f);
  CHECK(z.size() == 800);
  for (const auto& r : z) {
    const double scale = f.l1_norm().get_d() * std::pow(1.0 + std::abs(r), 800.0);
    CHECK(std::abs(f.evaluate(r)) <= 1e-10 * scale);
  }
}

TEST_CASE("sectors") {
  const double two_pi = 2.0 * std::numbers::pi;
  CHECK(argument(Complex(1, 0)) == 0.0);
  CHECK(argument(Complex(0, -1)) == doctest::Approx(1.5 * std::numbers::pi));
  std::vector<Complex> unity;
  for (int k = 0; k < 12; ++k) unity.push_back(std::polar(1.0, two_pi * k / 12 + 1e-3));
  CHECK(sector_count(unity, 0.0, std::numbers::pi) == 6);
  CHECK(sector_count(unity, 0.0, two_pi) == 12);
  CHECK_THROWS_AS(sector_count(unity, 1.0, 0.5), Error);
}

TEST_CASE("Erdos-Turan with both constants") {
  IntPoly f = make_family({Family::multinacci_cofactor, 100});
  for (int j = 0; j < 6; ++j) {
    const double phi = std::numbers::pi * j / 3, psi = std::numbers::pi * (j + 1) / 3;
    auto r = erdos_turan_check(f, phi, psi, 2.619090);
    CHECK(r.holds);
    auto r16 = erdos_turan_check(f, phi, psi, 16.0);
    CHECK(r16.holds);
    CHECK(r16.rhs > r.rhs);
  }
  CHECK(constants::ganelius_rounded_up() == doctest::Approx(2.619090).epsilon(1e-12));
}

TEST_CASE("multinacci roots") {
  for (int n = 2; n <= 200; n += (n < 20 ? 1 : 9)) {
    auto loc = multinacci_location_check(n);
    CHECK_MESSAGE(loc.all(), n);
    CHECK(loc.second_real.has_value() == (n % 2 == 0));
    CHECK(pisot_check(find_roots(make_family({Family::multinacci, n}))));
  }
  CHECK_FALSE(pisot_check(find_roots(IntPoly::parse("x^2-3"))));
}
