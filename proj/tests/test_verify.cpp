#include "doctest.h"

#include <cmath>

#include "nfmin/verify.hpp"

using namespace nfmin;

namespace {

// Real root of x^3 + x^2 + x - 1 by bisection.
double truncated_geom_real_root() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (mid * mid * mid + mid * mid + mid - 1 < 0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("power sum at n = 3 from the real root") {
  CheckRecord r = check_sum_asymptotic(3, 2.0);
  // The pair's modulus squared is 1/r since the roots multiply to 1.
  const double expected = 1.0 / truncated_geom_real_root();
  CHECK(r.observed[0] == doctest::Approx(expected).epsilon(1e-13));
  CHECK(r.observed[1] == 1.0);
  CHECK(r.residual == doctest::Approx(std::abs(expected - 1.0 - std::log(2.0))).epsilon(1e-10));
  CHECK_THROWS_AS(check_sum_asymptotic(2, 2.0), Error);
}

TEST_CASE("power sum with q = 1 at n = 402") {
  CheckRecord r = check_sum_asymptotic(402, 1.0);
  CHECK(r.observed[1] == 200.0);
  CHECK(r.residual < 0.01);
}

TEST_CASE("truncated geometric sizes") {
  CheckRecord five = check_truncated_geom_size(5);
  CHECK(five.predicted[0] == doctest::Approx(3.0 - 0.75 + std::log(2.0)));
  CHECK(five.verdict == Verdict::pass);
  CheckRecord two = check_truncated_geom_size(2);
  CHECK(two.observed[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(two.verdict == Verdict::pass);
}

TEST_CASE("even spread and its compositum") {
  CheckRecord one = check_even_spread_size(1);
  CHECK(one.predicted[0] == doctest::Approx(3.0 + std::log(2.0)));
  CHECK(one.verdict == Verdict::pass);
  CheckRecord c2 = check_even_spread_compositum(2, 1);
  CHECK(c2.observed[0] == doctest::Approx(one.observed[0]));
  CHECK(c2.predicted[0] == doctest::Approx(3.0 + std::log(2.0)));
  CheckRecord c4 = check_even_spread_compositum(4, 1);
  CHECK(c4.observed[0] == doctest::Approx(2.0 * one.observed[0]));
  CHECK(c4.verdict == Verdict::pass);
  CHECK_THROWS_AS(check_even_spread_compositum(3, 1), Error);
  // m(K) for s = 2 approaches 1 from below like 1 - (1 - log 2)/(2(k+1)).
  for (int k : {5, 25, 100}) {
    CheckRecord c = check_even_spread_compositum(2, k);
    const double model = 1.0 - (1.0 - std::log(2.0)) / (2.0 * (k + 1));
    CHECK(c.observed[1] < 1.0);
    CHECK(std::abs(c.observed[1] - model) * std::pow(k, 1.25) < 0.1);
  }
}

TEST_CASE("cubic minimum") {
  CHECK(check_cubic().verdict == Verdict::pass);
  CheckRecord eq = check_cubic_polynomial(IntPoly::parse("x^3+x^2-1"));
  CHECK(std::abs(eq.residual) <= 1e-9);
  CheckRecord above = check_cubic_polynomial(IntPoly::parse("x^3+x+1"));
  CHECK(above.observed[0] == doctest::Approx(2 * 0.965571232).epsilon(1e-8));
  CHECK(above.verdict == Verdict::pass);
  CheckRecord cube_root = check_cubic_polynomial(IntPoly::parse("x^3-2"));
  CHECK(cube_root.observed[0] >= 3.0);
}

TEST_CASE("root power family") {
  CheckRecord one = check_root_power(1);
  CHECK(one.observed[1] == doctest::Approx(0.947279124).epsilon(1e-9));
  for (int n = 1; n <= 20; ++n) {
    CheckRecord r = check_root_power(n);
    CHECK_MESSAGE(r.verdict == Verdict::pass, n);
    CHECK(r.residual <= 1e-8);
  }
}

TEST_CASE("Schur and the k^k product") {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CheckRecord golden = check_schur({phi, 1 - phi});
  CHECK(golden.observed[0] == doctest::Approx(std::log(5.0)));
  CHECK(golden.predicted[0] == doctest::Approx(std::log(6.0)));
  CHECK(golden.verdict == Verdict::pass);
  CheckRecord pm = check_schur({1.0, -1.0});
  CHECK(pm.residual == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(check_schur({1.0}), Error);
  CHECK(check_schur({0.3, -1.2, 2.5, 0.1, -0.7}).verdict == Verdict::pass);
  // Glaisher's constant is the limit of the deviation.
  CHECK(check_factorial_power(500).residual == doctest::Approx(0.2487544770).epsilon(1e-6));
  CHECK(check_factorial_power(100).verdict == Verdict::pass);
}

TEST_CASE("Smyth scan") {
  CheckRecord two = check_smyth(2);
  CHECK(two.verdict == Verdict::pass);
  CHECK(two.note.find("x^2-x-1") != std::string::npos);
  CHECK(two.note.find("x^2+x-1") != std::string::npos);
  for (int n = 3; n <= 4; ++n) CHECK(check_smyth(n).verdict == Verdict::pass);
}

TEST_CASE("structure checks") {
  for (int k = 1; k <= 3; ++k) CHECK(check_even_spread_structure(k).verdict == Verdict::pass);
  CHECK(check_multinacci_location(7).verdict == Verdict::pass);
  CHECK(check_pisot_multinacci(8).verdict == Verdict::pass);
  CheckRecord ex = check_root_extract(IntPoly::parse("x^3-2"), 5);
  CHECK(ex.predicted[0] == doctest::Approx(1.0 + std::log(2.0) / 8.0));
  CHECK(ex.verdict == Verdict::pass);
}

TEST_CASE("fast suite passes and is ordered by id") {
  auto records = run_suite(Suite::fast);
  for (std::size_t i = 1; i < records.size(); ++i) CHECK(records[i - 1].check_id <= records[i].check_id);
  for (const auto& r : records) {
    INFO(r.check_id);
    CHECK(r.verdict == Verdict::pass);
  }
}
