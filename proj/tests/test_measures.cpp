#include "doctest.h"

#include <cmath>

#include "nfmin/constants.hpp"
#include "nfmin/measures.hpp"
#include "nfmin/search.hpp"

using namespace nfmin;

namespace {
SizeProfile profile_of(const char* f) { return size_profile(find_roots(IntPoly::parse(f))); }
}  // namespace

TEST_CASE("small profiles") {
  SizeProfile golden = profile_of("x^2-x-1");
  CHECK(golden.R == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(golden.m == doctest::Approx(1.5));

  SizeProfile gauss = profile_of("x^2+1");
  CHECK(gauss.signature == Signature{0, 1});
  CHECK(gauss.C == doctest::Approx(1.0));
  CHECK(gauss.m == doctest::Approx(1.0));

  const double th = constants::plastic();
  SizeProfile inv = profile_of("x^3+x^2-1");
  CHECK(inv.m == doctest::Approx((th + 1.0 / (th * th)) / 2.0).epsilon(1e-14));
  CHECK(inv.discriminant == mpz_class(-23));
  CHECK(inv.mahler == doctest::Approx(th));

  SizeProfile z = profile_of("x^6+x^2-1");
  const double zeta = constants::zeta();
  CHECK(z.m == doctest::Approx((zeta * zeta + 1.0 / zeta) / 2.0).epsilon(1e-14));
  CHECK(z.all_roots_square_sum() == doctest::Approx(z.R + 2 * z.C));
}

TEST_CASE("signature bound values") {
  CHECK(m_lower_bound_signature(1, 1) == doctest::Approx(0.944940).epsilon(1e-6));
  CHECK(m_lower_bound_signature(2, 2) == doctest::Approx(0.944940).epsilon(1e-6));
  CHECK(m_lower_bound_signature(2, 1) == doctest::Approx(0.942809).epsilon(1e-6));
  CHECK(m_lower_bound_signature(1, 2) == doctest::Approx(0.957248).epsilon(1e-6));
  // Every signature bound sits above the universal floor.
  for (int s = 0; s <= 20; ++s)
    for (int t = 0; t <= 20; ++t)
      if (s + t > 0) CHECK(m_lower_bound_signature(s, t) >= constants::universal_m_floor() - 1e-15);
}

TEST_CASE("unit gate turns on exactly at n = 23 for norm 2") {
  for (int n = 1; n <= 23; ++n) CHECK(unit_necessity_gate(n, 2));
  CHECK_FALSE(unit_necessity_gate(24, 2));
  CHECK_FALSE(unit_necessity_gate(3, 1));
}

TEST_CASE("norm bound holds on every search entry and on non-units") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : enumerate_m_lt_one(n).groups)
      for (const auto& e : g.entries) {
        SizeProfile p = size_profile(find_roots(e.polynomial));
        CHECK(p.abs_square_size >= norm_lower_bound(n, p.signature.s, p.norm_abs) - 1e-12);
        CHECK(p.m > constants::universal_m_floor());
        CHECK(p.m > m_lower_bound_signature(p.signature));
      }
  for (const char* f : {"x^3-2", "x^4+x-3", "x^5-x-5", "x^2+5"}) {
    SizeProfile p = profile_of(f);
    CHECK(p.abs_square_size >= norm_lower_bound(p.degree(), p.signature.s, p.norm_abs) - 1e-12);
  }
  CHECK_THROWS_AS(norm_lower_bound(4, 1, 2), Error);
}

TEST_CASE("compositum arithmetic") {
  CHECK(compositum_signature({1, 1}, {0, 1}) == Signature{0, 3});
  CHECK(compositum_signature({2, 1}, {2, 0}) == Signature{4, 2});
  CHECK(compositum_signature({1, 2}, {1, 1}) == Signature{1, 2 + 1 + 4});
  SizeProfile p = profile_of("x^6+x^4+x^2-1");
  CHECK(relative_square_size(p, {2, 0}) == doctest::Approx(2 * p.abs_square_size));
  CHECK(relative_square_size(p, {1, 0}) == doctest::Approx(p.abs_square_size));
}

TEST_CASE("criterion agrees with relative m on all small tables") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : enumerate_m_lt_one(n).groups)
      for (const auto& e : g.entries) {
        SizeProfile p = size_profile(find_roots(e.polynomial));
        for (int s2 = 0; s2 <= 4; ++s2)
          for (int t2 = 0; t2 <= 4; ++t2) {
            if (s2 + t2 == 0) continue;
            ExtensionSignature ext{s2, t2};
            CHECK(mk_lt_one_criterion(p, ext) == (relative_m(p, ext) < 1.0));
          }
      }
  CHECK_THROWS_AS(mk_lt_one_criterion(profile_of("x^3-x-1"), {0, 1}), Error);
}

TEST_CASE("relative size requires linear disjointness") {
  // sqrt 2 inside Q(2^(1/4)): the formula with base Q(sqrt 2) and a real
  // quadratic auxiliary field gives 8, while the true value is 6.
  SizeProfile sqrt2 = profile_of("x^2-2");
  CHECK(relative_square_size(sqrt2, {2, 0}) == doctest::Approx(8.0));
  ConjugateSet quartic = find_roots(IntPoly::parse("x^4-2"));
  double direct = 0.0;
  for (double r : quartic.real_roots) direct += std::pow(r * r, 2);
  for (const auto& z : quartic.complex_reps) direct += std::norm(z * z);
  CHECK(direct == doctest::Approx(6.0));
}

TEST_CASE("root extraction profile equals the direct profile") {
  for (int n : {3, 5}) {
    SizeProfile via = root_extract_profile(find_roots(IntPoly::parse("x^3-2")), n);
    std::vector<mpz_class> c(3 * n + 1, 0);
    c[0] = -2;
    c[3 * n] = 1;
    SizeProfile direct = size_profile(find_roots(IntPoly(c)));
    CHECK(via.signature == direct.signature);
    CHECK(via.abs_square_size == doctest::Approx(direct.abs_square_size).epsilon(1e-12));
    CHECK(via.R == doctest::Approx(direct.R).epsilon(1e-12));
    CHECK(via.m == doctest::Approx(direct.m).epsilon(1e-12));
  }
  CHECK_THROWS_AS(root_extract_profile(find_roots(IntPoly::parse("x^3-2")), 4), Error);
}

TEST_CASE("guarded comparison") {
  CHECK(compare_guarded(0.9, 1.0) == Comparison::below);
  CHECK(compare_guarded(1.1, 1.0) == Comparison::above);
  CHECK(compare_guarded(1.0 + 1e-12, 1.0) == Comparison::inconclusive);
}
