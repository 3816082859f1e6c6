#include "doctest.h"

#include "nfmin/intpoly.hpp"

using namespace nfmin;

namespace {

// Monic f of degree <= 4 is reducible iff it has an integer root or a monic
// quadratic factor x^2 + b x + c with c | a_0 and |b| <= 2 * Cauchy bound.
bool trial_division_reducible(const IntPoly& f) {
  const long a0 = f.constant_term().get_si();
  if (a0 == 0) return true;
  long cauchy = 1;
  for (int i = 0; i < f.degree(); ++i) cauchy = std::max(cauchy, 1 + std::abs(f[i].get_si()));
  for (long c = 1; c <= std::abs(a0); ++c) {
    if (a0 % c) continue;
    for (long r : {c, -c})
      if (f.evaluate(mpq_class(r)) == 0) return true;
    if (f.degree() < 4) continue;
    for (long cc : {c, -c})
      for (long b = -2 * cauchy; b <= 2 * cauchy; ++b)
        if (f.exact_quotient(IntPoly{cc, b, 1})) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("examples") {
  CHECK(is_irreducible(IntPoly::parse("x^6+x^4+x^2-1")));
  auto r = irreducibility(IntPoly::parse("x^6-2x^4+x^2-1"));
  REQUIRE(r.verdict == IrreducibilityResult::Verdict::reducible);
  REQUIRE(r.factor.has_value());
  CHECK(IntPoly::parse("x^6-2x^4+x^2-1").exact_quotient(*r.factor).has_value());
  CHECK(is_irreducible(IntPoly::parse("x^3-x-1")));
  CHECK_FALSE(is_irreducible(IntPoly::parse("6x^2+5x+1")));
  CHECK(is_irreducible(IntPoly::parse("2x^2+1")));
  CHECK_FALSE(is_irreducible(IntPoly::parse("x^4+4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible(IntPoly::parse("x^2-2x+1")));
}

TEST_CASE("agrees with trial division on all small monic quartics and cubics") {
  int checked = 0;
  for (int deg : {3, 4})
    for (int a0 = -3; a0 <= 3; ++a0)
      for (int a1 = -3; a1 <= 3; ++a1)
        for (int a2 = -3; a2 <= 3; ++a2)
          for (int a3 = -3; a3 <= 3; ++a3) {
            if (deg == 3 && a3 != 0) continue;
            std::vector<mpz_class> c = {a0, a1, a2};
            if (deg == 4) c.push_back(a3);
            c.push_back(1);
            IntPoly f(c);
            CHECK_MESSAGE(is_irreducible(f) == !trial_division_reducible(f), f.to_string());
            ++checked;
          }
  CHECK(checked == 343 + 2401);
}

TEST_CASE("products of irreducibles are detected with a true factor") {
  const std::vector<IntPoly> pieces = {IntPoly::parse("x^3-x-1"), IntPoly::parse("x^2+x+1"),
                                       IntPoly::parse("x^5-x^3+x^2+x-1"), IntPoly::parse("x^4+x^2-1")};
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      IntPoly p = a * b;
      auto r = irreducibility(p);
      if (a == b) {
        CHECK(r.verdict == IrreducibilityResult::Verdict::reducible);
        continue;
      }
      REQUIRE(r.verdict == IrreducibilityResult::Verdict::reducible);
      REQUIRE(r.factor);
      CHECK(r.factor->degree() > 0);
      CHECK(r.factor->degree() < p.degree());
      CHECK(p.exact_quotient(*r.factor).has_value());
    }
}

TEST_CASE("family members within reach") {
  for (int k = 1; k <= 5; ++k) CHECK(is_irreducible(make_family({Family::even_spread, 4 * k + 2})));
  for (int n = 1; n <= 4; ++n) CHECK(is_irreducible(make_family({Family::root_power, n})));
  for (int n = 2; n <= 12; ++n) CHECK(is_irreducible(make_family({Family::multinacci, n})));
}
