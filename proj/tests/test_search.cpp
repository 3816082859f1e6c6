#include "doctest.h"

#include <set>

#include "nfmin/search.hpp"

using namespace nfmin;

namespace {

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::set<std::string> polys(const SearchReport& r) {
  std::set<std::string> out;
  for (const auto& g : r.groups)
    for (const auto& e : g.entries) out.insert(e.polynomial.to_string());
  return out;
}

}  // namespace

TEST_CASE("coefficient bounds are the largest integers below the real bound") {
  for (int n = 2; n <= 8; ++n)
    for (int S = 1; S <= n; ++S) {
      auto b = coefficient_bounds(n, S);
      REQUIRE(b.size() == static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        // k^2 < C(n,i)^2 S^i
        mpz_class lim = binom(n, i) * binom(n, i);
        mpz_class Si;
        mpz_pow_ui(Si.get_mpz_t(), mpz_class(S).get_mpz_t(), i);
        lim *= Si;
        const mpz_class& k = b[i - 1];
        CHECK(k * k < lim);
        CHECK((k + 1) * (k + 1) >= lim);
      }
    }
}

TEST_CASE("Maclaurin bounds never exceed the coefficient bounds") {
  for (int n = 2; n <= 8; ++n) {
    const int S = n;  // loosest case
    auto a = coefficient_bounds(n, S);
    auto m = maclaurin_bounds(n, S);
    for (int i = 0; i < n; ++i) CHECK(m[i] <= a[i]);
  }
}

TEST_CASE("degree 3 and 4") {
  SearchReport r3 = enumerate_m_lt_one(3);
  CHECK(polys(r3) == std::set<std::string>{"x^3-x^2+1", "x^3+x^2-1", "x^3+x-1", "x^3+x+1"});
  SearchReport r4 = enumerate_m_lt_one(4);
  CHECK(polys(r4) == std::set<std::string>{"x^4+x^2-1", "x^4-x^3+x^2+x-1", "x^4+x^3+x^2-x-1"});
  for (const auto& g : r4.groups) {
    if (g.signature == Signature{3, 0} || g.signature == Signature{0, 2} || g.signature == Signature{4, 0})
      CHECK(g.count() == 0);
  }
  SearchOptions raw;
  raw.prune = false;
  CHECK(polys(enumerate_m_lt_one(3, raw)) == polys(r3));
}

TEST_CASE("entries are closed under x -> -x and sorted by m") {
  SearchReport r = enumerate_m_lt_one(5);
  auto all = polys(r);
  for (const auto& g : r.groups) {
    for (std::size_t i = 1; i < g.entries.size(); ++i) CHECK(g.entries[i - 1].m <= g.entries[i].m + 1e-12);
    for (const auto& e : g.entries) {
      CHECK(all.count(negate_variable(e.polynomial).to_string()) == 1);
      CHECK(e.m < 1.0);
      CHECK(e.m >= g.lower_bound);
      CHECK(is_irreducible(e.polynomial));
    }
  }
}

TEST_CASE("thread count does not change the report") {
  SearchOptions one, two;
  two.threads = 2;
  SearchReport a = enumerate_m_lt_one(5, one), b = enumerate_m_lt_one(5, two);
  REQUIRE(a.groups.size() == b.groups.size());
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    REQUIRE(a.groups[i].entries.size() == b.groups[i].entries.size());
    for (std::size_t j = 0; j < a.groups[i].entries.size(); ++j)
      CHECK(a.groups[i].entries[j].polynomial == b.groups[i].entries[j].polynomial);
  }
}

TEST_CASE("signature filter") {
  SearchOptions o;
  o.signature = Signature{3, 1};
  SearchReport r = enumerate_m_lt_one(5, o);
  CHECK(r.total() == 0);
  CHECK_THROWS_AS(enumerate_m_lt_one(9), Error);
  SearchOptions raw;
  raw.prune = false;
  CHECK_THROWS_AS(enumerate_m_lt_one(5, raw), Error);
}

TEST_CASE("subelement boxes and scans") {
  CHECK(subelement_pattern("quartic-quadratic").box == std::vector<long>{3, 2});
  CHECK(subelement_pattern("sextic22-quadratic").box == std::vector<long>{2, 1});
  CHECK(subelement_pattern("sextic22-cubic").box == std::vector<long>{5, 11, 7});
  CHECK(subelement_pattern("sextic41-quadratic").box == std::vector<long>{3, 2});
  CHECK(subelement_pattern("sextic41-cubic").box == std::vector<long>{6, 14, 11});
  CHECK_THROWS_AS(subelement_pattern("nope"), Error);
  for (const auto& p : standard_subelement_patterns()) {
    CHECK(derived_box(p.weights, p.bound_sq) == p.box);
    SubelementScan s = subelement_scan(p);
    CHECK(s.violators.empty());
    CHECK(s.qualifying > 0);
    REQUIRE(s.smallest);
    CHECK(s.smallest->weighted_sum >= p.bound_sq);
  }
}
