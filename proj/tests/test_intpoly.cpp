#include "doctest.h"

#include <random>

#include "nfmin/intpoly.hpp"

using namespace nfmin;

namespace {

// Fraction-free Gaussian elimination on the Sylvester matrix.
mpz_class sylvester_determinant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree(), n = b.degree(), size = m + n;
  std::vector<std::vector<mpz_class>> M(size, std::vector<mpz_class>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < size; ++k) {
    int pivot = k;
    while (pivot < size && M[pivot][k] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != k) {
      std::swap(M[pivot], M[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[size - 1][size - 1];
}

IntPoly random_poly(std::mt19937& rng, int degree, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<mpz_class> c(degree + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("parsing both input forms") {
  CHECK(IntPoly::parse("x^3-x-1") == IntPoly{-1, -1, 0, 1});
  CHECK(IntPoly::parse("-1,-1,0,1") == IntPoly{-1, -1, 0, 1});
  CHECK(IntPoly::parse("2*x^2 + 3x - 1") == IntPoly{-1, 3, 2});
  CHECK(IntPoly::parse("x^6+x^2-1").to_string() == "x^6+x^2-1");
  CHECK_THROWS_AS(IntPoly::parse("x^^2"), Error);
  CHECK_THROWS_AS(IntPoly::parse(""), Error);
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly a = random_poly(rng, 1 + trial % 5, 6);
    IntPoly b = random_poly(rng, 1 + (trial / 5) % 4, 6);
    CHECK(resultant(a, b) == sylvester_determinant(a, b));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(IntPoly{-1, -1, 0, 1}) == -23);
  CHECK(discriminant(IntPoly{-1, -1, 1}) == 5);
  CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
  CHECK(discriminant(IntPoly{-1, 0, 1, 0, 0, 0, 1}) == 61504);
  // Repeated root.
  CHECK(discriminant(IntPoly{1, -2, 1}) == 0);
}

TEST_CASE("gcd and exact division") {
  IntPoly p{-1, -1, 0, 1};
  IntPoly q{1, 0, 1};
  IntPoly prod = p * q;
  CHECK(prod.exact_quotient(p) == q);
  CHECK(gcd(prod, p * IntPoly{2, 1}).normalized() == p);
  CHECK_FALSE(p.exact_quotient(q).has_value());
}

TEST_CASE("Sturm counts against products of linear factors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> roots;
    std::uniform_int_distribution<int> d(-8, 8);
    while (roots.size() < 1 + trial % 5) {
      int r = d(rng);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    IntPoly f{1, 0, 1};  // no real roots
    for (int r : roots) f = f * IntPoly{-r, 1};
    CHECK(sturm_real_count(f) == roots.size());
    const int lo = d(rng), hi = lo + 5;
    std::size_t inside = std::count_if(roots.begin(), roots.end(), [&](int r) { return r > lo && r <= hi; });
    CHECK(sturm_real_count(f, RationalInterval{lo, hi}) == inside);
  }
  CHECK(sturm_real_count(IntPoly::parse("x^6+x^4+x^2-1")) == 2);
  CHECK_THROWS_AS(SturmSequence(IntPoly{1, -2, 1}), Error);
}

TEST_CASE("family constructors") {
  CHECK(make_family({Family::multinacci, 3}).to_string() == "x^3-x^2-x-1");
  CHECK(make_family({Family::multinacci_cofactor, 3}).to_string() == "x^4-2*x^3+1");
  CHECK(make_family({Family::truncated_geom, 3}).to_string() == "x^3+x^2+x-1");
  CHECK(make_family({Family::even_spread, 6}).to_string() == "x^6+x^4+x^2-1");
  CHECK(make_family({Family::root_power, 1}).to_string() == "x^3+x^2-1");
  CHECK(make_family({Family::root_power, 2}).to_string() == "x^6+x^4-1");
  CHECK_THROWS_AS(make_family({Family::even_spread, 8}), Error);
  CHECK(parse_family("even-spread") == Family::even_spread);
  CHECK_FALSE(parse_family("nope").has_value());
}

TEST_CASE("reciprocal and negated variable") {
  CHECK(reciprocal(IntPoly{-1, -1, 0, 1}).to_string() == "x^3+x^2-1");
  CHECK(negate_variable(IntPoly{-1, 0, 1, 1}).to_string() == "x^3-x^2+1");
  CHECK_THROWS_AS(reciprocal(IntPoly{0, 1, 1}), Error);
}
