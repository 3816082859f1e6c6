#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfmin/error.hpp"

namespace nfmin {

// Dense polynomial with arbitrary-precision integer coefficients, constant
// term first. The coefficient vector never carries trailing zeros, so the
// zero polynomial is the empty vector and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(int degree, const mpz_class& c = 1);

  // Accepts either a comma-separated coefficient list, constant term first
  // ("-1,-1,0,1"), or an expression in x ("x^3-x-1", "2*x^2 + 3x - 1").
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  // Coefficient of x^i; zero outside [0, degree].
  const mpz_class& operator[](int i) const;
  const mpz_class& leading() const { return (*this)[degree()]; }
  const mpz_class& constant_term() const { return (*this)[0]; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  // Multiplied by -1 if the leading coefficient is negative.
  IntPoly normalized() const;

  mpq_class evaluate(const mpq_class& x) const;
  std::complex<double> evaluate(std::complex<double> z) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  // Sum of absolute values of the coefficients.
  mpz_class l1_norm() const;
  std::vector<double> to_doubles() const;

  // "x^3-x-1"
  std::string to_string() const;
  // "-1,-1,0,1"
  std::string to_coefficient_list() const;

  // Quotient when `divisor` divides this polynomial exactly over Z.
  std::optional<IntPoly> exact_quotient(const IntPoly& divisor) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& k, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Deterministic report order: lower degree first, then coefficients
  // compared from the leading term down.
  friend bool lex_less(const IntPoly& a, const IntPoly& b);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Resultant by the subresultant algorithm; agrees with the Sylvester
// determinant.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws for degree < 2.
mpz_class discriminant(const IntPoly& p);

// Primitive gcd over Z with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Closed interval endpoints for real-root counting. Roots are counted in the
// half-open interval (lo, hi].
struct RationalInterval {
  mpq_class lo;
  mpq_class hi;
};

// Sturm sequence p, p', -rem(...), ... kept as primitive integer polynomials
// with the signs of the Euclidean remainders.
class SturmSequence {
 public:
  // Throws Error("squarefree required") if gcd(p, p') is nonconstant.
  explicit SturmSequence(const IntPoly& p);

  std::size_t count(const std::optional<RationalInterval>& interval = std::nullopt) const;
  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  int variations_at(const mpq_class& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<IntPoly> chain_;
};

// Number of distinct real roots, on the whole line or in (lo, hi].
std::size_t sturm_real_count(const IntPoly& p,
                             const std::optional<RationalInterval>& interval = std::nullopt);

bool is_squarefree(const IntPoly& p);

// ---------------------------------------------------------------------------
// Irreducibility over Q.

struct IrreducibilityOptions {
  // Largest number of conjugation-closed root subsets tried before giving up.
  std::size_t max_subsets = 1u << 22;
};

struct IrreducibilityResult {
  enum class Verdict { irreducible, reducible, beyond_reach };
  Verdict verdict = Verdict::beyond_reach;
  // Nontrivial factor when reducible.
  std::optional<IntPoly> factor;
};

IrreducibilityResult irreducibility(const IntPoly& p, const IrreducibilityOptions& options = {});

// Throws if the subset search would exceed its budget.
bool is_irreducible(const IntPoly& p);

// ---------------------------------------------------------------------------
// Polynomial families.

enum class Family {
  multinacci,           // x^n - x^(n-1) - ... - x - 1
  multinacci_cofactor,  // x^(n+1) - 2x^n + 1
  truncated_geom,       // x^n + x^(n-1) + ... + x - 1
  even_spread,          // x^n + x^(n-2) + ... + x^2 - 1, n = 2 mod 4
  root_power,           // x^(3n) + x^(2n) - 1
};

struct FamilyKind {
  Family family;
  int n;
};

IntPoly make_family(FamilyKind kind);
std::string family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

// x^deg p(1/x), sign-normalized. Throws on zero constant term.
IntPoly reciprocal(const IntPoly& p);
// p(-x), sign-normalized.
IntPoly negate_variable(const IntPoly& p);

}  // namespace nfmin
