#include <cmath>
#include <complex>
#include <vector>

#include "nfmin/intpoly.hpp"
#include "nfmin/roots.hpp"

namespace nfmin {

namespace {

using LComplex = std::complex<long double>;

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<IntPoly> rational_root_factor(const IntPoly& p) {
  // Small end coefficients only; the subset search covers linear factors too.
  if (abs(p.constant_term()) > 1000000 || abs(p.leading()) > 1000000) return std::nullopt;
  for (const auto& num : positive_divisors(p.constant_term()))
    for (const auto& den : positive_divisors(p.leading()))
      for (int sign : {1, -1}) {
        mpq_class x(sign * num, den);
        x.canonicalize();
        if (x.get_den() != den) continue;
        if (p.evaluate(x) == 0) return IntPoly(std::vector<mpz_class>{-x.get_num(), x.get_den()});
      }
  return std::nullopt;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return static_cast<std::size_t>(std::llround(r));
}

// Depth-first walk over conjugation-closed root subsets. Each leaf is first
// screened by two cheap necessary conditions (b times the root product and
// b times the root sum must be near integers for some divisor b of the
// leading coefficient) before the candidate factor is expanded and tested by
// exact division.
class SubsetSearch {
 public:
  SubsetSearch(const IntPoly& p, std::vector<LComplex> real, std::vector<LComplex> pairs)
      : p_(p), real_(std::move(real)), pairs_(std::move(pairs)) {
    for (const auto& b : positive_divisors(p.leading())) lead_divisors_.push_back(b.get_d());
    lead_divisors_mpz_ = positive_divisors(p.leading());
  }

  std::optional<IntPoly> run() {
    const int n = p_.degree();
    for (int k = 1; k <= n / 2; ++k) {
      target_ = k;
      chosen_.clear();
      if (auto f = walk(0, 0, LComplex(0), 0.0L)) return f;
    }
    return std::nullopt;
  }

 private:
  // Items are indexed real roots first, then pairs. `size` counts roots.
  std::optional<IntPoly> walk(std::size_t item, int size, LComplex sum, long double log_mod) {
    if (size == target_) return test_leaf(sum, log_mod);
    const std::size_t items = real_.size() + pairs_.size();
    for (std::size_t i = item; i < items; ++i) {
      const bool is_pair = i >= real_.size();
      const int add = is_pair ? 2 : 1;
      if (size + add > target_) continue;
      LComplex z = is_pair ? pairs_[i - real_.size()] : real_[i];
      LComplex next_sum = sum + (is_pair ? LComplex(2.0L * z.real(), 0) : z);
      long double next_log = log_mod + add * std::log(std::abs(z));
      chosen_.push_back(i);
      if (auto f = walk(i + 1, size + add, next_sum, next_log)) return f;
      chosen_.pop_back();
    }
    return std::nullopt;
  }

  static bool near_integer(long double x) {
    return std::fabs(x - std::nearbyint(x)) <= 1e-5L * (1.0L + std::fabs(x));
  }

  std::optional<IntPoly> test_leaf(LComplex sum, long double log_mod) {
    const long double modulus = std::exp(log_mod);
    for (std::size_t bi = 0; bi < lead_divisors_.size(); ++bi) {
      long double b = lead_divisors_[bi];
      if (!near_integer(b * modulus) || std::nearbyint(b * modulus) < 1.0L) continue;
      if (!near_integer(b * sum.real())) continue;
      if (auto f = expand_and_divide(lead_divisors_mpz_[bi])) return f;
    }
    return std::nullopt;
  }

  std::optional<IntPoly> expand_and_divide(const mpz_class& b) {
    std::vector<LComplex> c{LComplex(1)};
    auto mul_linear = [&](LComplex z) {
      c.push_back(0);
      for (std::size_t j = c.size() - 1; j > 0; --j) c[j] = c[j - 1] - z * c[j];
      c[0] = -z * c[0];
    };
    for (std::size_t i : chosen_) {
      if (i < real_.size()) {
        mul_linear(real_[i]);
      } else {
        LComplex z = pairs_[i - real_.size()];
        mul_linear(z);
        mul_linear(std::conj(z));
      }
    }
    const long double bl = b.get_d();
    std::vector<mpz_class> coeffs(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      long double v = std::nearbyint(bl * c[j].real());
      if (std::fabs(v) > 9.0e15L) return std::nullopt;
      coeffs[j] = mpz_class(static_cast<long>(v));
    }
    IntPoly g(std::move(coeffs));
    if (g.degree() < 1) return std::nullopt;
    if (p_.exact_quotient(g)) return g.primitive_part();
    return std::nullopt;
  }

  const IntPoly& p_;
  std::vector<LComplex> real_;
  std::vector<LComplex> pairs_;
  std::vector<long double> lead_divisors_;
  std::vector<mpz_class> lead_divisors_mpz_;
  std::vector<std::size_t> chosen_;
  int target_ = 0;
};

}  // namespace

IrreducibilityResult irreducibility(const IntPoly& input, const IrreducibilityOptions& options) {
  if (input.degree() < 1) throw Error("irreducibility undefined for constant polynomials");
  IntPoly p = input.primitive_part();
  IrreducibilityResult result;
  if (p.degree() == 1) {
    result.verdict = IrreducibilityResult::Verdict::irreducible;
    return result;
  }
  if (p.constant_term() == 0) {
    result.verdict = IrreducibilityResult::Verdict::reducible;
    result.factor = IntPoly{0, 1};
    return result;
  }
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() > 0) {
    result.verdict = IrreducibilityResult::Verdict::reducible;
    result.factor = g;
    return result;
  }
  if (auto f = rational_root_factor(p)) {
    result.verdict = IrreducibilityResult::Verdict::reducible;
    result.factor = *f;
    return result;
  }
  if (p.degree() <= 3) {
    result.verdict = IrreducibilityResult::Verdict::irreducible;
    return result;
  }

  std::vector<Complex> roots;
  try {
    roots = approximate_roots_snapped(p);
  } catch (const Error&) {
    return result;
  }
  std::vector<LComplex> real, pairs;
  std::size_t below = 0;
  for (const auto& z : roots) {
    if (z.imag() == 0.0)
      real.emplace_back(z.real(), 0.0L);
    else if (z.imag() > 0.0)
      pairs.emplace_back(z.real(), z.imag());
    else
      ++below;
  }
  if (below != pairs.size()) return result;

  std::size_t subsets = 0;
  const std::size_t half = static_cast<std::size_t>(p.degree() / 2);
  for (std::size_t c = 0; 2 * c <= half; ++c)
    for (std::size_t r = 0; r + 2 * c <= half; ++r) {
      if (r + c == 0) continue;
      subsets += binom(real.size(), r) * binom(pairs.size(), c);
      if (subsets > options.max_subsets) return result;
    }

  SubsetSearch search(p, std::move(real), std::move(pairs));
  if (auto f = search.run()) {
    result.verdict = IrreducibilityResult::Verdict::reducible;
    result.factor = *f;
  } else {
    result.verdict = IrreducibilityResult::Verdict::irreducible;
  }
  return result;
}

bool is_irreducible(const IntPoly& p) {
  IrreducibilityResult r = irreducibility(p);
  if (r.verdict == IrreducibilityResult::Verdict::beyond_reach)
    throw Error("irreducibility beyond reach of subset reconstruction");
  return r.verdict == IrreducibilityResult::Verdict::irreducible;
}

}  // namespace nfmin
