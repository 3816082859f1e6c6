#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nfmin/intpoly.hpp"
#include "nfmin/search.hpp"

namespace nfmin {

enum class Verdict { pass, fail, inconclusive };
std::string verdict_name(Verdict v);

struct CheckRecord {
  std::string check_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<double> observed;
  std::vector<double> predicted;
  double residual = 0.0;
  double scaled_residual = 0.0;
  Verdict verdict = Verdict::fail;
  std::string note;
};

// Sum of |beta|^q over the roots of x^n + ... + x - 1 with Im > 0 against
// t + (q/2) log 2; scaled by n^(1/4).
CheckRecord check_sum_asymptotic(int n, double q);

// ||alpha||^2 of the root of x^n + ... + x - 1 against s + t - 3/4 + log 2
// (scaled by n^(1/4)), and R against s - 3/4 (scaled by n).
CheckRecord check_truncated_geom_size(int n);

// x^n + x^(n-2) + ... + x^2 - 1, n = 4k + 2: two real roots,
// ||alpha||^2 against n/2 + log 2 and m against 1 - 2(1 - log 2)/(n + 2).
CheckRecord check_even_spread_size(int k);

// The same element in a compositum with a totally real field of degree s/2,
// n = (2k+1) s; bound n/2 + s log 2 / 2.
CheckRecord check_even_spread_compositum(int s, int k);

// Every cubic with signature (1,1) and m < 1 has ||alpha||^2 >= theta +
// theta^-2, with equality only for x^3 - x^2 + 1 and x^3 + x^2 - 1.
CheckRecord check_cubic();
// One cubic with signature (1,1) against the same bound.
CheckRecord check_cubic_polynomial(const IntPoly& f);

// x^(3n) + x^(2n) - 1: m < 1 and the closed form for ||alpha||^2.
CheckRecord check_root_power(int n);

// prod (x_i - x_j)^2 <= (L/(s^2 - s))^((s^2 - s)/2) prod k^k, in log space.
CheckRecord check_schur(const std::vector<double>& xs);
// log prod k^k - [((s^2 + s)/2 + 1/12) log s - s^2/4] stays bounded.
CheckRecord check_factorial_power(int s);

// Sector counts over the 2k sectors [pi j/k, pi(j+1)/k), k = max(1,
// floor(n^(1/4))); the record keeps the worst lhs/rhs ratio.
CheckRecord check_erdos_turan(const IntPoly& p, double constant);
// One record per family and constant, aggregated over the family range.
std::vector<CheckRecord> check_erdos_turan_suite(bool full);

// Totally real monic irreducible polynomials of degree n: R = p_2 >= 3n/2,
// equality only at x^2 +- x - 1. Polynomials with p_2 > 3n/2 satisfy the
// bound by the exact identity R = a_1^2 - 2 a_2, so only p_2 <= 3n/2 is
// enumerated.
CheckRecord check_smyth(int n);

CheckRecord check_multinacci_location(int n);
CheckRecord check_pisot_multinacci(int n);
// x^(4k+2) + ... + x^2 - 1 irreducible with exactly two real roots.
CheckRecord check_even_spread_structure(int k);
// m(alpha^(1/n)) - 1 - log|Nm alpha|/(s + t), scaled by n^2.
CheckRecord check_root_extract(const IntPoly& base, int n);
CheckRecord check_subelement(const SubelementPattern& pattern);
// Named constants against their printed values.
std::vector<CheckRecord> check_constants();

enum class Suite { fast, all };
std::vector<CheckRecord> run_suite(Suite suite);

}  // namespace nfmin
