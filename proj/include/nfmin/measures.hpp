#pragma once

#include <gmpxx.h>

#include <optional>

#include "nfmin/roots.hpp"

namespace nfmin {

struct Signature {
  int s = 0;
  int t = 0;

  int degree() const { return s + 2 * t; }
  int s_plus_t() const { return s + t; }
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct SizeProfile {
  Signature signature;
  double R = 0.0;  // sum of squares of the real conjugates
  double C = 0.0;  // sum of |z|^2 over one representative per complex pair
  double abs_square_size = 0.0;
  double m = 0.0;
  mpz_class norm_abs;
  double mahler = 1.0;
  // Left empty above the degree cap of size_profile.
  std::optional<mpz_class> discriminant;

  int degree() const { return signature.degree(); }
  // Sum of |z|^2 over all n roots, i.e. R + 2C. Diagnostic only.
  double all_roots_square_sum() const { return R + 2.0 * C; }
};

// Discriminants are computed exactly up to this degree.
inline constexpr int kProfileDiscriminantDegreeCap = 64;

SizeProfile size_profile(const ConjugateSet& roots);

// Signature of the auxiliary extension generator: s2 real and 2 t2 complex
// conjugates.
struct ExtensionSignature {
  int s2 = 1;
  int t2 = 0;

  int n2() const { return s2 + 2 * t2; }
};

// The next three assume Q(alpha) and the auxiliary field are linearly
// disjoint; that hypothesis cannot be checked from a profile.
//
// (s2 + t2) R + (s2 + 2 t2) C.
double relative_square_size(const SizeProfile& profile, ExtensionSignature ext);
// (s1 s2, s1 t2 + s2 t1 + 2 t1 t2).
Signature compositum_signature(Signature base, ExtensionSignature ext);
double relative_m(const SizeProfile& profile, ExtensionSignature ext);

// t2/(s2+t2) < (s1+t1-R-C)/(C-t1). Requires m < 1 (Error "hypothesis
// violated") and C > t1 (Error "inconsistent profile"). The answer is checked
// against relative_m < 1.
bool mk_lt_one_criterion(const SizeProfile& profile, ExtensionSignature ext);

// n 2^(s/n - 1) N^(2/n).
double norm_lower_bound(int n, int s, const mpz_class& norm_abs);

// (s 2^(-2t/n) + t 2^(s/n)) / (s + t), n = s + 2t.
double m_lower_bound_signature(int s, int t);
inline double m_lower_bound_signature(Signature sig) { return m_lower_bound_signature(sig.s, sig.t); }

// True iff (e log 2 / 2) N^(2/n) >= 1, in which case an element of degree n
// and norm N cannot have m < 1.
bool unit_necessity_gate(int n, const mpz_class& norm_abs);

// Profile of alpha^(1/n) for odd n, from the conjugates of alpha, assuming
// [Q(alpha^(1/n)) : Q(alpha)] = n. The discriminant is left empty.
SizeProfile root_extract_profile(const ConjugateSet& base, int n);

enum class Comparison { below, above, inconclusive };

// Compares with relative guard `guard`; values inside the band are not
// classified.
Comparison compare_guarded(double value, double reference, double guard = 1e-9);

}  // namespace nfmin
