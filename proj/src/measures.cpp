#include "nfmin/measures.hpp"

#include <algorithm>
#include <cmath>

#include "nfmin/constants.hpp"

namespace nfmin {

SizeProfile size_profile(const ConjugateSet& roots) {
  SizeProfile p;
  p.signature = {roots.s, roots.t};
  long double R = 0.0L, C = 0.0L, mahler = 1.0L;
  for (double r : roots.real_roots) {
    R += static_cast<long double>(r) * r;
    if (std::abs(r) > 1.0) mahler *= std::abs(r);
  }
  for (const auto& z : roots.complex_reps) {
    long double a = std::norm(std::complex<long double>(z.real(), z.imag()));
    C += a;
    if (a > 1.0L) mahler *= a;
  }
  p.R = static_cast<double>(R);
  p.C = static_cast<double>(C);
  p.abs_square_size = static_cast<double>(R + C);
  p.m = static_cast<double>((R + C) / (roots.s + roots.t));
  p.norm_abs = abs(roots.polynomial.constant_term());
  p.mahler = static_cast<double>(mahler);
  if (roots.degree() >= 2 && roots.degree() <= kProfileDiscriminantDegreeCap)
    p.discriminant = discriminant(roots.polynomial);
  return p;
}

double relative_square_size(const SizeProfile& profile, ExtensionSignature ext) {
  if (ext.s2 < 0 || ext.t2 < 0 || ext.n2() < 1) throw Error("invalid extension signature");
  return (ext.s2 + ext.t2) * profile.R + (ext.s2 + 2 * ext.t2) * profile.C;
}

Signature compositum_signature(Signature base, ExtensionSignature ext) {
  if (ext.s2 < 0 || ext.t2 < 0 || ext.n2() < 1) throw Error("invalid extension signature");
  return {base.s * ext.s2, base.s * ext.t2 + ext.s2 * base.t + 2 * base.t * ext.t2};
}

double relative_m(const SizeProfile& profile, ExtensionSignature ext) {
  Signature sig = compositum_signature(profile.signature, ext);
  return relative_square_size(profile, ext) / sig.s_plus_t();
}

bool mk_lt_one_criterion(const SizeProfile& profile, ExtensionSignature ext) {
  if (!(profile.m < 1.0)) throw Error("hypothesis violated");
  const int s1 = profile.signature.s, t1 = profile.signature.t;
  if (!(profile.C > t1)) throw Error("inconsistent profile");
  const double lhs = static_cast<double>(ext.t2) / (ext.s2 + ext.t2);
  const double rhs = (s1 + t1 - profile.R - profile.C) / (profile.C - t1);
  Comparison direct = compare_guarded(relative_m(profile, ext), 1.0);
  if (direct == Comparison::inconclusive) throw InconclusiveError("inconclusive at tolerance");
  const bool verdict = lhs < rhs;
  if (verdict != (direct == Comparison::below)) throw Error("criterion disagrees with relative size");
  return verdict;
}

double norm_lower_bound(int n, int s, const mpz_class& norm_abs) {
  if (n < 1 || s < 0 || s > n || (n - s) % 2 != 0) throw Error("invalid signature");
  if (norm_abs < 1) throw Error("norm must be at least 1");
  return n * std::exp2(static_cast<double>(s) / n - 1.0) * std::pow(norm_abs.get_d(), 2.0 / n);
}

double m_lower_bound_signature(int s, int t) {
  if (s < 0 || t < 0 || s + t < 1) throw Error("invalid signature");
  const double n = s + 2 * t;
  return (s * std::exp2(-2.0 * t / n) + t * std::exp2(s / n)) / (s + t);
}

bool unit_necessity_gate(int n, const mpz_class& norm_abs) {
  if (n < 1 || norm_abs < 1) throw Error("invalid gate arguments");
  return constants::universal_m_floor() * std::pow(norm_abs.get_d(), 2.0 / n) >= 1.0;
}

SizeProfile root_extract_profile(const ConjugateSet& base, int n) {
  if (n < 1 || n % 2 == 0) throw Error("root extraction needs odd n");
  const double e = 2.0 / n;
  long double real_part = 0.0L, complex_part = 0.0L;
  for (double r : base.real_roots) real_part += std::pow(static_cast<long double>(std::abs(r)), e);
  for (const auto& z : base.complex_reps) complex_part += std::pow(static_cast<long double>(std::abs(z)), e);

  SizeProfile p;
  p.signature = {base.s, (n - 1) * base.s / 2 + n * base.t};
  p.R = static_cast<double>(real_part);
  p.C = static_cast<double>((n - 1) / 2.0L * real_part + n * complex_part);
  p.abs_square_size = static_cast<double>((n + 1) / 2.0L * real_part + n * complex_part);
  p.m = p.abs_square_size / p.signature.s_plus_t();
  p.norm_abs = abs(base.polynomial.constant_term());
  long double mahler = 1.0L;
  for (const auto& z : base.all_roots())
    if (std::abs(z) > 1.0) mahler *= std::abs(z);
  p.mahler = static_cast<double>(mahler);
  return p;
}

Comparison compare_guarded(double value, double reference, double guard) {
  const double band = guard * std::max(std::abs(value), std::abs(reference));
  if (std::abs(value - reference) <= band) return Comparison::inconclusive;
  return value < reference ? Comparison::below : Comparison::above;
}

}  // namespace nfmin
