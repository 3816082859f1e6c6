#include "nfmin/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nfmin/constants.hpp"

namespace nfmin {

namespace {

using LComplex = std::complex<long double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// p(z)/p'(z) together with the relative residual |p(z)| / sum |a_i||z|^i.
// For |z| > 1 the reversed polynomial is evaluated at 1/z, which keeps the
// Horner recurrences bounded.
template <class T>
struct NewtonStep {
  std::complex<T> ratio;
  T relative_residual;
};

template <class T>
NewtonStep<T> newton_step(const std::vector<T>& a, std::complex<T> z) {
  const int n = static_cast<int>(a.size()) - 1;
  using C = std::complex<T>;
  if (std::abs(z) <= T(1)) {
    C p = a[static_cast<std::size_t>(n)];
    C dp = 0;
    T bound = std::abs(a[static_cast<std::size_t>(n)]);
    const T az = std::abs(z);
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + a[static_cast<std::size_t>(i)];
      bound = bound * az + std::abs(a[static_cast<std::size_t>(i)]);
    }
    C ratio = dp == C(0) ? C(0) : p / dp;
    return {ratio, std::abs(p) / bound};
  }
  const C w = T(1) / z;
  const T aw = std::abs(w);
  C q = a[0];
  C dq = 0;
  T bound = std::abs(a[0]);
  for (int i = 1; i <= n; ++i) {
    dq = dq * w + q;
    q = q * w + a[static_cast<std::size_t>(i)];
    bound = bound * aw + std::abs(a[static_cast<std::size_t>(i)]);
  }
  C denom = T(n) * q - w * dq;
  C ratio = denom == C(0) ? C(0) : z * q / denom;
  return {ratio, std::abs(q) / bound};
}

// Initial approximations on circles whose radii come from the upper convex
// hull of (i, log|a_i|).
std::vector<Complex> initial_guesses(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int i = 0; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0.0) continue;
    double y = std::log(std::abs(a[static_cast<std::size_t>(i)]));
    while (idx.size() >= 2) {
      std::size_t m = idx.size();
      double x1 = idx[m - 2], y1 = lg[m - 2], x2 = idx[m - 1], y2 = lg[m - 1];
      // Drop the middle point if it lies on or below the chord.
      if ((x2 - x1) * (y - y1) - (y2 - y1) * (i - x1) >= 0) {
        idx.pop_back();
        lg.pop_back();
      } else {
        break;
      }
    }
    idx.push_back(i);
    lg.push_back(y);
  }
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(n));
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
    int k = idx[e + 1] - idx[e];
    double radius = std::exp((lg[e] - lg[e + 1]) / k);
    double offset = two_pi * static_cast<double>(e + 1) / static_cast<double>(n) + 0.4;
    for (int j = 0; j < k; ++j) z.push_back(std::polar(radius, two_pi * j / k + offset));
  }
  return z;
}

std::vector<Complex> aberth(const std::vector<double>& a, int max_iterations) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<Complex> z = initial_guesses(a);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  int remaining = n;
  for (int it = 0; it < max_iterations && remaining > 0; ++it) {
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      NewtonStep<double> st = newton_step(a, z[static_cast<std::size_t>(k)]);
      if (st.relative_residual <= 4.0 * n * kEps) {
        done[static_cast<std::size_t>(k)] = 1;
        --remaining;
        continue;
      }
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      Complex corr = st.ratio / (1.0 - st.ratio * sum);
      z[static_cast<std::size_t>(k)] -= corr;
      if (std::abs(corr) <= 2.0 * kEps * std::abs(z[static_cast<std::size_t>(k)])) {
        done[static_cast<std::size_t>(k)] = 1;
        --remaining;
      }
    }
  }
  if (remaining > 0) throw Error("root finding failed");
  return z;
}

std::vector<long double> long_coefficients(const IntPoly& p) {
  std::vector<long double> a(p.coefficients().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    // mpz -> long double through a decimal-free path: exact for |c| < 2^64.
    const mpz_class& c = p.coefficients()[i];
    if (c.fits_slong_p())
      a[i] = static_cast<long double>(c.get_si());
    else
      a[i] = static_cast<long double>(c.get_d());
  }
  return a;
}

// Newton in long double; a step is kept only if it lowers the relative
// residual and stays well inside the gap to the nearest other root.
void polish(const std::vector<long double>& a, std::vector<Complex>& roots, int passes, bool keep_real) {
  const std::size_t n = roots.size();
  for (std::size_t k = 0; k < n; ++k) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) gap = std::min(gap, std::abs(roots[k] - roots[j]));
    LComplex z(roots[k].real(), roots[k].imag());
    bool real = keep_real && roots[k].imag() == 0.0;
    NewtonStep<long double> st = newton_step(a, z);
    for (int pass = 0; pass < passes; ++pass) {
      LComplex step = st.ratio;
      if (real) step = LComplex(step.real(), 0.0L);
      if (std::abs(step) > 0.25L * gap) break;
      LComplex cand = z - step;
      NewtonStep<long double> next = newton_step(a, cand);
      if (!(next.relative_residual < st.relative_residual)) break;
      z = cand;
      st = next;
    }
    roots[k] = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
}

int default_cap(int n) { return 500 + 4 * n; }

}  // namespace

bool looks_real(Complex z) { return std::abs(z.imag()) < 1e-8 * (1.0 + std::abs(z)); }

std::vector<Complex> approximate_roots(const IntPoly& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error("root finding needs a nonconstant polynomial");
  int zeros = 0;
  while (p[zeros] == 0) ++zeros;
  std::vector<mpz_class> trimmed(p.coefficients().begin() + zeros, p.coefficients().end());
  IntPoly q(std::move(trimmed));
  std::vector<Complex> roots(static_cast<std::size_t>(zeros), Complex(0.0, 0.0));
  if (q.degree() == 0) return roots;
  std::vector<Complex> z;
  if (q.degree() == 1) {
    z.emplace_back(-q[0].get_d() / q[1].get_d(), 0.0);
  } else {
    int cap = options.max_iterations > 0 ? options.max_iterations : default_cap(q.degree());
    z = aberth(q.to_doubles(), cap);
    polish(long_coefficients(q), z, options.polish_passes, false);
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<Complex> approximate_roots_snapped(const IntPoly& p, const RootOptions& options) {
  std::vector<Complex> z = approximate_roots(p, options);
  bool any = false;
  for (auto& r : z)
    if (r.imag() != 0.0 && looks_real(r)) {
      r = Complex(r.real(), 0.0);
      any = true;
    }
  if (any && p.degree() >= 2) {
    int zeros = 0;
    while (p[zeros] == 0) ++zeros;
    std::vector<mpz_class> trimmed(p.coefficients().begin() + zeros, p.coefficients().end());
    std::vector<Complex> nonzero(z.begin() + zeros, z.end());
    polish(long_coefficients(IntPoly(std::move(trimmed))), nonzero, options.polish_passes, true);
    std::copy(nonzero.begin(), nonzero.end(), z.begin() + zeros);
  }
  return z;
}

std::vector<Complex> ConjugateSet::all_roots() const {
  std::vector<Complex> v;
  v.reserve(static_cast<std::size_t>(s + 2 * t));
  for (double r : real_roots) v.emplace_back(r, 0.0);
  for (const auto& z : complex_reps) v.push_back(z);
  for (const auto& z : complex_reps) v.push_back(std::conj(z));
  return v;
}

ConjugateSet find_roots(const IntPoly& p, const RootOptions& options) {
  if (p.degree() < 1) throw Error("find_roots needs degree >= 1");
  if (!p.is_monic()) throw Error("find_roots needs a monic polynomial");
  const std::size_t sturm = sturm_real_count(p);
  std::vector<Complex> z = approximate_roots_snapped(p, options);

  ConjugateSet out;
  out.polynomial = p;
  std::size_t negatives = 0;
  for (const auto& r : z) {
    if (r.imag() == 0.0)
      out.real_roots.push_back(r.real());
    else if (r.imag() > 0.0)
      out.complex_reps.push_back(r);
    else
      ++negatives;
  }
  if (negatives != out.complex_reps.size() || out.real_roots.size() != sturm)
    throw Error("signature classification failed");
  std::sort(out.real_roots.begin(), out.real_roots.end());
  std::sort(out.complex_reps.begin(), out.complex_reps.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.s = static_cast<int>(out.real_roots.size());
  out.t = static_cast<int>(out.complex_reps.size());

  const int n = p.degree();
  const double l1 = p.l1_norm().get_d();
  double worst = 0.0;
  for (const auto& r : out.all_roots()) {
    LComplex zl(r.real(), r.imag());
    double res = static_cast<double>(std::abs(p.evaluate(zl)));
    double allowed = 1e-10 * std::pow(1.0 + std::abs(r), n) * l1;
    if (!(res <= allowed)) throw Error("root finding failed");
    worst = std::max(worst, res);
  }
  out.max_residual = worst;
  return out;
}

double argument(Complex z) {
  const double two_pi = 2.0 * std::numbers::pi;
  double a = std::atan2(z.imag(), z.real());
  if (a < 0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

std::size_t sector_count(std::span<const Complex> roots, double phi, double psi) {
  if (!(phi >= 0.0 && phi < psi && psi <= 2.0 * std::numbers::pi + 1e-15)) throw Error("invalid sector");
  std::size_t c = 0;
  for (const auto& z : roots) {
    double a = argument(z);
    if (a >= phi && a < psi) ++c;
  }
  return c;
}

std::size_t sector_count(const ConjugateSet& roots, double phi, double psi) {
  std::vector<Complex> all = roots.all_roots();
  return sector_count(std::span<const Complex>(all), phi, psi);
}

ErdosTuranRecord erdos_turan_check(const IntPoly& p, std::span<const Complex> roots, double phi, double psi,
                                   double constant) {
  if (p.degree() < 1 || p.constant_term() == 0) throw Error("Erdos-Turan check needs nonzero end coefficients");
  const double d = p.degree();
  ErdosTuranRecord rec;
  rec.count = sector_count(roots, phi, psi);
  rec.lhs = std::abs(static_cast<double>(rec.count) - (psi - phi) * d / (2.0 * std::numbers::pi));
  mpz_class ends = abs(p.leading() * p.constant_term());
  double ratio = p.l1_norm().get_d() / std::sqrt(ends.get_d());
  rec.rhs = constant * std::sqrt(d * std::log(ratio));
  rec.holds = rec.lhs <= rec.rhs;
  return rec;
}

ErdosTuranRecord erdos_turan_check(const IntPoly& p, double phi, double psi, double constant) {
  if (p.degree() < 1 || p.constant_term() == 0) throw Error("Erdos-Turan check needs nonzero end coefficients");
  std::vector<Complex> z = approximate_roots_snapped(p);
  return erdos_turan_check(p, std::span<const Complex>(z), phi, psi, constant);
}

ErdosTuranRecord erdos_turan_check(const IntPoly& p, double phi, double psi) {
  return erdos_turan_check(p, phi, psi, constants::ganelius_rounded_up());
}

bool pisot_check(const ConjugateSet& roots) {
  int outside = 0;
  bool dominant_ok = false;
  for (const auto& z : roots.all_roots()) {
    double m = std::abs(z);
    if (std::abs(m - 1.0) < 1e-9) throw InconclusiveError("inconclusive at tolerance");
    if (m > 1.0) {
      ++outside;
      dominant_ok = z.imag() == 0.0 && z.real() > 1.0;
    }
  }
  return outside == 1 && dominant_ok;
}

MultinacciLocation multinacci_location_check(int n) {
  if (n < 2) throw Error("multinacci location check needs n >= 2");
  ConjugateSet cs = find_roots(make_family({Family::multinacci, n}));
  MultinacciLocation loc;
  loc.n = n;
  double margin = std::numeric_limits<double>::infinity();
  const double inner = std::pow(3.0, -1.0 / n);

  std::vector<double> positives, negatives;
  for (double r : cs.real_roots) (r > 0 ? positives : negatives).push_back(r);
  if (positives.size() == 1) {
    // The dominant root is within 2^-n of 2, so the interval test is exact:
    // one root in (2n/(n+1), 2] and f(2) != 0.
    loc.dominant = positives[0];
    const IntPoly& f = cs.polynomial;
    RationalInterval interval{mpq_class(2 * n, n + 1), mpq_class(2)};
    interval.lo.canonicalize();
    loc.dominant_in_interval = sturm_real_count(f, interval) == 1 && f.evaluate(mpq_class(2)) != 0;
  }
  const bool even = n % 2 == 0;
  loc.second_real_iff_even = even ? negatives.size() == 1 : negatives.empty();
  if (negatives.size() == 1) {
    loc.second_real = negatives[0];
    loc.second_real_in_interval = *loc.second_real > -1.0 && *loc.second_real < -inner;
    margin = std::min({margin, *loc.second_real + 1.0, -inner - *loc.second_real});
  } else {
    loc.second_real_in_interval = negatives.empty() && !even;
  }
  loc.rest_in_annulus = true;
  for (const auto& z : cs.complex_reps) {
    double m = std::abs(z);
    if (!(m > inner && m < 1.0)) loc.rest_in_annulus = false;
    margin = std::min({margin, m - inner, 1.0 - m});
  }
  loc.min_margin = margin;
  return loc;
}

}  // namespace nfmin
