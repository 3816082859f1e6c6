#include "nfmin/constants.hpp"

#include <cmath>
#include <numbers>

namespace nfmin::constants {

namespace {

// Positive root of a polynomial with a single sign change on (lo, hi).
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double compute_catalan() {
  // G = (pi/8) log(2 + sqrt 3) + (3/8) sum 1/((2k+1)^2 binom(2k, k)).
  long double sum = 0.0L;
  long double binom = 1.0L;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) binom *= static_cast<long double>(2 * k) * (2 * k - 1) / (static_cast<long double>(k) * k);
    long double odd = 2.0L * k + 1.0L;
    sum += 1.0L / (odd * odd * binom);
  }
  long double pi = std::numbers::pi_v<long double>;
  return static_cast<double>(pi / 8.0L * std::log(2.0L + std::sqrt(3.0L)) + 3.0L / 8.0L * sum);
}

}  // namespace

double catalan() {
  static const double value = compute_catalan();
  return value;
}

double ganelius() {
  static const double value = std::sqrt(2.0 * std::numbers::pi / catalan());
  return value;
}

double ganelius_rounded_up() {
  static const double value = std::ceil(ganelius() * 1e6) / 1e6;
  return value;
}

double y0() {
  static const double value = -1.0 + 1.0 / std::numbers::ln2;
  return value;
}

double universal_m_floor() {
  static const double value = std::exp(1.0) * std::numbers::ln2 / 2.0;
  return value;
}

double plastic() {
  static const double value = bisect([](double x) { return x * x * x - x - 1.0; }, 1.0, 2.0);
  return value;
}

double zeta() {
  static const double value = bisect(
      [](double x) {
        double x2 = x * x;
        return x2 * x2 * x2 + x2 - 1.0;
      },
      0.0, 1.0);
  return value;
}

}  // namespace nfmin::constants
