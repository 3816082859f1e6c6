#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nfmin/intpoly.hpp"

namespace nfmin {

using Complex = std::complex<double>;

struct RootOptions {
  // 0 selects a cap proportional to the degree.
  int max_iterations = 0;
  // Newton passes in extended precision after the simultaneous iteration.
  int polish_passes = 3;
};

// All complex roots of a squarefree polynomial by Aberth-Ehrlich iteration
// from a Newton-polygon circular start. Throws Error("root finding failed")
// if the iteration cap is reached without convergence.
std::vector<Complex> approximate_roots(const IntPoly& p, const RootOptions& options = {});

// Same, with roots satisfying |Im z| < 1e-8 (1 + |z|) snapped onto the real
// axis and re-polished there.
std::vector<Complex> approximate_roots_snapped(const IntPoly& p, const RootOptions& options = {});

bool looks_real(Complex z);

// Certified conjugates of a monic irreducible polynomial.
struct ConjugateSet {
  IntPoly polynomial;
  std::vector<double> real_roots;     // ascending
  std::vector<Complex> complex_reps;  // Im > 0, one per conjugate pair
  int s = 0;
  int t = 0;
  double max_residual = 0.0;

  int degree() const { return polynomial.degree(); }
  // Real roots, then the representatives, then their conjugates.
  std::vector<Complex> all_roots() const;
};

// Throws Error("signature classification failed") if the floating real-root
// count disagrees with the exact Sturm count.
ConjugateSet find_roots(const IntPoly& p, const RootOptions& options = {});

// Argument in [0, 2*pi), branch cut on the positive real axis.
double argument(Complex z);

// Number of roots with argument in [phi, psi). Requires 0 <= phi < psi <= 2 pi.
std::size_t sector_count(std::span<const Complex> roots, double phi, double psi);
std::size_t sector_count(const ConjugateSet& roots, double phi, double psi);

struct ErdosTuranRecord {
  std::size_t count = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// |N_P(phi, psi) - (psi - phi) d / 2 pi| against
// constant * sqrt(d log(L(P) / sqrt|a_d a_0|)).
ErdosTuranRecord erdos_turan_check(const IntPoly& p, double phi, double psi, double constant);
ErdosTuranRecord erdos_turan_check(const IntPoly& p, std::span<const Complex> roots, double phi, double psi,
                                   double constant);
// Uses the Ganelius constant rounded up to six decimals.
ErdosTuranRecord erdos_turan_check(const IntPoly& p, double phi, double psi);

// Exactly one root outside the unit circle, real and > 1. Throws
// InconclusiveError if some modulus lies within 1e-9 of 1.
bool pisot_check(const ConjugateSet& roots);

struct MultinacciLocation {
  int n = 0;
  double dominant = 0.0;
  std::optional<double> second_real;
  bool dominant_in_interval = false;     // 2n/(n+1) < theta < 2
  bool second_real_iff_even = false;     // a negative real root exists iff n even
  bool second_real_in_interval = false;  // -1 < omega < -3^(-1/n), vacuous for odd n
  bool rest_in_annulus = false;          // 3^(-1/n) < |z| < 1 for the non-real roots
  // Smallest distance of a floating-point clause to its interval boundary;
  // the dominant-root clause is decided exactly.
  double min_margin = 0.0;

  bool all() const {
    return dominant_in_interval && second_real_iff_even && second_real_in_interval && rest_in_annulus;
  }
};

MultinacciLocation multinacci_location_check(int n);

}  // namespace nfmin
