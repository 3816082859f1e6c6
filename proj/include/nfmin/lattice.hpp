#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfmin/measures.hpp"
#include "nfmin/roots.hpp"

namespace nfmin {

using RealMatrix = std::vector<std::vector<double>>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
// Rows are order basis elements written in the power basis 1, a, ..., a^(n-1).
using RationalBasis = std::vector<std::vector<mpq_class>>;

// psi(order) as a row lattice. Complex embeddings contribute (Re, Im) with
// no sqrt(2) factor, so |det| = 2^-t |disc(order)|^(1/2).
struct EmbeddedLattice {
  int dimension = 0;
  Signature signature;
  ConjugateSet roots;
  RationalBasis order_basis;  // the basis the lattice was built from
  RealMatrix basis;           // current rows, possibly LLL-reduced
  RealMatrix gram;
  double determinant = 0.0;  // |det basis|
  mpz_class order_disc;
  // Current rows = transform * rows of order_basis.
  IntMatrix transform;
};

enum class SvpMethod { enumeration, brute_force };

struct ShortestVectorResult {
  double squared_length = 0.0;
  // Coefficients over order_basis, first nonzero entry positive.
  std::vector<std::int64_t> coordinates;
  // The minimizer in the power basis.
  std::vector<mpq_class> element;
  double m_value = 0.0;
  SvpMethod method = SvpMethod::enumeration;
  // Minimal polynomial of the minimizer over Q and its degree.
  IntPoly minimal_polynomial;
  int minimizer_degree = 0;
};

inline constexpr int kMaxEnumerationDimension = 40;
inline constexpr int kMaxBruteForceDimension = 8;

// Builds psi of the power basis, or of `basis` when given. Throws on a
// singular basis and Error("embedding inconsistent") when the determinant
// identity fails by more than 1e-8 relative.
EmbeddedLattice build_embedding(const ConjugateSet& roots, const std::optional<RationalBasis>& basis = std::nullopt);

// LLL with delta = 0.99.
EmbeddedLattice lll_reduce(const EmbeddedLattice& lattice);

// Fincke-Pohst enumeration on an LLL-reduced copy, radius (s+t) + 1e-6.
ShortestVectorResult shortest_vector(const EmbeddedLattice& lattice);

// Exhaustive box enumeration over the original basis, |c_i| <=
// sqrt(radius_sq (G^-1)_ii). Throws if no nonzero vector lies in the ball.
ShortestVectorResult brute_force_shortest(const EmbeddedLattice& lattice, double radius_sq);

// Squared length of sum_i c_i b_i, evaluated at the roots in extended
// precision from the element's power-basis coefficients.
double element_squared_length(const ConjugateSet& roots, const std::vector<mpq_class>& element);

// Characteristic polynomial of g(alpha) over Q, scaled to a primitive
// integer polynomial with positive leading coefficient.
IntPoly characteristic_polynomial(const IntPoly& f, const std::vector<mpq_class>& g);

}  // namespace nfmin
