#include "nfmin/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace nfmin {

namespace {

using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LComplex = std::complex<long double>;

RationalBasis power_basis(int n) {
  RationalBasis b(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return b;
}

mpq_class rational_determinant(RationalBasis m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

LComplex evaluate_element(const std::vector<mpq_class>& c, LComplex z) {
  LComplex acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + static_cast<long double>(c[j].get_d());
  return acc;
}

// Row of psi(element) at the stored conjugates.
std::vector<long double> embed(const ConjugateSet& roots, const std::vector<mpq_class>& element) {
  std::vector<long double> row;
  row.reserve(static_cast<std::size_t>(roots.degree()));
  for (double r : roots.real_roots) row.push_back(evaluate_element(element, LComplex(r, 0)).real());
  for (const auto& z : roots.complex_reps) {
    LComplex v = evaluate_element(element, LComplex(z.real(), z.imag()));
    row.push_back(v.real());
    row.push_back(v.imag());
  }
  return row;
}

RealMatrix gram_of(const std::vector<std::vector<long double>>& rows) {
  const std::size_t n = rows.size();
  RealMatrix g(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      long double d = 0;
      for (std::size_t k = 0; k < rows[i].size(); ++k) d += rows[i][k] * rows[j][k];
      g[i][j] = g[j][i] = static_cast<double>(d);
    }
  return g;
}

// Rows transform * order_basis, embedded.
std::vector<std::vector<long double>> rows_from_transform(const EmbeddedLattice& lat, const IntMatrix& transform) {
  const std::size_t n = static_cast<std::size_t>(lat.dimension);
  std::vector<std::vector<long double>> base(n);
  for (std::size_t j = 0; j < n; ++j) base[j] = embed(lat.roots, lat.order_basis[j]);
  std::vector<std::vector<long double>> rows(n, std::vector<long double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (transform[i][j] == 0) continue;
      long double u = static_cast<long double>(transform[i][j]);
      for (std::size_t k = 0; k < n; ++k) rows[i][k] += u * base[j][k];
    }
  return rows;
}

void set_rows(EmbeddedLattice& lat, const std::vector<std::vector<long double>>& rows) {
  lat.basis.assign(rows.size(), {});
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (long double v : rows[i]) lat.basis[i].push_back(static_cast<double>(v));
  lat.gram = gram_of(rows);
}

std::vector<mpq_class> element_of(const EmbeddedLattice& lat, const std::vector<std::int64_t>& coords) {
  const std::size_t n = static_cast<std::size_t>(lat.dimension);
  std::vector<mpq_class> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i] == 0) continue;
    mpq_class c(static_cast<long>(coords[i]));
    for (std::size_t j = 0; j < n; ++j) e[j] += c * lat.order_basis[i][j];
  }
  return e;
}

void normalize_sign(std::vector<std::int64_t>& c) {
  for (auto v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : c) w = -w;
    return;
  }
}

struct Candidate {
  std::vector<std::int64_t> coords;  // over order_basis
  double length;
};

// Re-evaluates candidate lengths from their elements and applies the tie
// rule: shortest, then lexicographically smallest sign-normalized
// coordinates.
ShortestVectorResult choose(const EmbeddedLattice& lat, std::vector<Candidate> cands, SvpMethod method) {
  if (cands.empty()) throw Error("no lattice vector within radius");
  for (auto& c : cands) {
    normalize_sign(c.coords);
    c.length = element_squared_length(lat.roots, element_of(lat, c.coords));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cands) best = std::min(best, c.length);
  const double tie = best * (1.0 + 1e-9);
  const Candidate* pick = nullptr;
  for (const auto& c : cands)
    if (c.length <= tie && (pick == nullptr || c.coords < pick->coords)) pick = &c;

  ShortestVectorResult r;
  r.squared_length = pick->length;
  r.coordinates = pick->coords;
  r.element = element_of(lat, pick->coords);
  r.m_value = r.squared_length / lat.signature.s_plus_t();
  r.method = method;
  IntPoly cp = characteristic_polynomial(lat.roots.polynomial, r.element);
  IntPoly g = gcd(cp, cp.derivative());
  auto q = cp.exact_quotient(g);
  if (!q) throw Error("minimal polynomial extraction failed");
  r.minimal_polynomial = q->primitive_part().normalized();
  r.minimizer_degree = r.minimal_polynomial.degree();
  return r;
}

std::vector<mpq_class> poly_mul_mod(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                    const IntPoly& f) {
  const int n = f.degree();
  std::vector<mpq_class> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  // f is monic: x^n = -sum_{i<n} f_i x^i.
  for (std::size_t k = prod.size(); k-- > static_cast<std::size_t>(n);) {
    if (prod[k] == 0) continue;
    mpq_class c = prod[k];
    prod[k] = 0;
    for (int i = 0; i < n; ++i) prod[k - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] -= c * f[i];
  }
  prod.resize(static_cast<std::size_t>(n), 0);
  return prod;
}

}  // namespace

double element_squared_length(const ConjugateSet& roots, const std::vector<mpq_class>& element) {
  long double sum = 0;
  for (double r : roots.real_roots) {
    long double v = evaluate_element(element, LComplex(r, 0)).real();
    sum += v * v;
  }
  for (const auto& z : roots.complex_reps) sum += std::norm(evaluate_element(element, LComplex(z.real(), z.imag())));
  return static_cast<double>(sum);
}

IntPoly characteristic_polynomial(const IntPoly& f, const std::vector<mpq_class>& g) {
  if (!f.is_monic()) throw Error("characteristic polynomial needs a monic modulus");
  const int n = f.degree();
  const auto un = static_cast<std::size_t>(n);
  // Power sums P_j of the roots of f.
  std::vector<mpz_class> P(un, 0);
  P[0] = n;
  for (int k = 1; k < n; ++k) {
    mpz_class v = -k * f[n - k];
    for (int i = 1; i < k; ++i) v -= f[n - i] * P[static_cast<std::size_t>(k - i)];
    P[static_cast<std::size_t>(k)] = v;
  }
  std::vector<mpq_class> base(g);
  base.resize(un, 0);
  std::vector<mpq_class> power(un, 0);
  power[0] = 1;
  std::vector<mpq_class> traces(un + 1, 0);
  for (std::size_t k = 1; k <= un; ++k) {
    power = poly_mul_mod(power, base, f);
    mpq_class tr = 0;
    for (std::size_t j = 0; j < un; ++j) tr += power[j] * P[j];
    traces[k] = tr;
  }
  // Elementary symmetric functions by Newton's identities.
  std::vector<mpq_class> E(un + 1, 0);
  E[0] = 1;
  for (std::size_t k = 1; k <= un; ++k) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      mpq_class term = E[k - i] * traces[i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    E[k] = acc / static_cast<long>(k);
  }
  // x^n - E1 x^(n-1) + E2 x^(n-2) - ...
  mpz_class den = 1;
  for (const auto& e : E) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
  std::vector<mpz_class> coeffs(un + 1);
  for (std::size_t k = 0; k <= un; ++k) {
    mpq_class c = E[k] * den;
    if (k % 2 == 1) c = -c;
    coeffs[un - k] = c.get_num();
  }
  return IntPoly(std::move(coeffs)).primitive_part().normalized();
}

EmbeddedLattice build_embedding(const ConjugateSet& roots, const std::optional<RationalBasis>& basis) {
  const int n = roots.degree();
  if (n < 1) throw Error("empty conjugate set");
  EmbeddedLattice lat;
  lat.dimension = n;
  lat.signature = {roots.s, roots.t};
  lat.roots = roots;
  lat.order_basis = basis ? *basis : power_basis(n);
  if (lat.order_basis.size() != static_cast<std::size_t>(n)) throw Error("basis must be square");
  for (const auto& row : lat.order_basis)
    if (row.size() != static_cast<std::size_t>(n)) throw Error("basis must be square");

  mpq_class change = rational_determinant(lat.order_basis);
  if (change == 0) throw Error("singular basis");
  mpq_class disc = n >= 2 ? mpq_class(discriminant(roots.polynomial)) : mpq_class(1);
  mpq_class order_disc = disc * change * change;
  if (order_disc.get_den() != 1) throw Error("basis does not span an order");
  lat.order_disc = order_disc.get_num();

  lat.transform.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) lat.transform[i][i] = 1;
  std::vector<std::vector<long double>> rows = rows_from_transform(lat, lat.transform);
  set_rows(lat, rows);

  LMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  long double det = std::abs(b.partialPivLu().determinant());
  if (!(det > 0)) throw Error("singular basis");
  lat.determinant = static_cast<double>(det);
  long double expected = std::exp2(-static_cast<long double>(roots.t)) *
                         std::sqrt(static_cast<long double>(mpz_class(abs(lat.order_disc)).get_d()));
  if (!(std::abs(det - expected) <= 1e-8L * expected)) throw Error("embedding inconsistent");
  return lat;
}

EmbeddedLattice lll_reduce(const EmbeddedLattice& lattice) {
  constexpr long double delta = 0.99L;
  const std::size_t n = static_cast<std::size_t>(lattice.dimension);
  EmbeddedLattice out = lattice;
  std::vector<std::vector<long double>> b = rows_from_transform(out, out.transform);
  IntMatrix& U = out.transform;

  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  std::vector<long double> B(n, 0);
  auto dot = [&](const std::vector<long double>& x, const std::vector<long double>& y) {
    long double d = 0;
    for (std::size_t k = 0; k < x.size(); ++k) d += x[k] * y[k];
    return d;
  };
  auto gram_schmidt = [&]() {
    std::vector<std::vector<long double>> bs = b;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], bs[j]) / B[j];
        for (std::size_t k = 0; k < bs[i].size(); ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      B[i] = dot(bs[i], bs[i]);
      if (!(B[i] > 0)) throw Error("lattice reduction lost positive definiteness");
    }
  };
  gram_schmidt();
  const long double limit = 9.0e15L;
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n) {
    if (++guard > 1000000) throw Error("lattice reduction did not terminate");
    for (std::size_t j = k; j-- > 0;) {
      long double q = std::nearbyint(mu[k][j]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < n; ++c) b[k][c] -= q * b[j][c];
      for (std::size_t c = 0; c < n; ++c) {
        long double v = static_cast<long double>(U[k][c]) - q * static_cast<long double>(U[j][c]);
        if (std::abs(v) > limit) throw Error("lattice reduction overflow");
        U[k][c] = static_cast<std::int64_t>(v);
      }
      for (std::size_t i = 0; i < j; ++i) mu[k][i] -= q * mu[j][i];
      mu[k][j] -= q;
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(U[k], U[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  set_rows(out, rows_from_transform(out, U));
  return out;
}

ShortestVectorResult shortest_vector(const EmbeddedLattice& lattice) {
  const int n = lattice.dimension;
  if (n > kMaxEnumerationDimension) throw Error("dimension cap exceeded");
  EmbeddedLattice red = lll_reduce(lattice);
  const auto un = static_cast<std::size_t>(n);
  LMatrix G(n, n);
  std::vector<std::vector<long double>> rows = rows_from_transform(red, red.transform);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      long double d = 0;
      for (std::size_t k = 0; k < un; ++k) d += rows[i][k] * rows[j][k];
      G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d;
    }
  Eigen::LLT<LMatrix> llt(G);
  if (llt.info() != Eigen::Success) throw Error("lattice reduction lost positive definiteness");
  LMatrix R = llt.matrixU();
  std::vector<long double> qd(un);
  std::vector<std::vector<long double>> qo(un, std::vector<long double>(un, 0));
  for (std::size_t i = 0; i < un; ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    qd[i] = R(ii, ii) * R(ii, ii);
    for (std::size_t j = i + 1; j < un; ++j) qo[i][j] = R(ii, static_cast<Eigen::Index>(j)) / R(ii, ii);
  }

  long double radius = lattice.signature.s_plus_t() + 1e-6L;
  std::vector<std::int64_t> x(un, 0);
  std::vector<std::vector<std::int64_t>> found;
  std::vector<long double> found_len;
  long double best = std::numeric_limits<long double>::infinity();

  std::function<void(std::size_t, long double)> descend = [&](std::size_t level, long double used) {
    long double center = 0;
    for (std::size_t j = level + 1; j < un; ++j) center -= qo[level][j] * static_cast<long double>(x[j]);
    long double span = std::sqrt(std::max<long double>(0, (radius - used) / qd[level]));
    auto lo = static_cast<std::int64_t>(std::ceil(center - span - 1e-12L));
    auto hi = static_cast<std::int64_t>(std::floor(center + span + 1e-12L));
    for (std::int64_t v = lo; v <= hi; ++v) {
      long double d = static_cast<long double>(v) - center;
      long double now = used + qd[level] * d * d;
      if (now > radius) continue;
      x[level] = v;
      if (level == 0) {
        if (std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; })) continue;
        found.push_back(x);
        found_len.push_back(now);
        if (now < best) {
          best = now;
          radius = std::min(radius, best * (1.0L + 1e-8L) + 1e-12L);
        }
      } else {
        descend(level - 1, now);
      }
    }
    x[level] = 0;
  };
  descend(un - 1, 0);

  std::vector<Candidate> cands;
  for (std::size_t f = 0; f < found.size(); ++f) {
    if (found_len[f] > radius) continue;
    std::vector<std::int64_t> c(un, 0);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) c[j] += found[f][i] * red.transform[i][j];
    cands.push_back({std::move(c), static_cast<double>(found_len[f])});
  }
  if (cands.empty()) throw Error("internal error: enumeration found no vector");
  return choose(lattice, std::move(cands), SvpMethod::enumeration);
}

ShortestVectorResult brute_force_shortest(const EmbeddedLattice& lattice, double radius_sq) {
  const int n = lattice.dimension;
  if (n > kMaxBruteForceDimension) throw Error("dimension cap exceeded");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<long double>> rows = rows_from_transform(lattice, lattice.transform);
  LMatrix G(n, n);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      long double d = 0;
      for (std::size_t k = 0; k < un; ++k) d += rows[i][k] * rows[j][k];
      G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = d;
    }
  LMatrix Ginv = G.inverse();
  std::vector<std::int64_t> bound(un);
  for (std::size_t i = 0; i < un; ++i) {
    auto ii = static_cast<Eigen::Index>(i);
    bound[i] = static_cast<std::int64_t>(std::floor(std::sqrt(radius_sq * Ginv(ii, ii)) + 1e-9L));
  }

  std::vector<std::int64_t> c(un, 0);
  std::vector<Candidate> cands;
  // Partial quadratic form over the first `level` coordinates.
  std::function<void(std::size_t, long double)> walk = [&](std::size_t level, long double partial) {
    if (level == un) {
      if (partial <= radius_sq && std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) {
        std::vector<std::int64_t> orig(un, 0);
        for (std::size_t i = 0; i < un; ++i)
          for (std::size_t j = 0; j < un; ++j) orig[j] += c[i] * lattice.transform[i][j];
        cands.push_back({std::move(orig), static_cast<double>(partial)});
      }
      return;
    }
    const auto li = static_cast<Eigen::Index>(level);
    long double cross = 0;
    for (std::size_t j = 0; j < level; ++j) cross += G(li, static_cast<Eigen::Index>(j)) * static_cast<long double>(c[j]);
    for (std::int64_t v = -bound[level]; v <= bound[level]; ++v) {
      long double lv = static_cast<long double>(v);
      c[level] = v;
      walk(level + 1, partial + 2 * lv * cross + G(li, li) * lv * lv);
    }
    c[level] = 0;
  };
  walk(0, 0);
  if (cands.empty()) throw Error("no lattice vector within radius");
  // Keep the near-shortest ones before the exact re-evaluation.
  double best = std::numeric_limits<double>::infinity();
  for (const auto& cd : cands) best = std::min(best, cd.length);
  std::erase_if(cands, [&](const Candidate& cd) { return cd.length > best * (1.0 + 1e-7) + 1e-12; });
  return choose(lattice, std::move(cands), SvpMethod::brute_force);
}

}  // namespace nfmin
