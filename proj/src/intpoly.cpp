#include "nfmin/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace nfmin {

namespace {

const mpz_class& zero_coefficient() {
  static const mpz_class z = 0;
  return z;
}

int sign_of(const mpz_class& x) { return sgn(x); }

int sign_of(const mpq_class& x) { return sgn(x); }

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(int degree, const mpz_class& c) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return zero_coefficient();
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  if (g == 1) return *this;
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::normalized() const {
  if (!is_zero() && leading() < 0) return -*this;
  return *this;
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
  // Homogenized Horner on numerator/denominator keeps everything integral.
  if (is_zero()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = coeffs_.back();
  mpz_class den_pow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * den_pow;
  }
  mpq_class r(acc, den_pow);
  r.canonicalize();
  return r;
}

std::complex<double> IntPoly::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (int i = degree(); i >= 0; --i) acc = acc * z + coeffs_[static_cast<std::size_t>(i)].get_d();
  return acc;
}

std::complex<long double> IntPoly::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0.0L;
  for (int i = degree(); i >= 0; --i)
    acc = acc * z + static_cast<long double>(coeffs_[static_cast<std::size_t>(i)].get_d());
  return acc;
}

mpz_class IntPoly::l1_norm() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

std::vector<double> IntPoly::to_doubles() const {
  std::vector<double> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i].get_d();
  return v;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::string IntPoly::to_coefficient_list() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].get_str();
  }
  return s;
}

std::optional<IntPoly> IntPoly::exact_quotient(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return IntPoly{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  std::vector<mpz_class> q(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const mpz_class& lc = divisor.leading();
  const int dd = divisor.degree();
  for (int k = degree() - dd; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= qk * divisor.coeffs_[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (int i = 0; i < dd; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& k, const IntPoly& a) {
  std::vector<mpz_class> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * a.coeffs_[i];
  return IntPoly(std::move(v));
}

bool lex_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

// Returns lc(b)^e * a - q * b with e the number of elimination steps, and
// reports e so callers can recover the sign of the true remainder.
IntPoly pseudo_remainder_steps(const IntPoly& a, const IntPoly& b, int& steps) {
  if (b.is_zero()) throw Error("pseudo-remainder by zero polynomial");
  std::vector<mpz_class> r = a.coefficients();
  const int db = b.degree();
  const auto& bc = b.coefficients();
  const mpz_class& lc = b.leading();
  steps = 0;
  int dr = a.degree();
  mpz_class t;
  while (dr >= db) {
    mpz_class top = r[static_cast<std::size_t>(dr)];
    const int shift = dr - db;
    if (lc != 1)
      for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lc;
    for (int j = 0; j < db; ++j) {
      t = top * bc[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(j + shift)] -= t;
    }
    r[static_cast<std::size_t>(dr)] = 0;
    ++steps;
    --dr;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
      // A vanishing coefficient still counts as an elimination step for the
      // lc^(deg a - deg b + 1) convention.
      if (dr >= db) {
        if (lc != 1)
          for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lc;
        ++steps;
      }
      --dr;
    }
  }
  r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
  return IntPoly(std::move(r));
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

IntPoly divexact(const IntPoly& p, const mpz_class& d) {
  std::vector<mpz_class> v(p.coefficients().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coefficients()[i].get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  int steps = 0;
  IntPoly r = pseudo_remainder_steps(a, b, steps);
  const int full = std::max(a.degree() - b.degree() + 1, 0);
  if (steps < full) r = pow_z(b.leading(), static_cast<unsigned long>(full - steps)) * r;
  return r;
}

mpz_class resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in;
  IntPoly b = b_in;
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  a = divexact(a, ca);
  b = divexact(b, cb);
  mpz_class g = 1;
  mpz_class h = 1;
  int s = 1;
  mpz_class t = pow_z(ca, static_cast<unsigned long>(b.degree())) * pow_z(cb, static_cast<unsigned long>(a.degree()));
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
  }
  if (b.degree() == 0) return s * t * pow_z(b.leading(), static_cast<unsigned long>(a.degree()));
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    b = divexact(r, g * pow_z(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    // h <- h^(1 - delta) g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      mpz_class num = pow_z(g, static_cast<unsigned long>(delta));
      mpz_class den = pow_z(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  mpz_class num = pow_z(b.leading(), static_cast<unsigned long>(da));
  mpz_class den = pow_z(h, static_cast<unsigned long>(da - 1));
  mpz_class hh;
  mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * hh;
}

mpz_class discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n < 2) throw Error("discriminant undefined");
  mpz_class r = resultant(p, p.derivative());
  mpz_class d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero()) return b_in.primitive_part();
  if (b_in.is_zero()) return a_in.primitive_part();
  mpz_class c;
  mpz_class ca = a_in.content();
  mpz_class cb = b_in.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly a = a_in.primitive_part();
  IntPoly b = b_in.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return (c * a).normalized();
}

// ---------------------------------------------------------------------------

SturmSequence::SturmSequence(const IntPoly& p) {
  if (p.degree() < 1) throw Error("Sturm sequence needs a nonconstant polynomial");
  chain_.push_back(p.primitive_part());
  chain_.push_back(p.derivative().primitive_part());
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    int steps = 0;
    IntPoly r = pseudo_remainder_steps(a, b, steps);
    if (r.is_zero()) break;
    // r = lc(b)^steps * rem; the next Sturm term is -rem up to a positive factor.
    bool negate = true;
    if (b.leading() < 0 && steps % 2 == 1) negate = !negate;
    mpz_class c = r.content();
    IntPoly next = divexact(r, c);
    if (negate) next = -next;
    chain_.push_back(std::move(next));
  }
  if (chain_.back().degree() > 0) throw Error("squarefree required");
}

int SturmSequence::variations_at(const mpq_class& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int sg = sign_of(q.evaluate(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int sg = sign_of(q.leading());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

std::size_t SturmSequence::count(const std::optional<RationalInterval>& interval) const {
  int v_lo, v_hi;
  if (interval) {
    if (interval->lo > interval->hi) throw Error("invalid interval");
    v_lo = variations_at(interval->lo);
    v_hi = variations_at(interval->hi);
  } else {
    v_lo = variations_at_infinity(false);
    v_hi = variations_at_infinity(true);
  }
  return static_cast<std::size_t>(v_lo - v_hi);
}

std::size_t sturm_real_count(const IntPoly& p, const std::optional<RationalInterval>& interval) {
  return SturmSequence(p).count(interval);
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------

IntPoly make_family(FamilyKind kind) {
  const int n = kind.n;
  std::vector<mpz_class> c;
  switch (kind.family) {
    case Family::multinacci:
      if (n < 2) throw Error("multinacci requires n >= 2");
      c.assign(static_cast<std::size_t>(n) + 1, -1);
      c.back() = 1;
      break;
    case Family::multinacci_cofactor:
      if (n < 2) throw Error("multinacci cofactor requires n >= 2");
      c.assign(static_cast<std::size_t>(n) + 2, 0);
      c[0] = 1;
      c[static_cast<std::size_t>(n)] = -2;
      c[static_cast<std::size_t>(n) + 1] = 1;
      break;
    case Family::truncated_geom:
      if (n < 2) throw Error("truncated geometric family requires n >= 2");
      c.assign(static_cast<std::size_t>(n) + 1, 1);
      c[0] = -1;
      break;
    case Family::even_spread:
      if (n < 2 || n % 4 != 2) throw Error("even spread family requires n = 2 mod 4");
      c.assign(static_cast<std::size_t>(n) + 1, 0);
      for (int i = 2; i <= n; i += 2) c[static_cast<std::size_t>(i)] = 1;
      c[0] = -1;
      break;
    case Family::root_power:
      if (n < 1) throw Error("root power family requires n >= 1");
      c.assign(static_cast<std::size_t>(3 * n) + 1, 0);
      c[0] = -1;
      c[static_cast<std::size_t>(2 * n)] = 1;
      c[static_cast<std::size_t>(3 * n)] = 1;
      break;
  }
  return IntPoly(std::move(c));
}

std::string family_name(Family family) {
  switch (family) {
    case Family::multinacci: return "multinacci";
    case Family::multinacci_cofactor: return "multinacci-cofactor";
    case Family::truncated_geom: return "truncated-geom";
    case Family::even_spread: return "even-spread";
    case Family::root_power: return "root-power";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::multinacci, Family::multinacci_cofactor, Family::truncated_geom, Family::even_spread,
                   Family::root_power})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

IntPoly reciprocal(const IntPoly& p) {
  if (p.is_zero() || p.constant_term() == 0) throw Error("reciprocal requires a nonzero constant term");
  std::vector<mpz_class> v(p.coefficients().rbegin(), p.coefficients().rend());
  return IntPoly(std::move(v)).normalized();
}

IntPoly negate_variable(const IntPoly& p) {
  std::vector<mpz_class> v = p.coefficients();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v)).normalized();
}

}  // namespace nfmin
