#include "nfmin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>

#include "nfmin/constants.hpp"
#include "nfmin/measures.hpp"
#include "nfmin/regression.hpp"
#include "nfmin/roots.hpp"

namespace nfmin {

namespace {

constexpr double kLog2 = std::numbers::ln2;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

CheckRecord make_record(std::string id, std::vector<std::pair<std::string, std::string>> params) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.parameters = std::move(params);
  return r;
}

Verdict pass_if(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

// "exact", "reducible" or "assumed" (beyond the subset budget).
std::string irreducibility_status(const IntPoly& f, bool& reducible) {
  auto res = irreducibility(f);
  reducible = res.verdict == IrreducibilityResult::Verdict::reducible;
  if (res.verdict == IrreducibilityResult::Verdict::irreducible) return "exact";
  if (reducible) return "reducible";
  return "assumed";
}

double cubic_bound() {
  const double th = constants::plastic();
  return th + 1.0 / (th * th);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

CheckRecord check_sum_asymptotic(int n, double q) {
  if (n < 3) throw Error("power sum check needs n >= 3");
  if (!(q > 0.0)) throw Error("power sum check needs q > 0");
  auto r = make_record("truncated_geom_power_sum", {{"n", std::to_string(n)}, {"q", fmt(q)}});
  ConjugateSet cs = find_roots(make_family({Family::truncated_geom, n}));
  long double sum = 0.0L;
  for (const auto& z : cs.complex_reps) sum += std::pow(static_cast<long double>(std::abs(z)), q);
  const double predicted = cs.t + q / 2.0 * kLog2;
  r.observed = {static_cast<double>(sum), static_cast<double>(cs.t)};
  r.predicted = {predicted};
  r.residual = std::abs(static_cast<double>(sum) - predicted);
  r.scaled_residual = r.residual * std::pow(n, 0.25);
  const double bound = q <= 1.0 ? regression::kPowerSumQ1 : regression::kPowerSumQ2;
  // Bounds are frozen for q = 1 and q = 2 only.
  if (q != 1.0 && q != 2.0) {
    r.verdict = Verdict::inconclusive;
    r.note = "no frozen bound for this q";
  } else {
    r.verdict = pass_if(r.scaled_residual <= bound);
  }
  return r;
}

CheckRecord check_truncated_geom_size(int n) {
  if (n < 2) throw Error("size check needs n >= 2");
  auto r = make_record("truncated_geom_size", {{"n", std::to_string(n)}});
  ConjugateSet cs = find_roots(make_family({Family::truncated_geom, n}));
  SizeProfile p = size_profile(cs);
  const int s_expected = n % 2 == 0 ? 2 : 1;
  if (n == 2) {
    // Totally real: the golden ratio conjugates give R = 3 exactly.
    r.observed = {p.R, p.abs_square_size};
    r.predicted = {3.0};
    r.residual = std::abs(p.R - 3.0);
    r.scaled_residual = r.residual;
    r.verdict = pass_if(p.signature == Signature{2, 0} && r.residual <= 1e-12);
    r.note = "degenerate: totally real";
    return r;
  }
  const double predicted = p.signature.s_plus_t() - 0.75 + kLog2;
  const double predicted_real = s_expected - 0.75;
  r.observed = {p.abs_square_size, p.R};
  r.predicted = {predicted, predicted_real};
  r.residual = std::abs(p.abs_square_size - predicted);
  r.scaled_residual = r.residual * std::pow(n, 0.25);
  const double real_scaled = std::abs(p.R - predicted_real) * n;
  r.note = "real part residual x n = " + fmt(real_scaled);
  bool ok = p.signature.s == s_expected && r.scaled_residual <= regression::kTruncatedGeomSize &&
            real_scaled <= regression::kTruncatedGeomReal;
  r.verdict = pass_if(ok);
  return r;
}

CheckRecord check_even_spread_size(int k) {
  if (k < 1) throw Error("even spread check needs k >= 1");
  const int n = 4 * k + 2;
  auto r = make_record("even_spread_size", {{"k", std::to_string(k)}, {"n", std::to_string(n)}});
  ConjugateSet cs = find_roots(make_family({Family::even_spread, n}));
  SizeProfile p = size_profile(cs);
  const double predicted = n / 2.0 + kLog2;
  const double predicted_m = 1.0 - 2.0 * (1.0 - kLog2) / (n + 2);
  r.observed = {p.abs_square_size, p.m};
  r.predicted = {predicted, predicted_m};
  r.residual = std::abs(p.abs_square_size - predicted);
  r.scaled_residual = r.residual * std::pow(n, 0.25);
  const double m_scaled = std::abs(p.m - predicted_m) * std::pow(n, 1.25);
  r.note = "m residual x n^(5/4) = " + fmt(m_scaled);
  bool ok = p.signature == Signature{2, (n - 2) / 2} && r.scaled_residual <= regression::kEvenSpreadSize &&
            m_scaled <= regression::kEvenSpreadM;
  r.verdict = pass_if(ok);
  return r;
}

CheckRecord check_even_spread_compositum(int s, int k) {
  if (s < 2 || s % 2 != 0) throw Error("compositum check needs even s >= 2");
  if (k < 1) throw Error("compositum check needs k >= 1");
  const int n = (2 * k + 1) * s;
  const int base_degree = 4 * k + 2;
  auto r = make_record("even_spread_compositum",
                       {{"s", std::to_string(s)}, {"k", std::to_string(k)}, {"n", std::to_string(n)}});
  ConjugateSet cs = find_roots(make_family({Family::even_spread, base_degree}));
  SizeProfile p = size_profile(cs);
  ExtensionSignature ext{s / 2, 0};
  Signature sig = compositum_signature(p.signature, ext);
  const double composed = relative_square_size(p, ext);
  const double bound = n / 2.0 + s * kLog2 / 2.0;
  const double m_upper = composed / sig.s_plus_t();
  r.observed = {composed, m_upper};
  r.predicted = {bound};
  r.residual = std::abs(composed - bound);
  r.scaled_residual = r.residual * std::pow(n, 0.25) / std::pow(s, 1.25);
  r.note = "linear disjointness assumed; signature (" + std::to_string(sig.s) + "," + std::to_string(sig.t) + ")";
  bool ok = sig == Signature{s, (n - s) / 2} && r.scaled_residual <= regression::kEvenSpreadCompositum;
  r.verdict = pass_if(ok);
  return r;
}

CheckRecord check_cubic_polynomial(const IntPoly& f) {
  auto r = make_record("cubic_single", {{"polynomial", f.to_string()}});
  if (f.degree() != 3) throw Error("cubic check needs a cubic");
  ConjugateSet cs = find_roots(f);
  SizeProfile p = size_profile(cs);
  const double bound = cubic_bound();
  r.observed = {p.abs_square_size};
  r.predicted = {bound};
  r.residual = p.abs_square_size - bound;
  r.scaled_residual = r.residual;
  if (p.signature != Signature{1, 1}) {
    r.verdict = Verdict::inconclusive;
    r.note = "signature is not (1,1)";
    return r;
  }
  r.verdict = pass_if(r.residual >= -1e-9);
  if (std::abs(r.residual) <= 1e-9) r.note = "equality";
  return r;
}

CheckRecord check_cubic() {
  auto r = make_record("cubic_minimum", {{"degree", "3"}});
  // Cubics with m >= 1 have ||alpha||^2 >= 2, so the m < 1 list covers the claim.
  SearchReport report = enumerate_m_lt_one(3, {Signature{1, 1}, 1, true});
  const double bound = cubic_bound();
  const IntPoly eq1{1, 0, -1, 1};
  const IntPoly eq2{-1, 0, 1, 1};
  bool ok = true;
  double smallest = 1e300;
  std::size_t equalities = 0;
  for (const auto& g : report.groups) {
    if (!g.inconclusive.empty()) ok = false;
    for (const auto& e : g.entries) {
      const double size = 2.0 * e.m;
      smallest = std::min(smallest, size);
      if (size < bound - 1e-9) ok = false;
      if (std::abs(size - bound) <= 1e-9) {
        ++equalities;
        if (!(e.polynomial == eq1 || e.polynomial == eq2)) ok = false;
      }
    }
  }
  if (equalities != 2) ok = false;
  r.observed = {smallest, static_cast<double>(report.total()), static_cast<double>(equalities)};
  r.predicted = {bound};
  r.residual = smallest - bound;
  r.scaled_residual = r.residual;
  r.verdict = pass_if(ok);
  return r;
}

CheckRecord check_root_power(int n) {
  if (n < 1) throw Error("root power check needs n >= 1");
  auto r = make_record("root_power", {{"n", std::to_string(n)}});
  IntPoly f = make_family({Family::root_power, n});
  ConjugateSet cs = find_roots(f);
  SizeProfile p = size_profile(cs);
  const double th = constants::plastic();
  const double low = std::pow(th, -2.0 / n);
  const double high = std::pow(th, 1.0 / n);
  const double closed = n % 2 ? (n + 1) / 2.0 * low + n * high : (n + 2) / 2.0 * low + n * high;
  const Signature expected = n % 2 ? Signature{1, (3 * n - 1) / 2} : Signature{2, (3 * n - 2) / 2};
  bool reducible = false;
  const std::string irr = irreducibility_status(f, reducible);
  r.observed = {p.abs_square_size, p.m};
  r.predicted = {closed, 1.0};
  r.residual = std::abs(p.abs_square_size - closed) / closed;
  r.scaled_residual = r.residual;
  r.note = "irreducibility " + irr;
  const Comparison c = compare_guarded(p.m, 1.0);
  bool ok = !reducible && p.signature == expected && r.residual <= 1e-8 && c == Comparison::below;
  r.verdict = c == Comparison::inconclusive ? Verdict::inconclusive : pass_if(ok);
  return r;
}

CheckRecord check_schur(const std::vector<double>& xs) {
  if (xs.size() < 2) throw Error("schur check needs at least two points");
  const std::size_t s = xs.size();
  auto r = make_record("schur", {{"s", std::to_string(s)}});
  long double L = 0.0L;
  for (double x : xs) L += static_cast<long double>(x) * x;
  long double lhs = 0.0L;
  bool coincident = false;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      long double d = static_cast<long double>(xs[i]) - xs[j];
      if (d == 0.0L) coincident = true;
      else lhs += 2.0L * std::log(std::abs(d));
    }
  const long double pairs = static_cast<long double>(s * s - s);
  long double rhs = pairs / 2.0L * std::log(L / pairs);
  for (std::size_t k = 2; k <= s; ++k) rhs += k * std::log(static_cast<long double>(k));
  r.observed = {coincident ? -INFINITY : static_cast<double>(lhs)};
  r.predicted = {static_cast<double>(rhs)};
  r.residual = coincident ? 0.0 : static_cast<double>(lhs - rhs);
  r.scaled_residual = r.residual;
  r.note = "log space";
  r.verdict = pass_if(coincident || lhs <= rhs + 1e-12L * std::max(1.0L, std::abs(rhs)));
  return r;
}

CheckRecord check_factorial_power(int s) {
  if (s < 2) throw Error("product check needs s >= 2");
  auto r = make_record("factorial_power", {{"s", std::to_string(s)}});
  long double sum = 0.0L;
  for (int k = 2; k <= s; ++k) sum += k * std::log(static_cast<long double>(k));
  const long double sl = s;
  const long double model = ((sl * sl + sl) / 2.0L + 1.0L / 12.0L) * std::log(sl) - sl * sl / 4.0L;
  r.observed = {static_cast<double>(sum)};
  r.predicted = {static_cast<double>(model)};
  r.residual = static_cast<double>(sum - model);
  r.scaled_residual = std::abs(r.residual);
  r.verdict = pass_if(r.scaled_residual <= regression::kFactorialPower);
  return r;
}

CheckRecord check_erdos_turan(const IntPoly& p, double constant) {
  auto r = make_record("erdos_turan", {{"polynomial", p.to_string()}, {"constant", fmt(constant)}});
  const int d = p.degree();
  const int k = std::max(1, static_cast<int>(std::floor(std::pow(d, 0.25) + 1e-12)));
  std::vector<Complex> z = approximate_roots_snapped(p);
  double worst = 0.0, worst_lhs = 0.0, worst_rhs = 0.0;
  bool ok = true;
  for (int j = 0; j < 2 * k; ++j) {
    const double phi = std::numbers::pi * j / k;
    const double psi = std::numbers::pi * (j + 1) / k;
    auto et = erdos_turan_check(p, std::span<const Complex>(z), phi, std::min(psi, 2.0 * std::numbers::pi), constant);
    ok = ok && et.holds;
    const double ratio = et.lhs / et.rhs;
    if (ratio >= worst) {
      worst = ratio;
      worst_lhs = et.lhs;
      worst_rhs = et.rhs;
    }
  }
  r.parameters.push_back({"sectors", std::to_string(2 * k)});
  r.observed = {worst_lhs};
  r.predicted = {worst_rhs};
  r.residual = worst_lhs - worst_rhs;
  r.scaled_residual = worst;
  r.verdict = pass_if(ok);
  return r;
}

std::vector<CheckRecord> check_erdos_turan_suite(bool full) {
  struct Range {
    Family family;
    int lo, hi, step;
  };
  std::vector<Range> ranges;
  if (full) {
    ranges = {{Family::multinacci_cofactor, 2, 400, 1},
              {Family::multinacci, 2, 200, 1},
              {Family::truncated_geom, 3, 400, 1},
              {Family::even_spread, 6, 102, 4},
              {Family::root_power, 1, 50, 1}};
  } else {
    ranges = {{Family::multinacci_cofactor, 2, 400, 37},
              {Family::multinacci, 2, 200, 18},
              {Family::truncated_geom, 3, 400, 36},
              {Family::even_spread, 6, 102, 16},
              {Family::root_power, 1, 50, 7}};
  }
  std::vector<CheckRecord> out;
  for (double constant : {16.0, constants::ganelius_rounded_up()}) {
    for (const auto& range : ranges) {
      auto r = make_record("erdos_turan", {{"family", family_name(range.family)},
                                           {"n_min", std::to_string(range.lo)},
                                           {"n_max", std::to_string(range.hi)},
                                           {"step", std::to_string(range.step)},
                                           {"constant", fmt(constant)}});
      bool ok = true;
      double worst = -1.0;
      int worst_n = range.lo;
      CheckRecord worst_rec;
      std::size_t checked = 0;
      for (int n = range.lo; n <= range.hi; n += range.step) {
        CheckRecord one = check_erdos_turan(make_family({range.family, n}), constant);
        ++checked;
        ok = ok && one.verdict == Verdict::pass;
        if (one.scaled_residual > worst) {
          worst = one.scaled_residual;
          worst_n = n;
          worst_rec = one;
        }
      }
      r.observed = worst_rec.observed;
      r.predicted = worst_rec.predicted;
      r.residual = worst_rec.residual;
      r.scaled_residual = worst;
      r.note = std::to_string(checked) + " polynomials; worst lhs/rhs at n = " + std::to_string(worst_n);
      r.verdict = pass_if(ok);
      out.push_back(std::move(r));
    }
  }
  return out;
}

CheckRecord check_smyth(int n) {
  if (n < 2 || n > 5) throw Error("smyth scan covers degrees 2 to 5");
  auto r = make_record("smyth", {{"degree", std::to_string(n)}});
  // Only p_2 <= 3n/2 can violate or attain the bound; p_2 is an integer.
  const std::int64_t P = 3 * n / 2;
  auto ipow_bound = [&](int k) {
    // floor(P^(k/2)) = isqrt(P^k)
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= P;
    std::int64_t x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(pk)));
    while (x * x > pk) --x;
    while ((x + 1) * (x + 1) <= pk) ++x;
    return x;
  };
  std::vector<std::int64_t> a(n + 1, 0), ps(n + 1, 0);
  a[0] = 1;
  std::size_t scanned = 0, qualifying = 0;
  std::vector<IntPoly> violators, equalities;
  std::int64_t smallest = -1;

  auto leaf = [&]() {
    ++scanned;
    if (a[n] == 0) return;
    std::vector<mpz_class> c(n + 1);
    for (int i = 0; i <= n; ++i) c[n - i] = static_cast<long>(a[i]);
    IntPoly f(std::move(c));
    if (!is_squarefree(f) || sturm_real_count(f) != static_cast<std::size_t>(n)) return;
    bool reducible = false;
    if (irreducibility_status(f, reducible) != "exact") return;
    ++qualifying;
    const std::int64_t p2 = ps[2];
    if (smallest < 0 || p2 < smallest) smallest = p2;
    if (2 * p2 < 3 * n) violators.push_back(f);
    else if (2 * p2 == 3 * n) equalities.push_back(f);
  };

  std::function<void(int)> walk = [&](int k) {
    if (k > n) {
      leaf();
      return;
    }
    std::int64_t lo, hi;
    if (k == 1) {
      hi = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n * P)) + 1e-9));
      lo = -hi;
    } else if (k == 2) {
      lo = 0;
      hi = P;
    } else {
      hi = ipow_bound(k);
      lo = k % 2 == 0 ? 0 : -hi;
    }
    std::int64_t acc = 0;
    for (int i = 1; i < k; ++i) acc += a[i] * ps[k - i];
    for (std::int64_t pk = lo; pk <= hi; ++pk) {
      const std::int64_t num = -(pk + acc);
      if (num % k != 0) continue;
      a[k] = num / k;
      ps[k] = pk;
      walk(k + 1);
    }
  };
  walk(1);

  std::sort(equalities.begin(), equalities.end(), [](const IntPoly& x, const IntPoly& y) { return lex_less(x, y); });
  bool ok = violators.empty();
  if (n == 2) ok = ok && equalities == std::vector<IntPoly>{IntPoly{-1, -1, 1}, IntPoly{-1, 1, 1}};
  else ok = ok && equalities.empty();
  r.observed = {smallest < 0 ? NAN : static_cast<double>(smallest), static_cast<double>(qualifying),
                static_cast<double>(violators.size())};
  r.predicted = {1.5 * n};
  r.residual = smallest < 0 ? 0.0 : smallest - 1.5 * n;
  r.scaled_residual = r.residual;
  std::string eq;
  for (const auto& f : equalities) eq += (eq.empty() ? "" : " ") + f.to_string();
  r.note = std::to_string(scanned) + " candidates with p2 <= " + std::to_string(P) + "; equality: " +
           (eq.empty() ? "none" : eq);
  r.verdict = pass_if(ok);
  return r;
}

CheckRecord check_multinacci_location(int n) {
  auto r = make_record("multinacci_location", {{"n", std::to_string(n)}});
  MultinacciLocation loc = multinacci_location_check(n);
  r.observed = {loc.dominant};
  if (loc.second_real) r.observed.push_back(*loc.second_real);
  r.predicted = {2.0 * n / (n + 1), 2.0};
  r.residual = loc.min_margin;
  r.scaled_residual = loc.min_margin;
  r.note = "smallest margin to an interval boundary";
  r.verdict = pass_if(loc.all());
  return r;
}

CheckRecord check_pisot_multinacci(int n) {
  auto r = make_record("multinacci_pisot", {{"n", std::to_string(n)}});
  ConjugateSet cs = find_roots(make_family({Family::multinacci, n}));
  double largest_other = 0.0, dominant = 0.0;
  for (const auto& z : cs.all_roots()) {
    const double m = std::abs(z);
    if (m > 1.0) dominant = std::max(dominant, m);
  }
  for (const auto& z : cs.all_roots())
    if (std::abs(z) < dominant) largest_other = std::max(largest_other, std::abs(z));
  r.observed = {dominant, largest_other};
  r.predicted = {1.0};
  r.residual = 1.0 - largest_other;
  r.scaled_residual = r.residual;
  try {
    r.verdict = pass_if(pisot_check(cs));
  } catch (const InconclusiveError&) {
    r.verdict = Verdict::inconclusive;
    r.note = "modulus within 1e-9 of 1";
  }
  return r;
}

CheckRecord check_even_spread_structure(int k) {
  if (k < 1) throw Error("even spread check needs k >= 1");
  const int n = 4 * k + 2;
  auto r = make_record("even_spread_structure", {{"k", std::to_string(k)}, {"n", std::to_string(n)}});
  IntPoly f = make_family({Family::even_spread, n});
  const std::size_t real = sturm_real_count(f);
  bool reducible = false;
  const std::string irr = irreducibility_status(f, reducible);
  r.observed = {static_cast<double>(real)};
  r.predicted = {2.0};
  r.residual = std::abs(static_cast<double>(real) - 2.0);
  r.scaled_residual = r.residual;
  r.note = "irreducibility " + irr;
  r.verdict = pass_if(real == 2 && !reducible);
  return r;
}

CheckRecord check_root_extract(const IntPoly& base, int n) {
  auto r = make_record("root_extraction", {{"base", base.to_string()}, {"n", std::to_string(n)}});
  ConjugateSet cs = find_roots(base);
  SizeProfile p = root_extract_profile(cs, n);
  const double predicted = 1.0 + std::log(p.norm_abs.get_d()) / p.signature.s_plus_t();
  r.observed = {p.m};
  r.predicted = {predicted};
  r.residual = std::abs(p.m - predicted);
  r.scaled_residual = r.residual * n * n;
  r.note = "degree n over the base field assumed";
  r.verdict = pass_if(r.scaled_residual <= regression::kRootExtraction);
  return r;
}

CheckRecord check_subelement(const SubelementPattern& pattern) {
  auto r = make_record("subelement", {{"pattern", pattern.name}});
  SubelementScan scan = subelement_scan(pattern);
  r.observed = {scan.smallest ? scan.smallest->weighted_sum : NAN, static_cast<double>(scan.qualifying),
                static_cast<double>(scan.violators.size())};
  r.predicted = {pattern.bound_sq};
  r.residual = scan.smallest ? scan.smallest->weighted_sum - pattern.bound_sq : 0.0;
  r.scaled_residual = r.residual;
  r.note = std::to_string(scan.scanned) + " scanned";
  if (scan.smallest) r.note += "; smallest at " + scan.smallest->polynomial.to_string();
  if (!scan.violators.empty()) r.verdict = Verdict::fail;
  else if (!scan.inconclusive.empty()) r.verdict = Verdict::inconclusive;
  else r.verdict = Verdict::pass;
  return r;
}

std::vector<CheckRecord> check_constants() {
  const double th = constants::plastic();
  const double z = constants::zeta();
  struct Item {
    const char* name;
    double value;
    double printed;
  };
  const Item items[] = {
      {"theta", th, 1.324717},
      {"theta_plus_theta_inv_sq", th + 1.0 / (th * th), 1.894558},
      {"zeta", z, 0.826031},
      {"zeta_m", (z * z + 1.0 / z) / 2.0, 0.946467},
      {"y0", constants::y0(), 0.442695},
      {"m_floor", constants::universal_m_floor(), 0.942084},
      {"ganelius", constants::ganelius(), 2.619089},
      {"bound_1_1", m_lower_bound_signature(1, 1), 0.944940},
      {"bound_2_1", m_lower_bound_signature(2, 1), 0.942809},
      {"bound_1_2", m_lower_bound_signature(1, 2), 0.957248},
  };
  std::vector<CheckRecord> out;
  for (const auto& it : items) {
    auto r = make_record("constant", {{"name", it.name}});
    r.observed = {it.value};
    r.predicted = {it.printed};
    r.residual = std::abs(it.value - it.printed);
    r.scaled_residual = r.residual;
    r.verdict = pass_if(r.residual < 1e-6);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckRecord> run_suite(Suite suite) {
  const bool full = suite == Suite::all;
  std::vector<CheckRecord> out;
  auto add = [&](CheckRecord r) { out.push_back(std::move(r)); };

  for (auto& r : check_constants()) add(std::move(r));

  for (double q : {1.0, 2.0})
    for (int n : {50, 100, 200, 400, 800}) {
      if (!full && n > 200) continue;
      add(check_sum_asymptotic(n, q));
    }
  for (int n : {2, 5, 50, 51, 100, 101, 201, 400, 401, 800}) add(check_truncated_geom_size(n));
  for (int k : {1, 12, 25, 50, 100, 199}) {
    if (!full && k > 25) continue;
    add(check_even_spread_size(k));
  }
  for (auto [s, k] : std::vector<std::pair<int, int>>{{2, 1}, {4, 1}, {2, 5}, {4, 5}, {6, 3}, {2, 25}, {2, 100}}) {
    if (!full && k > 25) continue;
    add(check_even_spread_compositum(s, k));
  }
  for (int n : {5, 15, 45}) add(check_root_extract(IntPoly{-2, 0, 0, 1}, n));

  add(check_cubic());
  for (const IntPoly& f : {IntPoly{-1, 0, 1, 1}, IntPoly{1, 1, 0, 1}, IntPoly{-2, 0, 0, 1}})
    add(check_cubic_polynomial(f));
  for (int n = 1; n <= (full ? 50 : 12); ++n) add(check_root_power(n));

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  add(check_schur({phi, 1.0 - phi}));
  add(check_schur({1.0, -1.0}));
  {
    ConjugateSet cs = find_roots(IntPoly{1, -3, 0, 1});
    add(check_schur(cs.real_roots));
  }
  for (int s : {2, 3, 10, 50, 100, 200, 500}) add(check_factorial_power(s));

  for (auto& r : check_erdos_turan_suite(full)) add(std::move(r));
  for (int n = 2; n <= 5; ++n) add(check_smyth(n));
  for (int n = 2; n <= 200; ++n) {
    if (!full && !(n <= 12 || n % 25 == 0)) continue;
    add(check_multinacci_location(n));
    add(check_pisot_multinacci(n));
  }
  for (int k = 1; k <= 5; ++k) add(check_even_spread_structure(k));
  for (const auto& pattern : standard_subelement_patterns()) add(check_subelement(pattern));

  std::stable_sort(out.begin(), out.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace nfmin
