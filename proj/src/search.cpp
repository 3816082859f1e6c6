#include "nfmin/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "nfmin/roots.hpp"

namespace nfmin {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class pow_z(const mpz_class& b, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Largest k >= 0 with k^2 < num / den, i.e. k^2 den < num.
mpz_class isqrt_strict(const mpz_class& num, const mpz_class& den) {
  if (num <= 0) throw Error("empty coefficient range");
  mpz_class q = (num + den - 1) / den - 1;  // largest integer < num/den
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  return r;
}

std::vector<Signature> target_signatures(int n, const std::optional<Signature>& filter) {
  if (filter) {
    if (filter->s < 0 || filter->t < 0 || filter->degree() != n) throw Error("signature does not match degree");
    return {*filter};
  }
  std::vector<Signature> out;
  for (int s = n - 2; s >= 1; s -= 2) out.push_back({s, (n - s) / 2});
  std::sort(out.begin(), out.end());
  return out;
}

struct Partial {
  std::vector<SearchEntry> entries;
  std::vector<SearchEntry> inconclusive;
  SearchStats stats;
};

void add_stats(SearchStats& into, const SearchStats& from) {
  into.generated += from.generated;
  into.passed_bounds += from.passed_bounds;
  into.passed_prescreen += from.passed_prescreen;
  into.passed_irreducibility += from.passed_irreducibility;
  into.passed_m += from.passed_m;
}

IntPoly from_monic_coefficients(const std::vector<long>& a) {
  // a[k] is the coefficient of x^(n-k), a[0] = 1.
  const std::size_t n = a.size() - 1;
  std::vector<mpz_class> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = a[k];
  return IntPoly(std::move(c));
}

bool admissible(Signature sig, const std::vector<Signature>& targets) {
  return std::find(targets.begin(), targets.end(), sig) != targets.end();
}

// Certified classification of one candidate that survived the cheap tests.
void certify(const IntPoly& f, const std::vector<Signature>& targets, bool irreducibility_first, Partial& out,
             const std::vector<IntPoly>& orbit) {
  if (irreducibility_first) {
    if (irreducibility(f).verdict != IrreducibilityResult::Verdict::irreducible) return;
    ++out.stats.passed_irreducibility;
  }
  ConjugateSet cs = find_roots(f);
  Signature sig{cs.s, cs.t};
  if (!admissible(sig, targets)) return;
  SizeProfile prof = size_profile(cs);
  Comparison c = compare_guarded(prof.m, 1.0);
  if (c == Comparison::above) return;
  if (!irreducibility_first) {
    if (irreducibility(f).verdict != IrreducibilityResult::Verdict::irreducible) return;
    ++out.stats.passed_irreducibility;
  }
  for (const auto& g : orbit) {
    SearchEntry e{g, sig, prof.m};
    if (c == Comparison::below)
      out.entries.push_back(std::move(e));
    else
      out.inconclusive.push_back(std::move(e));
  }
  if (c == Comparison::below) ++out.stats.passed_m;
}

class PrunedWalker {
 public:
  PrunedWalker(int n, int S, const std::vector<Signature>& targets)
      : n_(n), targets_(targets), a_(static_cast<std::size_t>(n) + 1, 0), p_(static_cast<std::size_t>(n) + 1, 0) {
    for (const auto& b : maclaurin_bounds(n, S)) maclaurin_.push_back(b.get_si());
    for (const auto& b : power_sum_bounds(n, S)) power_.push_back(b.get_si());
    unit_only_ = unit_necessity_gate(n, 2);
    a_[0] = 1;
  }

  Partial run(long a1) {
    out_ = Partial{};
    const long P1 = power_[0];
    // p1 = -a1.
    if (a1 < -maclaurin_[0] || a1 > maclaurin_[0] || a1 < -P1 || a1 > P1) return out_;
    if (a1 > 0) return out_;  // orbit representative: first nonzero odd coefficient negative
    a_[1] = a1;
    p_[1] = -a1;
    descend(2, a1 < 0);
    return out_;
  }

 private:
  static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
  static long ceil_div(long a, long b) { return -floor_div(-a, b); }

  void descend(int k, bool decided) {
    const auto uk = static_cast<std::size_t>(k);
    long T = 0;
    for (int j = 1; j < k; ++j) T += a_[static_cast<std::size_t>(j)] * p_[static_cast<std::size_t>(k - j)];
    const long P = power_[uk - 1];
    const long M = maclaurin_[uk - 1];
    // p_k = -k a_k - T must satisfy |p_k| <= P.
    long lo = std::max(-M, ceil_div(-P - T, k));
    long hi = std::min(M, floor_div(P - T, k));
    if (k % 2 == 1 && !decided) hi = std::min(hi, 0L);
    for (long v = lo; v <= hi; ++v) {
      if (k == n_) {
        if (v == 0 || (unit_only_ && v != 1 && v != -1)) continue;
      }
      a_[uk] = v;
      p_[uk] = -k * v - T;
      bool now_decided = decided || (k % 2 == 1 && v != 0);
      if (k == n_)
        leaf(now_decided);
      else
        descend(k + 1, now_decided);
    }
  }

  void leaf(bool asymmetric) {
    ++out_.stats.generated;
    long at_one = 0, at_minus_one = 0;
    for (int k = 0; k <= n_; ++k) {
      long c = a_[static_cast<std::size_t>(k)];
      at_one += c;
      // coefficient of x^(n-k) contributes (-1)^(n-k)
      at_minus_one += ((n_ - k) % 2 == 0) ? c : -c;
    }
    if (at_one == 0 || at_minus_one == 0) return;
    ++out_.stats.passed_bounds;

    IntPoly f = from_monic_coefficients(a_);
    RootOptions quick;
    quick.polish_passes = 0;
    std::vector<Complex> z;
    try {
      z = approximate_roots(f, quick);
    } catch (const Error&) {
      z.clear();
    }
    if (!z.empty()) {
      int s = 0, t2 = 0;
      double sum = 0.0;
      for (const auto& r : z) {
        if (looks_real(r)) {
          ++s;
          sum += r.real() * r.real();
        } else {
          ++t2;
          sum += 0.5 * std::norm(r);
        }
      }
      if (t2 % 2 != 0 || s == 0 || t2 == 0) return;
      const int t = t2 / 2;
      if (!admissible({s, t}, targets_)) return;
      if (sum / (s + t) > 1.0 + 1e-6) return;
    }
    ++out_.stats.passed_prescreen;

    std::vector<IntPoly> orbit{f};
    if (asymmetric) orbit.push_back(negate_variable(f));
    certify(f, targets_, true, out_, orbit);
  }

  int n_;
  std::vector<Signature> targets_;
  std::vector<long> a_;
  std::vector<long> p_;
  std::vector<long> maclaurin_;
  std::vector<long> power_;
  bool unit_only_ = false;
  Partial out_;
};

// The raw box for one signature: every a_i with |a_i| < C(n,i) S^(i/2),
// a_n != 0, no symmetry, exact Sturm signature first.
class RawWalker {
 public:
  RawWalker(int n, Signature target) : n_(n), target_(target), a_(static_cast<std::size_t>(n) + 1, 0) {
    for (const auto& b : coefficient_bounds(n, target.s_plus_t())) bounds_.push_back(b.get_si());
    a_[0] = 1;
  }

  Partial run(long a1) {
    out_ = Partial{};
    a_[1] = a1;
    if (n_ == 1)
      leaf();
    else
      descend(2);
    return out_;
  }

  long a1_bound() const { return bounds_[0]; }

 private:
  void descend(int k) {
    const long M = bounds_[static_cast<std::size_t>(k) - 1];
    for (long v = -M; v <= M; ++v) {
      if (k == n_ && v == 0) continue;
      a_[static_cast<std::size_t>(k)] = v;
      if (k == n_)
        leaf();
      else
        descend(k + 1);
    }
  }

  void leaf() {
    ++out_.stats.generated;
    ++out_.stats.passed_bounds;
    IntPoly f = from_monic_coefficients(a_);
    std::size_t real_count = 0;
    try {
      real_count = sturm_real_count(f);
    } catch (const Error&) {
      return;  // not squarefree, hence reducible
    }
    if (real_count != static_cast<std::size_t>(target_.s)) return;
    ++out_.stats.passed_prescreen;
    certify(f, {target_}, false, out_, {f});
  }

  int n_;
  Signature target_;
  std::vector<long> a_;
  std::vector<long> bounds_;
  Partial out_;
};

template <class MakeWalker>
std::vector<Partial> run_parallel(const std::vector<long>& a1_values, int threads, MakeWalker make) {
  std::vector<Partial> slots(a1_values.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    auto walker = make();
    for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < a1_values.size();
         i = next.fetch_add(1, std::memory_order_relaxed))
      slots[i] = walker.run(a1_values[i]);
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(a1_values.size())));
  if (count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return slots;
}

bool entry_order(const SearchEntry& a, const SearchEntry& b) {
  if (std::abs(a.m - b.m) > 1e-12) return a.m < b.m;
  return lex_less(a.polynomial, b.polynomial);
}

}  // namespace

std::vector<mpz_class> coefficient_bounds(int n, int s_plus_t) {
  if (n < 1 || s_plus_t < 1 || s_plus_t > n) throw Error("invalid coefficient bound arguments");
  std::vector<mpz_class> out;
  for (int i = 1; i <= n; ++i) {
    mpz_class c = binomial(n, i);
    out.push_back(isqrt_strict(c * c * pow_z(s_plus_t, i), 1));
  }
  return out;
}

std::vector<mpz_class> maclaurin_bounds(int n, int s_plus_t) {
  if (n < 1 || s_plus_t < 1 || s_plus_t > n) throw Error("invalid coefficient bound arguments");
  std::vector<mpz_class> out;
  for (int i = 1; i <= n; ++i) {
    mpz_class c = binomial(n, i);
    out.push_back(isqrt_strict(c * c * pow_z(2 * s_plus_t, i), pow_z(n, i)));
  }
  return out;
}

std::vector<mpz_class> power_sum_bounds(int n, int s_plus_t) {
  if (n < 1 || s_plus_t < 1 || s_plus_t > n) throw Error("invalid coefficient bound arguments");
  std::vector<mpz_class> out;
  out.push_back(isqrt_strict(mpz_class(2 * n * s_plus_t), 1));
  for (int k = 2; k <= n; ++k) out.push_back(isqrt_strict(4 * pow_z(s_plus_t, k), 1));
  return out;
}

std::size_t SearchReport::total() const {
  std::size_t c = 0;
  for (const auto& g : groups) c += g.count();
  return c;
}

SearchReport enumerate_m_lt_one(int n, const SearchOptions& options) {
  if (n < 2 || n > kMaxSearchDegree) throw Error("search degree must lie in [2, 8]");
  if (!options.prune && n > kMaxRawSearchDegree) throw Error("unpruned search is limited to degree 4");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Signature> targets = target_signatures(n, options.signature);

  SearchReport report;
  report.degree = n;
  report.pruned = options.prune;
  std::map<Signature, SignatureGroup> groups;
  for (const auto& sig : targets) groups[sig] = SignatureGroup{sig, m_lower_bound_signature(sig), {}, {}};

  // Signatures with s t = 0 have m >= 1 and need no enumeration.
  std::vector<Signature> live;
  for (const auto& sig : targets)
    if (sig.s > 0 && sig.t > 0) live.push_back(sig);

  std::vector<Partial> parts;
  if (!live.empty() && options.prune) {
    int S = 0;
    for (const auto& sig : live) S = std::max(S, sig.s_plus_t());
    std::vector<long> a1s;
    const long b = maclaurin_bounds(n, S)[0].get_si();
    for (long v = -b; v <= 0; ++v) a1s.push_back(v);
    auto got = run_parallel(a1s, options.threads, [&]() { return PrunedWalker(n, S, live); });
    parts.insert(parts.end(), std::make_move_iterator(got.begin()), std::make_move_iterator(got.end()));
  } else if (!live.empty()) {
    for (const auto& sig : live) {
      RawWalker probe(n, sig);
      std::vector<long> a1s;
      for (long v = -probe.a1_bound(); v <= probe.a1_bound(); ++v) a1s.push_back(v);
      auto got = run_parallel(a1s, options.threads, [&]() { return RawWalker(n, sig); });
      parts.insert(parts.end(), std::make_move_iterator(got.begin()), std::make_move_iterator(got.end()));
    }
  }

  for (auto& part : parts) {
    add_stats(report.stats, part.stats);
    for (auto& e : part.entries) groups[e.signature].entries.push_back(std::move(e));
    for (auto& e : part.inconclusive) groups[e.signature].inconclusive.push_back(std::move(e));
  }
  for (auto& [sig, g] : groups) {
    std::sort(g.entries.begin(), g.entries.end(), entry_order);
    std::sort(g.inconclusive.begin(), g.inconclusive.end(), entry_order);
    report.groups.push_back(std::move(g));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<long> derived_box(const std::vector<int>& weights, double bound_sq) {
  if (weights.empty()) throw Error("empty weight pattern");
  const int d = static_cast<int>(weights.size());
  const int w = *std::min_element(weights.begin(), weights.end());
  if (w <= 0) throw Error("weights must be positive");
  const double r2 = bound_sq / w;
  std::vector<long> box;
  for (int i = 1; i <= d; ++i) {
    double B = binomial(d, i).get_d() * std::pow(r2, i / 2.0);
    double nearest = std::round(B);
    box.push_back(std::abs(B - nearest) < 1e-9 ? static_cast<long>(nearest) - 1 : static_cast<long>(std::floor(B)));
  }
  return box;
}

std::vector<SubelementPattern> standard_subelement_patterns() {
  return {
      {"quartic-quadratic", {1, 2}, 3.0, derived_box({1, 2}, 3.0)},
      {"sextic22-quadratic", {2, 2}, 4.0, derived_box({2, 2}, 4.0)},
      {"sextic22-cubic", {1, 1, 2}, 4.0, {5, 11, 7}},
      {"sextic41-quadratic", {2, 3}, 5.0, derived_box({2, 3}, 5.0)},
      {"sextic41-cubic", {1, 2, 2}, 5.0, {6, 14, 11}},
  };
}

SubelementPattern subelement_pattern(std::string_view name) {
  for (auto& p : standard_subelement_patterns())
    if (p.name == name) return p;
  throw Error("unsupported pattern '" + std::string(name) + "'");
}

SubelementScan subelement_scan(const SubelementPattern& pattern) {
  const int d = static_cast<int>(pattern.weights.size());
  if (d < 2 || d > 3 || pattern.box.size() != pattern.weights.size()) throw Error("unsupported pattern");
  SubelementScan scan;
  scan.pattern = pattern.name;
  std::vector<int> sorted_weights = pattern.weights;
  std::sort(sorted_weights.begin(), sorted_weights.end());

  std::vector<long> a(static_cast<std::size_t>(d) + 1, 0);
  a[0] = 1;
  auto visit = [&]() {
    ++scan.scanned;
    if (a[static_cast<std::size_t>(d)] == 0) return;
    IntPoly f = from_monic_coefficients(a);
    if (!is_irreducible(f)) return;
    if (sturm_real_count(f) != static_cast<std::size_t>(d)) return;
    ++scan.qualifying;
    ConjugateSet cs = find_roots(f);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> w = sorted_weights;
    do {
      double s = 0;
      for (int i = 0; i < d; ++i) s += w[static_cast<std::size_t>(i)] * cs.real_roots[static_cast<std::size_t>(i)] *
                                       cs.real_roots[static_cast<std::size_t>(i)];
      best = std::min(best, s);
    } while (std::next_permutation(w.begin(), w.end()));
    SubelementHit hit{f, best};
    if (!scan.smallest || best < scan.smallest->weighted_sum ||
        (best == scan.smallest->weighted_sum && lex_less(f, scan.smallest->polynomial)))
      scan.smallest = hit;
    Comparison c = compare_guarded(best, pattern.bound_sq);
    if (c == Comparison::below)
      scan.violators.push_back(hit);
    else if (c == Comparison::inconclusive)
      scan.inconclusive.push_back(hit);
  };
  std::function<void(int)> walk = [&](int k) {
    if (k > d) {
      visit();
      return;
    }
    const long B = pattern.box[static_cast<std::size_t>(k) - 1];
    for (long v = -B; v <= B; ++v) {
      a[static_cast<std::size_t>(k)] = v;
      walk(k + 1);
    }
  };
  walk(1);
  return scan;
}

}  // namespace nfmin
