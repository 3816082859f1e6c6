#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfmin/intpoly.hpp"
#include "nfmin/measures.hpp"

namespace nfmin {

// Largest integer strictly below C(n,i) S^(i/2), for i = 1..n (entry i-1).
std::vector<mpz_class> coefficient_bounds(int n, int s_plus_t);

// Largest integer strictly below C(n,i) (2S/n)^(i/2): the Maclaurin bound
// implied by sum |alpha_i|^2 = R + 2C < 2S over all n roots.
std::vector<mpz_class> maclaurin_bounds(int n, int s_plus_t);

// Largest integer strictly below the bound on the k-th power sum of the
// roots when m < 1: sqrt(2nS) for k = 1 and 2 S^(k/2) for k >= 2.
std::vector<mpz_class> power_sum_bounds(int n, int s_plus_t);

struct SearchOptions {
  std::optional<Signature> signature;
  int threads = 1;
  // false runs the raw coefficient box with no further pruning (n <= 4).
  bool prune = true;
};

struct SearchEntry {
  IntPoly polynomial;
  Signature signature;
  double m = 0.0;
};

struct SignatureGroup {
  Signature signature;
  double lower_bound = 0.0;
  std::vector<SearchEntry> entries;       // m < 1 - guard, m ascending
  std::vector<SearchEntry> inconclusive;  // |m - 1| within the guard

  std::size_t count() const { return entries.size(); }
};

struct SearchStats {
  std::uint64_t generated = 0;       // coefficient vectors visited
  std::uint64_t passed_bounds = 0;   // left after the integer prunes
  std::uint64_t passed_prescreen = 0;
  std::uint64_t passed_irreducibility = 0;
  std::uint64_t passed_m = 0;
};

struct SearchReport {
  int degree = 0;
  bool pruned = true;
  std::vector<SignatureGroup> groups;  // ascending s
  SearchStats stats;
  double wall_seconds = 0.0;

  std::size_t total() const;
};

inline constexpr int kMaxSearchDegree = 8;
inline constexpr int kMaxRawSearchDegree = 4;

// All monic irreducible f of degree n with m(f) < 1 and s t != 0.
SearchReport enumerate_m_lt_one(int n, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Scans of low-degree totally real subelements.

struct SubelementPattern {
  std::string name;
  // Weights attached to the conjugates; every distinct permutation is tried.
  std::vector<int> weights;
  double bound_sq = 0.0;
  // |a_i| <= box[i-1] for x^d + a_1 x^(d-1) + ... + a_d.
  std::vector<long> box;
};

// Box implied by weighted square sum < bound_sq: every root has |z|^2 <
// bound_sq / min weight, so |a_i| < C(d,i) r^i.
std::vector<long> derived_box(const std::vector<int>& weights, double bound_sq);

// The five cases from the quartic and sextic arguments.
std::vector<SubelementPattern> standard_subelement_patterns();
SubelementPattern subelement_pattern(std::string_view name);

struct SubelementHit {
  IntPoly polynomial;
  double weighted_sum = 0.0;  // minimum over weight permutations
};

struct SubelementScan {
  std::string pattern;
  std::size_t scanned = 0;
  std::size_t qualifying = 0;  // irreducible and totally real
  std::vector<SubelementHit> violators;
  std::vector<SubelementHit> inconclusive;
  std::optional<SubelementHit> smallest;
};

SubelementScan subelement_scan(const SubelementPattern& pattern);

}  // namespace nfmin
