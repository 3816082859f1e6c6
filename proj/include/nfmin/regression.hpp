#pragma once

// Bounds on scaled residuals of the asymptotic checks. Each is the largest
// value seen on the reference run, rounded up with a margin of about 25%.
namespace nfmin::regression {

// n^(1/4) |sum - t - (q/2) log 2|, n in 50..800; observed max 0.0212 / 0.0265.
inline constexpr double kPowerSumQ1 = 0.027;
inline constexpr double kPowerSumQ2 = 0.034;
// n^(1/4) |size - (s+t-3/4+log 2)|, n in 3..800; observed max 0.188 (n = 5).
inline constexpr double kTruncatedGeomSize = 0.24;
// n |R - (s - 3/4)|; observed max 2.232 (n = 50), zero to rounding for odd n.
inline constexpr double kTruncatedGeomReal = 2.8;
// n^(1/4) |size - (n/2 + log 2)|; observed max 0.167 (n = 6).
inline constexpr double kEvenSpreadSize = 0.21;
// n^(5/4) |m - (1 - 2(1 - log 2)/(n+2))|; observed max 0.2504 (n = 6).
inline constexpr double kEvenSpreadM = 0.32;
// n^(1/4) s^(-5/4) |size - (n/2 + s log 2/2)|; observed max 0.0702.
inline constexpr double kEvenSpreadCompositum = 0.088;
// |log prod k^k - model|, s in 2..500; tends to log A = 0.24875...
inline constexpr double kFactorialPower = 0.32;
// n^2 |m - 1 - log|N|/(s+t)| for x^3 - 2, n in 5..45; observed max 0.2601.
inline constexpr double kRootExtraction = 0.33;

}  // namespace nfmin::regression
