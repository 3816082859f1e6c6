#pragma once

namespace nfmin::constants {

// All values are computed once from their defining expressions.

// Catalan's constant, sum (-1)^(j+1)/(2j-1)^2.
double catalan();
// sqrt(2*pi/G), the improved Erdos-Turan constant.
double ganelius();
// ganelius() rounded up in the sixth decimal, the default for sector checks.
double ganelius_rounded_up();
// Minimizer -1 + 1/log 2 of 2^y/(1+y).
double y0();
// (e log 2)/2 = 2^y0/(1+y0), the universal floor for m.
double universal_m_floor();
// Real root of x^3 - x - 1.
double plastic();
// Positive real root of x^6 + x^2 - 1.
double zeta();

}  // namespace nfmin::constants
