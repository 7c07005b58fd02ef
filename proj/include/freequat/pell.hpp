// Pell equations x^2 - d y^2 = +-1: fundamental solutions via the
// continued-fraction expansion of sqrt(d), exact power coefficients, and
// the auxiliary "half" solutions over Q(sqrt(2d)) used by the order-unit
// constructions.
//
// Design notes:
//   * All coefficients are arbitrary-precision integers; fundamental
//     solutions grow super-polynomially in d (d = 199 already needs
//     y > 10^9, d = 61 has a famously large minimal solution).
//   * The continued-fraction convergents of sqrt(d) enumerate all
//     candidates; the first convergent (h, k) with h^2 - d k^2 = +-1 is
//     the fundamental solution.  Its norm is -1 exactly when the period
//     is odd, but we never need the period itself: the first hit carries
//     its own norm.
#ifndef FREEQUAT_PELL_HPP
#define FREEQUAT_PELL_HPP

#include <utility>

#include "freequat/errors.hpp"
#include "freequat/numbers.hpp"

namespace freequat {

// Minimal positive solution of x^2 - d y^2 = norm, norm in {+1, -1};
// x, y >= 1.  Invariant checked on construction.
struct FundUnit {
    Int x;
    Int y;
    SquareFreeD d;
    int norm;

    FundUnit(Int x_, Int y_, SquareFreeD d_, int norm_);
};

// Fundamental solution for square-free d >= 2, by continued fractions.
FundUnit pell_fundamental(SquareFreeD d);

// Coefficients (X, Y) of (x + y sqrt(d))^n, n >= 0.
std::pair<Int, Int> unit_power(const FundUnit& u, unsigned n);

// unit_power packaged with its norm: (-1)^n if u has norm -1, else +1.
FundUnit pell_power(const FundUnit& u, unsigned n);

// Smallest power of the fundamental unit of Q(sqrt(2d)) with norm +1,
// written as X + Y sqrt(2d) and returned in halved form:
//
//     x = (X + 1) / 2,   so that (2x - 1)^2 - 2d y^2 = 1.
//
// X is automatically odd (X^2 = 1 + 2d Y^2 is odd).  `power` records
// which power of the fundamental unit was taken (1 when its norm is
// already +1, else 2).  Requires 2d square-free, so even d -- and in
// particular d = 2 -- are rejected.
struct PellHalf {
    Int x;
    Int y;
    unsigned power;
};

PellHalf pell_fundamental_2d(SquareFreeD d);

} // namespace freequat

#endif // FREEQUAT_PELL_HPP
