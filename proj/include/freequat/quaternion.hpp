// The quaternion algebra (-1,-1 / K) over K = Q(sqrt(-d)) and its unit
// constructors: Pell 2-, 3-, 4-units and Gauss units, plus exact norm,
// conjugation, inversion, powers, torsion detection, and membership in
// the order spanned by {1, i, j, k} over the ring of integers of K.
//
// Design notes:
//   * ImagQuad holds r + s*sqrt(-d) with rational r, s.  Unlike real
//     quadratic elements, d = 1 does NOT fold: sqrt(-1) is a genuine
//     imaginary unit of K.
//   * The ring of integers of Q(sqrt(-d)) is Z[(1+sqrt(-d))/2] when
//     d = 3 (mod 4) (half-integers with matching parities) and
//     Z[sqrt(-d)] otherwise; is_integral applies the right basis.
//   * "Unit" here means reduced norm +1 or -1 exactly.  For d in {1, 3}
//     the ring of integers has extra roots of unity whose norms are not
//     rational +-1 scalars in this sense; those are deliberately not
//     accepted.
//   * Constructors validate their preconditions loudly (NormMinusOne,
//     NonIntegral, InputError) instead of returning wrong elements.
#ifndef FREEQUAT_QUATERNION_HPP
#define FREEQUAT_QUATERNION_HPP

#include <array>
#include <optional>

#include "freequat/errors.hpp"
#include "freequat/numbers.hpp"
#include "freequat/pell.hpp"

namespace freequat {

// An element r + s*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)).
class ImagQuad {
public:
    ImagQuad(Rational r, Rational s, SquareFreeD d);
    static ImagQuad rational(Rational r, SquareFreeD d);
    static ImagQuad sqrt_term(Rational s, SquareFreeD d);

    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }
    SquareFreeD d() const { return d_; }

    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    bool is_rational() const { return sgn(s_) == 0; }

    ImagQuad operator-() const;
    friend ImagQuad operator+(const ImagQuad& p, const ImagQuad& q);
    friend ImagQuad operator-(const ImagQuad& p, const ImagQuad& q);
    friend ImagQuad operator*(const ImagQuad& p, const ImagQuad& q);
    friend bool operator==(const ImagQuad& p, const ImagQuad& q);
    friend bool operator!=(const ImagQuad& p, const ImagQuad& q) {
        return !(p == q);
    }

private:
    Rational r_, s_;
    SquareFreeD d_;
};

ImagQuad imag_conj(const ImagQuad& z);
// Field norm r^2 + d s^2; always >= 0.
Rational imag_norm(const ImagQuad& z);
// Membership in the ring of integers of Q(sqrt(-d)).
bool imag_is_integral(const ImagQuad& z);
std::string to_string(const ImagQuad& z);

// One of the basis elements 1, i, j, k of the algebra.
enum class BasisSlot { One, I, J, K };

const char* slot_name(BasisSlot s);

// Element c1 + ci*i + cj*j + ck*k with coefficients in Q(sqrt(-d)).
// Multiplication follows i^2 = j^2 = -1, ij = k = -ji.
class QuatElem {
public:
    QuatElem(ImagQuad c1, ImagQuad ci, ImagQuad cj, ImagQuad ck);
    static QuatElem zero(SquareFreeD d);
    static QuatElem one(SquareFreeD d);
    static QuatElem basis(BasisSlot slot, SquareFreeD d);

    const ImagQuad& c1() const { return c1_; }
    const ImagQuad& ci() const { return ci_; }
    const ImagQuad& cj() const { return cj_; }
    const ImagQuad& ck() const { return ck_; }
    const ImagQuad& coeff(BasisSlot slot) const;
    SquareFreeD d() const { return c1_.d(); }

    bool is_zero() const;
    bool is_one() const;

    QuatElem operator-() const;
    friend QuatElem operator+(const QuatElem& p, const QuatElem& q);
    friend QuatElem operator-(const QuatElem& p, const QuatElem& q);
    friend QuatElem operator*(const QuatElem& p, const QuatElem& q);
    friend bool operator==(const QuatElem& p, const QuatElem& q);
    friend bool operator!=(const QuatElem& p, const QuatElem& q) {
        return !(p == q);
    }

private:
    ImagQuad c1_, ci_, cj_, ck_;
};

QuatElem quat_conj(const QuatElem& q);
// Reduced norm c1^2 + ci^2 + cj^2 + ck^2 (squares in Q(sqrt(-d))).
ImagQuad quat_norm(const QuatElem& q);
// True iff the reduced norm is exactly the rational +1 or -1.
bool is_unit(const QuatElem& q);
// conj(q) / norm(q); requires is_unit (throws NonUnit).
QuatElem quat_inverse(const QuatElem& q);
// Exact integer power; negative exponents require a unit (NonUnit).
QuatElem quat_pow(const QuatElem& q, long n);
// True iff q^k = 1 for some k <= 24 (the exponent of any finite subgroup
// of these algebras divides 24, so the bound is conservative).
// Requires is_unit (throws NonUnit).
bool is_torsion(const QuatElem& q);
// All four coefficients lie in the ring of integers of Q(sqrt(-d)).
bool is_integral(const QuatElem& q);
// Total order on elements of a common field (8-way lexicographic over the
// rational components); used by enumeration code for exact dedup.
int quat_lex_cmp(const QuatElem& p, const QuatElem& q);
std::string to_string(const QuatElem& q);

// The set of basis slots with nonzero coefficient.
struct Support {
    bool one = false, i = false, j = false, k = false;
    int size() const { return int(one) + int(i) + int(j) + int(k); }
    friend bool operator==(const Support&, const Support&) = default;
};

Support support(const QuatElem& q);

// --- Unit constructors -------------------------------------------------
//
// Each takes a Pell-type solution over the REAL field Q(sqrt(d)) and
// reinterprets its coefficients inside the quaternion algebra over the
// IMAGINARY field Q(sqrt(-d)); the Pell relation makes the reduced norm
// collapse to +-1.

// y*sqrt(-d)*xi + x*psi for distinct slots; norm = x^2 - d y^2 = fund.norm.
QuatElem pell2_unit(const FundUnit& fund, BasisSlot xi, BasisSlot psi);

// (y/2)sqrt(-d)*zeta + (y/2)sqrt(-d)*xi + ((1+-x)/2)psi + ((1-+x)/2)phi
// over all four slots; requires fund.norm = +1 (NormMinusOne otherwise)
// and y even -- which forces x odd -- so that the halves lie in the order
// (NonIntegral otherwise).  sign selects which of psi/phi carries (1+x)/2.
QuatElem pell4_unit(const FundUnit& fund, BasisSlot zeta, BasisSlot xi,
                    BasisSlot psi, BasisSlot phi, int sign);

// xy*sqrt(-d) + xy*sqrt(-d)*i + x^2*j + (y^2 d)*k, the 4-unit built from
// the square of the fundamental solution when y is odd; norm
// (x^2 - d y^2)^2 = 1 for either norm.  y even -> InputError (use
// pell4_unit directly).
QuatElem pell4_unit_from_square(const FundUnit& fund);

// y*sqrt(-d)*xi + x*psi + (1-x)*phi for distinct slots, from a halved
// solution (2x-1)^2 - 2d y^2 = 1 over Q(sqrt(2d)); the relation forces
// norm exactly 1.
QuatElem pell3_unit(const PellHalf& half, SquareFreeD d, BasisSlot xi,
                    BasisSlot psi, BasisSlot phi);

// A decomposition p <= q <= r with p^2 + q^2 + r^2 = n, or nullopt
// exactly when n has the excluded form 4^a(8b+7).  Deterministic: the
// decomposition with the smallest largest part, ties broken on the
// middle part (29 -> (2,3,4), not (0,2,5)).
std::optional<std::array<Int, 3>> three_squares(const Int& n);

// m*sqrt(-d) + p*i + q*j + r*k with p^2 + q^2 + r^2 = m^2 d + sign, so
// the norm is exactly `sign`.  Decompositions whose support would be a
// single slot are skipped (only possible when m^2 d + sign = 0); nullopt
// when no usable decomposition exists.  m = 0 -> InputError.
std::optional<QuatElem> gauss_unit(SquareFreeD d, const Int& m, int sign);

// The four standard units attached to a norm +1 fundamental solution:
//   x + y*sqrt(-d)*i
//   y*sqrt(-d) + x*k
//   (x+1)/2 - (y/2)sqrt(-d)*i + ((x-1)/2)*j + (y/2)sqrt(-d)*k
//   x^2 - xy*sqrt(-d)*i - y^2 d*j + xy*sqrt(-d)*k
// All have norm exactly 1 in the algebra.  The third lies in the order
// iff y is even (for every d mod 4: (y/2)sqrt(-d) needs matching
// parities even in the half-integer basis); the others always do.  The
// per-unit `integral` flags report this instead of throwing, so callers
// can still reason about the algebra units.
struct Pp1Units {
    std::array<QuatElem, 4> units;
    std::array<bool, 4> integral;
};

Pp1Units prop_pp1_units(const FundUnit& fund);

} // namespace freequat

#endif // FREEQUAT_QUATERNION_HPP
