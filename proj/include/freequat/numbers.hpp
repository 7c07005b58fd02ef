#pragma once

/**
 * Exact arithmetic in the real quadratic field Q(sqrt(d)) and in its
 * "complexification" { re + im*I : re, im in Q(sqrt(d)) }, for d a positive
 * square-free integer.
 *
 * Key design decisions:
 *  - Rationals are GMP mpq_class, eagerly canonicalized (lowest terms,
 *    positive denominator); integers are mpz_class.
 *  - The sign of a + b*sqrt(d) is decided without floating point: when a and
 *    b share a sign that sign wins; otherwise sign(a) * sign(a^2 - b^2 d)
 *    decides (a^2 = b^2 d only at zero since sqrt(d) is irrational for
 *    square-free d > 1, and d = 1 is folded, see below).
 *  - Every value carries its d; mixing different d in one operation throws
 *    FieldMismatch.  Purely rational values still carry a d so that field
 *    membership stays explicit.
 *  - d = 1 degenerates (sqrt(1) = 1): the b part is folded into a at
 *    construction, keeping equality and sign componentwise-exact.
 */

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "freequat/errors.hpp"

namespace freequat {

using Int = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; throws DivisionByZero when den == 0.
Rational make_rational(const Int& num, const Int& den);

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Int& n) { return sgn(n); }

/// True iff n >= 1 has no repeated prime factor; throws InputError when n == 0.
bool is_square_free(std::uint64_t n);

/// A positive square-free integer, validated at construction.
struct SquareFreeD {
    explicit SquareFreeD(unsigned v);
    unsigned value;

    friend bool operator==(SquareFreeD a, SquareFreeD b) {
        return a.value == b.value;
    }
};

/**
 * An element a + b*sqrt(d) of Q(sqrt(d)).
 *
 * Invariants: components in lowest terms; for d = 1 the b component is zero
 * (folded into a).  Two elements over the same d are equal iff their
 * components are equal; comparisons across different d throw FieldMismatch.
 */
class QuadElem {
public:
    QuadElem(Rational a, Rational b, SquareFreeD d);

    /// The purely rational element a + 0*sqrt(d).
    static QuadElem rational(Rational a, SquareFreeD d);
    /// The element b*sqrt(d).
    static QuadElem sqrt_term(Rational b, SquareFreeD d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    SquareFreeD d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadElem operator-() const;
    friend QuadElem operator+(const QuadElem& p, const QuadElem& q);
    friend QuadElem operator-(const QuadElem& p, const QuadElem& q);
    friend QuadElem operator*(const QuadElem& p, const QuadElem& q);
    friend QuadElem operator/(const QuadElem& p, const QuadElem& q);
    friend bool operator==(const QuadElem& p, const QuadElem& q);
    friend bool operator!=(const QuadElem& p, const QuadElem& q) {
        return !(p == q);
    }

private:
    Rational a_, b_;
    SquareFreeD d_;
};

/// Exact sign (-1, 0, +1) of a + b*sqrt(d); no floating point involved.
int quad_sign(const QuadElem& q);

/// sign(p - q); the total order of the real embedding.
int quad_cmp(const QuadElem& p, const QuadElem& q);

inline bool operator<(const QuadElem& p, const QuadElem& q) {
    return quad_cmp(p, q) < 0;
}
inline bool operator<=(const QuadElem& p, const QuadElem& q) {
    return quad_cmp(p, q) <= 0;
}
inline bool operator>(const QuadElem& p, const QuadElem& q) {
    return quad_cmp(p, q) > 0;
}
inline bool operator>=(const QuadElem& p, const QuadElem& q) {
    return quad_cmp(p, q) >= 0;
}

/// Field conjugate a - b*sqrt(d).
QuadElem quad_conj(const QuadElem& q);

/// Multiplicative inverse; throws DivisionByZero at zero.
QuadElem quad_invert(const QuadElem& q);

/// Field norm a^2 - d b^2 (multiplicative).
Rational field_norm(const QuadElem& q);

/**
 * An element re + im*I with re, im in Q(sqrt(d)) and I^2 = -1.
 *
 * This is the coefficient domain of the 2x2 matrices that split the
 * quaternion algebra; conj negates im, and re^2 + im^2 = z * conj(z) is the
 * squared modulus.
 */
class ComplexQuad {
public:
    ComplexQuad(QuadElem re, QuadElem im);

    static ComplexQuad zero(SquareFreeD d);

    const QuadElem& re() const { return re_; }
    const QuadElem& im() const { return im_; }
    SquareFreeD d() const { return re_.d(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }

    ComplexQuad operator-() const;
    friend ComplexQuad operator+(const ComplexQuad& p, const ComplexQuad& q);
    friend ComplexQuad operator-(const ComplexQuad& p, const ComplexQuad& q);
    friend ComplexQuad operator*(const ComplexQuad& p, const ComplexQuad& q);
    friend bool operator==(const ComplexQuad& p, const ComplexQuad& q);
    friend bool operator!=(const ComplexQuad& p, const ComplexQuad& q) {
        return !(p == q);
    }

    /// Complex conjugate re - im*I.
    ComplexQuad conj() const;

    /// Squared modulus re^2 + im^2, equal to z * conj(z).
    QuadElem abs_squared() const;

    /// Multiplication by I: (re, im) -> (-im, re).
    ComplexQuad times_i() const;

private:
    QuadElem re_, im_;
};

/// Canonical text form, e.g. "3/2+1/2*sqrt(7)", "-sqrt(2)", "0".
std::string to_string(const Rational& q);
std::string to_string(const QuadElem& q);
std::string to_string(const ComplexQuad& z);

void require_same_field(SquareFreeD a, SquareFreeD b, const char* where);

} // namespace freequat
