// The embedding of the quaternion algebra into 2x2 complex matrices, the
// passage to real Mobius transformations, and their exact action on the
// circle Omega = R u {inf}, including images of arcs.
//
// Coefficient bookkeeping: a quaternion coefficient r + s*sqrt(-d) is
// rewritten inside the matrix entries as the complex number
// r + (s*sqrt(d)) * i -- i.e. sqrt(-d) becomes sqrt(d) times the complex
// imaginary unit, with sqrt(d) kept symbolic in QuadElem.  The embedding
// sends
//
//     i |-> diag(i, -i),  j |-> [[0,1],[-1,0]],  k |-> [[0,i],[i,0]],
//
// so entry(2,2) is the GALOIS twist of entry(1,1): both sqrt(d) and the
// complex unit change sign together (NOT plain complex conjugation, which
// would leave sqrt(d) alone); likewise entry(2,1) = -twist(entry(1,2)).
#ifndef FREEQUAT_MOBIUS_HPP
#define FREEQUAT_MOBIUS_HPP

#include <string>

#include "freequat/arcs.hpp"
#include "freequat/errors.hpp"
#include "freequat/numbers.hpp"
#include "freequat/quaternion.hpp"

namespace freequat {

// 2x2 matrix over the complexified field Q(sqrt(d)) + Q(sqrt(d))*i.
class ComplexMatrix2 {
public:
    ComplexMatrix2(ComplexQuad e11, ComplexQuad e12, ComplexQuad e21,
                   ComplexQuad e22);

    const ComplexQuad& e11() const { return e11_; }
    const ComplexQuad& e12() const { return e12_; }
    const ComplexQuad& e21() const { return e21_; }
    const ComplexQuad& e22() const { return e22_; }
    SquareFreeD d() const { return e11_.d(); }

    ComplexQuad det() const;

    friend ComplexMatrix2 operator*(const ComplexMatrix2& a,
                                    const ComplexMatrix2& b);
    friend bool operator==(const ComplexMatrix2& a, const ComplexMatrix2& b);
    friend bool operator!=(const ComplexMatrix2& a, const ComplexMatrix2& b) {
        return !(a == b);
    }

private:
    ComplexQuad e11_, e12_, e21_, e22_;
};

// The embedding of c1 + ci*i + cj*j + ck*k:
//   entry(1,1) = c1 + ci under the coefficient rewriting,
//   entry(1,2) = cj + ck,
//   entry(2,1) = -twist(entry(1,2)),  entry(2,2) = twist(entry(1,1)),
// where twist negates sqrt(d) and the complex unit simultaneously.
// det(psi(q)) equals quat_norm(q) under the same rewriting.
ComplexMatrix2 psi(const QuatElem& q);

// The Galois twist described above, exposed for tests.
ComplexQuad galois_twist(const ComplexQuad& z);

// A real projective transformation z -> (az + b)/(cz + d) with entries in
// Q(sqrt(d)), stored unnormalized; equality is projective.
class MobiusMap {
public:
    MobiusMap(QuadElem m11, QuadElem m12, QuadElem m21, QuadElem m22);
    static MobiusMap identity(SquareFreeD d);

    const QuadElem& m11() const { return m11_; }
    const QuadElem& m12() const { return m12_; }
    const QuadElem& m21() const { return m21_; }
    const QuadElem& m22() const { return m22_; }
    SquareFreeD d() const { return m11_.d(); }

    QuadElem det() const;

private:
    QuadElem m11_, m12_, m21_, m22_;
};

// Projective equality: one matrix is a nonzero scalar multiple of the
// other (tested exactly via vanishing 2x2 minors, no normalization).
bool projectively_equal(const MobiusMap& a, const MobiusMap& b);

// Extraction of the real transformation from an embedded matrix: accepts
// matrices whose entries are all real (take real parts) or all purely
// imaginary (divide by the complex unit); anything mixed throws
// NotRealProjective.  Note dividing by the unit flips the determinant's
// sign: an all-imaginary matrix with det D yields a real matrix with
// det -D.
MobiusMap to_real_mobius(const ComplexMatrix2& m);

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& z);
// The point sent to infinity: -m22/m21, or infinity when m21 = 0.
ExtPoint mobius_pole(const MobiusMap& m);
// The preimage of zero: -m12/m11, or infinity when m11 = 0.
ExtPoint mobius_zero(const MobiusMap& m);

// Matrix product: apply(compose(a, b), z) = apply(a, apply(b, z)).
MobiusMap mobius_compose(const MobiusMap& a, const MobiusMap& b);
// Adjugate: projectively the inverse transformation.
MobiusMap mobius_inverse(const MobiusMap& m);

// Exact image of an arc: endpoints map to endpoint images, orientation
// preserved iff det > 0 (reversed otherwise); arcs through the pole come
// back through infinity automatically.
Arc arc_image(const MobiusMap& m, const Arc& a);
ArcSet arcset_image(const MobiusMap& m, const ArcSet& s);

std::string to_string(const MobiusMap& m);

} // namespace freequat

#endif // FREEQUAT_MOBIUS_HPP
