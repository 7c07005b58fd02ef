#include "freequat/mobius.hpp"

namespace freequat {

ComplexMatrix2::ComplexMatrix2(ComplexQuad e11, ComplexQuad e12,
                               ComplexQuad e21, ComplexQuad e22)
    : e11_(std::move(e11)), e12_(std::move(e12)), e21_(std::move(e21)),
      e22_(std::move(e22)) {
    require_same_field(e11_.d(), e12_.d(), "ComplexMatrix2 construction");
    require_same_field(e11_.d(), e21_.d(), "ComplexMatrix2 construction");
    require_same_field(e11_.d(), e22_.d(), "ComplexMatrix2 construction");
}

ComplexQuad ComplexMatrix2::det() const {
    return e11_ * e22_ - e12_ * e21_;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return ComplexMatrix2(a.e11_ * b.e11_ + a.e12_ * b.e21_,
                          a.e11_ * b.e12_ + a.e12_ * b.e22_,
                          a.e21_ * b.e11_ + a.e22_ * b.e21_,
                          a.e21_ * b.e12_ + a.e22_ * b.e22_);
}

bool operator==(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return a.e11_ == b.e11_ && a.e12_ == b.e12_ && a.e21_ == b.e21_ &&
           a.e22_ == b.e22_;
}

ComplexQuad galois_twist(const ComplexQuad& z) {
    // Negate sqrt(d) and the complex unit together: with
    // z = (a + b sqrt(d)) + (c + e sqrt(d)) i the image is
    // (a - b sqrt(d)) + (-c + e sqrt(d)) i.
    QuadElem re = quad_conj(z.re());
    QuadElem im = -quad_conj(z.im());
    return ComplexQuad(std::move(re), std::move(im));
}

ComplexMatrix2 psi(const QuatElem& q) {
    // Rewrite each quaternion coefficient r + s sqrt(-d) as the complex
    // scalar r + (s sqrt(d)) i and expand the images of 1, i, j, k:
    //   1 -> Id, i -> diag(i, -i), j -> [[0,1],[-1,0]], k -> [[0,i],[i,0]].
    SquareFreeD d = q.d();
    const Rational& r1 = q.c1().r();
    const Rational& s1 = q.c1().s();
    const Rational& ri = q.ci().r();
    const Rational& si = q.ci().s();
    const Rational& rj = q.cj().r();
    const Rational& sj = q.cj().s();
    const Rational& rk = q.ck().r();
    const Rational& sk = q.ck().s();

    ComplexQuad e11(QuadElem(r1, -si, d), QuadElem(ri, s1, d));
    ComplexQuad e12(QuadElem(rj, -sk, d), QuadElem(rk, sj, d));
    ComplexQuad e21(QuadElem(-rj, -sk, d), QuadElem(rk, -sj, d));
    ComplexQuad e22(QuadElem(r1, si, d), QuadElem(-ri, s1, d));
    return ComplexMatrix2(e11, e12, e21, e22);
}

MobiusMap::MobiusMap(QuadElem m11, QuadElem m12, QuadElem m21, QuadElem m22)
    : m11_(std::move(m11)), m12_(std::move(m12)), m21_(std::move(m21)),
      m22_(std::move(m22)) {
    require_same_field(m11_.d(), m12_.d(), "MobiusMap construction");
    require_same_field(m11_.d(), m21_.d(), "MobiusMap construction");
    require_same_field(m11_.d(), m22_.d(), "MobiusMap construction");
    if (det().is_zero()) {
        throw InputError("MobiusMap requires nonzero determinant");
    }
}

MobiusMap MobiusMap::identity(SquareFreeD d) {
    return MobiusMap(QuadElem::rational(1, d), QuadElem::rational(0, d),
                     QuadElem::rational(0, d), QuadElem::rational(1, d));
}

QuadElem MobiusMap::det() const { return m11_ * m22_ - m12_ * m21_; }

bool projectively_equal(const MobiusMap& a, const MobiusMap& b) {
    // Proportionality of the two entry vectors: all six 2x2 minors of the
    // stacked 2x4 matrix vanish.  Both vectors are nonzero (det != 0).
    const QuadElem av[] = {a.m11(), a.m12(), a.m21(), a.m22()};
    const QuadElem bv[] = {b.m11(), b.m12(), b.m21(), b.m22()};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!(av[i] * bv[j] - av[j] * bv[i]).is_zero()) return false;
        }
    }
    return true;
}

MobiusMap to_real_mobius(const ComplexMatrix2& m) {
    const ComplexQuad* es[] = {&m.e11(), &m.e12(), &m.e21(), &m.e22()};
    bool all_real = true, all_imag = true;
    for (const ComplexQuad* e : es) {
        if (!e->im().is_zero()) all_real = false;
        if (!e->re().is_zero()) all_imag = false;
    }
    if (all_real) {
        return MobiusMap(m.e11().re(), m.e12().re(), m.e21().re(),
                         m.e22().re());
    }
    if (all_imag) {
        // Divide by the complex unit; projectively the same action on
        // Omega, determinant negated.
        return MobiusMap(m.e11().im(), m.e12().im(), m.e21().im(),
                         m.e22().im());
    }
    throw NotRealProjective(
        "matrix is neither all-real nor all-imaginary; no induced real "
        "projective action");
}

ExtPoint mobius_apply(const MobiusMap& m, const ExtPoint& z) {
    if (z.is_infinity()) {
        if (m.m21().is_zero()) return ExtPoint::infinity();
        return ExtPoint::finite(m.m11() / m.m21());
    }
    QuadElem den = m.m21() * z.value() + m.m22();
    if (den.is_zero()) return ExtPoint::infinity();
    return ExtPoint::finite((m.m11() * z.value() + m.m12()) / den);
}

ExtPoint mobius_pole(const MobiusMap& m) {
    if (m.m21().is_zero()) return ExtPoint::infinity();
    return ExtPoint::finite(-m.m22() / m.m21());
}

ExtPoint mobius_zero(const MobiusMap& m) {
    if (m.m11().is_zero()) return ExtPoint::infinity();
    return ExtPoint::finite(-m.m12() / m.m11());
}

MobiusMap mobius_compose(const MobiusMap& a, const MobiusMap& b) {
    return MobiusMap(a.m11() * b.m11() + a.m12() * b.m21(),
                     a.m11() * b.m12() + a.m12() * b.m22(),
                     a.m21() * b.m11() + a.m22() * b.m21(),
                     a.m21() * b.m12() + a.m22() * b.m22());
}

MobiusMap mobius_inverse(const MobiusMap& m) {
    return MobiusMap(m.m22(), -m.m12(), -m.m21(), m.m11());
}

Arc arc_image(const MobiusMap& m, const Arc& a) {
    if (a.is_empty() || a.is_full()) return a;
    ExtPoint lo_img = mobius_apply(m, a.lo());
    ExtPoint hi_img = mobius_apply(m, a.hi());
    if (quad_sign(m.det()) > 0) {
        return Arc::span(std::move(lo_img), std::move(hi_img),
                         a.lo_closed(), a.hi_closed());
    }
    return Arc::span(std::move(hi_img), std::move(lo_img), a.hi_closed(),
                     a.lo_closed());
}

ArcSet arcset_image(const MobiusMap& m, const ArcSet& s) {
    std::vector<Arc> out;
    out.reserve(s.arcs().size());
    for (const Arc& a : s.arcs()) out.push_back(arc_image(m, a));
    return ArcSet(std::move(out));
}

std::string to_string(const MobiusMap& m) {
    return "[" + to_string(m.m11()) + ", " + to_string(m.m12()) + "; " +
           to_string(m.m21()) + ", " + to_string(m.m22()) + "]";
}

} // namespace freequat
