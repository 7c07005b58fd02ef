#include "freequat/numbers.hpp"

#include <sstream>

namespace freequat {

Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_square_free(std::uint64_t n) {
    if (n == 0) {
        throw InputError("is_square_free requires n >= 1");
    }
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return false;
            }
        }
    }
    return true;
}

SquareFreeD::SquareFreeD(unsigned v) : value(v) {
    if (!is_square_free(v)) {
        throw NotSquareFree("d = " + std::to_string(v) +
                            " is not square-free");
    }
}

void require_same_field(SquareFreeD a, SquareFreeD b, const char* where) {
    if (a.value != b.value) {
        throw FieldMismatch(std::string(where) + ": operands over sqrt(" +
                            std::to_string(a.value) + ") and sqrt(" +
                            std::to_string(b.value) + ")");
    }
}

QuadElem::QuadElem(Rational a, Rational b, SquareFreeD d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_.value == 1) { // sqrt(1) = 1: fold the b part into a.
        a_ += b_;
        b_ = 0;
    }
}

QuadElem QuadElem::rational(Rational a, SquareFreeD d) {
    return QuadElem(std::move(a), Rational(0), d);
}

QuadElem QuadElem::sqrt_term(Rational b, SquareFreeD d) {
    return QuadElem(Rational(0), std::move(b), d);
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, d_); }

QuadElem operator+(const QuadElem& p, const QuadElem& q) {
    require_same_field(p.d_, q.d_, "QuadElem addition");
    return QuadElem(p.a_ + q.a_, p.b_ + q.b_, p.d_);
}

QuadElem operator-(const QuadElem& p, const QuadElem& q) {
    require_same_field(p.d_, q.d_, "QuadElem subtraction");
    return QuadElem(p.a_ - q.a_, p.b_ - q.b_, p.d_);
}

QuadElem operator*(const QuadElem& p, const QuadElem& q) {
    require_same_field(p.d_, q.d_, "QuadElem multiplication");
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 d) + (a1 b2 + b1 a2) s
    Rational a = p.a_ * q.a_ + p.b_ * q.b_ * static_cast<long>(p.d_.value);
    Rational b = p.a_ * q.b_ + p.b_ * q.a_;
    return QuadElem(std::move(a), std::move(b), p.d_);
}

QuadElem operator/(const QuadElem& p, const QuadElem& q) {
    return p * quad_invert(q);
}

bool operator==(const QuadElem& p, const QuadElem& q) {
    require_same_field(p.d_, q.d_, "QuadElem comparison");
    return p.a_ == q.a_ && p.b_ == q.b_;
}

int quad_sign(const QuadElem& q) {
    const int sa = sgn(q.a());
    const int sb = sgn(q.b());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b disagree: |a| vs |b| sqrt(d) decides, i.e. a^2 vs b^2 d.
    Rational diff =
        q.a() * q.a() - q.b() * q.b() * static_cast<long>(q.d().value);
    // diff == 0 would mean sqrt(d) rational; impossible here (d = 1 folded).
    return sa * sgn(diff);
}

int quad_cmp(const QuadElem& p, const QuadElem& q) {
    return quad_sign(p - q);
}

QuadElem quad_conj(const QuadElem& q) {
    return QuadElem(q.a(), -q.b(), q.d());
}

Rational field_norm(const QuadElem& q) {
    return q.a() * q.a() - q.b() * q.b() * static_cast<long>(q.d().value);
}

QuadElem quad_invert(const QuadElem& q) {
    if (q.is_zero()) {
        throw DivisionByZero("inverse of zero in Q(sqrt(" +
                             std::to_string(q.d().value) + "))");
    }
    // 1/(a + b s) = (a - b s)/(a^2 - b^2 d)
    Rational n = field_norm(q);
    return QuadElem(q.a() / n, -q.b() / n, q.d());
}

ComplexQuad::ComplexQuad(QuadElem re, QuadElem im)
    : re_(std::move(re)), im_(std::move(im)) {
    require_same_field(re_.d(), im_.d(), "ComplexQuad construction");
}

ComplexQuad ComplexQuad::zero(SquareFreeD d) {
    return ComplexQuad(QuadElem::rational(0, d), QuadElem::rational(0, d));
}

ComplexQuad ComplexQuad::operator-() const { return ComplexQuad(-re_, -im_); }

ComplexQuad operator+(const ComplexQuad& p, const ComplexQuad& q) {
    return ComplexQuad(p.re_ + q.re_, p.im_ + q.im_);
}

ComplexQuad operator-(const ComplexQuad& p, const ComplexQuad& q) {
    return ComplexQuad(p.re_ - q.re_, p.im_ - q.im_);
}

ComplexQuad operator*(const ComplexQuad& p, const ComplexQuad& q) {
    return ComplexQuad(p.re_ * q.re_ - p.im_ * q.im_,
                       p.re_ * q.im_ + p.im_ * q.re_);
}

bool operator==(const ComplexQuad& p, const ComplexQuad& q) {
    return p.re_ == q.re_ && p.im_ == q.im_;
}

ComplexQuad ComplexQuad::conj() const { return ComplexQuad(re_, -im_); }

QuadElem ComplexQuad::abs_squared() const { return re_ * re_ + im_ * im_; }

ComplexQuad ComplexQuad::times_i() const { return ComplexQuad(-im_, re_); }

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

namespace {

// |b|*sqrt(d) with the coefficient omitted when it is 1.
std::string sqrt_part(const Rational& abs_b, unsigned d) {
    std::string root = "sqrt(" + std::to_string(d) + ")";
    if (abs_b == 1) return root;
    return to_string(abs_b) + "*" + root;
}

} // namespace

std::string to_string(const QuadElem& q) {
    const int sa = sgn(q.a());
    const int sb = sgn(q.b());
    if (sa == 0 && sb == 0) return "0";
    std::string out;
    if (sa != 0) out += to_string(q.a());
    if (sb != 0) {
        Rational abs_b = abs(q.b());
        if (sa != 0) {
            out += (sb > 0) ? "+" : "-";
            out += sqrt_part(abs_b, q.d().value);
        } else {
            out += (sb > 0) ? "" : "-";
            out += sqrt_part(abs_b, q.d().value);
        }
    }
    return out;
}

std::string to_string(const ComplexQuad& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (!z.re().is_zero()) out += to_string(z.re());
    if (!z.im().is_zero()) {
        std::string im = to_string(z.im());
        if (!out.empty() && im[0] != '-') out += "+";
        out += "(" + im + ")*I";
    }
    return out;
}

} // namespace freequat
