#include "freequat/quaternion.hpp"

#include <string>
#include <utility>

namespace freequat {

ImagQuad::ImagQuad(Rational r, Rational s, SquareFreeD d)
    : r_(std::move(r)), s_(std::move(s)), d_(d) {
    r_.canonicalize();
    s_.canonicalize();
}

ImagQuad ImagQuad::rational(Rational r, SquareFreeD d) {
    return ImagQuad(std::move(r), Rational(0), d);
}

ImagQuad ImagQuad::sqrt_term(Rational s, SquareFreeD d) {
    return ImagQuad(Rational(0), std::move(s), d);
}

ImagQuad ImagQuad::operator-() const { return ImagQuad(-r_, -s_, d_); }

ImagQuad operator+(const ImagQuad& p, const ImagQuad& q) {
    require_same_field(p.d_, q.d_, "ImagQuad addition");
    return ImagQuad(p.r_ + q.r_, p.s_ + q.s_, p.d_);
}

ImagQuad operator-(const ImagQuad& p, const ImagQuad& q) {
    require_same_field(p.d_, q.d_, "ImagQuad subtraction");
    return ImagQuad(p.r_ - q.r_, p.s_ - q.s_, p.d_);
}

ImagQuad operator*(const ImagQuad& p, const ImagQuad& q) {
    require_same_field(p.d_, q.d_, "ImagQuad multiplication");
    // (r1 + s1 t)(r2 + s2 t) with t^2 = -d.
    Rational r = p.r_ * q.r_ - p.s_ * q.s_ * static_cast<long>(p.d_.value);
    Rational s = p.r_ * q.s_ + p.s_ * q.r_;
    return ImagQuad(std::move(r), std::move(s), p.d_);
}

bool operator==(const ImagQuad& p, const ImagQuad& q) {
    require_same_field(p.d_, q.d_, "ImagQuad comparison");
    return p.r_ == q.r_ && p.s_ == q.s_;
}

ImagQuad imag_conj(const ImagQuad& z) {
    return ImagQuad(z.r(), -z.s(), z.d());
}

Rational imag_norm(const ImagQuad& z) {
    return z.r() * z.r() +
           z.s() * z.s() * static_cast<long>(z.d().value);
}

bool imag_is_integral(const ImagQuad& z) {
    if (z.d().value % 4 == 3) {
        // Ring of integers Z[(1 + sqrt(-d))/2]: elements (a + b sqrt(-d))/2
        // with a = b (mod 2).
        Rational two_r = 2 * z.r();
        Rational two_s = 2 * z.s();
        if (two_r.get_den() != 1 || two_s.get_den() != 1) return false;
        Int diff = two_r.get_num() - two_s.get_num();
        return mpz_even_p(diff.get_mpz_t());
    }
    return z.r().get_den() == 1 && z.s().get_den() == 1;
}

std::string to_string(const ImagQuad& z) {
    const int sr = sgn(z.r());
    const int ss = sgn(z.s());
    if (sr == 0 && ss == 0) return "0";
    std::string out;
    if (sr != 0) out += to_string(z.r());
    if (ss != 0) {
        Rational abs_s = abs(z.s());
        std::string root = "sqrt(-" + std::to_string(z.d().value) + ")";
        std::string part =
            (abs_s == 1) ? root : to_string(abs_s) + "*" + root;
        if (sr != 0) {
            out += (ss > 0) ? "+" : "-";
            out += part;
        } else {
            out += (ss > 0) ? "" : "-";
            out += part;
        }
    }
    return out;
}

const char* slot_name(BasisSlot s) {
    switch (s) {
    case BasisSlot::One: return "1";
    case BasisSlot::I: return "i";
    case BasisSlot::J: return "j";
    case BasisSlot::K: return "k";
    }
    throw InputError("invalid basis slot");
}

QuatElem::QuatElem(ImagQuad c1, ImagQuad ci, ImagQuad cj, ImagQuad ck)
    : c1_(std::move(c1)), ci_(std::move(ci)), cj_(std::move(cj)),
      ck_(std::move(ck)) {
    require_same_field(c1_.d(), ci_.d(), "QuatElem construction");
    require_same_field(c1_.d(), cj_.d(), "QuatElem construction");
    require_same_field(c1_.d(), ck_.d(), "QuatElem construction");
}

QuatElem QuatElem::zero(SquareFreeD d) {
    ImagQuad z = ImagQuad::rational(0, d);
    return QuatElem(z, z, z, z);
}

QuatElem QuatElem::one(SquareFreeD d) {
    ImagQuad z = ImagQuad::rational(0, d);
    return QuatElem(ImagQuad::rational(1, d), z, z, z);
}

QuatElem QuatElem::basis(BasisSlot slot, SquareFreeD d) {
    ImagQuad z = ImagQuad::rational(0, d);
    ImagQuad u = ImagQuad::rational(1, d);
    switch (slot) {
    case BasisSlot::One: return QuatElem(u, z, z, z);
    case BasisSlot::I: return QuatElem(z, u, z, z);
    case BasisSlot::J: return QuatElem(z, z, u, z);
    case BasisSlot::K: return QuatElem(z, z, z, u);
    }
    throw InputError("invalid basis slot");
}

const ImagQuad& QuatElem::coeff(BasisSlot slot) const {
    switch (slot) {
    case BasisSlot::One: return c1_;
    case BasisSlot::I: return ci_;
    case BasisSlot::J: return cj_;
    case BasisSlot::K: return ck_;
    }
    throw InputError("invalid basis slot");
}

bool QuatElem::is_zero() const {
    return c1_.is_zero() && ci_.is_zero() && cj_.is_zero() && ck_.is_zero();
}

bool QuatElem::is_one() const { return *this == one(d()); }

QuatElem QuatElem::operator-() const {
    return QuatElem(-c1_, -ci_, -cj_, -ck_);
}

QuatElem operator+(const QuatElem& p, const QuatElem& q) {
    return QuatElem(p.c1_ + q.c1_, p.ci_ + q.ci_, p.cj_ + q.cj_,
                    p.ck_ + q.ck_);
}

QuatElem operator-(const QuatElem& p, const QuatElem& q) {
    return QuatElem(p.c1_ - q.c1_, p.ci_ - q.ci_, p.cj_ - q.cj_,
                    p.ck_ - q.ck_);
}

QuatElem operator*(const QuatElem& p, const QuatElem& q) {
    // Hamilton product with central coefficients:
    // i^2 = j^2 = -1, ij = k = -ji, jk = i = -kj, ki = j = -ik.
    const ImagQuad &a1 = p.c1_, &b1 = p.ci_, &c1 = p.cj_, &d1 = p.ck_;
    const ImagQuad &a2 = q.c1_, &b2 = q.ci_, &c2 = q.cj_, &d2 = q.ck_;
    return QuatElem(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                    a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                    a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                    a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2);
}

bool operator==(const QuatElem& p, const QuatElem& q) {
    return p.c1_ == q.c1_ && p.ci_ == q.ci_ && p.cj_ == q.cj_ &&
           p.ck_ == q.ck_;
}

QuatElem quat_conj(const QuatElem& q) {
    return QuatElem(q.c1(), -q.ci(), -q.cj(), -q.ck());
}

ImagQuad quat_norm(const QuatElem& q) {
    return q.c1() * q.c1() + q.ci() * q.ci() + q.cj() * q.cj() +
           q.ck() * q.ck();
}

bool is_unit(const QuatElem& q) {
    ImagQuad n = quat_norm(q);
    return n.is_rational() && (n.r() == 1 || n.r() == -1);
}

QuatElem quat_inverse(const QuatElem& q) {
    ImagQuad n = quat_norm(q);
    if (!n.is_rational() || (n.r() != 1 && n.r() != -1)) {
        throw NonUnit("inverse requires reduced norm +1 or -1, got " +
                      to_string(n));
    }
    QuatElem c = quat_conj(q);
    return (n.r() == 1) ? c : -c;
}

QuatElem quat_pow(const QuatElem& q, long n) {
    QuatElem base = (n < 0) ? quat_inverse(q) : q;
    unsigned long e = (n < 0) ? static_cast<unsigned long>(-(n + 1)) + 1
                              : static_cast<unsigned long>(n);
    QuatElem acc = QuatElem::one(q.d());
    for (unsigned long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

bool is_torsion(const QuatElem& q) {
    if (!is_unit(q)) {
        throw NonUnit("is_torsion requires a unit, got norm " +
                      to_string(quat_norm(q)));
    }
    QuatElem p = q;
    for (int k = 1; k <= 24; ++k) {
        if (p.is_one()) return true;
        p = p * q;
    }
    return false;
}

bool is_integral(const QuatElem& q) {
    return imag_is_integral(q.c1()) && imag_is_integral(q.ci()) &&
           imag_is_integral(q.cj()) && imag_is_integral(q.ck());
}

int quat_lex_cmp(const QuatElem& p, const QuatElem& q) {
    require_same_field(p.d(), q.d(), "quat_lex_cmp");
    const ImagQuad* ps[] = {&p.c1(), &p.ci(), &p.cj(), &p.ck()};
    const ImagQuad* qs[] = {&q.c1(), &q.ci(), &q.cj(), &q.ck()};
    for (int t = 0; t < 4; ++t) {
        int c = cmp(ps[t]->r(), qs[t]->r());
        if (c != 0) return c < 0 ? -1 : 1;
        c = cmp(ps[t]->s(), qs[t]->s());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string to_string(const QuatElem& q) {
    if (q.is_zero()) return "0";
    std::string out;
    const BasisSlot slots[] = {BasisSlot::One, BasisSlot::I, BasisSlot::J,
                               BasisSlot::K};
    for (BasisSlot slot : slots) {
        const ImagQuad& c = q.coeff(slot);
        if (c.is_zero()) continue;
        std::string part = to_string(c);
        // Two-term coefficients need parentheses before a slot suffix.
        bool composite = sgn(c.r()) != 0 && sgn(c.s()) != 0;
        if (composite) part = "(" + part + ")";
        if (slot != BasisSlot::One) {
            if (part == "1") {
                part = slot_name(slot);
            } else if (part == "-1") {
                part = std::string("-") + slot_name(slot);
            } else {
                part += "*";
                part += slot_name(slot);
            }
        }
        if (!out.empty() && part[0] != '-') out += "+";
        out += part;
    }
    return out;
}

Support support(const QuatElem& q) {
    return Support{!q.c1().is_zero(), !q.ci().is_zero(), !q.cj().is_zero(),
                   !q.ck().is_zero()};
}

namespace {

void require_distinct(std::initializer_list<BasisSlot> slots,
                      const char* where) {
    int seen[4] = {0, 0, 0, 0};
    for (BasisSlot s : slots) {
        if (++seen[static_cast<int>(s)] > 1) {
            throw InputError(std::string(where) +
                             " requires pairwise distinct basis slots");
        }
    }
}

QuatElem from_coeffs(SquareFreeD d,
                     const std::array<std::pair<BasisSlot, ImagQuad>, 4>& cs,
                     int used) {
    ImagQuad z = ImagQuad::rational(0, d);
    std::array<ImagQuad, 4> out = {z, z, z, z};
    for (int t = 0; t < used; ++t) {
        out[static_cast<int>(cs[t].first)] = cs[t].second;
    }
    return QuatElem(out[0], out[1], out[2], out[3]);
}

Rational rat_of(const Int& n) { return Rational(n); }

} // namespace

QuatElem pell2_unit(const FundUnit& fund, BasisSlot xi, BasisSlot psi) {
    require_distinct({xi, psi}, "pell2_unit");
    SquareFreeD d = fund.d;
    ImagQuad z = ImagQuad::rational(0, d);
    std::array<std::pair<BasisSlot, ImagQuad>, 4> cs = {
        std::pair{xi, ImagQuad::sqrt_term(rat_of(fund.y), d)},
        std::pair{psi, ImagQuad::rational(rat_of(fund.x), d)},
        std::pair{xi, z},
        std::pair{xi, z}};
    return from_coeffs(d, cs, 2);
}

QuatElem pell4_unit(const FundUnit& fund, BasisSlot zeta, BasisSlot xi,
                    BasisSlot psi, BasisSlot phi, int sign) {
    require_distinct({zeta, xi, psi, phi}, "pell4_unit");
    if (sign != 1 && sign != -1) {
        throw InputError("pell4_unit sign must be +1 or -1");
    }
    if (fund.norm != 1) {
        throw NormMinusOne(
            "pell4_unit needs a norm +1 solution; x^2 - " +
            std::to_string(fund.d.value) + " y^2 = -1 cannot split into "
            "four nonzero squares summing to a unit");
    }
    if (mpz_odd_p(fund.y.get_mpz_t())) {
        // (y/2)sqrt(-d) with y odd is outside the ring of integers for
        // every d mod 4 (the half-integer basis still demands matching
        // parities, and the rational part here is 0).
        throw NonIntegral("pell4_unit coefficients y/2 = " +
                          fund.y.get_str() +
                          "/2 lie outside the order; y must be even");
    }
    SquareFreeD d = fund.d;
    Rational half_y = make_rational(fund.y, 2);
    Rational plus = make_rational((sign == 1 ? fund.x : -fund.x) + 1, 2);
    Rational minus = make_rational(1 - (sign == 1 ? fund.x : -fund.x), 2);
    std::array<std::pair<BasisSlot, ImagQuad>, 4> cs = {
        std::pair{zeta, ImagQuad::sqrt_term(half_y, d)},
        std::pair{xi, ImagQuad::sqrt_term(half_y, d)},
        std::pair{psi, ImagQuad::rational(plus, d)},
        std::pair{phi, ImagQuad::rational(minus, d)}};
    return from_coeffs(d, cs, 4);
}

QuatElem pell4_unit_from_square(const FundUnit& fund) {
    if (mpz_even_p(fund.y.get_mpz_t())) {
        throw InputError("pell4_unit_from_square requires y odd (y = " +
                         fund.y.get_str() + "); use pell4_unit instead");
    }
    SquareFreeD d = fund.d;
    Rational xy = rat_of(fund.x * fund.y);
    return QuatElem(
        ImagQuad::sqrt_term(xy, d), ImagQuad::sqrt_term(xy, d),
        ImagQuad::rational(rat_of(fund.x * fund.x), d),
        ImagQuad::rational(rat_of(fund.y * fund.y * Int(d.value)), d));
}

QuatElem pell3_unit(const PellHalf& half, SquareFreeD d, BasisSlot xi,
                    BasisSlot psi, BasisSlot phi) {
    require_distinct({xi, psi, phi}, "pell3_unit");
    Int lhs =
        (2 * half.x - 1) * (2 * half.x - 1) - 2 * Int(d.value) * half.y * half.y;
    if (lhs != 1) {
        throw InputError("pell3_unit requires (2x-1)^2 - 2d y^2 = 1; got " +
                         lhs.get_str() + " for d = " +
                         std::to_string(d.value));
    }
    std::array<std::pair<BasisSlot, ImagQuad>, 4> cs = {
        std::pair{xi, ImagQuad::sqrt_term(rat_of(half.y), d)},
        std::pair{psi, ImagQuad::rational(rat_of(half.x), d)},
        std::pair{phi, ImagQuad::rational(rat_of(1 - half.x), d)},
        std::pair{xi, ImagQuad::rational(0, d)}};
    return from_coeffs(d, cs, 3);
}

std::optional<std::array<Int, 3>> three_squares(const Int& n) {
    if (n < 0) {
        throw InputError("three_squares requires n >= 0");
    }
    // Exhaustive over p <= q <= r, scanning r ascending (then q ascending):
    // the first hit is the decomposition whose largest part is smallest,
    // with ties broken on the middle part.  This balanced choice is what
    // the unit constructions display (29 -> (2,3,4) rather than (0,2,5)).
    Int r;
    mpz_sqrt(r.get_mpz_t(), Int(n / 3).get_mpz_t());
    while (3 * r * r < n) ++r;
    for (; r * r <= n; ++r) {
        Int rem = n - r * r;
        Int q;
        mpz_sqrt(q.get_mpz_t(), Int(rem / 2).get_mpz_t());
        while (2 * q * q < rem) ++q;
        for (; q <= r && q * q <= rem; ++q) {
            Int p2 = rem - q * q;
            if (mpz_perfect_square_p(p2.get_mpz_t())) {
                Int p;
                mpz_sqrt(p.get_mpz_t(), p2.get_mpz_t());
                // q^2 >= rem/2 guarantees p <= q here.
                return std::array<Int, 3>{p, q, r};
            }
        }
    }
    return std::nullopt;
}

std::optional<QuatElem> gauss_unit(SquareFreeD d, const Int& m, int sign) {
    if (m == 0) {
        throw InputError("gauss_unit requires m != 0");
    }
    if (sign != 1 && sign != -1) {
        throw InputError("gauss_unit sign must be +1 or -1");
    }
    Int n = m * m * Int(d.value) + sign;
    if (n < 0) return std::nullopt; // unreachable for d >= 1, m != 0
    auto dec = three_squares(n);
    if (!dec) return std::nullopt;
    // A decomposition with support {1} alone (p = q = r = 0) only happens
    // for n = 0, which has no other decomposition to fall back to.
    if (n == 0) return std::nullopt;
    auto [p, q, r] = *dec;
    return QuatElem(ImagQuad::sqrt_term(rat_of(m), d),
                    ImagQuad::rational(rat_of(p), d),
                    ImagQuad::rational(rat_of(q), d),
                    ImagQuad::rational(rat_of(r), d));
}

Pp1Units prop_pp1_units(const FundUnit& fund) {
    if (fund.norm != 1) {
        throw NormMinusOne("prop_pp1_units needs a norm +1 solution");
    }
    SquareFreeD d = fund.d;
    const Int& x = fund.x;
    const Int& y = fund.y;
    ImagQuad z = ImagQuad::rational(0, d);

    QuatElem first(ImagQuad::rational(rat_of(x), d),
                   ImagQuad::sqrt_term(rat_of(y), d), z, z);
    QuatElem second(ImagQuad::sqrt_term(rat_of(y), d), z, z,
                    ImagQuad::rational(rat_of(x), d));
    QuatElem third(ImagQuad::rational(make_rational(x + 1, 2), d),
                   ImagQuad::sqrt_term(-make_rational(y, 2), d),
                   ImagQuad::rational(make_rational(x - 1, 2), d),
                   ImagQuad::sqrt_term(make_rational(y, 2), d));
    QuatElem fourth(ImagQuad::rational(rat_of(x * x), d),
                    ImagQuad::sqrt_term(-rat_of(x * y), d),
                    ImagQuad::rational(-rat_of(y * y * Int(d.value)), d),
                    ImagQuad::sqrt_term(rat_of(x * y), d));

    Pp1Units out{{first, second, third, fourth},
                 {is_integral(first), is_integral(second),
                  is_integral(third), is_integral(fourth)}};
    return out;
}

} // namespace freequat
