#include "freequat/pingpong.hpp"

#include <algorithm>
#include <limits>

namespace freequat {

namespace {

ExtPoint fin(const QuadElem& q) { return ExtPoint::finite(q); }

QuadElem rat(long num, long den, SquareFreeD d) {
    return QuadElem::rational(make_rational(Int(num), Int(den)), d);
}

// q * (num/den), exact.
QuadElem scale(const QuadElem& q, long num, long den) {
    return q * rat(num, den, q.d());
}

QuadElem finite_value(const ExtPoint& p, const char* what) {
    if (p.is_infinity()) throw InputError(std::string(what) + " is infinite");
    return p.value();
}

std::string eps_str(int eps) { return eps > 0 ? "+1" : "-1"; }

std::string set_label(std::size_t slot, int eps) {
    return "A[" + std::to_string(slot + 1) + "," + eps_str(eps) + "]";
}

// Interior of an arc: drop the endpoints.  A single closed point becomes
// empty; empty and full arcs are their own interiors.
Arc arc_interior(const Arc& a) {
    if (a.is_empty() || a.is_full()) return a;
    if (a.lo() == a.hi() && a.lo_closed() && a.hi_closed()) return Arc::empty();
    return Arc::span(a.lo(), a.hi(), false, false);
}

// Closure of an arc: add the endpoints.  A circle punctured at one point
// closes to the full circle.
Arc arc_closure(const Arc& a) {
    if (a.is_empty() || a.is_full()) return a;
    if (a.lo() == a.hi() && !a.lo_closed() && !a.hi_closed()) return Arc::full();
    return Arc::span(a.lo(), a.hi(), true, true);
}

ArcSet arcset_interior(const ArcSet& s) {
    std::vector<Arc> out;
    for (const Arc& a : s.arcs()) out.push_back(arc_interior(a));
    return ArcSet(out);
}

ArcSet arcset_closure(const ArcSet& s) {
    std::vector<Arc> out;
    for (const Arc& a : s.arcs()) out.push_back(arc_closure(a));
    return ArcSet(out);
}

ConditionResult nonempty_condition(std::size_t slot, int eps, const ArcSet& s) {
    ConditionResult r{
        "nonempty(" + std::to_string(slot + 1) + "," + eps_str(eps) + ")",
        set_label(slot, eps) + " is nonempty",
        s,
        ArcSet::empty(),
        !s.is_empty(),
        false,
        std::nullopt,
    };
    return r;
}

ConditionResult disjoint_condition(std::size_t si, int ei, const ArcSet& x,
                                   std::size_t sj, int ej, const ArcSet& y,
                                   SquareFreeD d) {
    const bool pass = arcset_disjoint(x, y);
    bool boundary_only = false;
    std::optional<ExtPoint> witness;
    if (!pass) {
        boundary_only = arcset_disjoint(arcset_interior(x), arcset_interior(y));
        witness = witness_in_difference(x, arcset_complement(y), d);
    }
    ConditionResult r{
        "disjoint(" + std::to_string(si + 1) + "," + eps_str(ei) + ";" +
            std::to_string(sj + 1) + "," + eps_str(ej) + ")",
        set_label(si, ei) + " and " + set_label(sj, ej) + " are disjoint",
        x,
        y,
        pass,
        boundary_only,
        witness,
    };
    return r;
}

ConditionResult map_condition(std::size_t slot, int eps, const MobiusMap& m,
                              const PingPongTable& table, SquareFreeD d) {
    const ArcSet& source = table.set(slot, eps);
    const ArcSet& target = table.set(slot, -eps);
    const ArcSet image = arcset_image(m, arcset_complement(source));
    const bool pass = arcset_subset(image, target);
    bool boundary_only = false;
    std::optional<ExtPoint> witness;
    if (!pass) {
        boundary_only =
            arcset_subset(arcset_interior(image), arcset_closure(target));
        witness = witness_in_difference(image, target, d);
    }
    const std::string hname =
        "h_" + std::to_string(slot + 1) + (eps > 0 ? "" : "^-1");
    ConditionResult r{
        "map(" + std::to_string(slot + 1) + "," + eps_str(eps) + ")",
        hname + "(complement of " + set_label(slot, eps) +
            ") is contained in " + set_label(slot, -eps),
        image,
        target,
        pass,
        boundary_only,
        witness,
    };
    return r;
}

// Shared geometry of all two-generator tables built here: endpoints
// a2 < a1 < 0 < b1 < b2, slot 1 carrying the two closed intervals (order
// per `swapped`), slot 2 the two open arcs between them.
TableData make_table_data(SquareFreeD d, const QuatElem& w, const QuatElem& u,
                          unsigned upower, const MobiusMap& h1,
                          const MobiusMap& h2, const QuadElem& a2,
                          const QuadElem& a1, const QuadElem& b1,
                          const QuadElem& b2, bool swapped) {
    const QuadElem zero = QuadElem::rational(0, d);
    if (!(a2 < a1 && a1 < zero && zero < b1 && b1 < b2))
        throw InputError("table endpoints are out of order");
    const ArcSet neg(Arc::span(fin(a2), fin(a1), true, true));
    const ArcSet pos(Arc::span(fin(b1), fin(b2), true, true));
    const ArcSet outer(Arc::span(fin(b2), fin(a2), false, false));
    const ArcSet inner(Arc::span(fin(a1), fin(b1), false, false));
    TableSlot slot1 = swapped ? TableSlot{pos, neg} : TableSlot{neg, pos};
    TableSlot slot2{outer, inner};
    PingPongTable table({slot1, slot2});
    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"h1", w, 1, h1});
    gens.push_back(GeneratorDesc{"h2", u, upower, h2});
    return TableData{std::move(gens), std::move(table)};
}

// The companion unit of the given kind for a norm +1 fundamental solution.
QuatElem companion_unit(const FundUnit& fund, WKind kind) {
    switch (kind) {
    case WKind::W1:
        return pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    case WKind::W2:
        return prop_pp1_units(fund).units[2];
    case WKind::W3:
        return prop_pp1_units(fund).units[3];
    }
    throw InputError("unknown companion kind");
}

// Everything verify_interval_lemmas and standard_table share.
struct StdGeometry {
    QuatElem u;
    QuatElem w;
    MobiusMap h1;
    MobiusMap h2;
    QuadElem a2, a1, b1, b2;
    bool swapped;
};

StdGeometry build_geometry(SquareFreeD d, const FundUnit& fund, WKind kind) {
    require_same_field(d, fund.d, "standard table");
    if (fund.norm != 1)
        throw NormMinusOne(
            "the standard construction requires a solution of norm +1; for "
            "norm -1 use the x != 1 variant");
    if (kind == WKind::W2 && fund.x <= 2)
        throw InputError(
            "the kind-2 group construction requires x > 2 (x = 2 forces the "
            "homothety bound to fail)");
    QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    QuatElem w = companion_unit(fund, kind);
    MobiusMap h1 = to_real_mobius(psi(w));
    MobiusMap h2 = to_real_mobius(psi(u));
    const QuadElem zp = finite_value(mobius_pole(h1), "pole of h1");
    const QuadElem z0 = finite_value(mobius_zero(h1), "zero of h1");
    QuadElem a2 = zp, a1 = zp, b1 = zp, b2 = zp;
    bool swapped = false;
    if (kind == WKind::W1) {
        // Pole and zero are both negative, z0 < zp < 0.
        a2 = scale(z0, 3, 2);
        a1 = scale(zp, 1, 2);
        b1 = -a1;
        b2 = -a2;
    } else {
        // Pole and zero of h1 are positive; those of h1^-1 are negative.
        const MobiusMap h1inv = mobius_inverse(h1);
        const QuadElem zpp = finite_value(mobius_pole(h1inv), "pole of h1^-1");
        const QuadElem z0p = finite_value(mobius_zero(h1inv), "zero of h1^-1");
        b1 = scale(z0, 1, 2);
        b2 = scale(zp, 3, 1);
        a1 = scale(z0p, 1, 2);
        a2 = scale(zpp, 3, 1);
        swapped = true;
    }
    return StdGeometry{u, w, h1, h2, a2, a1, b1, b2, swapped};
}

// The d = 2 generators u = 1 + sqrt(-2) i, w = sqrt(-2) + k with the
// symmetric table from the pole/zero of h1; `upower` selects u^2 or u.
TableData d2_table(unsigned upower) {
    const SquareFreeD d(2);
    const FundUnit fund = pell_fundamental(d);
    const QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    const QuatElem w = pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    const MobiusMap h1 = to_real_mobius(psi(w));
    const MobiusMap h2 =
        to_real_mobius(psi(quat_pow(u, static_cast<long>(upower))));
    const QuadElem zp = finite_value(mobius_pole(h1), "pole of h1");
    const QuadElem z0 = finite_value(mobius_zero(h1), "zero of h1");
    const QuadElem a2 = scale(zp, 2, 1);
    const QuadElem a1 = scale(z0, 1, 2);
    return make_table_data(d, w, u, upower, h1, h2, a2, a1, -a1, -a2, false);
}

void add_check(std::vector<IntervalCheck>& out, const std::string& desc,
               const QuadElem& lhs, const QuadElem& rhs, bool pass) {
    out.push_back(IntervalCheck{desc, to_string(lhs), to_string(rhs), pass});
}

void check_eq(std::vector<IntervalCheck>& out, const std::string& desc,
              const QuadElem& lhs, const QuadElem& rhs) {
    add_check(out, desc, lhs, rhs, lhs == rhs);
}

void check_lt(std::vector<IntervalCheck>& out, const std::string& desc,
              const QuadElem& lhs, const QuadElem& rhs) {
    add_check(out, desc, lhs, rhs, lhs < rhs);
}

QuadElem apply_finite(const MobiusMap& m, const QuadElem& z) {
    return finite_value(mobius_apply(m, fin(z)), "image point");
}

} // namespace

std::string to_string(WKind kind) {
    switch (kind) {
    case WKind::W1: return "w1";
    case WKind::W2: return "w2";
    case WKind::W3: return "w3";
    }
    return "unknown";
}

PingPongTable::PingPongTable(std::vector<TableSlot> slots)
    : slots_(std::move(slots)) {
    if (slots_.empty())
        throw InputError("a ping-pong table needs at least one generator slot");
}

const ArcSet& PingPongTable::set(std::size_t slot, int eps) const {
    if (slot >= slots_.size())
        throw InputError("table slot index out of range");
    if (eps != 1 && eps != -1)
        throw InputError("table sign must be +1 or -1");
    return eps == 1 ? slots_[slot].plus : slots_[slot].minus;
}

Certificate check_ping_pong(const std::vector<MobiusMap>& maps,
                            const PingPongTable& table) {
    if (maps.size() != table.arity())
        throw ArityMismatch("number of maps (" + std::to_string(maps.size()) +
                            ") does not match table arity (" +
                            std::to_string(table.arity()) + ")");
    const SquareFreeD d = maps.front().d();
    const std::size_t r = table.arity();
    std::vector<ConditionResult> conditions;

    for (std::size_t i = 0; i < r; ++i)
        for (int eps : {+1, -1})
            conditions.push_back(nonempty_condition(i, eps, table.set(i, eps)));

    // Pairwise disjointness over the flat list (1,+1),(1,-1),(2,+1),...
    std::vector<std::pair<std::size_t, int>> flat;
    for (std::size_t i = 0; i < r; ++i) {
        flat.emplace_back(i, +1);
        flat.emplace_back(i, -1);
    }
    for (std::size_t p = 0; p < flat.size(); ++p)
        for (std::size_t q = p + 1; q < flat.size(); ++q)
            conditions.push_back(disjoint_condition(
                flat[p].first, flat[p].second,
                table.set(flat[p].first, flat[p].second), flat[q].first,
                flat[q].second, table.set(flat[q].first, flat[q].second), d));

    for (std::size_t i = 0; i < r; ++i) {
        conditions.push_back(map_condition(i, +1, maps[i], table, d));
        conditions.push_back(
            map_condition(i, -1, mobius_inverse(maps[i]), table, d));
    }

    bool overall = true;
    for (const ConditionResult& c : conditions) overall = overall && c.pass;

    std::vector<GeneratorDesc> gens;
    for (std::size_t i = 0; i < r; ++i)
        gens.push_back(GeneratorDesc{"h" + std::to_string(i + 1), std::nullopt,
                                     1, maps[i]});
    return Certificate{std::move(gens), table, std::move(conditions), overall};
}

TableData standard_table(SquareFreeD d, const FundUnit& fund, WKind kind) {
    StdGeometry g = build_geometry(d, fund, kind);
    return make_table_data(d, g.w, g.u, 1, g.h1, g.h2, g.a2, g.a1, g.b1, g.b2,
                           g.swapped);
}

TableData corollary_table(SquareFreeD d, const FundUnit& fund) {
    require_same_field(d, fund.d, "norm -1 table");
    if (fund.norm != -1)
        throw InputError(
            "the norm -1 construction requires a fundamental solution of "
            "norm -1; for norm +1 use the standard table");
    if (fund.x == 1)
        throw InputError(
            "the norm -1 construction requires x != 1 (x = 1 is the d = 2 "
            "case, handled by its own squared pair)");
    const QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    const QuatElem w = pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    const MobiusMap h1 = to_real_mobius(psi(w));
    const MobiusMap h2 = to_real_mobius(psi(u));
    const QuadElem zp = finite_value(mobius_pole(h1), "pole of h1");
    const QuadElem z0 = finite_value(mobius_zero(h1), "zero of h1");
    // For norm -1, y sqrt(d) > x, so the pole -y sqrt(d)/x is the farther
    // endpoint and the zero -x/(y sqrt(d)) the nearer one.
    const QuadElem a2 = scale(zp, 3, 2);
    const QuadElem a1 = scale(z0, 1, 2);
    return make_table_data(d, w, u, 1, h1, h2, a2, a1, -a1, -a2, false);
}

TableData d2_special_table() { return d2_table(2); }

TableData d2_unsquared_table() { return d2_table(1); }

TableData sanov_table() {
    const SquareFreeD d(1);
    auto r = [&](long v) { return rat(v, 1, d); };
    // h1: z -> z/(2z + 1), h2: z -> z + 2.
    const MobiusMap h1(r(1), r(0), r(2), r(1));
    const MobiusMap h2(r(1), r(2), r(0), r(1));
    const ArcSet a1p(Arc::span(fin(r(-1)), fin(r(0)), false, false));
    const ArcSet a1m(Arc::span(fin(r(0)), fin(r(1)), true, true));
    const ArcSet a2p(Arc::span(ExtPoint::infinity(), fin(r(-1)), true, true));
    const ArcSet a2m(Arc::span(fin(r(1)), ExtPoint::infinity(), false, false));
    PingPongTable table({TableSlot{a1p, a1m}, TableSlot{a2p, a2m}});
    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"h1", std::nullopt, 1, h1});
    gens.push_back(GeneratorDesc{"h2", std::nullopt, 1, h2});
    return TableData{std::move(gens), std::move(table)};
}

Certificate certify(const TableData& data) {
    std::vector<MobiusMap> maps;
    maps.reserve(data.generators.size());
    for (const GeneratorDesc& g : data.generators) maps.push_back(g.map);
    Certificate cert = check_ping_pong(maps, data.table);
    cert.generators = data.generators;
    return cert;
}

IntervalReport verify_interval_lemmas(SquareFreeD d, const FundUnit& fund,
                                      WKind kind) {
    StdGeometry g = build_geometry(d, fund, kind);
    const MobiusMap h1inv = mobius_inverse(g.h1);
    const QuadElem X = QuadElem::rational(Rational(fund.x), d);
    const QuadElem ysd = QuadElem::sqrt_term(Rational(fund.y), d);
    const QuadElem xysd = X * ysd;
    const QuadElem one = rat(1, 1, d);
    const QuadElem two = rat(2, 1, d);
    const QuadElem three = rat(3, 1, d);
    const QuadElem five = rat(5, 1, d);
    const QuadElem seven = rat(7, 1, d);
    const QuadElem rho = g.h2.m11() / g.h2.m22();

    std::vector<IntervalCheck> checks;

    if (kind == WKind::W1) {
        // Image of [a2, a1]: closed forms of both endpoints, then the
        // containment chain inside ]b1, b2[.
        const QuadElem i_lo = xysd / (X * X + two);
        const QuadElem i_hi = (X * X + one) / xysd;
        check_eq(checks, "h1(a2) = x y sqrt(d) / (x^2 + 2)",
                 apply_finite(g.h1, g.a2), i_lo);
        check_eq(checks, "h1(a1) = (x^2 + 1) / (x y sqrt(d))",
                 apply_finite(g.h1, g.a1), i_hi);
        check_lt(checks, "b1 < h1(a2)", g.b1, i_lo);
        check_lt(checks, "h1(a2) < h1(a1)", i_lo, i_hi);
        check_lt(checks, "h1(a1) < b2", i_hi, g.b2);
        // Image of [b1, b2] under h1^-1: mirror closed forms, chain in
        // ]a2, a1[.
        check_eq(checks, "h1^-1(b2) = -h1(a2)", apply_finite(h1inv, g.b2),
                 -i_lo);
        check_eq(checks, "h1^-1(b1) = -h1(a1)", apply_finite(h1inv, g.b1),
                 -i_hi);
        check_lt(checks, "a2 < h1^-1(b1)", g.a2, -i_hi);
        check_lt(checks, "h1^-1(b2) < a1", -i_lo, g.a1);
        // Homothety conditions with their sufficient sub-bounds.
        check_lt(checks, "3 x^2 / (y^2 d) < 5",
                 (three * X * X) / (ysd * ysd), five);
        check_lt(checks, "5 < 1/rho", five, quad_invert(rho));
        check_lt(checks, "rho b2 < b1", rho * g.b2, g.b1);
        check_lt(checks, "a1 < rho a2", g.a1, rho * g.a2);
    } else if (kind == WKind::W2) {
        const QuadElem i_lo = -(X + two) / ysd;
        const QuadElem i_hi = -ysd / (X + three);
        const QuadElem j_lo = (-(X * X) + xysd + one) / (X + three);
        const QuadElem j_hi = (X + two) / (X * X + xysd - one);
        check_eq(checks, "h1(b2) = -(x + 2) / (y sqrt(d))",
                 apply_finite(g.h1, g.b2), i_lo);
        check_eq(checks, "h1(b1) = -y sqrt(d) / (x + 3)",
                 apply_finite(g.h1, g.b1), i_hi);
        check_lt(checks, "a2 < h1(b2)", g.a2, i_lo);
        check_lt(checks, "h1(b2) < h1(b1)", i_lo, i_hi);
        check_lt(checks, "h1(b1) < a1", i_hi, g.a1);
        check_eq(checks, "h1^-1(a1) = (-x^2 + x y sqrt(d) + 1) / (x + 3)",
                 apply_finite(h1inv, g.a1), j_lo);
        check_eq(checks, "h1^-1(a2) = (x + 2) / (x^2 + x y sqrt(d) - 1)",
                 apply_finite(h1inv, g.a2), j_hi);
        check_lt(checks, "b1 < h1^-1(a1)", g.b1, j_lo);
        check_lt(checks, "h1^-1(a1) < h1^-1(a2)", j_lo, j_hi);
        check_lt(checks, "h1^-1(a2) < b2", j_hi, g.b2);
        check_lt(checks, "(5x + 7) / (7x + 5) < y sqrt(d) / x",
                 (five * X + seven) / (seven * X + five), ysd / X);
        check_lt(checks, "a1 < rho a2", g.a1, rho * g.a2);
        check_lt(checks, "rho b2 < b1", rho * g.b2, g.b1);
    } else {
        // Kind 3: the proof-level memberships, plus the exact endpoint
        // closed forms (i.e. the derived values the memberships rest on).
        const QuadElem inv_rho = quad_invert(rho);
        const QuadElem phi_b1 = apply_finite(g.h1, g.b1);
        const QuadElem phi_b2 = apply_finite(g.h1, g.b2);
        const QuadElem psi_a1 = apply_finite(h1inv, g.a1);
        const QuadElem psi_a2 = apply_finite(h1inv, g.a2);
        const QuadElem f1 = xysd / (X * X + one);
        const QuadElem f2 = (two * X * X + one) / (two * xysd);
        check_eq(checks,
                 "h1^-1(a1) = x y sqrt(d) / (x^2 + 1)", psi_a1, f1);
        check_eq(checks,
                 "h1^-1(a2) = (2 x^2 + 1) / (2 x y sqrt(d))", psi_a2, f2);
        check_eq(checks, "h1(b1) = -(1/rho) x y sqrt(d) / (x^2 + 1)", phi_b1,
                 -inv_rho * f1);
        check_eq(checks, "h1(b2) = -(1/rho) (2 x^2 + 1) / (2 x y sqrt(d))",
                 phi_b2, -inv_rho * f2);
        check_lt(checks, "a2 < h1(b2)", g.a2, phi_b2);
        check_lt(checks, "h1(b2) < h1(b1)", phi_b2, phi_b1);
        check_lt(checks, "h1(b1) < a1", phi_b1, g.a1);
        check_lt(checks, "b1 < h1^-1(a1)", g.b1, psi_a1);
        check_lt(checks, "h1^-1(a1) < h1^-1(a2)", psi_a1, psi_a2);
        check_lt(checks, "h1^-1(a2) < b2", psi_a2, g.b2);
        check_lt(checks, "a1 < rho a2", g.a1, rho * g.a2);
        check_lt(checks, "rho b2 < b1", rho * g.b2, g.b1);
    }

    bool all_pass = true;
    for (const IntervalCheck& c : checks) all_pass = all_pass && c.pass;
    return IntervalReport{kind, std::move(checks), all_pass};
}

std::pair<bool, bool> d2_reduced_system(const QuadElem& a2,
                                        const QuadElem& a1) {
    if (a2.d().value != 2 || a1.d().value != 2)
        throw InputError("the reduced system is specific to d = 2");
    const SquareFreeD d = a2.d();
    const QuadElem one = rat(1, 1, d);
    const QuadElem rt2 = QuadElem::sqrt_term(1, d);
    const QuadElem rho = (one - rt2) / (one + rt2);
    const bool first = rho * a2 < (rt2 * a1 + one) / (a1 + rt2);
    const bool second = (rt2 * a2 + one) / (a2 + rt2) < a1 / rho;
    return {first, second};
}

InfeasibilityReport infeasibility_sweep(unsigned resolution) {
    if (resolution == 0) throw InputError("resolution must be at least 1");
    const TableData base = d2_unsquared_table();
    const MobiusMap& h1 = base.generators[0].map;
    const MobiusMap& h2 = base.generators[1].map;
    const SquareFreeD d = h1.d();
    const unsigned long denom_k = std::max(resolution - 1, 1u);

    InfeasibilityReport report{};
    report.resolution = resolution;
    report.method =
        "exact rational grid over a2 in [-4, -3/2], a1 in [-7/10, 0[: part "
        "(a) evaluates the reduced two-inequality system at every sample; "
        "part (b) runs the full ping-pong check on every symmetric table";

    for (unsigned k = 0; k < resolution; ++k) {
        // a2(k) = -3/2 - (5/2) k / (resolution - 1), spanning [-4, -3/2].
        const Rational a2r = make_rational(Int(-3), Int(2)) +
                             make_rational(Int(-5) * k, Int(2) * denom_k);
        const QuadElem a2 = QuadElem::rational(a2r, d);
        for (unsigned l = 0; l < resolution; ++l) {
            // a1(l) = -7/10 + (7/10) l / resolution, in [-7/10, 0[.
            const Rational a1r = make_rational(
                Int(7) * (static_cast<long>(l) - static_cast<long>(resolution)),
                Int(10) * resolution);
            const QuadElem a1 = QuadElem::rational(a1r, d);
            ++report.samples;

            const auto [first, second] = d2_reduced_system(a2, a1);
            if (first && second) ++report.reduced_satisfying;
            if (!first) ++report.first_inequality_failures;
            if (!second) ++report.second_inequality_failures;

            TableData data =
                make_table_data(d, *base.generators[0].unit,
                                *base.generators[1].unit, 1, h1, h2, a2, a1,
                                -a1, -a2, false);
            if (certify(data).overall) ++report.table_passes;
        }
    }
    return report;
}

std::string to_string(PowerMethod method) {
    switch (method) {
    case PowerMethod::SubgroupOfFree: return "subgroup-of-free";
    case PowerMethod::WordMap: return "word-map";
    case PowerMethod::StabilityExtension: return "stability-extension";
    case PowerMethod::NotDeducible: return "not-deducible";
    }
    return "unknown";
}

PowerVerdict power_certificate(const Certificate& base, unsigned long n) {
    if (!base.overall)
        throw InputError("power deduction requires a passing base certificate");
    if (n == 0) throw InputError("the power must be at least 1");

    bool all_power_one = true;
    for (const GeneratorDesc& g : base.generators)
        all_power_one = all_power_one && g.power == 1;
    if (all_power_one)
        return PowerVerdict{
            n, true, PowerMethod::SubgroupOfFree,
            "the base pair generates a free group of rank 2, and any pair of "
            "nonzero powers of two free generators freely generates a rank-2 "
            "subgroup"};

    // Powered base: expect the d = 2 shape, a squared homothety in slot 2.
    if (base.generators.size() != 2 || base.generators[0].power != 1 ||
        base.generators[1].power != 2 ||
        !base.generators[1].unit.has_value())
        return PowerVerdict{n, false, PowerMethod::NotDeducible,
                            "no deduction rule applies to this generator "
                            "shape"};

    if (n == 1)
        return PowerVerdict{
            n, false, PowerMethod::NotDeducible,
            "the base certificate covers the squared pair only, and no table "
            "in the constrained family works for the unsquared pair"};
    if (n % 2 == 0)
        return PowerVerdict{
            n, true, PowerMethod::WordMap,
            "even powers are words in the certified pair: u^n = (u^2)^(n/2), "
            "and the pair (u^n, w) lies inside the free group on (u^2, w) "
            "with no relation"};

    // Odd n >= 3: check that h1 stabilizes its own sets and that the n-th
    // power homothety satisfies the slot-2 map conditions with the base
    // table; together these give the full set of conditions for (w, u^n).
    if (n > static_cast<unsigned long>(std::numeric_limits<long>::max()))
        throw InputError("power too large");
    const MobiusMap& h1 = base.generators[0].map;
    const PingPongTable& t = base.table;
    const ArcSet& a1p = t.set(0, +1);
    const ArcSet& a1m = t.set(0, -1);
    const ArcSet& a2p = t.set(1, +1);
    const ArcSet& a2m = t.set(1, -1);

    const bool s1 = arcset_subset(arcset_image(h1, a1m), a1m);
    const bool s2 = arcset_subset(arcset_image(mobius_inverse(h1), a1p), a1p);
    const QuatElem un =
        quat_pow(*base.generators[1].unit, static_cast<long>(n));
    const MobiusMap hn = to_real_mobius(psi(un));
    const bool s3 = arcset_subset(arcset_image(hn, arcset_complement(a2p)),
                                  a2m);
    const bool s4 = arcset_subset(
        arcset_image(mobius_inverse(hn), arcset_complement(a2m)), a2p);
    const bool ok = s1 && s2 && s3 && s4;
    if (ok)
        return PowerVerdict{
            n, true, PowerMethod::StabilityExtension,
            "h1 maps each of its table sets into itself, and the n-th power "
            "homothety satisfies both of its map conditions with the base "
            "table, so the pair (u^n, w) satisfies all ping-pong conditions"};
    return PowerVerdict{n, false, PowerMethod::NotDeducible,
                        "a stability check failed for this power"};
}

} // namespace freequat
