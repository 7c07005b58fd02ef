#include "freequat/semigroup.hpp"

namespace freequat {

namespace {

ExtPoint fin(const QuadElem& q) { return ExtPoint::finite(q); }

QuadElem rat(long num, long den, SquareFreeD d) {
    return QuadElem::rational(make_rational(Int(num), Int(den)), d);
}

// No power up to the unit-group torsion bound is projectively the
// identity.
bool has_infinite_order_up_to_bound(const MobiusMap& m) {
    const MobiusMap id = MobiusMap::identity(m.d());
    MobiusMap power = m;
    for (int k = 1; k <= 24; ++k) {
        if (projectively_equal(power, id)) return false;
        power = mobius_compose(power, m);
    }
    return true;
}

std::optional<ExtPoint> escape_witness(const Arc& image, const Arc& target,
                                       SquareFreeD d) {
    return witness_in_difference(ArcSet(image), ArcSet(target), d);
}

} // namespace

SemigroupCertificate check_semigroup_criterion(const MobiusMap& phi1,
                                               const MobiusMap& phi2,
                                               const Arc& invariant_set,
                                               const ExtPoint& base_point) {
    if (invariant_set.is_empty() || invariant_set.is_full())
        throw InputError(
            "the invariant set must be a proper nonempty arc of the circle");
    const SquareFreeD d = phi1.d();
    const Arc& u = invariant_set;
    std::vector<SemigroupCondition> conditions;

    const bool outside = !arc_contains(u, base_point);
    conditions.push_back(SemigroupCondition{
        "base-outside", "the base point lies outside U", outside,
        outside ? std::nullopt : std::optional<ExtPoint>(base_point)});

    const ExtPoint fixed_image = mobius_apply(phi1, base_point);
    const bool fixed = fixed_image == base_point;
    conditions.push_back(SemigroupCondition{
        "fixed-point", "phi1 fixes the base point", fixed,
        fixed ? std::nullopt : std::optional<ExtPoint>(fixed_image)});

    const ExtPoint enter_image = mobius_apply(phi2, base_point);
    const bool enters = arc_contains(u, enter_image);
    conditions.push_back(SemigroupCondition{
        "base-enters", "phi2 moves the base point into U", enters,
        enters ? std::nullopt : std::optional<ExtPoint>(enter_image)});

    const Arc image1 = arc_image(phi1, u);
    const bool inv1 = arc_subset(image1, u);
    conditions.push_back(SemigroupCondition{
        "invariant(1)", "phi1(U) is contained in U", inv1,
        inv1 ? std::nullopt : escape_witness(image1, u, d)});

    const Arc image2 = arc_image(phi2, u);
    const bool inv2 = arc_subset(image2, u);
    conditions.push_back(SemigroupCondition{
        "invariant(2)", "phi2(U) is contained in U", inv2,
        inv2 ? std::nullopt : escape_witness(image2, u, d)});

    conditions.push_back(SemigroupCondition{
        "infinite-order(1)", "no power of phi1 up to 24 is the identity",
        has_infinite_order_up_to_bound(phi1), std::nullopt});
    conditions.push_back(SemigroupCondition{
        "infinite-order(2)", "no power of phi2 up to 24 is the identity",
        has_infinite_order_up_to_bound(phi2), std::nullopt});

    bool overall = true;
    for (const SemigroupCondition& c : conditions) overall = overall && c.pass;

    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"phi1", std::nullopt, 1, phi1});
    gens.push_back(GeneratorDesc{"phi2", std::nullopt, 1, phi2});
    return SemigroupCertificate{std::move(gens), invariant_set, base_point,
                                std::move(conditions), overall};
}

SemigroupData standard_semigroup_data(SquareFreeD d, const FundUnit& fund,
                                      WKind kind) {
    require_same_field(d, fund.d, "semigroup data");
    if (fund.norm != 1 && kind != WKind::W1)
        throw InputError(
            "the kind-2 and kind-3 companions require a solution of norm +1");

    // phi1: the positive-ratio homothety.  For norm +1 that is the action
    // of u; for norm -1 the action of u has negative ratio, and u*i acts
    // by the positive ratio (y*sqrt(d) - x)/(y*sqrt(d) + x) instead.
    const QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    const QuatElem g1_unit =
        fund.norm == 1 ? u : u * QuatElem::basis(BasisSlot::I, d);
    const MobiusMap phi1 = to_real_mobius(psi(g1_unit));

    QuatElem g2_unit = pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    if (kind == WKind::W2) g2_unit = quat_inverse(prop_pp1_units(fund).units[2]);
    if (kind == WKind::W3) g2_unit = quat_inverse(prop_pp1_units(fund).units[3]);
    const MobiusMap phi2 = to_real_mobius(psi(g2_unit));

    const Arc invariant_set =
        Arc::span(fin(rat(0, 1, d)), ExtPoint::infinity(), false, false);
    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"phi1", g1_unit, 1, phi1});
    gens.push_back(GeneratorDesc{"phi2", g2_unit, 1, phi2});
    return SemigroupData{std::move(gens), invariant_set, fin(rat(0, 1, d))};
}

SemigroupData norm_minus_one_direct_data(SquareFreeD d, const FundUnit& fund) {
    require_same_field(d, fund.d, "semigroup data");
    if (fund.norm != -1)
        throw InputError(
            "the direct instance applies to solutions of norm -1 only; for "
            "norm +1 the standard instance already uses u itself");

    const QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    const QuatElem w = pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    const MobiusMap phi1 = to_real_mobius(psi(u));
    const MobiusMap phi2 = to_real_mobius(psi(w));

    // U = ]-1, b[ with b the midpoint of the admissible window
    // ]y*sqrt(d)/x, (y*sqrt(d) + x)/(y*sqrt(d) - x)[, which is nonempty
    // since its endpoints differ by 2xy*sqrt(d) > 1 in cross-ratio terms.
    const QuadElem x_el = QuadElem::rational(Rational(fund.x), d);
    const QuadElem ysd = QuadElem::sqrt_term(Rational(fund.y), d);
    const QuadElem lo = ysd / x_el;
    const QuadElem hi = (ysd + x_el) / (ysd - x_el);
    const QuadElem b = (lo + hi) * rat(1, 2, d);
    const Arc invariant_set =
        Arc::span(fin(rat(-1, 1, d)), fin(b), false, false);

    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"phi1", u, 1, phi1});
    gens.push_back(GeneratorDesc{"phi2", w, 1, phi2});
    return SemigroupData{std::move(gens), invariant_set,
                         ExtPoint::infinity()};
}

SemigroupCertificate certify_semigroup(const SemigroupData& data) {
    if (data.generators.size() != 2)
        throw ArityMismatch("semigroup data needs exactly two generators");
    SemigroupCertificate cert = check_semigroup_criterion(
        data.generators[0].map, data.generators[1].map, data.invariant_set,
        data.base_point);
    cert.generators = data.generators;
    return cert;
}

PositiveCertificate check_positive_ping_pong(const MobiusMap& phi1,
                                             const MobiusMap& phi2,
                                             const Arc& set1, const Arc& set2) {
    const SquareFreeD d = phi1.d();
    const ArcSet x1(set1);
    const ArcSet x2(set2);
    std::vector<SemigroupCondition> conditions;

    conditions.push_back(SemigroupCondition{
        "nonempty(1)", "the first arc is nonempty", !set1.is_empty(),
        std::nullopt});
    conditions.push_back(SemigroupCondition{
        "nonempty(2)", "the second arc is nonempty", !set2.is_empty(),
        std::nullopt});

    const bool disjoint = arcset_disjoint(x1, x2);
    conditions.push_back(SemigroupCondition{
        "disjoint", "the two arcs are disjoint", disjoint,
        disjoint ? std::nullopt
                 : witness_in_difference(x1, arcset_complement(x2), d)});

    const ArcSet hull = arcset_union(x1, x2);
    const ArcSet image1 = arcset_image(phi1, hull);
    const bool map1 = arcset_subset(image1, x1);
    conditions.push_back(SemigroupCondition{
        "map(1)", "phi1 maps the union of the arcs into the first arc", map1,
        map1 ? std::nullopt : witness_in_difference(image1, x1, d)});

    const ArcSet image2 = arcset_image(phi2, hull);
    const bool map2 = arcset_subset(image2, x2);
    conditions.push_back(SemigroupCondition{
        "map(2)", "phi2 maps the union of the arcs into the second arc", map2,
        map2 ? std::nullopt : witness_in_difference(image2, x2, d)});

    bool overall = true;
    for (const SemigroupCondition& c : conditions) overall = overall && c.pass;

    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"phi1", std::nullopt, 1, phi1});
    gens.push_back(GeneratorDesc{"phi2", std::nullopt, 1, phi2});
    return PositiveCertificate{std::move(gens), set1, set2,
                               std::move(conditions), overall};
}

PositiveData positive_ping_pong_data(SquareFreeD d, const FundUnit& fund,
                                     WKind kind) {
    require_same_field(d, fund.d, "positive ping-pong data");
    if (fund.norm != 1 && kind != WKind::W1)
        throw InputError(
            "the kind-2 and kind-3 companions require a solution of norm +1");

    const QuatElem u = pell2_unit(fund, BasisSlot::I, BasisSlot::One);
    const MobiusMap phi1 = to_real_mobius(psi(u));

    QuatElem g2_unit = pell2_unit(fund, BasisSlot::One, BasisSlot::K);
    if (kind == WKind::W2) g2_unit = quat_inverse(prop_pp1_units(fund).units[2]);
    if (kind == WKind::W3) g2_unit = quat_inverse(prop_pp1_units(fund).units[3]);
    const MobiusMap phi2 = to_real_mobius(psi(g2_unit));

    // phi2 sends everything away from its (negative) pole into a bounded
    // positive interval, and phi1 contracts toward 0, so a symmetric
    // interval [-c, c] with c below phi2's landmarks separates the pair:
    // set2 is the exact phi2-image of the arc from -c through the
    // positive axis to infinity, and lies strictly to the right of c.
    const QuadElem at_zero = mobius_apply(phi2, fin(rat(0, 1, d))).value();
    const QuadElem at_inf = mobius_apply(phi2, ExtPoint::infinity()).value();
    const QuadElem pole_gap = -mobius_pole(phi2).value();
    QuadElem c = at_zero;
    if (at_inf < c) c = at_inf;
    if (pole_gap < c) c = pole_gap;
    c = c * rat(1, 2, d);

    const Arc set1 = Arc::span(fin(-c), fin(c), true, true);
    const Arc reach = Arc::span(fin(-c), ExtPoint::infinity(), true, true);
    const Arc set2 = arc_image(phi2, reach);

    std::vector<GeneratorDesc> gens;
    gens.push_back(GeneratorDesc{"phi1", u, 1, phi1});
    gens.push_back(GeneratorDesc{"phi2", g2_unit, 1, phi2});
    return PositiveData{std::move(gens), set1, set2};
}

PositiveCertificate certify_positive(const PositiveData& data) {
    if (data.generators.size() != 2)
        throw ArityMismatch("positive ping-pong data needs exactly two "
                            "generators");
    PositiveCertificate cert = check_positive_ping_pong(
        data.generators[0].map, data.generators[1].map, data.set1, data.set2);
    cert.generators = data.generators;
    return cert;
}

} // namespace freequat
