// Acceptance gate: eleven exact, zero-tolerance criteria, each printed
// as one line with its elapsed time against a pinned budget.  Exit code
// 0 only when every criterion passes inside its budget.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "freequat/arcs.hpp"
#include "freequat/errors.hpp"
#include "freequat/mobius.hpp"
#include "freequat/numbers.hpp"
#include "freequat/oracle.hpp"
#include "freequat/pell.hpp"
#include "freequat/pingpong.hpp"
#include "freequat/quaternion.hpp"
#include "freequat/semigroup.hpp"

namespace {

using namespace freequat;

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::vector<unsigned> square_free_up_to(unsigned max) {
    std::vector<unsigned> ds;
    for (unsigned v = 2; v <= max; ++v)
        if (is_square_free(v)) ds.push_back(v);
    return ds;
}

const std::array<BasisSlot, 4> kSlots{BasisSlot::One, BasisSlot::I,
                                      BasisSlot::J, BasisSlot::K};

// --- 1: Pell solutions against an independent brute-force search ---------

std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct BruteSolution {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    int norm = 0;
};

// Smallest y with d y^2 -+ 1 a perfect square; x grows monotonically
// with y, so the first hit is the fundamental solution.  At most one
// norm can hit a given y (two squares cannot differ by 2).
std::optional<BruteSolution> brute_pell(unsigned dv, std::uint64_t y_cap) {
    for (std::uint64_t y = 1; y <= y_cap; ++y) {
        const std::uint64_t dy2 = std::uint64_t(dv) * y * y;
        for (const int norm : {-1, +1}) {
            const std::uint64_t target = norm < 0 ? dy2 - 1 : dy2 + 1;
            const std::uint64_t r = isqrt64(target);
            if (r >= 1 && r * r == target) return BruteSolution{r, y, norm};
        }
    }
    return std::nullopt;
}

Outcome criterion_pell() {
    // d <= 200 includes solutions far beyond any brute search (d = 199
    // needs y = 1153080099), so the oracle is capped: below the cap the
    // two solvers must agree exactly; above it the brute scan proves
    // minimality up to the cap and the claimed solution is re-verified
    // against the equation directly.
    constexpr std::uint64_t kCap = 300000;
    unsigned checked = 0;
    unsigned beyond_cap = 0;
    for (unsigned dv : square_free_up_to(200)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        const Int lhs = fund.x * fund.x - Int(dv) * fund.y * fund.y;
        if (lhs != fund.norm)
            return {false, "d=" + std::to_string(dv) + ": not a solution"};
        if (const auto brute = brute_pell(dv, kCap)) {
            if (fund.x != brute->x || fund.y != brute->y ||
                fund.norm != brute->norm)
                return {false, "d=" + std::to_string(dv) +
                                   ": disagrees with brute search (brute y=" +
                                   std::to_string(brute->y) + ")"};
        } else {
            if (fund.y <= long(kCap))
                return {false, "d=" + std::to_string(dv) +
                                   ": brute search missed y=" +
                                   fund.y.get_str()};
            ++beyond_cap;
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " d checked, " +
                      std::to_string(beyond_cap) +
                      " with y beyond the brute cap (minimality verified up "
                      "to the cap)"};
}

// --- 2: every constructor output has norm exactly +-1 ---------------------

Outcome criterion_norms() {
    unsigned units = 0;
    std::string failure;
    auto expect = [&](const QuatElem& q, int norm, const std::string& who) {
        ++units;
        if (!is_unit(q) ||
            quat_norm(q) != ImagQuad::rational(make_rational(norm, 1), q.d()))
            failure = who + ": norm " + to_string(quat_norm(q));
    };

    for (unsigned dv : square_free_up_to(100)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        const std::string tag = " (d=" + std::to_string(dv) + ")";

        for (BasisSlot xi : kSlots)
            for (BasisSlot psi : kSlots) {
                if (xi == psi) continue;
                expect(pell2_unit(fund, xi, psi), fund.norm, "pell2" + tag);
            }

        if (dv % 2 == 1) {
            const PellHalf half = pell_fundamental_2d(d);
            for (BasisSlot xi : kSlots)
                for (BasisSlot psi : kSlots)
                    for (BasisSlot phi : kSlots) {
                        if (xi == psi || xi == phi || psi == phi) continue;
                        expect(pell3_unit(half, d, xi, psi, phi), 1,
                               "pell3" + tag);
                    }
        }

        if (fund.norm == 1 && fund.y % 2 == 0) {
            std::array<BasisSlot, 4> perm = kSlots;
            std::sort(perm.begin(), perm.end());
            do {
                for (const int sign : {+1, -1})
                    expect(pell4_unit(fund, perm[0], perm[1], perm[2],
                                      perm[3], sign),
                           1, "pell4" + tag);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (fund.y % 2 == 1)
            expect(pell4_unit_from_square(fund), 1, "pell4sq" + tag);

        for (long m = 1; m <= 3; ++m)
            for (const int sign : {+1, -1})
                if (const auto g = gauss_unit(d, Int(m), sign))
                    expect(*g, sign,
                           "gauss m=" + std::to_string(m) + tag);

        if (fund.norm == 1) {
            const Pp1Units pu = prop_pp1_units(fund);
            for (const QuatElem& q : pu.units) expect(q, 1, "pp1" + tag);
        }
    }
    if (!failure.empty()) return {false, failure};
    return {true, std::to_string(units) + " constructed units, all norms "
                                          "exactly +-1"};
}

// --- 3: powers of 2-units come from powers of the Pell solution -----------

Outcome criterion_powers() {
    unsigned checked = 0;
    for (unsigned dv : square_free_up_to(50)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        for (BasisSlot xi : {BasisSlot::I, BasisSlot::J, BasisSlot::K}) {
            const QuatElem u = pell2_unit(fund, xi, BasisSlot::One);
            for (unsigned n = 1; n <= 10; ++n) {
                const FundUnit fn = pell_power(fund, n);
                if (quat_pow(u, long(n)) !=
                    pell2_unit(fn, xi, BasisSlot::One))
                    return {false, "d=" + std::to_string(dv) +
                                       " n=" + std::to_string(n)};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " power identities"};
}

// --- 4 and 5: group certificates across the full range --------------------

Outcome criterion_main_theorem() {
    unsigned passed = 0;
    for (unsigned dv : square_free_up_to(100)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        if (fund.norm != 1) continue;
        std::vector<WKind> kinds{WKind::W1, WKind::W3};
        if (fund.x > 2) kinds.push_back(WKind::W2);
        for (WKind kind : kinds) {
            if (!certify(standard_table(d, fund, kind)).overall)
                return {false, "d=" + std::to_string(dv) + " kind " +
                                   to_string(kind)};
            ++passed;
        }
    }
    if (passed == 0) return {false, "no norm +1 instances found"};
    return {true, std::to_string(passed) + " certificates pass"};
}

Outcome criterion_corollary() {
    unsigned passed = 0;
    for (unsigned dv : square_free_up_to(100)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        if (fund.norm != -1 || fund.x == 1) continue;
        if (!certify(corollary_table(d, fund)).overall)
            return {false, "d=" + std::to_string(dv)};
        ++passed;
    }
    if (passed == 0) return {false, "no norm -1 instances found"};
    return {true, std::to_string(passed) + " certificates pass"};
}

// --- 6: the classical integer pair ----------------------------------------

Outcome criterion_classical() {
    const Certificate cert = certify(sanov_table());
    if (!cert.overall) return {false, "classical table fails"};
    return {true, std::to_string(cert.conditions.size()) +
                      " conditions pass"};
}

// --- 7: the d = 2 dichotomy ------------------------------------------------

Outcome criterion_d2() {
    if (!certify(d2_special_table()).overall)
        return {false, "(u^2, w) certificate fails"};
    if (certify(d2_unsquared_table()).overall)
        return {false, "(u, w) unexpectedly passes its table"};
    const InfeasibilityReport rep = infeasibility_sweep(100);
    if (rep.samples != 100ull * 100ull)
        return {false, "expected 10^4 samples, got " +
                           std::to_string(rep.samples)};
    if (rep.reduced_satisfying != 0)
        return {false, std::to_string(rep.reduced_satisfying) +
                           " samples satisfy the reduced system"};
    if (rep.table_passes != 0)
        return {false, std::to_string(rep.table_passes) +
                           " sampled tables pass the full check"};
    return {true, "(u^2, w) passes; 10^4 sampled tables for (u, w) all "
                  "fail"};
}

// --- 8: interval lemmas -----------------------------------------------------

Outcome criterion_intervals() {
    unsigned reports = 0;
    for (unsigned dv : square_free_up_to(100)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        if (fund.norm != 1) continue;
        std::vector<WKind> kinds{WKind::W1, WKind::W3};
        if (fund.x > 2) kinds.push_back(WKind::W2);
        for (WKind kind : kinds) {
            const IntervalReport report =
                verify_interval_lemmas(d, fund, kind);
            if (!report.all_pass) {
                for (const IntervalCheck& check : report.checks)
                    if (!check.pass)
                        return {false, "d=" + std::to_string(dv) + " " +
                                           to_string(kind) + ": " +
                                           check.description};
            }
            ++reports;
        }
    }
    if (reports == 0) return {false, "no applicable instances"};
    return {true, std::to_string(reports) + " interval reports, every "
                                            "inclusion exact"};
}

// --- 9: semigroup certificates ---------------------------------------------

Outcome criterion_semigroup() {
    unsigned passed = 0;
    bool saw_d2 = false;
    for (unsigned dv : square_free_up_to(100)) {
        const SquareFreeD d(dv);
        const FundUnit fund = pell_fundamental(d);
        std::vector<WKind> kinds{WKind::W1};
        if (fund.norm == 1) {
            kinds.push_back(WKind::W2);
            kinds.push_back(WKind::W3);
        }
        for (WKind kind : kinds) {
            const SemigroupCertificate sg =
                certify_semigroup(standard_semigroup_data(d, fund, kind));
            const PositiveCertificate pos =
                certify_positive(positive_ping_pong_data(d, fund, kind));
            if (!sg.overall || !pos.overall)
                return {false, "d=" + std::to_string(dv) + " kind " +
                                   to_string(kind) +
                                   (sg.overall ? " (separation)"
                                               : " (criterion)")};
            ++passed;
        }
        if (fund.norm == -1) {
            if (!certify_semigroup(norm_minus_one_direct_data(d, fund))
                     .overall)
                return {false,
                        "d=" + std::to_string(dv) + " direct variant"};
            ++passed;
        }
        if (dv == 2) saw_d2 = true;
    }
    if (!saw_d2) return {false, "d = 2 instance missing"};
    return {true, std::to_string(passed) +
                      " instances pass both the criterion and the "
                      "separation check (d = 2 included)"};
}

// --- 10: the word oracle agrees with every certificate ----------------------

Outcome criterion_oracle() {
    auto pair_of = [](const TableData& td) {
        return std::pair(quat_pow(*td.generators[0].unit,
                                  long(td.generators[0].power)),
                         quat_pow(*td.generators[1].unit,
                                  long(td.generators[1].power)));
    };
    std::vector<std::pair<std::string, TableData>> instances;
    for (unsigned dv : {3u, 7u, 11u}) {
        const SquareFreeD d(dv);
        instances.emplace_back("d=" + std::to_string(dv),
                               standard_table(d, pell_fundamental(d),
                                              WKind::W1));
    }
    {
        const SquareFreeD d(5);
        instances.emplace_back("d=5",
                               corollary_table(d, pell_fundamental(d)));
    }
    instances.emplace_back("d=2 squared", d2_special_table());

    std::uint64_t words = 0;
    for (const auto& [name, td] : instances) {
        const auto [g1, g2] = pair_of(td);
        const GroupWordReport rep = free_group_word_check(g1, g2, 8);
        if (rep.degenerate || rep.trivial_word || !rep.torsion_words.empty())
            return {false, name + ": relation found"};
        words += rep.words_checked;
    }

    const SquareFreeD d2(2);
    const FundUnit fund2 = pell_fundamental(d2);
    const SemigroupWordReport sgrep = free_semigroup_word_check(
        pell2_unit(fund2, BasisSlot::I, BasisSlot::One),
        pell2_unit(fund2, BasisSlot::One, BasisSlot::K), 12);
    if (sgrep.collision)
        return {false, "d=2 semigroup: collision " + sgrep.collision->first +
                           " == " + sgrep.collision->second};
    words += sgrep.words_checked;

    const SquareFreeD d5(5);
    const GroupWordReport torsion = free_group_word_check(
        QuatElem::basis(BasisSlot::I, d5), QuatElem::basis(BasisSlot::J, d5),
        4);
    if (!torsion.trivial_word || torsion.torsion_words.empty())
        return {false, "(i, j) counterexample not found by depth 4"};

    return {true, std::to_string(words) + " words across five certified "
                                          "pairs and the d = 2 semigroup, "
                                          "no relations; (i, j) caught"};
}

// --- 11: homomorphism and geometry invariants -------------------------------

QuatElem random_quat(std::mt19937_64& rng, SquareFreeD d) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    auto part = [&]() {
        return ImagQuad(make_rational(num(rng), den(rng)),
                        make_rational(num(rng), den(rng)), d);
    };
    return QuatElem(part(), part(), part(), part());
}

QuadElem random_quad(std::mt19937_64& rng, SquareFreeD d) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return QuadElem(make_rational(num(rng), den(rng)),
                    make_rational(num(rng), den(rng)), d);
}

ComplexQuad complex_of(const ImagQuad& t) {
    const SquareFreeD d = t.d();
    return ComplexQuad(QuadElem::rational(t.r(), d),
                       QuadElem::sqrt_term(t.s(), d));
}

MobiusMap random_map(std::mt19937_64& rng, SquareFreeD d) {
    while (true) {
        const QuadElem a = random_quad(rng, d);
        const QuadElem b = random_quad(rng, d);
        const QuadElem c = random_quad(rng, d);
        const QuadElem e = random_quad(rng, d);
        if (quad_sign(a * e - b * c) != 0) return MobiusMap(a, b, c, e);
    }
}

ExtPoint random_point(std::mt19937_64& rng, SquareFreeD d) {
    std::uniform_int_distribution<int> inf(0, 7);
    if (inf(rng) == 0) return ExtPoint::infinity();
    return ExtPoint::finite(random_quad(rng, d));
}

Arc random_arc(std::mt19937_64& rng, SquareFreeD d) {
    std::uniform_int_distribution<int> flag(0, 1);
    while (true) {
        const ExtPoint lo = random_point(rng, d);
        const ExtPoint hi = random_point(rng, d);
        if (lo == hi) continue;
        return Arc::span(lo, hi, flag(rng) == 1, flag(rng) == 1);
    }
}

Outcome criterion_invariants() {
    constexpr unsigned kCases = 1000;
    std::mt19937_64 rng(0x11acce97ull);
    const std::array<unsigned, 4> pool{2, 3, 7, 13};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    for (unsigned trial = 0; trial < kCases; ++trial) {
        const SquareFreeD d(pool[pick(rng)]);
        const QuatElem p = random_quat(rng, d);
        const QuatElem q = random_quat(rng, d);
        if (psi(p * q) != psi(p) * psi(q))
            return {false, "psi not multiplicative at trial " +
                               std::to_string(trial)};
    }
    for (unsigned trial = 0; trial < kCases; ++trial) {
        const SquareFreeD d(pool[pick(rng)]);
        const QuatElem q = random_quat(rng, d);
        if (psi(q).det() != complex_of(quat_norm(q)))
            return {false, "det(psi) != norm at trial " +
                               std::to_string(trial)};
    }
    for (unsigned trial = 0; trial < kCases; ++trial) {
        const SquareFreeD d(pool[pick(rng)]);
        const MobiusMap f = random_map(rng, d);
        const MobiusMap g = random_map(rng, d);
        const Arc a = random_arc(rng, d);
        if (arc_image(mobius_compose(f, g), a) != arc_image(f, arc_image(g, a)))
            return {false, "arc images do not compose at trial " +
                               std::to_string(trial)};
    }
    for (unsigned trial = 0; trial < kCases; ++trial) {
        const SquareFreeD d(pool[pick(rng)]);
        const MobiusMap f = random_map(rng, d);
        const Arc a = random_arc(rng, d);
        const ExtPoint x = random_point(rng, d);
        if (arc_contains(a, x) !=
            arc_contains(arc_image(f, a), mobius_apply(f, x)))
            return {false, "membership not preserved at trial " +
                               std::to_string(trial)};
    }
    return {true, "4 x " + std::to_string(kCases) + " randomized cases"};
}

// --- driver -----------------------------------------------------------------

struct Criterion {
    int id;
    const char* slug;
    Outcome (*run)();
    std::int64_t budget_ms;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "pell-vs-brute-oracle", criterion_pell, 5000},
        {2, "constructor-norms", criterion_norms, 10000},
        {3, "power-identity", criterion_powers, 5000},
        {4, "main-theorem-certificates", criterion_main_theorem, 30000},
        {5, "corollary-certificates", criterion_corollary, 10000},
        {6, "classical-pair", criterion_classical, 1000},
        {7, "d2-dichotomy", criterion_d2, 30000},
        {8, "interval-lemmas", criterion_intervals, 10000},
        {9, "semigroup-certificates", criterion_semigroup, 10000},
        {10, "word-oracle-agreement", criterion_oracle, 120000},
        {11, "homomorphism-geometry", criterion_invariants, 30000},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool pass = out.ok && ms < c.budget_ms;
        std::cout << "ACCEPTANCE " << c.id << " [" << c.slug
                  << "]: " << (pass ? "PASS" : "FAIL") << " (" << ms
                  << " ms, budget " << c.budget_ms << " ms)\n";
        if (!out.detail.empty()) std::cout << "  " << out.detail << "\n";
        if (out.ok && !pass) std::cout << "  over budget\n";
        if (!pass) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all 11 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
