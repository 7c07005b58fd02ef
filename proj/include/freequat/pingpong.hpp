// Ping-Pong certification: interval tables for pairs of Mobius maps,
// exact verification of the Ping-Pong conditions
//     h_i^eps(Omega \ A_{i,eps})  is contained in  A_{i,-eps},
// the constructions for the three companion-unit kinds, the norm -1
// variant, the d = 2 special pair, the classical d = 1 (Sanov) pair, the
// interval-inclusion lemmas behind the positive results, the d = 2
// infeasibility sweep, and freeness of power pairs.
//
// Table geometry: all constructed tables use four sets determined by
// endpoints a2 < a1 < 0 < b1 < b2,
//     one slot: [a2, a1] and [b1, b2]   (which is "+" depends on the kind),
//     homothety slot: the arc through infinity ]b2, a2[ and ]a1, b1[.
// For the kind-1 companion (and the norm -1 and d = 2 variants) the pole
// of h_1 lies in [a2, a1], so A_{1,+1} = [a2, a1]; for kinds 2 and 3 the
// pole is positive and the roles of the two intervals swap.
#ifndef FREEQUAT_PINGPONG_HPP
#define FREEQUAT_PINGPONG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freequat/arcs.hpp"
#include "freequat/errors.hpp"
#include "freequat/mobius.hpp"
#include "freequat/pell.hpp"
#include "freequat/quaternion.hpp"

namespace freequat {

/// Selects the companion unit w paired with u = x + y*sqrt(-d) i:
///   W1: y*sqrt(-d) + x k
///   W2: (x+1)/2 - (y*sqrt(-d)/2) i + ((x-1)/2) j + (y*sqrt(-d)/2) k
///   W3: x^2 - (x y sqrt(-d)) i - (y^2 d) j + (x y sqrt(-d)) k
enum class WKind { W1, W2, W3 };

std::string to_string(WKind kind);

struct TableSlot {
    ArcSet plus;  // A_{i,+1}
    ArcSet minus; // A_{i,-1}
};

/// The sets instantiating the Ping-Pong hypothesis: one slot per
/// generator.  Construction validates arity only; nonemptiness and
/// pairwise disjointness are verified (and recorded) by check_ping_pong.
class PingPongTable {
public:
    explicit PingPongTable(std::vector<TableSlot> slots);

    const std::vector<TableSlot>& slots() const { return slots_; }
    std::size_t arity() const { return slots_.size(); }

    /// eps must be +1 or -1.
    const ArcSet& set(std::size_t slot, int eps) const;

private:
    std::vector<TableSlot> slots_;
};

/// One generator of a certified pair: its Mobius action, and, when it
/// comes from a quaternion unit, the unit together with the power applied
/// to it (the map equals the action of unit^power).
struct GeneratorDesc {
    std::string name;
    std::optional<QuatElem> unit;
    unsigned power;
    MobiusMap map;
};

/// One verified comparison.  For containment conditions lhs is the
/// computed image and rhs the required superset; for disjointness both
/// sides are table sets; for nonemptiness rhs is empty.  boundary_only
/// marks failures that vanish when every arc is replaced by its interior
/// (lhs) and closure (rhs) — i.e. the sets touch only at endpoints.
struct ConditionResult {
    std::string id;
    std::string description;
    ArcSet lhs;
    ArcSet rhs;
    bool pass;
    bool boundary_only;
    std::optional<ExtPoint> witness;
};

/// Machine-checked record of one Ping-Pong verification.
struct Certificate {
    std::vector<GeneratorDesc> generators;
    PingPongTable table;
    std::vector<ConditionResult> conditions;
    bool overall;
};

/// Verify every Ping-Pong condition for the given maps and table:
/// nonemptiness of each set, pairwise disjointness, and the 2r image
/// containments h_i^eps(Omega \ A_{i,eps}) in A_{i,-eps}, all decided by
/// exact endpoint comparison.  Throws ArityMismatch when maps and table
/// disagree.  Generator descriptions in the result carry the maps only;
/// callers with richer data may replace them.
Certificate check_ping_pong(const std::vector<MobiusMap>& maps,
                            const PingPongTable& table);

/// A table together with fully described generators, ready to certify.
struct TableData {
    std::vector<GeneratorDesc> generators; // h1 (companion), h2 (homothety)
    PingPongTable table;
};

/// The positive-norm construction for the pair (u, w) of the given kind.
/// Endpoints: W1 uses a2 = (3/2) z0, a1 = (1/2) z_p, b = -a (pole and
/// zero of h1 both negative); W2 and W3 use b1 = z0/2, b2 = 3 z_p,
/// a1 = z0'/2, a2 = 3 z_p' from the pole/zero of h1 and its inverse
/// (all table roles swapped since the pole is positive).
/// Requires fund.norm = +1 (NormMinusOne otherwise) and, for W2, x > 2
/// (InputError otherwise).
TableData standard_table(SquareFreeD d, const FundUnit& fund, WKind kind);

/// The norm -1 variant: same W1-shaped pair, endpoints a2 = (3/2) z_p,
/// a1 = (1/2) z0, b = -a (for norm -1 the pole is the farther of the two
/// from zero).  Requires fund.norm = -1 and x != 1.
TableData corollary_table(SquareFreeD d, const FundUnit& fund);

/// The d = 2 pair (u^2, w) with u = 1 + sqrt(-2) i, w = sqrt(-2) + k and
/// the symmetric table b2 = 2 sqrt(2), b1 = 1/(2 sqrt(2)): certifies
/// freeness of the group the squared pair generates.
TableData d2_special_table();

/// The same table paired with u itself (power 1): fails — no table in
/// the constrained family works for (u, w), see infeasibility_sweep.
TableData d2_unsquared_table();

/// The classical integer pair h1 = z/(2z+1), h2 = z + 2 (the Sanov
/// generators) with its textbook table; certifies as a baseline example.
TableData sanov_table();

/// check_ping_pong over the data's maps, with the full generator
/// descriptions attached to the certificate.
Certificate certify(const TableData& data);

/// One exact inequality or identity from the interval lemmas, with both
/// sides rendered for the report.
struct IntervalCheck {
    std::string description;
    std::string lhs;
    std::string rhs;
    bool pass;
};

struct IntervalReport {
    WKind kind;
    std::vector<IntervalCheck> checks;
    bool all_pass;
};

/// Directly assert the interval inclusions behind the positive results:
/// closed forms of the image endpoints where available (W1, W2), the
/// containment of the image intervals in the table intervals, and the
/// homothety bounds with their sufficient sub-inequalities (for W1:
/// 3x^2/(y^2 d) < 5 < 1/rho).  Preconditions as for standard_table.
IntervalReport verify_interval_lemmas(SquareFreeD d, const FundUnit& fund,
                                      WKind kind);

/// Exact evaluation of the two-inequality system whose emptiness rules
/// out a d = 2 table for (u, w): returns (first holds, second holds) at
/// the sample (a2, a1), with rho = (1 - sqrt(2))/(1 + sqrt(2)):
///   rho a2 < (sqrt(2) a1 + 1)/(a1 + sqrt(2))
///   (sqrt(2) a2 + 1)/(a2 + sqrt(2)) < a1 / rho.
std::pair<bool, bool> d2_reduced_system(const QuadElem& a2,
                                        const QuadElem& a1);

struct InfeasibilityReport {
    unsigned resolution;
    unsigned long long samples;
    /// Samples satisfying both reduced inequalities (the obstruction:
    /// expected 0).
    unsigned long long reduced_satisfying;
    unsigned long long first_inequality_failures;
    unsigned long long second_inequality_failures;
    /// Sampled symmetric tables for which the full check passes
    /// (expected 0).
    unsigned long long table_passes;
    std::string method;
};

/// Sampled falsification for d = 2, pair (u, w): an exact rational grid
/// of (a2, a1) with a2 in [-4, -3/2] (below -sqrt(2)) and a1 in
/// [-7/10, 0[ (above -1/sqrt(2)), resolution points per axis.  Part (a)
/// evaluates the reduced system at every sample; part (b) runs the full
/// check on every symmetric table (b = -a).  Both counts of successes
/// are expected to be zero.
InfeasibilityReport infeasibility_sweep(unsigned resolution);

enum class PowerMethod {
    SubgroupOfFree,      // powers of free generators freely generate
    WordMap,             // even powers rewritten as words in (u^2, w)
    StabilityExtension,  // odd powers via invariance of the table sets
    NotDeducible
};

std::string to_string(PowerMethod method);

struct PowerVerdict {
    unsigned long n;
    bool free;
    PowerMethod method;
    std::string explanation;
};

/// Freeness of the pair of n-th powers of a certified pair.  When every
/// generator of the base certificate has power 1, any n >= 1 follows
/// from the subgroup property of free groups.  When the base pair is
/// (u^2, w) (the d = 2 case), even n reduce to words in the base pair;
/// odd n >= 3 are established by exact checks that h1 stabilizes its two
/// sets and that the n-th power homothety satisfies its two conditions;
/// n = 1 is not deducible.  Requires a passing base certificate and
/// n >= 1 (InputError otherwise).
PowerVerdict power_certificate(const Certificate& base, unsigned long n);

} // namespace freequat

#endif // FREEQUAT_PINGPONG_HPP
