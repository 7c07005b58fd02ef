// Free-semigroup certification for pairs of Mobius maps.
//
// Two layers, with different strengths:
//
//   check_semigroup_criterion -- verifies the invariant-set conditions:
//   x0 lies outside a set U, phi1 fixes x0, phi2 moves x0 into U, both
//   maps carry U into itself, and both maps have infinite order.  A
//   passing certificate establishes that NO nonempty positive word in
//   (phi1, phi2) acts as the identity: any word containing phi2 sends
//   x0 into U (trailing phi1's fix x0, the first phi2 moves it into U,
//   and U is invariant from then on), while a pure power of phi1 is
//   ruled out by infinite order.  These conditions alone do NOT force
//   the semigroup to be free: phi1 = 2z and phi2 = z+1 satisfy every
//   one of them on U = ]0,oo[ with x0 = 0, yet phi1 phi2 = phi2^2 phi1.
//
//   check_positive_ping_pong -- verifies the stronger separation
//   conditions: two disjoint nonempty arcs X1, X2 with
//   phi_i(X1 u X2) c= X_i for both i.  A passing certificate proves
//   the semigroup is genuinely free: two positive words with distinct
//   leading letters send X1 u X2 into disjoint sets, so equal maps
//   must share their leading letter, and induction (the maps are
//   injective) reduces any relation to a contradiction.
//
// Builders produce both kinds of data for the unit pairs constructed
// from a fundamental Pell solution, so each instance can carry both an
// invariant-set certificate and a freeness certificate.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freequat/arcs.hpp"
#include "freequat/mobius.hpp"
#include "freequat/pingpong.hpp"

namespace freequat {

// One verified condition: identifier, prose description, verdict, and
// (when the verdict is negative and a point witnesses it) a counterexample.
struct SemigroupCondition {
    std::string id;
    std::string description;
    bool pass = false;
    std::optional<ExtPoint> witness;
};

// Outcome of check_semigroup_criterion: the generator pair, the data the
// conditions were checked against, per-condition verdicts, and their
// conjunction.  A passing certificate means no nonempty positive word in
// the pair acts as the identity map (see the header comment; this is
// weaker than freeness).
struct SemigroupCertificate {
    std::vector<GeneratorDesc> generators;
    Arc invariant_set = Arc::empty();
    ExtPoint base_point = ExtPoint::infinity();
    std::vector<SemigroupCondition> conditions;
    bool overall = false;
};

// Verify the invariant-set conditions for (phi1, phi2) against the set
// `invariant_set` and the point `base_point`:
//
//   base-outside        base_point lies outside the invariant set
//   fixed-point         phi1 fixes base_point
//   base-enters         phi2 maps base_point into the invariant set
//   invariant(1)        phi1 maps the invariant set into itself
//   invariant(2)        phi2 maps the invariant set into itself
//   infinite-order(1)   no power phi1^k, k <= 24, is the identity
//   infinite-order(2)   no power phi2^k, k <= 24, is the identity
//
// The infinite-order checks discharge the hypothesis for Mobius maps:
// a Mobius map of finite projective order over these fields has order
// dividing 24, so a map with no trivial power up to 24 has infinite
// order.  Throws InputError when the invariant set is empty or full
// (the conditions are vacuous or contradictory there).
SemigroupCertificate check_semigroup_criterion(const MobiusMap& phi1,
                                               const MobiusMap& phi2,
                                               const Arc& invariant_set,
                                               const ExtPoint& base_point);

// Input data for the invariant-set criterion: two named generators (with
// the quaternion units they came from, when they came from units), the
// invariant set, and the base point.
struct SemigroupData {
    std::vector<GeneratorDesc> generators;
    Arc invariant_set = Arc::empty();
    ExtPoint base_point = ExtPoint::infinity();
};

// Build the invariant-set data for the unit pair of the given kind over
// Q(sqrt(-d)): phi1 is the homothety induced by the Pell unit (for a
// norm -1 solution the unit is rotated by the first quaternion basis
// vector so that its Mobius action is a positive-ratio homothety), phi2
// is the action of the companion unit (kind 1) or of the inverse of the
// second/third companion (kinds 2/3), the invariant set is ]0, oo[ and
// the base point is 0.  Kinds 2 and 3 require a norm +1 solution
// (InputError otherwise).
SemigroupData standard_semigroup_data(SquareFreeD d,
                                      const FundUnit& fund,
                                      WKind kind);

// Alternative invariant-set data for a norm -1 solution that keeps the
// Pell unit itself as phi1 (a negative-ratio homothety): the invariant
// set is the interval ]-1, b[ with b chosen exactly between
// y*sqrt(d)/x and (y*sqrt(d)+x)/(y*sqrt(d)-x), and the base point is
// infinity, which phi1 fixes and phi2 moves to y*sqrt(d)/x inside the
// interval.  Throws InputError for a norm +1 solution.
SemigroupData norm_minus_one_direct_data(SquareFreeD d,
                                         const FundUnit& fund);

// Run the invariant-set criterion on built data.
SemigroupCertificate certify_semigroup(const SemigroupData& data);

// Outcome of check_positive_ping_pong: the generator pair, the two
// separation arcs, per-condition verdicts, and their conjunction.  A
// passing certificate proves the semigroup generated by the pair is
// free.
struct PositiveCertificate {
    std::vector<GeneratorDesc> generators;
    Arc set1 = Arc::empty();
    Arc set2 = Arc::empty();
    std::vector<SemigroupCondition> conditions;
    bool overall = false;
};

// Verify the positive ping-pong conditions for (phi1, phi2) against the
// arcs (set1, set2):
//
//   nonempty(1)   set1 is nonempty
//   nonempty(2)   set2 is nonempty
//   disjoint      set1 and set2 are disjoint
//   map(1)        phi1 maps set1 u set2 into set1
//   map(2)        phi2 maps set1 u set2 into set2
//
// No infinite-order hypothesis is needed: a trivial power phi_i^k = id
// with k >= 1 would force the other arc inside set_i, contradicting
// disjointness.
PositiveCertificate check_positive_ping_pong(const MobiusMap& phi1,
                                             const MobiusMap& phi2,
                                             const Arc& set1,
                                             const Arc& set2);

// Input data for positive ping-pong: two named generators and the two
// separation arcs.
struct PositiveData {
    std::vector<GeneratorDesc> generators;
    Arc set1 = Arc::empty();
    Arc set2 = Arc::empty();
};

// Build positive ping-pong data for the unit pair of the given kind
// over Q(sqrt(-d)), using the Pell unit itself as phi1 for both norm
// signs (a homothety of ratio rho with |rho| < 1) and the same phi2 as
// standard_semigroup_data.  The arcs are derived exactly from phi2:
// with c = min(phi2(0), phi2(oo), |pole(phi2)|)/2, set1 is the closed
// interval [-c, c] and set2 is the exact image under phi2 of the
// closed arc from -c through the positive reals to infinity.  Kinds 2
// and 3 require a norm +1 solution (InputError otherwise).
PositiveData positive_ping_pong_data(SquareFreeD d,
                                     const FundUnit& fund,
                                     WKind kind);

// Run the positive ping-pong checks on built data.
PositiveCertificate certify_positive(const PositiveData& data);

}  // namespace freequat
