// Exact circular-interval geometry on Omega = R u {inf}.
//
// Arcs are counterclockwise intervals on the circle (increasing through
// the finite reals, wrapping through infinity), with independently open
// or closed endpoints.  The whole circle, the empty set, and single
// points are honest values, so complements and unions are total.
//
// Implementation idea: every endpoint becomes a "cut" (point, tag) with
// tag -1 = just below, 0 = at, +1 = just above the point.  Linearizing
// the circle at infinity --
//
//     inf^0  <  inf^+  <  all finite cuts (by value, then tag)  <  inf^-
//
// -- turns arc membership, subset, complement, and merging into exact
// integer comparisons with no epsilon anywhere.
#ifndef FREEQUAT_ARCS_HPP
#define FREEQUAT_ARCS_HPP

#include <optional>
#include <string>
#include <vector>

#include "freequat/errors.hpp"
#include "freequat/numbers.hpp"

namespace freequat {

// A point of Omega: a finite quadratic real or the point at infinity.
class ExtPoint {
public:
    static ExtPoint infinity() { return ExtPoint(std::nullopt); }
    static ExtPoint finite(QuadElem v) { return ExtPoint(std::move(v)); }

    bool is_infinity() const { return !v_.has_value(); }
    const QuadElem& value() const;

    friend bool operator==(const ExtPoint& p, const ExtPoint& q);
    friend bool operator!=(const ExtPoint& p, const ExtPoint& q) {
        return !(p == q);
    }

private:
    explicit ExtPoint(std::optional<QuadElem> v) : v_(std::move(v)) {}
    std::optional<QuadElem> v_;
};

std::string to_string(const ExtPoint& p);

// A single counterclockwise arc.
class Arc {
public:
    static Arc empty();
    static Arc full();
    // The arc traveled counterclockwise from lo to hi.  lo == hi with both
    // ends closed is the single point {lo}; with both ends open it is the
    // complement Omega \ {lo}; mixed flags on equal endpoints are rejected.
    static Arc span(ExtPoint lo, ExtPoint hi, bool lo_closed, bool hi_closed);

    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_full() const { return kind_ == Kind::Full; }
    bool is_span() const { return kind_ == Kind::Span; }

    // Span accessors; InputError on degenerate arcs.
    const ExtPoint& lo() const;
    const ExtPoint& hi() const;
    bool lo_closed() const;
    bool hi_closed() const;

    friend bool operator==(const Arc& a, const Arc& b);
    friend bool operator!=(const Arc& a, const Arc& b) { return !(a == b); }

private:
    enum class Kind { Empty, Full, Span };
    Arc(Kind k, std::optional<ExtPoint> lo, std::optional<ExtPoint> hi,
        bool lc, bool hc)
        : kind_(k), lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lc),
          hi_closed_(hc) {}
    Kind kind_;
    std::optional<ExtPoint> lo_, hi_;
    bool lo_closed_, hi_closed_;
};

bool arc_contains(const Arc& a, const ExtPoint& p);
bool arc_subset(const Arc& a, const Arc& b);
Arc arc_complement(const Arc& a);
// True iff the arcs share at least one point.
bool arcs_overlap(const Arc& a, const Arc& b);
// The union when it is a single arc (overlapping, adjacent, nested, or
// jointly covering the circle); nullopt when the union is disconnected.
std::optional<Arc> arc_union_pair(const Arc& a, const Arc& b);
std::string to_string(const Arc& a);

// A finite union of arcs, kept in canonical form: pairwise disjoint,
// non-adjacent, sorted by start position.  The constructor normalizes.
class ArcSet {
public:
    ArcSet() : arcs_() {} // empty set
    explicit ArcSet(std::vector<Arc> arcs);
    explicit ArcSet(const Arc& arc) : ArcSet(std::vector<Arc>{arc}) {}
    static ArcSet empty() { return ArcSet(); }
    static ArcSet full() { return ArcSet(Arc::full()); }

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool is_empty() const { return arcs_.empty(); }
    bool is_full() const {
        return arcs_.size() == 1 && arcs_[0].is_full();
    }

    friend bool operator==(const ArcSet& a, const ArcSet& b);
    friend bool operator!=(const ArcSet& a, const ArcSet& b) {
        return !(a == b);
    }

private:
    std::vector<Arc> arcs_;
};

bool arcset_contains(const ArcSet& s, const ExtPoint& p);
bool arcset_subset(const ArcSet& a, const ArcSet& b);
bool arcset_disjoint(const ArcSet& a, const ArcSet& b);
ArcSet arcset_complement(const ArcSet& s);
ArcSet arcset_union(const ArcSet& a, const ArcSet& b);
std::string to_string(const ArcSet& s);

// Some point strictly inside the counterclockwise arc from a to b
// (a == b means the near-full circle).  d supplies the field for
// constructed constants when both endpoints are infinite.
ExtPoint between_point(const ExtPoint& a, const ExtPoint& b, SquareFreeD d);

// A concrete element of x \ y, or nullopt when x is a subset of y.
// Used to attach counterexample witnesses to failed certificates.
std::optional<ExtPoint> witness_in_difference(const ArcSet& x,
                                              const ArcSet& y,
                                              SquareFreeD d);

} // namespace freequat

#endif // FREEQUAT_ARCS_HPP
