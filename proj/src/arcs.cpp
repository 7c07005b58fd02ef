#include "freequat/arcs.hpp"

#include <algorithm>

namespace freequat {

const QuadElem& ExtPoint::value() const {
    if (!v_) {
        throw InputError("the point at infinity has no finite value");
    }
    return *v_;
}

bool operator==(const ExtPoint& p, const ExtPoint& q) {
    if (p.is_infinity() || q.is_infinity()) {
        return p.is_infinity() && q.is_infinity();
    }
    return p.value() == q.value();
}

std::string to_string(const ExtPoint& p) {
    return p.is_infinity() ? "inf" : to_string(p.value());
}

namespace {

// A cut is an infinitesimal position relative to a point: tag -1 just
// below, 0 at, +1 just above.  See the header for the linearization.
struct Cut {
    ExtPoint p;
    int tag;
};

int cut_rank(const Cut& c) {
    if (!c.p.is_infinity()) return 2;
    switch (c.tag) {
    case 0: return 0;
    case 1: return 1;
    default: return 3; // -1
    }
}

int cut_cmp(const Cut& a, const Cut& b) {
    int ra = cut_rank(a), rb = cut_rank(b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra != 2) return 0; // same infinite cut
    int c = quad_cmp(a.p.value(), b.p.value());
    if (c != 0) return c;
    return (a.tag < b.tag) ? -1 : (a.tag > b.tag ? 1 : 0);
}

Cut start_cut(const Arc& a) {
    return Cut{a.lo(), a.lo_closed() ? 0 : 1};
}

Cut end_cut(const Arc& a) {
    return Cut{a.hi(), a.hi_closed() ? 0 : -1};
}

bool arc_wraps(const Arc& a) {
    return cut_cmp(start_cut(a), end_cut(a)) > 0;
}

// Membership of a cut in the cut interval [s, e] on the circle.
bool in_cut_interval(const Cut& x, const Cut& s, const Cut& e) {
    if (cut_cmp(s, e) <= 0) {
        return cut_cmp(s, x) <= 0 && cut_cmp(x, e) <= 0;
    }
    return cut_cmp(x, s) >= 0 || cut_cmp(x, e) <= 0;
}

// True iff cut s starts exactly where cut e leaves off (seamless join).
bool is_succ(const Cut& e, const Cut& s) {
    if (e.p.is_infinity() != s.p.is_infinity()) return false;
    if (!e.p.is_infinity() && e.p.value() != s.p.value()) return false;
    return s.tag == e.tag + 1;
}

Arc span_from_cuts(const Cut& s, const Cut& e) {
    return Arc::span(s.p, e.p, s.tag == 0, e.tag == 0);
}

} // namespace

Arc Arc::empty() { return Arc(Kind::Empty, {}, {}, false, false); }
Arc Arc::full() { return Arc(Kind::Full, {}, {}, false, false); }

Arc Arc::span(ExtPoint lo, ExtPoint hi, bool lo_closed, bool hi_closed) {
    if (lo == hi && lo_closed != hi_closed) {
        throw InputError("arc with equal endpoints needs both ends closed "
                         "(a point) or both open (a punctured circle)");
    }
    return Arc(Kind::Span, std::move(lo), std::move(hi), lo_closed,
               hi_closed);
}

const ExtPoint& Arc::lo() const {
    if (kind_ != Kind::Span) throw InputError("degenerate arc has no lo");
    return *lo_;
}

const ExtPoint& Arc::hi() const {
    if (kind_ != Kind::Span) throw InputError("degenerate arc has no hi");
    return *hi_;
}

bool Arc::lo_closed() const {
    if (kind_ != Kind::Span) throw InputError("degenerate arc has no flags");
    return lo_closed_;
}

bool Arc::hi_closed() const {
    if (kind_ != Kind::Span) throw InputError("degenerate arc has no flags");
    return hi_closed_;
}

bool operator==(const Arc& a, const Arc& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Arc::Kind::Span) return true;
    return *a.lo_ == *b.lo_ && *a.hi_ == *b.hi_ &&
           a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
}

bool arc_contains(const Arc& a, const ExtPoint& p) {
    if (a.is_empty()) return false;
    if (a.is_full()) return true;
    return in_cut_interval(Cut{p, 0}, start_cut(a), end_cut(a));
}

bool arc_subset(const Arc& a, const Arc& b) {
    if (a.is_empty() || b.is_full()) return true;
    if (b.is_empty()) return false;      // a nonempty
    if (a.is_full()) return false;       // b is a proper span
    Cut sa = start_cut(a), ea = end_cut(a);
    Cut sb = start_cut(b), eb = end_cut(b);
    bool wa = cut_cmp(sa, ea) > 0, wb = cut_cmp(sb, eb) > 0;
    if (!wa && !wb) return cut_cmp(sb, sa) <= 0 && cut_cmp(ea, eb) <= 0;
    if (wa && !wb) return false;
    if (!wa && wb) return cut_cmp(sa, sb) >= 0 || cut_cmp(ea, eb) <= 0;
    return cut_cmp(sa, sb) >= 0 && cut_cmp(ea, eb) <= 0;
}

Arc arc_complement(const Arc& a) {
    if (a.is_empty()) return Arc::full();
    if (a.is_full()) return Arc::empty();
    Cut e = end_cut(a), s = start_cut(a);
    // The complement runs from just past the end back to just before the
    // start; end tags live in {-1, 0} and start tags in {0, +1}, so the
    // shifted tags stay in range.
    return span_from_cuts(Cut{e.p, e.tag + 1}, Cut{s.p, s.tag - 1});
}

bool arcs_overlap(const Arc& a, const Arc& b) {
    if (a.is_empty() || b.is_empty()) return false;
    if (a.is_full() || b.is_full()) return true;
    return in_cut_interval(start_cut(a), start_cut(b), end_cut(b)) ||
           in_cut_interval(start_cut(b), start_cut(a), end_cut(a));
}

std::optional<Arc> arc_union_pair(const Arc& a, const Arc& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    if (a.is_full() || b.is_full()) return Arc::full();
    if (arc_subset(a, b)) return b;
    if (arc_subset(b, a)) return a;
    if (arc_subset(arc_complement(a), b)) return Arc::full();
    Cut sa = start_cut(a), ea = end_cut(a);
    Cut sb = start_cut(b), eb = end_cut(b);
    bool a_start_covered =
        in_cut_interval(sa, sb, eb) || is_succ(eb, sa);
    bool b_start_covered =
        in_cut_interval(sb, sa, ea) || is_succ(ea, sb);
    if (!a_start_covered && !b_start_covered) return std::nullopt;
    bool a_end_covered = in_cut_interval(ea, sb, eb) || is_succ(ea, sb);
    Cut s = a_start_covered ? sb : sa;
    Cut e = a_end_covered ? eb : ea;
    return span_from_cuts(s, e);
}

std::string to_string(const Arc& a) {
    if (a.is_empty()) return "{}";
    if (a.is_full()) return "Omega";
    std::string out;
    out += a.lo_closed() ? "[" : "]";
    out += to_string(a.lo());
    out += ",";
    out += to_string(a.hi());
    out += a.hi_closed() ? "]" : "[";
    return out;
}

ArcSet::ArcSet(std::vector<Arc> arcs) {
    std::vector<Arc> work;
    for (Arc& a : arcs) {
        if (a.is_full()) {
            arcs_ = {Arc::full()};
            return;
        }
        if (!a.is_empty()) work.push_back(std::move(a));
    }
    // Fixpoint pairwise merging: cheap at the handful of arcs the tables
    // produce, and obviously confluent.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < work.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
                if (auto u = arc_union_pair(work[i], work[j])) {
                    if (u->is_full()) {
                        arcs_ = {Arc::full()};
                        return;
                    }
                    work[i] = *u;
                    work.erase(work.begin() + static_cast<long>(j));
                    merged = true;
                }
            }
        }
    }
    std::sort(work.begin(), work.end(), [](const Arc& x, const Arc& y) {
        return cut_cmp(start_cut(x), start_cut(y)) < 0;
    });
    arcs_ = std::move(work);
}

bool operator==(const ArcSet& a, const ArcSet& b) {
    return a.arcs_ == b.arcs_;
}

bool arcset_contains(const ArcSet& s, const ExtPoint& p) {
    for (const Arc& a : s.arcs()) {
        if (arc_contains(a, p)) return true;
    }
    return false;
}

bool arcset_subset(const ArcSet& a, const ArcSet& b) {
    // Canonical form: each connected piece of a must fit inside a single
    // piece of b.
    for (const Arc& x : a.arcs()) {
        bool inside = false;
        for (const Arc& y : b.arcs()) {
            if (arc_subset(x, y)) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

bool arcset_disjoint(const ArcSet& a, const ArcSet& b) {
    for (const Arc& x : a.arcs()) {
        for (const Arc& y : b.arcs()) {
            if (arcs_overlap(x, y)) return false;
        }
    }
    return true;
}

ArcSet arcset_complement(const ArcSet& s) {
    if (s.is_empty()) return ArcSet::full();
    if (s.is_full()) return ArcSet::empty();
    // Gaps between circularly consecutive arcs; canonical sets are
    // disjoint, non-adjacent, and sorted, so each gap is a proper arc.
    const std::vector<Arc>& arcs = s.arcs();
    std::vector<Arc> gaps;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = arcs[i];
        const Arc& next = arcs[(i + 1) % arcs.size()];
        Cut e = end_cut(cur), ns = start_cut(next);
        gaps.push_back(span_from_cuts(Cut{e.p, e.tag + 1},
                                      Cut{ns.p, ns.tag - 1}));
    }
    return ArcSet(std::move(gaps));
}

ArcSet arcset_union(const ArcSet& a, const ArcSet& b) {
    std::vector<Arc> all = a.arcs();
    all.insert(all.end(), b.arcs().begin(), b.arcs().end());
    return ArcSet(std::move(all));
}

std::string to_string(const ArcSet& s) {
    if (s.is_empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < s.arcs().size(); ++i) {
        if (i) out += " u ";
        out += to_string(s.arcs()[i]);
    }
    return out;
}

ExtPoint between_point(const ExtPoint& a, const ExtPoint& b, SquareFreeD d) {
    const QuadElem one = QuadElem::rational(1, d);
    const QuadElem two = QuadElem::rational(2, d);
    if (a.is_infinity() && b.is_infinity()) {
        return ExtPoint::finite(QuadElem::rational(0, d));
    }
    if (a.is_infinity()) return ExtPoint::finite(b.value() - one);
    if (b.is_infinity()) return ExtPoint::finite(a.value() + one);
    int c = quad_cmp(a.value(), b.value());
    if (c < 0) {
        return ExtPoint::finite((a.value() + b.value()) / two);
    }
    if (c > 0) return ExtPoint::infinity(); // the arc wraps through inf
    return ExtPoint::finite(a.value() + one); // near-full circle
}

std::optional<ExtPoint> witness_in_difference(const ArcSet& x,
                                              const ArcSet& y,
                                              SquareFreeD d) {
    // x \ y = complement(complement(x) u y), then pick a point of the
    // first arc of the difference.
    ArcSet diff =
        arcset_complement(arcset_union(arcset_complement(x), y));
    if (diff.is_empty()) return std::nullopt;
    const Arc& a = diff.arcs().front();
    if (a.is_full()) return ExtPoint::finite(QuadElem::rational(0, d));
    if (a.lo_closed()) return a.lo();
    if (a.hi_closed()) return a.hi();
    return between_point(a.lo(), a.hi(), d);
}

} // namespace freequat
