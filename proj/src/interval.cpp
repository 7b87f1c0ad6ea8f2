#include "dioph/interval.hpp"

#include <algorithm>

namespace dioph {
namespace {

RealPoint negate(const RealPoint& x) {
    if (x.is_rational()) return RealPoint(Rat(-x.rational()));
    const AlgRoot& a = *x.alg();
    std::vector<Int> c = a.defining().coeffs();
    for (size_t i = 0; i < c.size(); i += 2) c[i] = -c[i];  // p(-x), up to sign
    IntPoly q{std::move(c)};
    Enclosure iso = a.isolator();
    Enclosure niso{-iso.hi, -iso.lo};
    return RealPoint(std::make_shared<AlgRoot>(q, niso, q.sign_at(niso.lo)));
}

// Lower-bound ordering of (point, closed) pairs: smaller starts first, and a
// closed start precedes an open start at the same point.
bool lower_le(const RealPoint& xa, bool xc, const RealPoint& ya, bool yc) {
    int c = compare(xa, ya);
    if (c != 0) return c < 0;
    return xc || !yc;
}

}  // namespace

bool Interval::contains(const RealPoint& x) const {
    int ca = compare(x, a);
    if (ca < 0 || (ca == 0 && !closed_a)) return false;
    int cb = compare(x, b);
    if (cb > 0 || (cb == 0 && !closed_b)) return false;
    return true;
}

Enclosure Interval::length(const Rat& tol) const {
    Rat w = tol / 4;
    Enclosure ea = a.enclosure(w), eb = b.enclosure(w);
    Rat lo = eb.lo - ea.hi, hi = eb.hi - ea.lo;
    if (sgn(lo) < 0) lo = 0;
    if (hi < lo) hi = lo;
    return {lo, hi};
}

RealPoint Interval::abs_inf() const {
    RealPoint zero{Rat(0)};
    if (compare(a, zero) <= 0 && compare(zero, b) <= 0) return zero;
    if (compare(a, zero) > 0) return a;
    return negate(b);
}

RealPoint Interval::abs_sup() const {
    RealPoint na = negate(a);
    return compare(na, b) >= 0 ? na : b;
}

IntervalUnion IntervalUnion::from_parts(std::vector<Interval> parts) {
    std::vector<Interval> keep;
    for (auto& p : parts) {
        int c = compare(p.a, p.b);
        if (c > 0) throw std::invalid_argument("Interval with a > b");
        if (c == 0 && !(p.closed_a && p.closed_b)) continue;  // empty
        keep.push_back(std::move(p));
    }
    std::sort(keep.begin(), keep.end(), [](const Interval& x, const Interval& y) {
        return !lower_le(y.a, y.closed_a, x.a, x.closed_a);
    });
    IntervalUnion out;
    for (auto& p : keep) {
        if (out.parts_.empty()) {
            out.parts_.push_back(std::move(p));
            continue;
        }
        Interval& cur = out.parts_.back();
        int c = compare(p.a, cur.b);
        bool touches = c < 0 || (c == 0 && (cur.closed_b || p.closed_a));
        if (!touches) {
            out.parts_.push_back(std::move(p));
            continue;
        }
        int ce = compare(p.b, cur.b);
        if (ce > 0) {
            cur.b = p.b;
            cur.closed_b = p.closed_b;
        } else if (ce == 0) {
            cur.closed_b = cur.closed_b || p.closed_b;
        }
    }
    return out;
}

bool IntervalUnion::contains(const RealPoint& x) const {
    for (const Interval& p : parts_) {
        int ca = compare(x, p.a);
        if (ca < 0) return false;
        if (p.contains(x)) return true;
    }
    return false;
}

Enclosure IntervalUnion::measure(const Rat& tol) const {
    if (parts_.empty()) return Enclosure{Rat(0)};
    bool exact = true;
    for (const Interval& p : parts_)
        if (!p.rational_endpoints()) exact = false;
    if (exact) {
        Rat m(0);
        for (const Interval& p : parts_) m += p.b.rational() - p.a.rational();
        return Enclosure{m};
    }
    Rat per = tol / Rat(static_cast<long>(parts_.size()));
    Enclosure acc{Rat(0)};
    for (const Interval& p : parts_) acc = acc + p.length(per);
    return acc;
}

IntervalUnion iu_union(const IntervalUnion& x, const IntervalUnion& y) {
    std::vector<Interval> parts = x.parts_;
    parts.insert(parts.end(), y.parts_.begin(), y.parts_.end());
    return IntervalUnion::from_parts(std::move(parts));
}

IntervalUnion iu_intersect(const IntervalUnion& x, const IntervalUnion& y) {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < x.parts_.size() && j < y.parts_.size()) {
        const Interval& p = x.parts_[i];
        const Interval& q = y.parts_[j];
        // lower bound = the later start, upper bound = the earlier end
        RealPoint lo;
        bool lo_closed;
        if (lower_le(p.a, p.closed_a, q.a, q.closed_a)) {
            lo = q.a;
            lo_closed = q.closed_a && (compare(p.a, q.a) != 0 || p.closed_a);
        } else {
            lo = p.a;
            lo_closed = p.closed_a && (compare(p.a, q.a) != 0 || q.closed_a);
        }
        int ce = compare(p.b, q.b);
        RealPoint hi = ce <= 0 ? p.b : q.b;
        bool hi_closed = ce < 0   ? p.closed_b
                         : ce > 0 ? q.closed_b
                                  : (p.closed_b && q.closed_b);
        int c = compare(lo, hi);
        if (c < 0 || (c == 0 && lo_closed && hi_closed))
            out.emplace_back(lo, hi, lo_closed, hi_closed);
        if (ce <= 0)
            ++i;
        else
            ++j;
    }
    return IntervalUnion::from_parts(std::move(out));
}

IntervalUnion iu_complement(const IntervalUnion& x, const Interval& clip) {
    std::vector<Interval> out;
    RealPoint cur = clip.a;
    bool cur_closed = clip.closed_a;
    for (const Interval& p : x.parts()) {
        // gap [cur, p.a) (flags adjusted), clipped
        int c = compare(cur, p.a);
        if (c < 0 || (c == 0 && cur_closed && !p.closed_a)) {
            int cb = compare(p.a, clip.b);
            RealPoint hi = cb <= 0 ? p.a : clip.b;
            bool hi_closed = cb <= 0 ? !p.closed_a : clip.closed_b;
            if (compare(cur, hi) < 0 || (compare(cur, hi) == 0 && cur_closed && hi_closed))
                out.emplace_back(cur, hi, cur_closed, hi_closed);
        }
        if (compare(p.b, cur) > 0 || (compare(p.b, cur) == 0 && p.closed_b)) {
            cur = p.b;
            cur_closed = !p.closed_b;
        }
        if (compare(cur, clip.b) > 0) break;
    }
    int c = compare(cur, clip.b);
    if (c < 0 || (c == 0 && cur_closed && clip.closed_b))
        out.emplace_back(cur, clip.b, cur_closed, clip.closed_b);
    return IntervalUnion::from_parts(std::move(out));
}

IntervalUnion iu_dilate(const IntervalUnion& a, const Enclosure& r,
                        const Interval& clip, Direction dir) {
    if (sgn(r.lo) < 0) throw std::invalid_argument("iu_dilate: negative radius");
    std::vector<Interval> out;
    Rat w = sgn(r.lo) > 0 ? r.lo / 16 : (sgn(r.hi) > 0 ? r.hi / 16 : Rat(1, 16));
    for (const Interval& p : a.parts()) {
        Enclosure ea = p.a.enclosure(w), eb = p.b.enclosure(w);
        Rat lo, hi;
        if (dir == Direction::OUTER) {
            lo = ea.lo - r.hi;
            hi = eb.hi + r.hi;
        } else {
            lo = ea.hi - r.lo;
            hi = eb.lo + r.lo;
        }
        if (lo < hi) out.push_back(Interval::open(lo, hi));
    }
    return iu_intersect(IntervalUnion::from_parts(std::move(out)),
                        IntervalUnion(clip));
}

bool iu_subset(const IntervalUnion& x, const IntervalUnion& y) {
    size_t j = 0;
    for (const Interval& p : x.parts()) {
        while (j < y.parts().size()) {
            const Interval& q = y.parts()[j];
            // q must start at or before p and end at or after p
            if (lower_le(q.a, q.closed_a, p.a, p.closed_a)) {
                int ce = compare(p.b, q.b);
                if (ce < 0 || (ce == 0 && (q.closed_b || !p.closed_b))) break;
                // p extends past q: maybe the next q part starts late; for
                // normalized unions p cannot straddle a genuine gap
                ++j;
            } else {
                return false;
            }
        }
        if (j == y.parts().size()) return false;
        const Interval& q = y.parts()[j];
        if (!lower_le(q.a, q.closed_a, p.a, p.closed_a)) return false;
        int ce = compare(p.b, q.b);
        if (!(ce < 0 || (ce == 0 && (q.closed_b || !p.closed_b)))) return false;
    }
    return true;
}

}  // namespace dioph
