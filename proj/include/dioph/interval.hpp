#ifndef DIOPH_INTERVAL_HPP
#define DIOPH_INTERVAL_HPP

#include <vector>

#include "dioph/realpoint.hpp"

namespace dioph {

/// One interval with exact (possibly algebraic) endpoints and closedness
/// flags.  Degenerate closed points [a,a] are allowed; "empty" is expressed
/// only at the IntervalUnion level.
struct Interval {
    RealPoint a;
    RealPoint b;
    bool closed_a = true;
    bool closed_b = true;

    Interval() = default;
    Interval(RealPoint lo, RealPoint hi, bool ca = true, bool cb = true)
        : a(std::move(lo)), b(std::move(hi)), closed_a(ca), closed_b(cb) {}
    static Interval closed(Rat lo, Rat hi) {
        return Interval{RealPoint(std::move(lo)), RealPoint(std::move(hi))};
    }
    static Interval open(Rat lo, Rat hi) {
        return Interval{RealPoint(std::move(lo)), RealPoint(std::move(hi)), false, false};
    }

    bool is_point() const { return compare(a, b) == 0; }
    bool contains(const RealPoint& x) const;
    bool rational_endpoints() const { return a.is_rational() && b.is_rational(); }
    /// Certified enclosure of the length b - a.
    Enclosure length(const Rat& tol) const;
    /// inf / sup of |x| over the interval (c0 and c1 of the interval).
    RealPoint abs_inf() const;
    RealPoint abs_sup() const;
};

enum class Direction { OUTER, INNER };

/// Finite union of pairwise disjoint intervals, kept sorted and normalized
/// (overlapping or touching-with-a-shared-point parts are merged).
class IntervalUnion {
  public:
    IntervalUnion() = default;
    explicit IntervalUnion(Interval iv) { parts_.push_back(std::move(iv)); }
    static IntervalUnion from_parts(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    size_t size() const { return parts_.size(); }

    bool contains(const RealPoint& x) const;

    /// Measure enclosure of width <= tol; exact when all endpoints rational.
    Enclosure measure(const Rat& tol) const;

    friend IntervalUnion iu_union(const IntervalUnion& x, const IntervalUnion& y);
    friend IntervalUnion iu_intersect(const IntervalUnion& x, const IntervalUnion& y);

  private:
    std::vector<Interval> parts_;  // sorted, pairwise disjoint
};

IntervalUnion iu_union(const IntervalUnion& x, const IntervalUnion& y);
IntervalUnion iu_intersect(const IntervalUnion& x, const IntervalUnion& y);
/// clip \ x.
IntervalUnion iu_complement(const IntervalUnion& x, const Interval& clip);

/// Open dilation {x in clip : dist(x, a) < r} with a directed enclosure
/// radius: OUTER uses r.hi (result contains the true dilation), INNER uses
/// r.lo (result contained in it).  Result endpoints are rational.
IntervalUnion iu_dilate(const IntervalUnion& a, const Enclosure& r,
                        const Interval& clip, Direction dir);

/// True if x is certifiably a subset of y (both normalized).
bool iu_subset(const IntervalUnion& x, const IntervalUnion& y);

}  // namespace dioph

#endif
