#ifndef DIOPH_ROOTS_HPP
#define DIOPH_ROOTS_HPP

#include <optional>

#include "dioph/interval.hpp"

namespace dioph {

/// Ordered distinct real roots of a polynomial in an interval, each tagged
/// with the sign of P' there (0 for critical roots of a non-square-free P).
struct RootList {
    struct Entry {
        RealPoint root;
        int deriv_sign;  // -1, 0, +1
    };
    std::vector<Entry> roots;

    size_t size() const { return roots.size(); }
    bool empty() const { return roots.empty(); }
    std::vector<RealPoint> points() const {
        std::vector<RealPoint> out;
        for (const auto& e : roots) out.push_back(e.root);
        return out;
    }
};

/// Certified isolation of all distinct real roots of P in I.
RootList isolate_roots(const IntPoly& p, const Interval& I);

/// Number of distinct real roots in I (Sturm count on the square-free part).
int count_roots(const IntPoly& p, const Interval& I);
/// Number of sign changes in the Descartes sequence of the square-free part
/// mapped onto (a, b); upper bound on the root count, equal when 0 or 1.
int descartes_bound(const IntPoly& p, const Rat& a, const Rat& b);

/// {x in I : F(x) < 0} (strict=true) or {x in I : F(x) <= 0} (strict=false),
/// exact, with boundary roots as algebraic endpoints.
IntervalUnion solve_sign_neg(const IntPoly& f, const Interval& I, bool strict);

/// Exact strict threshold for |P(x)| comparisons: a positive rational or a
/// rational power of a positive integer, cleared to one integer-polynomial
/// sign condition.
struct Threshold {
    enum Kind { RATIONAL, POWER, INFINITE } kind;
    Rat value;    // RATIONAL
    Int base;     // POWER: scale * base^expnt
    Rat expnt;    //
    Rat scale{1};

    static Threshold rational(Rat v) { return {RATIONAL, std::move(v), Int(0), Rat(0), Rat(1)}; }
    static Threshold power(Int base, Rat expnt, Rat scale = Rat(1)) {
        return {POWER, Rat(0), std::move(base), std::move(expnt), std::move(scale)};
    }
    static Threshold infinite() { return {INFINITE, Rat(0), Int(0), Rat(0), Rat(1)}; }

    /// Integer polynomial F with {|P| < T} = {F < 0}.
    IntPoly clear_against(const IntPoly& p) const;
    /// Exact comparison |r| <=> T; returns sign of (|r| - T).
    int compare_abs(const Rat& r) const;
    /// Certified enclosure of the threshold value.
    Enclosure enclosure(unsigned prec_bits) const;
};

/// {x in I : |P(x)| < theta}.
IntervalUnion solve_abs_lt(const IntPoly& p, const Threshold& theta, const Interval& I);
/// {x in I : |P(x)| <= theta}.
IntervalUnion solve_abs_le(const IntPoly& p, const Threshold& theta, const Interval& I);
/// {x in I : lo <= |P(x)| < hi}.
IntervalUnion solve_band(const IntPoly& p, const Threshold& lo, const Threshold& hi,
                         const Interval& I);

/// Minimum of |P| over a nonempty interval: enclosure of width <= tol plus a
/// witness point attaining the enclosure's upper bound.  Candidates are the
/// interval endpoints and the roots of P and P' inside.
std::pair<Enclosure, RealPoint> min_abs_on(const IntPoly& p, const Interval& J,
                                           const Rat& tol);

}  // namespace dioph

#endif
