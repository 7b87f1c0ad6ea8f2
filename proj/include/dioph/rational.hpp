#ifndef DIOPH_RATIONAL_HPP
#define DIOPH_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace dioph {

using Int = mpz_class;
using Rat = mpq_class;

/// Signalled when endpoint refinement hits the hard precision floor
/// (width 2^-4096) without deciding a comparison.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }
inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);
double rat_double(const Rat& q);

/// Closed interval [lo, hi] with exact rational endpoints.  Used both as a
/// certified enclosure of an irrational quantity and as the value range of
/// interval-arithmetic evaluation.
struct Enclosure {
    Rat lo;
    Rat hi;

    Enclosure() : lo(0), hi(0) {}
    Enclosure(Rat v) : lo(v), hi(v) {}
    Enclosure(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& q) const { return lo <= q && q <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

    Enclosure operator+(const Enclosure& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    Enclosure operator-(const Enclosure& o) const {
        return {lo - o.hi, hi - o.lo};
    }
    Enclosure operator*(const Enclosure& o) const;
    Enclosure operator-() const { return {-hi, -lo}; }

    /// Enclosure of |x| over this interval.
    Enclosure abs() const;
    /// Enclosure of 1/x; requires 0 outside the interval.
    Enclosure inverse() const;
};

Enclosure hull(const Enclosure& a, const Enclosure& b);

/// Enclosure of q^(1/k) for q >= 0, k >= 1, with width <= 2^-prec_bits.
Enclosure root_enclosure(const Rat& q, unsigned long k, unsigned prec_bits);

/// Enclosure of base^(p/q) for a positive rational base.  Exact (point
/// enclosure) when the power is rational, e.g. 1024^(-4/5) = 1/256.
Enclosure rational_power_enclosure(const Rat& base, const Rat& expnt,
                                   unsigned prec_bits);

}  // namespace dioph

#endif
