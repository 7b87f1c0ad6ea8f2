#ifndef DIOPH_REALPOINT_HPP
#define DIOPH_REALPOINT_HPP

#include <memory>
#include <mutex>

#include "dioph/poly.hpp"

namespace dioph {

/// Hard refinement floor: isolator widths below 2^-4096 signal exhaustion.
inline constexpr unsigned kMaxRefineBits = 4096;
/// Default target width for freshly built isolators is 2^-kDefaultRefineBits,
/// refined further only on demand.
inline constexpr unsigned kDefaultRefineBits = 64;

/// A real algebraic number represented as the unique root of a square-free
/// primitive integer polynomial inside an isolating interval.  The isolator
/// endpoints are never roots of the defining polynomial, so the root lies
/// strictly inside and bisection always makes progress.
class AlgRoot {
  public:
    AlgRoot(IntPoly defining, Enclosure isolator, int sign_lo);

    const IntPoly& defining() const { return defining_; }
    Enclosure isolator() const;
    int sign_left() const { return sign_lo_; }

    /// Shrinks the isolator until its width is <= w.  Throws
    /// PrecisionExhausted past the 2^-4096 floor.
    void refine_to_width(const Rat& w) const;
    void refine_step() const;

  private:
    IntPoly defining_;
    mutable Enclosure iso_;
    int sign_lo_;
    mutable std::mutex mu_;
};

/// Exact real number: either a rational or a shared algebraic root.
class RealPoint {
  public:
    RealPoint() : rat_(0) {}
    RealPoint(Rat r) : rat_(std::move(r)) {}
    RealPoint(long v) : rat_(v) {}
    explicit RealPoint(std::shared_ptr<const AlgRoot> a) : alg_(std::move(a)) {}

    bool is_rational() const { return alg_ == nullptr; }
    const Rat& rational() const { return rat_; }
    const std::shared_ptr<const AlgRoot>& alg() const { return alg_; }

    /// Current certified enclosure (a point for rationals).
    Enclosure enclosure() const;
    /// Enclosure of width <= w.
    Enclosure enclosure(const Rat& w) const;

    double approx() const { return rat_double(enclosure().mid()); }

  private:
    Rat rat_;
    std::shared_ptr<const AlgRoot> alg_;
};

/// Three-way comparison, exact.  Separation is attempted by isolator
/// refinement; equality of two algebraic points is decided by a common root
/// of the defining-polynomial gcd inside the isolator overlap.
int compare(const RealPoint& x, const RealPoint& y);

inline bool operator<(const RealPoint& x, const RealPoint& y) { return compare(x, y) < 0; }
inline bool operator==(const RealPoint& x, const RealPoint& y) { return compare(x, y) == 0; }
inline bool operator<=(const RealPoint& x, const RealPoint& y) { return compare(x, y) <= 0; }

/// A rational point strictly between x and y (requires x < y).
Rat rational_between(const RealPoint& x, const RealPoint& y);

/// Enclosure of P(x) with width at most w.
Enclosure eval_at(const IntPoly& p, const RealPoint& x, const Rat& w);

/// Exact sign of P(x).
int sign_at(const IntPoly& p, const RealPoint& x);

}  // namespace dioph

#endif
