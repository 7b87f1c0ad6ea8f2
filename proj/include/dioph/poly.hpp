#ifndef DIOPH_POLY_HPP
#define DIOPH_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "dioph/rational.hpp"

namespace dioph {

/// Integer-coefficient polynomial, coefficients in increasing degree order.
/// Trailing zeros are permitted in storage; degree() looks past them.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
    }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly monomial(const Int& a, unsigned deg);

    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(size_t i) const {
        static const Int kZero{0};
        return i < c_.size() ? c_[i] : kZero;
    }

    bool is_zero() const;
    /// Largest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const;
    Int height() const;

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    Enclosure eval(const Enclosure& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }

    IntPoly derivative(unsigned order = 1) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly scaled(const Int& k) const;
    IntPoly pow(unsigned e) const;

    bool operator==(const IntPoly& o) const;

    /// gcd of |coefficients|; rejects the zero polynomial.
    Int content() const;
    /// (content, P/content).
    std::pair<Int, IntPoly> content_and_primitive() const;
    /// P / gcd(P, P'): same distinct roots, all simple.
    IntPoly square_free_part() const;

    std::string str() const;  // human-readable, e.g. "2*x^3-3*x+1"

  private:
    std::vector<Int> c_;
};

/// Integer-polynomial gcd (primitive, positive leading coefficient).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// True iff P (primitive, degree >= 1) has no factorization into two integer
/// polynomials of degree >= 1.  On reducible input fills the witness pair.
bool is_irreducible(const IntPoly& p, std::pair<IntPoly, IntPoly>* witness = nullptr);

}  // namespace dioph

#endif
