#ifndef DIOPH_FAMILY_HPP
#define DIOPH_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "dioph/poly.hpp"

namespace dioph {

/// One enumeration family: P_n(H), P_n(H,k), P_n(H,k,m), or the residual
/// families P_n(H,k,R) / P_n(H,k,m,R).  Members have height exactly H; the
/// zeroed coefficient indices are fixed to 0 (no residual) or filled from
/// the residual polynomial, with the remaining indices free in [-H, H].
struct FamilySpec {
    unsigned n = 1;
    long H = 1;
    std::vector<unsigned> zeroed;          // {}, {k}, or {k, m} with k < m
    std::optional<IntPoly> residual;       // coefficients at zeroed indices are free

    void validate() const;
    /// Indices whose coefficients the enumeration varies.
    std::vector<unsigned> free_indices() const;
};

/// Deterministic, splittable enumeration.  Members are ordered by the raw
/// odometer index over the free-coefficient box [-H, H]^f (lexicographic in
/// the free coefficients, lowest index fastest); raw indices whose member
/// does not have height exactly H are skipped.
class FamilyRange {
  public:
    explicit FamilyRange(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }
    std::uint64_t raw_size() const { return raw_size_; }

    /// Member at a raw odometer index, or nullopt if that index is skipped.
    std::optional<IntPoly> member_at(std::uint64_t raw) const;

    /// Applies fn to every member with raw index in [begin, end).
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(const IntPoly&)>& fn) const;
    void for_each(const std::function<void(const IntPoly&)>& fn) const {
        for_each(0, raw_size_, fn);
    }

    std::uint64_t count() const;

  private:
    FamilySpec spec_;
    std::vector<unsigned> free_;
    std::vector<Int> base_;  // residual coefficients (zeros if absent)
    Int residual_height_;
    std::uint64_t raw_size_;
};

/// (2H+1)^(f) - (2H-1)^(f): members of height exactly H when all f free
/// coefficients range over [-H, H] and the fixed part has height < H.
Int exact_height_count(unsigned free_coeffs, long H);

/// #P*_n(H): primitive irreducible polynomials of degree exactly n and
/// height exactly H (P and -P counted separately).
std::uint64_t count_primitive_irreducible(unsigned n, long H);

}  // namespace dioph

#endif
