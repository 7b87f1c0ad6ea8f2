#include "dioph/family.hpp"

#include <algorithm>

namespace dioph {

void FamilySpec::validate() const {
    if (n < 1) throw std::invalid_argument("FamilySpec: n < 1");
    if (H < 1) throw std::invalid_argument("FamilySpec: H < 1");
    if (zeroed.size() > 2) throw std::invalid_argument("FamilySpec: more than two zeroed indices");
    for (unsigned k : zeroed)
        if (k > n) throw std::invalid_argument("FamilySpec: zeroed index > n");
    if (zeroed.size() == 2 && zeroed[0] >= zeroed[1])
        throw std::invalid_argument("FamilySpec: zeroed pair must satisfy k < m");
    if (residual) {
        if (residual->degree() > static_cast<int>(n))
            throw std::invalid_argument("FamilySpec: residual degree > n");
        if (residual->is_zero() ? false : residual->height() > H)
            throw std::invalid_argument("FamilySpec: residual height > H");
        for (unsigned k : zeroed)
            if (sgn(residual->coeff(k)) != 0)
                throw std::invalid_argument("FamilySpec: residual nonzero at zeroed index");
    }
}

std::vector<unsigned> FamilySpec::free_indices() const {
    std::vector<unsigned> out;
    if (residual) {
        // residual families vary only the zeroed coefficients
        out = zeroed;
    } else {
        for (unsigned i = 0; i <= n; ++i)
            if (std::find(zeroed.begin(), zeroed.end(), i) == zeroed.end())
                out.push_back(i);
    }
    return out;
}

FamilyRange::FamilyRange(FamilySpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    free_ = spec_.free_indices();
    base_.assign(spec_.n + 1, Int(0));
    if (spec_.residual)
        for (unsigned i = 0; i <= spec_.n; ++i) base_[i] = spec_.residual->coeff(i);
    residual_height_ = 0;
    for (const Int& a : base_) residual_height_ = std::max(residual_height_, Int(abs(a)));
    std::uint64_t width = static_cast<std::uint64_t>(2 * spec_.H + 1);
    raw_size_ = 1;
    for (size_t i = 0; i < free_.size(); ++i) raw_size_ *= width;
}

std::optional<IntPoly> FamilyRange::member_at(std::uint64_t raw) const {
    std::uint64_t width = static_cast<std::uint64_t>(2 * spec_.H + 1);
    std::vector<Int> c = base_;
    Int hmax = residual_height_;
    for (unsigned idx : free_) {
        long v = static_cast<long>(raw % width) - spec_.H;
        raw /= width;
        c[idx] = v;
        hmax = std::max(hmax, Int(v < 0 ? -v : v));
    }
    if (hmax != spec_.H) return std::nullopt;
    IntPoly p{std::move(c)};
    if (p.is_zero()) return std::nullopt;
    return p;
}

void FamilyRange::for_each(std::uint64_t begin, std::uint64_t end,
                           const std::function<void(const IntPoly&)>& fn) const {
    // Odometer walk; cheaper than member_at per index.
    if (begin >= end) return;
    std::uint64_t width = static_cast<std::uint64_t>(2 * spec_.H + 1);
    size_t f = free_.size();
    std::vector<long> digits(f, 0);
    {
        std::uint64_t r = begin;
        for (size_t i = 0; i < f; ++i) {
            digits[i] = static_cast<long>(r % width) - spec_.H;
            r /= width;
        }
    }
    std::vector<Int> c = base_;
    for (std::uint64_t raw = begin; raw < end; ++raw) {
        Int hmax = residual_height_;
        for (size_t i = 0; i < f; ++i) {
            long v = digits[i];
            c[free_[i]] = v;
            Int av(v < 0 ? -v : v);
            if (av > hmax) hmax = av;
        }
        if (hmax == spec_.H) {
            IntPoly p{c};
            if (!p.is_zero()) fn(p);
        }
        for (size_t i = 0; i < f; ++i) {
            if (digits[i] < spec_.H) {
                ++digits[i];
                break;
            }
            digits[i] = -spec_.H;
        }
    }
}

std::uint64_t FamilyRange::count() const {
    std::uint64_t c = 0;
    for_each([&](const IntPoly&) { ++c; });
    return c;
}

Int exact_height_count(unsigned free_coeffs, long H) {
    Int a(2 * H + 1), b(2 * H - 1), pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), free_coeffs);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), free_coeffs);
    return pa - pb;
}

std::uint64_t count_primitive_irreducible(unsigned n, long H) {
    FamilyRange fam{FamilySpec{n, H, {}, std::nullopt}};
    std::uint64_t c = 0;
    fam.for_each([&](const IntPoly& p) {
        if (p.degree() != static_cast<int>(n)) return;
        if (p.content() != 1) return;
        if (is_irreducible(p)) ++c;
    });
    return c;
}

}  // namespace dioph
