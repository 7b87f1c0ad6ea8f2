#include "dioph/rational.hpp"

namespace dioph {

Rat parse_rat(const std::string& s) {
    // Accepts "p/q", integers, and plain decimal literals like "1e-9" or
    // "0.25" (converted exactly).
    auto epos = s.find_first_of("eE");
    auto dot = s.find('.');
    if (epos != std::string::npos || dot != std::string::npos) {
        std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
        long ex = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
        dot = mant.find('.');
        long frac_digits = 0;
        if (dot != std::string::npos) {
            frac_digits = static_cast<long>(mant.size() - dot - 1);
            mant.erase(dot, 1);
        }
        if (mant.empty() || mant == "-" || mant == "+")
            throw std::invalid_argument("bad rational literal: " + s);
        if (mant.find_first_not_of("+-0123456789") != std::string::npos ||
            mant.find_first_of("+-", 1) != std::string::npos)
            throw std::invalid_argument("bad rational literal: " + s);
        Rat r{Int(mant, 10)};
        long shift = ex - frac_digits;
        Int p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        if (shift >= 0)
            r *= p10;
        else
            r /= p10;
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

double rat_double(const Rat& q) { return q.get_d(); }

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

Enclosure Enclosure::abs() const {
    if (sgn(lo) >= 0) return *this;
    if (sgn(hi) <= 0) return {-hi, -lo};
    return {Rat(0), std::max(Rat(-lo), hi)};
}

Enclosure Enclosure::inverse() const {
    if (contains_zero())
        throw std::domain_error("Enclosure::inverse: interval contains 0");
    return {Rat(1) / hi, Rat(1) / lo};
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Enclosure root_enclosure(const Rat& q, unsigned long k, unsigned prec_bits) {
    if (sgn(q) < 0) throw std::domain_error("root_enclosure: negative base");
    if (k == 0) throw std::domain_error("root_enclosure: k = 0");
    if (sgn(q) == 0) return Enclosure{Rat(0)};
    // q^(1/k) in [r/M, (r+2)/M] where M = 2^(prec_bits+1) and
    // r = floor((floor(q * M^k))^(1/k)); the width 2/M is 2^-prec_bits.
    Int M;
    mpz_ui_pow_ui(M.get_mpz_t(), 2, prec_bits + 1);
    Int Mk;
    mpz_pow_ui(Mk.get_mpz_t(), M.get_mpz_t(), k);
    Int scaled_num = q.get_num() * Mk;
    Int z, rem;
    mpz_fdiv_qr(z.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
                q.get_den().get_mpz_t());
    Int r;
    int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), k);
    if (exact && sgn(rem) == 0) {
        Rat v(r, M);
        v.canonicalize();
        return Enclosure{v};
    }
    Rat lo(r, M), hi(r + 2, M);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

Enclosure rational_power_enclosure(const Rat& base, const Rat& expnt,
                                   unsigned prec_bits) {
    if (sgn(base) <= 0)
        throw std::domain_error("rational_power_enclosure: base <= 0");
    Int p = expnt.get_num();
    unsigned long q = expnt.get_den().get_ui();
    // base^(p/q): first the exact rational base^p, then its q-th root.
    bool neg = sgn(p) < 0;
    Int pa = abs(p);
    if (!pa.fits_ulong_p())
        throw std::domain_error("rational_power_enclosure: exponent too large");
    Int num_p, den_p;
    mpz_pow_ui(num_p.get_mpz_t(), base.get_num().get_mpz_t(), pa.get_ui());
    mpz_pow_ui(den_p.get_mpz_t(), base.get_den().get_mpz_t(), pa.get_ui());
    Rat bp = neg ? Rat(den_p, num_p) : Rat(num_p, den_p);
    bp.canonicalize();
    if (q == 1) return Enclosure{bp};
    // Exactness check: bp = (a/b) with a, b perfect q-th powers.
    Int ra, rb;
    int ea = mpz_root(ra.get_mpz_t(), bp.get_num().get_mpz_t(), q);
    int eb = mpz_root(rb.get_mpz_t(), bp.get_den().get_mpz_t(), q);
    if (ea && eb) {
        Rat v(ra, rb);
        v.canonicalize();
        return Enclosure{v};
    }
    // Enclose numerator and denominator roots separately.
    Enclosure en = root_enclosure(Rat(bp.get_num()), q, prec_bits);
    Enclosure ed = root_enclosure(Rat(bp.get_den()), q, prec_bits);
    return en * ed.inverse();
}

}  // namespace dioph
