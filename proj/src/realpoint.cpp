#include "dioph/realpoint.hpp"

namespace dioph {
namespace {

const Rat& width_floor() {
    static const Rat f = [] {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, kMaxRefineBits);
        return Rat(1, d);
    }();
    return f;
}

const Rat& default_width() {
    static const Rat f = [] {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 2, kDefaultRefineBits);
        return Rat(1, d);
    }();
    return f;
}

}  // namespace

AlgRoot::AlgRoot(IntPoly defining, Enclosure isolator, int sign_lo)
    : defining_(std::move(defining)), iso_(std::move(isolator)), sign_lo_(sign_lo) {}

Enclosure AlgRoot::isolator() const {
    std::lock_guard<std::mutex> lock(mu_);
    return iso_;
}

void AlgRoot::refine_step() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (iso_.is_point()) return;
    if (iso_.width() < width_floor())
        throw PrecisionExhausted("isolator refinement past 2^-4096 for root of " +
                                 defining_.str());
    Rat mid = iso_.mid();
    int s = defining_.sign_at(mid);
    if (s == 0) {
        iso_ = Enclosure{mid};  // the root itself is this dyadic rational
    } else if (s == sign_lo_) {
        iso_.lo = mid;
    } else {
        iso_.hi = mid;
    }
}

void AlgRoot::refine_to_width(const Rat& w) const {
    while (true) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (iso_.is_point() || iso_.width() <= w) return;
        }
        refine_step();
    }
}

Enclosure RealPoint::enclosure() const {
    if (is_rational()) return Enclosure{rat_};
    return alg_->isolator();
}

Enclosure RealPoint::enclosure(const Rat& w) const {
    if (is_rational()) return Enclosure{rat_};
    alg_->refine_to_width(w);
    return alg_->isolator();
}

namespace {

// x rational vs algebraic root a.
int compare_rat_alg(const Rat& r, const AlgRoot& a) {
    while (true) {
        Enclosure iso = a.isolator();
        if (iso.is_point()) return cmp(r, iso.lo);
        if (r <= iso.lo) return -1;
        if (r >= iso.hi) return 1;
        if (a.defining().sign_at(r) == 0) return 0;  // interior root is unique
        a.refine_step();
    }
}

int compare_alg_alg(const AlgRoot& a, const AlgRoot& b) {
    IntPoly g = poly_gcd(a.defining(), b.defining());
    bool may_be_equal = g.degree() >= 1;
    while (true) {
        Enclosure ia = a.isolator(), ib = b.isolator();
        if (ia.is_point()) return -compare_rat_alg(ia.lo, b);
        if (ib.is_point()) return compare_rat_alg(ib.lo, a);
        // Isolator endpoints are non-roots, so touching intervals separate.
        if (ia.hi <= ib.lo) return -1;
        if (ib.hi <= ia.lo) return 1;
        if (may_be_equal) {
            Rat lo = std::max(ia.lo, ib.lo), hi = std::min(ia.hi, ib.hi);
            // g has at most one root in the overlap (it divides either
            // defining polynomial), and the overlap endpoints are non-roots.
            if (g.sign_at(lo) * g.sign_at(hi) < 0) return 0;
        }
        a.refine_step();
        b.refine_step();
    }
}

}  // namespace

int compare(const RealPoint& x, const RealPoint& y) {
    if (x.is_rational() && y.is_rational()) return cmp(x.rational(), y.rational());
    if (x.is_rational()) return compare_rat_alg(x.rational(), *y.alg());
    if (y.is_rational()) return -compare_rat_alg(y.rational(), *x.alg());
    if (x.alg() == y.alg()) return 0;
    return compare_alg_alg(*x.alg(), *y.alg());
}

Rat rational_between(const RealPoint& x, const RealPoint& y) {
    if (x.is_rational() && y.is_rational())
        return (x.rational() + y.rational()) / 2;
    while (true) {
        Enclosure ex = x.enclosure(), ey = y.enclosure();
        if (ex.hi < ey.lo) return (ex.hi + ey.lo) / 2;
        if (!x.is_rational()) x.alg()->refine_step();
        if (!y.is_rational()) y.alg()->refine_step();
    }
}

Enclosure eval_at(const IntPoly& p, const RealPoint& x, const Rat& w) {
    if (x.is_rational()) return Enclosure{p.eval(x.rational())};
    x.alg()->refine_to_width(default_width());
    while (true) {
        Enclosure e = p.eval(x.alg()->isolator());
        if (e.width() <= w) return e;
        for (int i = 0; i < 4; ++i) x.alg()->refine_step();
    }
}

int sign_at(const IntPoly& p, const RealPoint& x) {
    if (p.is_zero()) return 0;
    if (x.is_rational()) return p.sign_at(x.rational());
    const AlgRoot& a = *x.alg();
    Enclosure iso = a.isolator();
    if (iso.is_point()) return p.sign_at(iso.lo);
    IntPoly g = poly_gcd(p, a.defining());
    if (g.degree() >= 1 && g.sign_at(iso.lo) * g.sign_at(iso.hi) < 0) return 0;
    // p(x) != 0: refine until the evaluation enclosure excludes zero.
    while (true) {
        Enclosure cur = a.isolator();
        if (cur.is_point()) return p.sign_at(cur.lo);
        Enclosure e = p.eval(cur);
        if (sgn(e.lo) > 0) return 1;
        if (sgn(e.hi) < 0) return -1;
        a.refine_step();
    }
}

}  // namespace dioph
