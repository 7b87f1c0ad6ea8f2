#include "dioph/roots.hpp"

#include <algorithm>

namespace dioph {
namespace {

using RPoly = std::vector<Rat>;

int rdeg(const RPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0) return i;
    return -1;
}

// Primitive integer polynomial with the same sign, from a rational one.
IntPoly scale_primitive(const RPoly& p) {
    int d = rdeg(p);
    if (d < 0) return IntPoly::zero();
    Int den(1);
    for (int i = 0; i <= d; ++i)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p[i].get_den().get_mpz_t());
    std::vector<Int> c(d + 1);
    for (int i = 0; i <= d; ++i) {
        Rat v = p[i] * den;
        c[i] = v.get_num();
    }
    IntPoly q{std::move(c)};
    return q.content_and_primitive().second;
}

// Sturm chain of a square-free polynomial, stored primitive.
std::vector<IntPoly> sturm_chain(const IntPoly& sf) {
    std::vector<IntPoly> chain;
    chain.push_back(sf);
    IntPoly d = sf.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.content_and_primitive().second);
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        RPoly r;
        {
            RPoly num(a.coeffs().begin(), a.coeffs().end());
            RPoly den(b.coeffs().begin(), b.coeffs().end());
            int db = rdeg(den);
            for (int da = rdeg(num); da >= db; da = rdeg(num)) {
                Rat f = num[da] / den[db];
                for (int i = 0; i <= db; ++i) num[da - db + i] -= f * den[i];
                num[da] = 0;
            }
            r = std::move(num);
        }
        if (rdeg(r) < 0) break;
        for (Rat& v : r) v = -v;
        chain.push_back(scale_primitive(r));
    }
    return chain;
}

int variations(const std::vector<IntPoly>& chain, const Rat& x) {
    int v = 0, prev = 0;
    for (const IntPoly& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Divides out the rational root r (as factor den*x - num); keeps primitivity.
IntPoly remove_rational_root(const IntPoly& p, const Rat& r) {
    IntPoly lin{{-r.get_num(), r.get_den()}};
    RPoly num(p.coeffs().begin(), p.coeffs().end());
    RPoly den(lin.coeffs().begin(), lin.coeffs().end());
    int dn = rdeg(num);
    RPoly quot(dn, Rat(0));
    for (int da = dn; da >= 1; da = rdeg(num)) {
        Rat f = num[da] / den[1];
        quot[da - 1] = f;
        num[da - 1] -= f * den[0];
        num[da] = 0;
    }
    return scale_primitive(quot);
}

}  // namespace

int descartes_bound(const IntPoly& p, const Rat& a, const Rat& b) {
    IntPoly sf = p.square_free_part();
    int n = sf.degree();
    if (n <= 0) return 0;
    // Moebius map x -> (a + b x)/(1 + x) carries (0, inf) to (a, b):
    // q(x) = sum_i c_i (a + b x)^i (1 + x)^(n-i).
    RPoly acc(n + 1, Rat(0));
    RPoly ax{a, b};        // a + b x
    RPoly ox{Rat(1), Rat(1)};  // 1 + x
    for (int i = 0; i <= n; ++i) {
        RPoly term{Rat(sf.coeff(i))};
        for (int k = 0; k < i; ++k) {
            RPoly t(term.size() + 1, Rat(0));
            for (size_t u = 0; u < term.size(); ++u) {
                t[u] += term[u] * ax[0];
                t[u + 1] += term[u] * ax[1];
            }
            term = std::move(t);
        }
        for (int k = 0; k < n - i; ++k) {
            RPoly t(term.size() + 1, Rat(0));
            for (size_t u = 0; u < term.size(); ++u) {
                t[u] += term[u];
                t[u + 1] += term[u];
            }
            term = std::move(t);
        }
        for (size_t u = 0; u < term.size(); ++u) acc[u] += term[u];
    }
    int v = 0, prev = 0;
    for (const Rat& c : acc) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

namespace {

// Simplest rational (smallest denominator) in the closed interval [lo, hi],
// lo <= hi, by the continued-fraction walk.
Rat simplest_in(const Rat& lo, const Rat& hi) {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) {
        Rat r = simplest_in(-hi, -lo);
        return -r;
    }
    Int cl, fh;
    mpz_cdiv_q(cl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    if (cl <= fh) return Rat(cl);
    // floor(lo) == floor(hi) and lo is not an integer.
    Int fl = cl - 1;
    Rat inner = simplest_in(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
    return Rat(fl) + Rat(1) / inner;
}

// If the unique simple root of sf in (lo, hi) is rational, find it.  A
// rational root has denominator dividing the leading coefficient L, and two
// distinct rationals with denominators <= L differ by more than 1/(2 L^2);
// bisecting below that gap makes the simplest rational in the interval the
// only candidate.
std::optional<Rat> rational_root_in(const IntPoly& sf, Rat lo, Rat hi) {
    Int L = abs(sf.coeff(sf.degree()));
    if (mpz_sizeinbase(L.get_mpz_t(), 2) > 256) return std::nullopt;
    Rat need = Rat(1, 2 * L * L);
    need.canonicalize();
    int slo = sf.sign_at(lo);
    while (hi - lo >= need) {
        Rat mid = (lo + hi) / 2;
        int sm = sf.sign_at(mid);
        if (sm == 0) return mid;
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    Rat cand = simplest_in(lo, hi);
    if (cand > lo && cand < hi && sf.sign_at(cand) == 0) return cand;
    return std::nullopt;
}

}  // namespace

RootList isolate_roots(const IntPoly& p, const Interval& I) {
    RootList out;
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    IntPoly sf = p.square_free_part();
    if (sf.degree() <= 0) return out;

    Rat A = I.a.enclosure().lo, B = I.b.enclosure().hi;
    if (A > B) std::swap(A, B);  // cannot happen for valid intervals

    // Rational roots discovered along the way (box endpoints, bisection
    // midpoints) are divided out of the square-free part; the isolation is
    // then restarted on the reduced polynomial.  At most deg restarts.
    std::vector<Rat> rational_roots;
    std::vector<std::shared_ptr<AlgRoot>> alg_roots;
    bool restart = true;
    while (restart) {
        restart = false;
        alg_roots.clear();
        while (sf.degree() >= 1 && sf.sign_at(A) == 0) {
            rational_roots.push_back(A);
            sf = remove_rational_root(sf, A);
        }
        while (sf.degree() >= 1 && sf.sign_at(B) == 0) {
            rational_roots.push_back(B);
            sf = remove_rational_root(sf, B);
        }
        if (sf.degree() < 1) break;
        auto chain = sturm_chain(sf);
        struct Seg {
            Rat lo, hi;
            int vlo, vhi;
        };
        std::vector<Seg> stack{{A, B, variations(chain, A), variations(chain, B)}};
        while (!stack.empty() && !restart) {
            Seg s = stack.back();
            stack.pop_back();
            int cnt = s.vlo - s.vhi;
            if (cnt <= 0) continue;
            if (cnt == 1) {
                if (auto r = rational_root_in(sf, s.lo, s.hi)) {
                    rational_roots.push_back(*r);
                    sf = remove_rational_root(sf, *r);
                    restart = true;
                    break;
                }
                alg_roots.push_back(std::make_shared<AlgRoot>(
                    sf, Enclosure{s.lo, s.hi}, sf.sign_at(s.lo)));
                continue;
            }
            Rat mid = (s.lo + s.hi) / 2;
            if (sf.sign_at(mid) == 0) {
                rational_roots.push_back(mid);
                sf = remove_rational_root(sf, mid);
                restart = true;
                break;
            }
            int vm = variations(chain, mid);
            stack.push_back({s.lo, mid, s.vlo, vm});
            stack.push_back({mid, s.hi, vm, s.vhi});
        }
    }

    std::vector<RealPoint> pts;
    for (const Rat& r : rational_roots) pts.emplace_back(r);
    for (auto& a : alg_roots) pts.emplace_back(RealPoint(a));
    IntPoly dp = p.derivative();
    std::vector<RootList::Entry> entries;
    for (auto& pt : pts) {
        if (!I.contains(pt)) continue;
        entries.push_back({pt, sign_at(dp, pt)});
    }
    std::sort(entries.begin(), entries.end(),
              [](const RootList::Entry& x, const RootList::Entry& y) {
                  return compare(x.root, y.root) < 0;
              });
    out.roots = std::move(entries);
    return out;
}

int count_roots(const IntPoly& p, const Interval& I) {
    return static_cast<int>(isolate_roots(p, I).size());
}

IntervalUnion solve_sign_neg(const IntPoly& f, const Interval& I, bool strict) {
    if (compare(I.a, I.b) == 0) {
        int s = sign_at(f, I.a);
        if ((s < 0 || (s == 0 && !strict)) && I.closed_a && I.closed_b)
            return IntervalUnion(I);
        return {};
    }
    if (f.degree() <= 0) {
        int s = f.is_zero() ? 0 : sgn(f.coeff(0));
        if (s < 0 || (s == 0 && !strict)) return IntervalUnion(I);
        return {};
    }
    RootList rl = isolate_roots(f, I);

    std::vector<RealPoint> bps;
    std::vector<bool> closed;  // breakpoint itself in the solution set
    bps.push_back(I.a);
    for (auto& e : rl.roots) {
        if (compare(e.root, I.a) == 0 || compare(e.root, I.b) == 0) continue;
        bps.push_back(e.root);
    }
    bps.push_back(I.b);

    auto point_in = [&](const RealPoint& t) {
        if (!I.contains(t)) return false;
        int s = sign_at(f, t);
        return s < 0 || (s == 0 && !strict);
    };
    closed.reserve(bps.size());
    for (const auto& t : bps) closed.push_back(point_in(t));

    std::vector<Interval> parts;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        Rat sample = rational_between(bps[i], bps[i + 1]);
        if (f.sign_at(sample) < 0)
            parts.emplace_back(bps[i], bps[i + 1], closed[i], closed[i + 1]);
    }
    for (size_t i = 0; i < bps.size(); ++i)
        if (closed[i]) parts.emplace_back(bps[i], bps[i], true, true);
    return IntervalUnion::from_parts(std::move(parts));
}

IntPoly Threshold::clear_against(const IntPoly& p) const {
    switch (kind) {
        case RATIONAL: {
            // |P| < u/v  <=>  v^2 P^2 - u^2 < 0
            Int u = value.get_num(), v = value.get_den();
            IntPoly p2 = p * p;
            return p2.scaled(v * v) - IntPoly{{u * u}};
        }
        case POWER: {
            // |P| < s*b^(p/q)  <=>  (v P)^Q < u^Q b^(pQ/q) with the smallest
            // even clearing exponent Q (q itself when even, else 2q); s = u/v.
            unsigned long q = expnt.get_den().get_ui();
            unsigned long Q = (q % 2 == 0) ? q : 2 * q;
            Int pn = expnt.get_num() * Int(static_cast<long>(Q / q));
            Int u = scale.get_num(), v = scale.get_den();
            Int vQ, uQ;
            mpz_pow_ui(vQ.get_mpz_t(), v.get_mpz_t(), Q);
            mpz_pow_ui(uQ.get_mpz_t(), u.get_mpz_t(), Q);
            IntPoly pQ = p.pow(static_cast<unsigned>(Q)).scaled(vQ);
            Int bp;
            mpz_pow_ui(bp.get_mpz_t(), base.get_mpz_t(),
                       static_cast<unsigned long>(Int(abs(pn)).get_ui()));
            if (sgn(pn) >= 0) return pQ - IntPoly{{uQ * bp}};
            return pQ.scaled(bp) - IntPoly{{uQ}};
        }
        case INFINITE:
            throw std::domain_error("Threshold::clear_against on infinity");
    }
    throw std::logic_error("unreachable");
}

int Threshold::compare_abs(const Rat& r) const {
    Rat a = rat_abs(r);
    switch (kind) {
        case RATIONAL:
            return cmp(a, value);
        case POWER: {
            // |r| vs s*b^(p/q)  <=>  (|r|/s)^q vs b^p
            unsigned long q = expnt.get_den().get_ui();
            Int pn = expnt.get_num();
            Rat as = a / scale;
            Rat aq(1);
            for (unsigned long i = 0; i < q; ++i) aq *= as;
            Int bp;
            mpz_pow_ui(bp.get_mpz_t(), base.get_mpz_t(), Int(abs(pn)).get_ui());
            Rat rhs = sgn(pn) >= 0 ? Rat(bp) : Rat(1, bp);
            rhs.canonicalize();
            return cmp(aq, rhs);
        }
        case INFINITE:
            return -1;
    }
    throw std::logic_error("unreachable");
}

Enclosure Threshold::enclosure(unsigned prec_bits) const {
    switch (kind) {
        case RATIONAL:
            return Enclosure{value};
        case POWER: {
            Enclosure e = rational_power_enclosure(Rat(base), expnt, prec_bits);
            return e * Enclosure{scale};
        }
        case INFINITE:
            throw std::domain_error("Threshold::enclosure on infinity");
    }
    throw std::logic_error("unreachable");
}

namespace {

// Shared skeleton for |P| vs theta: isolate the boundary roots, then decide
// each open segment at one interior rational sample and each breakpoint
// exactly.  For rational thresholds the boundary polynomials are v*P -+ u
// (degree n); power thresholds use the cleared polynomial.
IntervalUnion solve_abs_cmp(const IntPoly& p, const Threshold& theta, const Interval& I,
                            bool strict) {
    if (theta.kind == Threshold::INFINITE) return IntervalUnion(I);
    if (compare(I.a, I.b) == 0) {
        bool in = I.closed_a && I.closed_b && I.a.is_rational() &&
                  [&] {
                      int s = theta.compare_abs(p.eval(I.a.rational()));
                      return s < 0 || (s == 0 && !strict);
                  }();
        if (in) return IntervalUnion(I);
        if (!I.a.is_rational()) {
            int s = sign_at(theta.clear_against(p), I.a);
            if ((s < 0 || (s == 0 && !strict)) && I.closed_a && I.closed_b)
                return IntervalUnion(I);
        }
        return {};
    }
    std::vector<IntPoly> boundary;
    if (theta.kind == Threshold::RATIONAL) {
        Int u = theta.value.get_num(), v = theta.value.get_den();
        IntPoly vp = p.scaled(v);
        boundary.push_back(vp - IntPoly{{u}});
        if (sgn(u) != 0) boundary.push_back(vp + IntPoly{{u}});
    } else {
        boundary.push_back(theta.clear_against(p));
    }
    std::vector<RealPoint> bps{I.a};
    for (const IntPoly& f : boundary) {
        if (f.degree() < 1) continue;
        for (auto& e : isolate_roots(f, I).roots) {
            if (compare(e.root, I.a) == 0 || compare(e.root, I.b) == 0) continue;
            bps.push_back(e.root);
        }
    }
    std::sort(bps.begin() + 1, bps.end() - 0,
              [](const RealPoint& x, const RealPoint& y) { return compare(x, y) < 0; });
    bps.push_back(I.b);

    auto member = [&](const RealPoint& t, bool is_boundary_root) {
        if (!I.contains(t)) return false;
        if (is_boundary_root) return !strict;  // |P(t)| = theta exactly
        if (t.is_rational()) {
            int s = theta.compare_abs(p.eval(t.rational()));
            return s < 0 || (s == 0 && !strict);
        }
        int s = sign_at(theta.clear_against(p), t);
        return s < 0 || (s == 0 && !strict);
    };
    std::vector<bool> closed(bps.size());
    for (size_t i = 0; i < bps.size(); ++i) {
        bool is_root = i != 0 && i + 1 != bps.size();
        closed[i] = member(bps[i], is_root);
    }
    std::vector<Interval> parts;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        if (compare(bps[i], bps[i + 1]) == 0) continue;
        Rat sample = rational_between(bps[i], bps[i + 1]);
        if (theta.compare_abs(p.eval(sample)) < 0)
            parts.emplace_back(bps[i], bps[i + 1], closed[i], closed[i + 1]);
    }
    for (size_t i = 0; i < bps.size(); ++i)
        if (closed[i]) parts.emplace_back(bps[i], bps[i], true, true);
    return IntervalUnion::from_parts(std::move(parts));
}

}  // namespace

IntervalUnion solve_abs_lt(const IntPoly& p, const Threshold& theta, const Interval& I) {
    return solve_abs_cmp(p, theta, I, /*strict=*/true);
}

IntervalUnion solve_abs_le(const IntPoly& p, const Threshold& theta, const Interval& I) {
    return solve_abs_cmp(p, theta, I, /*strict=*/false);
}

IntervalUnion solve_band(const IntPoly& p, const Threshold& lo, const Threshold& hi,
                         const Interval& I) {
    IntervalUnion upper = solve_abs_lt(p, hi, I);
    if (lo.kind == Threshold::RATIONAL && sgn(lo.value) == 0) return upper;
    IntervalUnion lower = solve_abs_lt(p, lo, I);
    return iu_intersect(upper, iu_complement(lower, I));
}

std::pair<Enclosure, RealPoint> min_abs_on(const IntPoly& p, const Interval& J,
                                           const Rat& tol) {
    if (p.is_zero()) return {Enclosure{Rat(0)}, J.a};
    std::vector<RealPoint> candidates{J.a};
    if (compare(J.a, J.b) != 0) candidates.push_back(J.b);
    RootList pr = isolate_roots(p, J);
    if (!pr.empty()) return {Enclosure{Rat(0)}, pr.roots.front().root};
    IntPoly dp = p.derivative();
    if (!dp.is_zero() && dp.degree() >= 1)
        for (auto& e : isolate_roots(dp, J).roots) candidates.push_back(e.root);

    Rat w = tol / 4;
    Enclosure best = eval_at(p, candidates[0], w).abs();
    RealPoint witness = candidates[0];
    for (size_t i = 1; i < candidates.size(); ++i) {
        Enclosure e = eval_at(p, candidates[i], w).abs();
        if (e.hi < best.hi) witness = candidates[i];
        best.lo = std::min(best.lo, e.lo);
        best.hi = std::min(best.hi, e.hi);
    }
    if (best.hi < best.lo) best.lo = best.hi;
    return {best, witness};
}

}  // namespace dioph
