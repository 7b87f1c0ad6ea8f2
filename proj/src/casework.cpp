#include "dioph/casework.hpp"

#include <algorithm>
#include <cmath>

namespace dioph {

std::optional<Rat> PsiSpec::eval_exact(long H) const {
    if (H < 1) throw std::domain_error("psi: H < 1");
    if (kind == TABLE) {
        auto it = table.find(H);
        if (it == table.end())
            throw std::domain_error("psi table: H = " + std::to_string(H) + " not in domain");
        return it->second;
    }
    // c * H^-w is exact when w is an integer, or when H is a perfect
    // den(w)-th power (e.g. 4^(-5/2) = 1/32).
    Int base(H);
    unsigned long q = w.get_den().get_ui();
    if (q != 1) {
        Int r;
        if (!mpz_root(r.get_mpz_t(), base.get_mpz_t(), q)) return std::nullopt;
        base = r;
    }
    Int hp;
    mpz_pow_ui(hp.get_mpz_t(), base.get_mpz_t(), Int(abs(w.get_num())).get_ui());
    Rat v = sgn(w) >= 0 ? Rat(c / Rat(hp)) : Rat(c * Rat(hp));
    v.canonicalize();
    return v;
}

Enclosure PsiSpec::eval_enclosure(long H, unsigned prec_bits) const {
    if (auto e = eval_exact(H)) return Enclosure{*e};
    return rational_power_enclosure(Rat(H), -w, prec_bits) * Enclosure{c};
}

Threshold PsiSpec::threshold(long H) const {
    if (auto e = eval_exact(H)) return Threshold::rational(*e);
    return Threshold::power(Int(H), -w, c);
}

std::string PsiSpec::id() const {
    if (kind == TABLE) return "table[" + std::to_string(table.size()) + "]";
    return "pow:c=" + rat_str(c) + ",w=" + rat_str(w);
}

std::string case_name(DerivCase c) {
    switch (c) {
        case DerivCase::BIG: return "big";
        case DerivCase::MEDIUM: return "medium";
        case DerivCase::SMALL: return "small";
    }
    return "?";
}

void CaseConfig::validate() const {
    if (n < 1) throw std::invalid_argument("CaseConfig: n < 1");
    if (sgn(delta) <= 0) throw std::invalid_argument("CaseConfig: delta <= 0");
    Rat d = delta;
    d.canonicalize();
    if (d.get_num() != 1)
        throw std::invalid_argument("CaseConfig: 1/delta must be a positive integer");
    if (!I.a.is_rational() || !I.b.is_rational())
        throw std::invalid_argument("CaseConfig: interval endpoints must be rational");
    if (compare(I.a, I.b) >= 0) throw std::invalid_argument("CaseConfig: empty interval");
    // Eq.-(8)-style requirement: 0 < c0(I), the interval stays away from 0
    RealPoint zero{Rat(0)};
    if (compare(I.a, zero) <= 0 && compare(zero, I.b) <= 0)
        throw std::invalid_argument(
            "CaseConfig: interval violates 0 < c0(I) (it contains 0)");
    if (sgn(tol) <= 0) throw std::invalid_argument("CaseConfig: tol <= 0");
}

namespace {

Threshold small_deriv_threshold(const CaseConfig& cfg, long H) {
    return Threshold::power(Int(H), -cfg.delta);
}

// Exact minimizer of |dp| over the closure of component J: candidates are
// the component endpoints and the roots of dp' inside.  Ties are broken to
// the leftmost candidate once refinement stops separating the values.
std::pair<RealPoint, Enclosure> minimize_abs_deriv(const IntPoly& dp, const Interval& J) {
    std::vector<RealPoint> cands{J.a};
    if (compare(J.a, J.b) != 0) cands.push_back(J.b);
    IntPoly d2 = dp.derivative();
    if (d2.degree() >= 1) {
        Interval closure{J.a, J.b, true, true};
        for (auto& e : isolate_roots(d2, closure).roots) cands.push_back(e.root);
    }
    std::sort(cands.begin(), cands.end(),
              [](const RealPoint& x, const RealPoint& y) { return compare(x, y) < 0; });

    Rat w = Rat(1, Int(1) << 64);
    for (int round = 0; round < 4; ++round) {
        std::vector<Enclosure> vals;
        vals.reserve(cands.size());
        for (auto& c : cands) vals.push_back(eval_at(dp, c, w).abs());
        Rat min_hi = vals[0].hi;
        for (auto& v : vals) min_hi = std::min(min_hi, v.hi);
        // a sole candidate whose value cannot exceed any other's is the winner
        int winner = -1, plausible = 0;
        for (size_t i = 0; i < vals.size(); ++i) {
            if (vals[i].lo <= min_hi) {
                ++plausible;
                if (winner < 0) winner = static_cast<int>(i);
            }
        }
        if (plausible == 1 || round == 3)
            return {cands[winner], vals[winner]};
        w /= Int(1) << 64;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

namespace {

// Sound emptiness prune: |p| >= bound on all of I (checked on 8 pieces)
// means {|p| < bound} is empty.
bool abs_lt_possible(const IntPoly& p, const Interval& I, const Rat& bound_hi) {
    Rat a = I.a.rational(), b = I.b.rational(), step = (b - a) / 8;
    for (int i = 0; i < 8; ++i) {
        Enclosure piece{a + step * i, a + step * (i + 1)};
        if (p.eval(piece).abs().lo < bound_hi) return true;
    }
    return false;
}

}  // namespace

StratifiedSet sigma_case(const IntPoly& p, const CaseConfig& cfg, DerivCase which) {
    cfg.validate();
    StratifiedSet out;
    out.p = p;
    out.deriv_case = which;
    out.H = p.height().get_si();
    long H = out.H;
    if (cfg.I.rational_endpoints() &&
        !abs_lt_possible(p, cfg.I, cfg.psi.eval_enclosure(H).hi))
        return out;
    IntervalUnion small_set = solve_abs_lt(p, cfg.psi.threshold(H), cfg.I);
    if (small_set.empty()) return out;

    IntPoly dp = p.derivative();
    if (dp.is_zero()) {
        // |P'| = 0 < H^-delta everywhere: everything is SMALL
        if (which == DerivCase::SMALL) out.set = small_set;
        return out;
    }
    IntervalUnion dcond;
    switch (which) {
        case DerivCase::BIG:
            dcond = iu_complement(solve_abs_lt(dp, Threshold::rational(Rat(1)), cfg.I), cfg.I);
            break;
        case DerivCase::MEDIUM: {
            IntervalUnion lt1 = solve_abs_lt(dp, Threshold::rational(Rat(1)), cfg.I);
            IntervalUnion ltd = solve_abs_lt(dp, small_deriv_threshold(cfg, H), cfg.I);
            dcond = iu_intersect(lt1, iu_complement(ltd, cfg.I));
            break;
        }
        case DerivCase::SMALL:
            dcond = solve_abs_lt(dp, small_deriv_threshold(cfg, H), cfg.I);
            break;
    }
    out.set = iu_intersect(small_set, dcond);
    if (which == DerivCase::MEDIUM) {
        for (const Interval& comp : out.set.parts()) {
            auto [g, val] = minimize_abs_deriv(dp, comp);
            if (!comp.contains(g)) {
                // closure minimizer sits on an open endpoint; slide inward to
                // a member point with |P'(gamma)| <= 2 inf (paper's gamma_P)
                Rat w = Rat(1, Int(1) << 64);
                while (sgn(val.lo) <= 0) {
                    w /= Int(1) << 64;
                    val = eval_at(dp, g, w).abs();
                }
                RealPoint far = compare(g, comp.a) == 0 ? comp.b : comp.a;
                RealPoint cur{rational_between(comp.a, comp.b)};
                for (int round = 0; round < kMaxRefineBits; ++round) {
                    Enclosure dv = eval_at(dp, cur, w).abs();
                    if (dv.hi <= 2 * val.lo) {
                        g = cur;
                        val = dv;
                        break;
                    }
                    cur = RealPoint{compare(g, comp.a) == 0
                                        ? rational_between(comp.a, cur)
                                        : rational_between(cur, comp.b)};
                }
            }
            out.gamma.push_back(g);
            out.dp_at_gamma_abs.push_back(val);
        }
    }
    return out;
}

std::pair<IntervalUnion, IntervalUnion> edge_strips(const Interval& I, const Rat& psiH) {
    Rat a = I.a.rational(), b = I.b.rational();
    Rat w = 4 * psiH;
    std::vector<Interval> strips;
    Rat left_hi = std::min(Rat(a + w), b);
    Rat right_lo = std::max(Rat(b - w), a);
    strips.push_back(Interval::closed(a, left_hi));
    strips.push_back(Interval::closed(right_lo, b));
    IntervalUnion Idd = IntervalUnion::from_parts(std::move(strips));
    IntervalUnion Id = iu_complement(Idd, I);
    return {Id, Idd};
}

RootList z_set(const IntPoly& p, const Interval& I) {
    RootList all = isolate_roots(p, I);
    IntPoly dp = p.derivative();
    // |P'(alpha)| >= 1/2  <=>  4 P'(alpha)^2 - 1 >= 0
    IntPoly g = (dp * dp).scaled(Int(4)) - IntPoly{{1}};
    RootList out;
    for (auto& e : all.roots)
        if (sign_at(g, e.root) >= 0) out.roots.push_back(e);
    return out;
}

IntervalUnion sigma_alpha(const IntPoly& p, const RealPoint& alpha, const Rat& psiH,
                          const Interval& I) {
    IntPoly dp = p.derivative();
    if (sign_at(dp, alpha) == 0)
        throw std::domain_error("sigma_alpha: P'(alpha) = 0");
    Rat w = psiH / 64;
    Enclosure d = eval_at(dp, alpha, w).abs();
    while (sgn(d.lo) <= 0) {
        w /= 256;
        d = eval_at(dp, alpha, w).abs();
    }
    Enclosure radius = Enclosure{2 * psiH} * d.inverse();
    return iu_dilate(IntervalUnion(Interval{alpha, alpha}), radius, I, Direction::OUTER);
}

namespace {

// Certified strict check a > b/2 on |P'| values; false on fail or undecided.
bool certify_lemma2_point(const IntPoly& p, const IntPoly& dp, const RealPoint& x0,
                          const std::vector<RealPoint>& roots, const Rat& psiH) {
    Rat w = Rat(1, Int(1) << 64);
    for (int round = 0; round < 3; ++round) {
        Enclosure dx0 = eval_at(dp, x0, w).abs();
        for (const RealPoint& alpha : roots) {
            Enclosure da = eval_at(dp, alpha, w).abs();
            // |P'(alpha)| > |P'(x0)| / 2
            if (!(da.lo * 2 > dx0.hi)) continue;
            // |x0 - alpha| * |P'(alpha)| < 2 psi(H)
            Enclosure diff = (x0.enclosure(w) - alpha.enclosure(w)).abs();
            if (diff.hi * da.hi < 2 * psiH) return true;
        }
        w /= Int(1) << 64;
    }
    return false;
}

}  // namespace

Lemma2Report lemma2_certify(const CaseConfig& cfg, long H) {
    cfg.validate();
    Lemma2Report rep;
    rep.H = H;
    Rat psiH = cfg.psi.eval_exact(H) ? *cfg.psi.eval_exact(H)
                                     : cfg.psi.eval_enclosure(H).hi;
    auto [Id, Idd] = edge_strips(cfg.I, psiH);
    FamilyRange fam{FamilySpec{cfg.n, H, {}, std::nullopt}};
    fam.for_each([&](const IntPoly& p) {
        // cheap root-existence prune: sigma(P) needs |P| < psi somewhere
        StratifiedSet s = sigma_case(p, cfg, DerivCase::BIG);
        if (s.set.empty()) return;
        IntervalUnion si = iu_intersect(s.set, Id);
        if (si.empty()) return;
        ++rep.polys_tested;
        IntPoly dp = p.derivative();
        std::vector<RealPoint> roots = isolate_roots(p, cfg.I).points();
        for (const Interval& comp : si.parts()) {
            std::vector<RealPoint> pts{comp.a};
            if (compare(comp.a, comp.b) != 0) {
                pts.emplace_back(rational_between(comp.a, comp.b));
                pts.push_back(comp.b);
            }
            for (const RealPoint& x0 : pts) {
                ++rep.points_tested;
                if (!roots.empty() && certify_lemma2_point(p, dp, x0, roots, psiH)) {
                    ++rep.points_passed;
                } else {
                    rep.failures.push_back({p, x0.enclosure().mid()});
                }
            }
        }
    });
    return rep;
}

RootSumDiagnostic root_sum_diagnostic(unsigned k, const IntPoly& R, const CaseConfig& cfg,
                                      long H) {
    cfg.validate();
    if (sgn(R.coeff(k)) != 0)
        throw std::invalid_argument("root_sum_diagnostic: R must have a_k = 0");
    RootSumDiagnostic out;
    // R~ = x^-k R;  R~' = N1 / x^(k+1) with N1 = x R' - k R,
    // R~'' = N2 / x^(k+2) with N2 = x N1' - (k+1) N1.
    IntPoly x{{0, 1}};
    IntPoly N1 = x * R.derivative() - R.scaled(Int(static_cast<long>(k)));
    IntPoly N2 = x * N1.derivative() - N1.scaled(Int(static_cast<long>(k + 1)));

    // Breakpoints: rational separators between consecutive critical points.
    std::vector<RealPoint> crit;
    for (const IntPoly* f : {&N1, &N2}) {
        if (f->degree() < 1) continue;
        for (auto& e : isolate_roots(*f, cfg.I).roots) crit.push_back(e.root);
    }
    std::sort(crit.begin(), crit.end(),
              [](const RealPoint& a, const RealPoint& b) { return compare(a, b) < 0; });
    crit.erase(std::unique(crit.begin(), crit.end(),
                           [](const RealPoint& a, const RealPoint& b) {
                               return compare(a, b) == 0;
                           }),
               crit.end());
    out.breakpoints.push_back(cfg.a());
    for (size_t i = 0; i < crit.size(); ++i) {
        if (compare(crit[i], cfg.I.a) == 0 || compare(crit[i], cfg.I.b) == 0) continue;
        out.breakpoints.push_back(rational_between(i == 0 ? cfg.I.a : crit[i - 1], crit[i]));
    }
    out.breakpoints.push_back(cfg.b());
    std::sort(out.breakpoints.begin(), out.breakpoints.end());
    out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()),
                          out.breakpoints.end());
    size_t pieces = out.breakpoints.size() - 1;
    out.piece_sums.assign(pieces, Enclosure{Rat(0)});

    // Z_{I,R} = union of Z_I(R + a_k x^k) over the family members.
    FamilyRange fam{FamilySpec{cfg.n, H, {k}, R}};
    fam.for_each([&](const IntPoly& p) {
        RootList z = z_set(p, cfg.I);
        for (auto& e : z.roots) {
            ++out.root_count;
            // R~'(alpha) = N1(alpha) / alpha^(k+1)
            Rat w = Rat(1, Int(1) << 80);
            Enclosure n1, ak1;
            while (true) {
                Enclosure ea = e.root.enclosure(w);
                n1 = N1.eval(ea).abs();
                ak1 = Enclosure{Rat(1)};
                for (unsigned j = 0; j < k + 1; ++j) ak1 = ak1 * ea;
                ak1 = ak1.abs();
                if (sgn(n1.lo) > 0 && sgn(ak1.lo) > 0) break;
                w /= Int(1) << 64;
            }
            Enclosure inv = ak1 * n1.inverse();  // |alpha^(k+1)| / |N1(alpha)|
            // piece index
            size_t idx = 0;
            Enclosure ea = e.root.enclosure(w);
            for (size_t i = 0; i + 1 < out.breakpoints.size(); ++i)
                if (out.breakpoints[i] <= ea.lo) idx = i;
            out.piece_sums[idx] = out.piece_sums[idx] + inv;
        }
    });
    return out;
}

Expansions gamma_and_expansions(const StratifiedSet& s, const CaseConfig& cfg) {
    if (s.deriv_case != DerivCase::MEDIUM)
        throw std::invalid_argument("gamma_and_expansions: MEDIUM set required");
    Expansions out;
    if (s.set.empty()) {
        out.subset_certified = true;
        return out;
    }
    Enclosure r2 = Threshold::power(Int(s.H), Rat(-1) + 2 * cfg.delta).enclosure(96);
    std::vector<Interval> s1_parts, s2_parts;
    bool certified = true;
    for (size_t i = 0; i < s.set.parts().size(); ++i) {
        const Interval& comp = s.set.parts()[i];
        Enclosure dval = s.dp_at_gamma_abs[i];
        unsigned prec = 96;
        while (sgn(dval.lo) <= 0) {
            // should not happen for MEDIUM (|P'| >= H^-delta on the set)
            throw std::logic_error("gamma_and_expansions: |P'(gamma)| enclosure touches 0");
        }
        Enclosure r1 = (Enclosure{Rat(s.H)} * dval).inverse();
        IntervalUnion comp_u{comp};
        IntervalUnion s1 = iu_dilate(comp_u, r1, cfg.I, Direction::OUTER);
        IntervalUnion s2 = iu_dilate(comp_u, r2, cfg.I, Direction::OUTER);
        // subset certificate: outer sigma1 against inner sigma2
        IntervalUnion s2_inner = iu_dilate(comp_u, r2, cfg.I, Direction::INNER);
        bool ok = iu_subset(s1, s2_inner);
        for (int round = 0; !ok && round < 3; ++round) {
            prec *= 2;
            // tighten |P'(gamma)| and the power enclosure and retry
            Rat w = Rat(1, Int(1) << prec);
            dval = eval_at(s.p.derivative(), s.gamma[i], w).abs();
            r1 = (Enclosure{Rat(s.H)} * dval).inverse();
            Enclosure r2t = Threshold::power(Int(s.H), Rat(-1) + 2 * cfg.delta).enclosure(prec);
            s1 = iu_dilate(comp_u, r1, cfg.I, Direction::OUTER);
            s2_inner = iu_dilate(comp_u, r2t, cfg.I, Direction::INNER);
            ok = iu_subset(s1, s2_inner);
        }
        certified = certified && ok;
        for (auto& part : s1.parts()) s1_parts.push_back(part);
        for (auto& part : s2.parts()) s2_parts.push_back(part);
    }
    out.sigma1 = IntervalUnion::from_parts(std::move(s1_parts));
    out.sigma2 = IntervalUnion::from_parts(std::move(s2_parts));
    out.subset_certified = certified;
    return out;
}

EssentialVerdictList classify_essential(unsigned k, unsigned m, const IntPoly& R,
                                        long H, const CaseConfig& cfg) {
    cfg.validate();
    EssentialVerdictList out;
    out.k = k;
    out.m = m;
    out.R = R;
    FamilyRange fam{FamilySpec{cfg.n, H, {k, m}, R}};
    std::vector<MediumComponent> comps;
    std::vector<size_t> owner;  // member ordinal owning each component
    size_t ordinal = 0;
    std::vector<IntPoly> members;
    fam.for_each([&](const IntPoly& p) {
        StratifiedSet s = sigma_case(p, cfg, DerivCase::MEDIUM);
        if (!s.set.empty()) {
            Expansions e = gamma_and_expansions(s, cfg);
            size_t ci = 0;
            for (const Interval& comp : s.set.parts()) {
                // per-component sigma1 (outer, rational endpoints)
                Enclosure r1 = (Enclosure{Rat(s.H)} * s.dp_at_gamma_abs[ci]).inverse();
                IntervalUnion s1 =
                    iu_dilate(IntervalUnion{comp}, r1, cfg.I, Direction::OUTER);
                MediumComponent rec;
                rec.p = p;
                rec.sigma = comp;
                if (!s1.empty()) {
                    rec.sigma1_lo = s1.parts().front().a.rational();
                    rec.sigma1_hi = s1.parts().back().b.rational();
                }
                comps.push_back(std::move(rec));
                owner.push_back(ordinal);
                ++ci;
            }
            (void)e;
        }
        members.push_back(p);
        ++ordinal;
    });
    // sweep for overlaps between components of different members
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = 0; j < comps.size(); ++j) {
            if (owner[i] == owner[j]) continue;
            Rat lo = std::max(comps[i].sigma1_lo, comps[j].sigma1_lo);
            Rat hi = std::min(comps[i].sigma1_hi, comps[j].sigma1_hi);
            if (lo < hi) {
                comps[i].essential = false;
                comps[i].q = comps[j].p;
                comps[i].b_m = comps[i].p.coeff(m) - comps[j].p.coeff(m);
                comps[i].b_k = comps[i].p.coeff(k) - comps[j].p.coeff(k);
                break;
            }
        }
    }
    out.components = std::move(comps);
    return out;
}

DiffPairReport diff_pair_check(const IntPoly& p, const IntPoly& q, unsigned k, unsigned m,
                               const CaseConfig& cfg, const IntervalUnion& overlap, long H) {
    if (p == q) throw std::invalid_argument("diff_pair_check: P = Q");
    if (overlap.empty()) throw std::invalid_argument("diff_pair_check: empty overlap");
    DiffPairReport rep;
    IntPoly diff = p - q;
    rep.b_m = diff.coeff(m);
    rep.b_k = diff.coeff(k);
    rep.bm_nonzero = sgn(rep.b_m) != 0;
    double h = static_cast<double>(H);
    double d = rat_double(cfg.delta);
    double scale_p = std::pow(h, 1.0 - 4 * d);   // 1 / H^(-1+4d)
    double scale_dp = std::pow(h, -2 * d);       // 1 / H^(2d)
    IntPoly dp = p.derivative(), dq = q.derivative();
    auto visit = [&](const Rat& x) {
        ++rep.points;
        double px = std::abs(rat_double(p.eval(x))), qx = std::abs(rat_double(q.eval(x)));
        rep.c0 = std::max({rep.c0, px * scale_p, qx * scale_p});
        double dpx = std::abs(rat_double(dp.eval(x))), dqx = std::abs(rat_double(dq.eval(x)));
        rep.c1 = std::max({rep.c1, dpx * scale_dp, dqx * scale_dp});
        if (rep.bm_nonzero) {
            Rat xmk(1);
            for (unsigned i = 0; i < m - k; ++i) xmk *= x;
            Rat val = xmk + Rat(rep.b_k) / Rat(rep.b_m);
            double bm = std::abs(rat_double(Rat(rep.b_m)));
            rep.resolvent = std::max(rep.resolvent,
                                     std::abs(rat_double(val)) * bm * scale_p);
        }
    };
    for (const Interval& part : overlap.parts()) {
        Rat a = part.a.enclosure().mid(), b = part.b.enclosure().mid();
        visit(a);
        if (a != b) {
            visit((a + b) / 2);
            visit(b);
        }
    }
    return rep;
}

CkWindowResult ck_window(const IntPoly& f, unsigned k,
                         const std::vector<std::optional<Rat>>& alphas,
                         const std::vector<Rat>& betas, const Rat& a, const Rat& b) {
    if (k < 1) throw std::invalid_argument("ck_window: k < 1");
    if (alphas.size() != k || betas.size() != k)
        throw std::invalid_argument("ck_window: need alpha_0..alpha_(k-1), beta_1..beta_k");
    if (!alphas[0] || sgn(*alphas[0]) <= 0)
        throw std::invalid_argument("ck_window: alpha_0 must be finite positive");
    const Rat& beta_k = betas[k - 1];
    if (sgn(beta_k) <= 0) throw std::invalid_argument("ck_window: beta_k must be positive");
    for (unsigned j = 1; j < k; ++j) {
        Rat bj = betas[j - 1];
        if (sgn(bj) < 0) throw std::invalid_argument("ck_window: beta_j < 0");
        if (alphas[j] && !(*alphas[j] > bj))
            throw std::invalid_argument("ck_window: alpha_j <= beta_j");
    }
    Interval box = Interval::open(a, b);
    // precondition: inf |f^(k)| >= beta_k on (a,b)
    IntPoly fk = f.derivative(k);
    if (fk.degree() <= 0) {
        Rat v = rat_abs(Rat(fk.coeff(0)));
        if (v < beta_k)
            throw std::invalid_argument("ck_window: inf|f^(k)| < beta_k");
    } else {
        auto [mn, wit] = min_abs_on(fk, Interval::closed(a, b), Rat(1, Int(1) << 80));
        if (!(mn.lo >= beta_k))
            throw std::invalid_argument("ck_window: inf|f^(k)| < beta_k not certified");
    }

    IntervalUnion set = solve_abs_le(f, Threshold::rational(*alphas[0]), box);
    for (unsigned j = 1; j < k && !set.empty(); ++j) {
        IntPoly fj = f.derivative(j);
        if (alphas[j])
            set = iu_intersect(set, solve_abs_le(fj, Threshold::rational(*alphas[j]), box));
        if (sgn(betas[j - 1]) > 0) {
            IntervalUnion lower =
                solve_abs_lt(fj, Threshold::rational(betas[j - 1]), box);
            set = iu_intersect(set, iu_complement(lower, box));
        }
    }
    CkWindowResult res;
    res.set = set;
    res.components = set.size();
    res.component_bound = static_cast<std::uint64_t>(k) * (k + 1) / 2 + 1;
    res.count_ok = res.components <= res.component_bound;
    res.max_length = Enclosure{Rat(0)};
    Rat tol(1, Int(1) << 48);
    for (const Interval& part : set.parts()) {
        Enclosure len = part.length(tol);
        if (len.hi > res.max_length.hi) res.max_length = len;
    }
    // Lemma-1 length bound: min over 0 <= i < j <= k of
    // 3^((j-i+1)/2) * (alpha_i / beta_j)^(1/(j-i)); alpha_k plays no role.
    std::optional<Enclosure> bound;
    for (unsigned i = 0; i < k; ++i) {
        if (!alphas[i]) continue;
        for (unsigned j = i + 1; j <= k; ++j) {
            Rat bj = betas[j - 1];
            if (sgn(bj) <= 0) continue;
            unsigned d = j - i;
            Int pw3;
            mpz_ui_pow_ui(pw3.get_mpz_t(), 3, j - i + 1);
            Enclosure c3 = root_enclosure(Rat(pw3), 2, 96);
            Enclosure cr = root_enclosure(*alphas[i] / bj, d, 96);
            Enclosure cand = c3 * cr;
            if (!bound || cand.lo < bound->lo) bound = cand;
        }
    }
    res.length_bound = bound;
    res.length_ok = !bound || res.max_length.hi <= bound->lo;
    return res;
}

Rat delta_prime(unsigned n, const Rat& delta) {
    if (n < 2) throw std::invalid_argument("delta_prime: n < 2");
    Rat num = std::min(delta, Rat(static_cast<long>(n - 1)));
    Rat dp = num / Rat(static_cast<long>((n + 1) * (2 * n - 1)));
    dp.canonicalize();
    return dp;
}

IntervalUnion tau_set(unsigned m, const CaseConfig& cfg) {
    cfg.validate();
    if (m < 1) throw std::invalid_argument("tau_set: m < 1");
    std::vector<Interval> parts;
    long lo = (1L << (m - 1)) + 1, hi = 1L << m;
    for (long H = lo; H <= hi; ++H) {
        Threshold theta_p = Threshold::power(Int(H), Rat(-(long)cfg.n + 1));
        Threshold theta_dp = small_deriv_threshold(cfg, H);
        Enclosure dp_bound = theta_dp.enclosure(64);
        Rat p_bound = theta_p.enclosure(64).hi;
        FamilyRange fam{FamilySpec{cfg.n, H, {}, std::nullopt}};
        fam.for_each([&](const IntPoly& p) {
            IntPoly dp = p.derivative();
            // interval-arithmetic prune on 8 subintervals of I
            Rat a = cfg.a(), b = cfg.b(), step = (b - a) / 8;
            bool dp_possible = false, p_possible = false;
            for (int i = 0; i < 8; ++i) {
                Enclosure piece{a + step * i, a + step * (i + 1)};
                Enclosure e = dp.eval(piece).abs();
                if (e.lo < dp_bound.hi) dp_possible = true;
                Enclosure ep = p.eval(piece).abs();
                if (ep.lo < p_bound) p_possible = true;
                if (dp_possible && p_possible) break;
            }
            if (!dp_possible || !p_possible) return;
            IntervalUnion sp = solve_abs_lt(p, theta_p, cfg.I);
            if (sp.empty()) return;
            IntervalUnion sdp = solve_abs_lt(dp, theta_dp, cfg.I);
            IntervalUnion both = iu_intersect(sp, sdp);
            for (const Interval& part : both.parts()) parts.push_back(part);
        });
    }
    return IntervalUnion::from_parts(std::move(parts));
}

}  // namespace dioph
