#include "dioph/experiments.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace dioph {

namespace {

struct ShardResult {
    std::vector<Interval> parts;
    std::vector<MediumComponent> comps;
    std::vector<std::uint64_t> comp_owner;  // raw index of the owning member
    std::uint64_t polys = 0;
};

ShardResult run_shard(const FamilyRange& fam, std::uint64_t begin, std::uint64_t end,
                      const CaseConfig& cfg, DerivCase which) {
    ShardResult res;
    for (std::uint64_t raw = begin; raw < end; ++raw) {
        auto mp = fam.member_at(raw);
        if (!mp) continue;
        ++res.polys;
        StratifiedSet s = sigma_case(*mp, cfg, which);
        if (s.set.empty()) continue;
        for (const Interval& part : s.set.parts()) res.parts.push_back(part);
        if (which == DerivCase::MEDIUM) {
            for (size_t i = 0; i < s.set.parts().size(); ++i) {
                Enclosure r1 = (Enclosure{Rat(s.H)} * s.dp_at_gamma_abs[i]).inverse();
                IntervalUnion s1 = iu_dilate(IntervalUnion{s.set.parts()[i]}, r1, cfg.I,
                                             Direction::OUTER);
                MediumComponent rec;
                rec.p = *mp;
                rec.sigma = s.set.parts()[i];
                if (!s1.empty()) {
                    rec.sigma1_lo = s1.parts().front().a.rational();
                    rec.sigma1_hi = s1.parts().back().b.rational();
                }
                res.comps.push_back(std::move(rec));
                res.comp_owner.push_back(raw);
            }
        }
    }
    return res;
}

}  // namespace

MeasureRow measure_case(const CaseConfig& cfg, long H, DerivCase which, unsigned workers) {
    cfg.validate();
    if (workers == 0) workers = 1;
    auto t0 = std::chrono::steady_clock::now();
    MeasureRow row;
    row.deriv_case = which;
    row.n = cfg.n;
    row.H = H;
    row.psi_id = cfg.psi.id();
    row.delta = cfg.delta;
    row.I = cfg.I;

    FamilyRange fam{FamilySpec{cfg.n, H, {}, std::nullopt}};
    std::uint64_t total = fam.raw_size();
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    std::vector<ShardResult> shard(workers);
    std::vector<std::thread> threads;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = w * chunk, e = std::min(total, b + chunk);
        threads.emplace_back([&, w, b, e] { shard[w] = run_shard(fam, b, e, cfg, which); });
    }
    for (auto& t : threads) t.join();

    // deterministic merge: shards concatenated in shard (= raw index) order
    std::vector<Interval> parts;
    std::vector<MediumComponent> comps;
    std::vector<std::uint64_t> owner;
    for (auto& s : shard) {
        row.poly_count += s.polys;
        for (auto& part : s.parts) parts.push_back(part);
        for (size_t i = 0; i < s.comps.size(); ++i) {
            comps.push_back(std::move(s.comps[i]));
            owner.push_back(s.comp_owner[i]);
        }
    }
    IntervalUnion u = IntervalUnion::from_parts(std::move(parts));
    row.measure = u.measure(cfg.tol);
    if (row.measure.lo == row.measure.hi) row.measure_rat = row.measure.lo;

    if (which == DerivCase::MEDIUM) {
        for (size_t i = 0; i < comps.size(); ++i) {
            bool essential = true;
            for (size_t j = 0; j < comps.size(); ++j) {
                if (owner[i] == owner[j]) continue;
                if (std::max(comps[i].sigma1_lo, comps[j].sigma1_lo) <
                    std::min(comps[i].sigma1_hi, comps[j].sigma1_hi)) {
                    essential = false;
                    break;
                }
            }
            if (essential)
                ++row.essential_count;
            else
                ++row.nonessential_count;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

ScalingReport scaling_sweep(const CaseConfig& cfg, const std::vector<long>& heights,
                            DerivCase which, unsigned workers) {
    ScalingReport rep;
    for (long H : heights) {
        MeasureRow row = measure_case(cfg, H, which, workers);
        double psi = rat_double(cfg.psi.eval_enclosure(H).mid());
        double denom = std::pow(static_cast<double>(H), static_cast<double>(cfg.n) - 1) * psi;
        row.ratio = denom > 0 ? rat_double(row.measure.mid()) / denom : 0;
        rep.rows.push_back(std::move(row));
    }
    for (size_t i = 1; i < rep.rows.size(); ++i) {
        double prev = rat_double(rep.rows[i - 1].measure.mid());
        double cur = rat_double(rep.rows[i].measure.mid());
        double hr = std::log2(static_cast<double>(rep.rows[i].H) /
                              static_cast<double>(rep.rows[i - 1].H));
        if (prev > 0 && cur > 0 && hr > 0)
            rep.log2_ratios.push_back(std::log2(cur / prev) / hr);
    }
    return rep;
}

std::vector<BcRow> bc_partial_sums(const CaseConfig& cfg, unsigned M) {
    cfg.validate();
    std::vector<BcRow> rows;
    Enclosure running{Rat(0)};
    for (unsigned m = 1; m <= M; ++m) {
        BcRow r;
        r.m = m;
        r.tau_measure = tau_set(m, cfg).measure(cfg.tol);
        running = running + r.tau_measure;
        r.partial_sum = running;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<CountRow> count_sweep(unsigned n, const std::vector<long>& heights) {
    std::vector<CountRow> rows;
    for (long H : heights) {
        CountRow r;
        r.n = n;
        r.H = H;
        r.exact_height = exact_height_count(n + 1, H).get_ui();
        r.primitive_irreducible = count_primitive_irreducible(n, H);
        r.ratio_to_hn = static_cast<double>(r.primitive_irreducible) /
                        std::pow(static_cast<double>(H), static_cast<double>(n));
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

// Exact comparison of |P(x)| vs |Q(x)|: sign of (P^2 - Q^2)(x).
int cmp_abs_at(const IntPoly& p, const IntPoly& q, const RealPoint& x) {
    return sign_at(p * p - q * q, x);
}

}  // namespace

std::vector<BestApproxRow> wn_table(const RealPoint& x, unsigned n,
                                    const std::vector<long>& heights) {
    std::vector<long> hs = heights;
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.empty() || hs.front() < 1) throw std::invalid_argument("wn_table: heights");

    double xd = rat_double(x.enclosure(Rat(1, 1L << 40)).mid());
    std::vector<BestApproxRow> rows;
    IntPoly best_p;
    bool have_best = false, best_zero = false;
    double best_d = 0;  // double upper estimate of the current minimum
    long prev = 0;
    for (long H : hs) {
        for (long h = prev + 1; h <= H; ++h) {
            FamilyRange fam{FamilySpec{n, h, {}, std::nullopt}};
            fam.for_each([&](const IntPoly& p) {
                if (best_zero) return;
                // double prefilter, exact confirmation for near-winners
                double v = 0, pw = 1;
                for (unsigned i = 0; i <= n; ++i) {
                    v += rat_double(Rat(p.coeff(i))) * pw;
                    pw *= xd;
                }
                if (have_best && std::abs(v) > best_d * 1.25 + 1e-12 * h) return;
                if (!have_best || cmp_abs_at(p, best_p, x) < 0) {
                    best_p = p;
                    have_best = true;
                    best_zero = sign_at(p, x) == 0;
                    best_d = rat_double(eval_at(p, x, Rat(1, 1L << 60)).abs().hi);
                }
            });
        }
        prev = H;
        BestApproxRow r;
        r.H = H;
        r.p = best_p;
        r.exact_zero = best_zero;
        if (best_zero) {
            r.value = Enclosure{Rat(0)};
            r.log_ratio = std::numeric_limits<double>::infinity();
        } else {
            Rat w(1, Int(1) << 80);
            r.value = eval_at(best_p, x, w).abs();
            double bv = rat_double(r.value.mid());
            r.log_ratio = -std::log(bv) / std::log(static_cast<double>(H));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace dioph
