#ifndef DIOPH_EXPERIMENTS_HPP
#define DIOPH_EXPERIMENTS_HPP

#include "dioph/casework.hpp"

namespace dioph {

struct MeasureRow {
    DerivCase deriv_case;
    unsigned n = 0;
    long H = 0;
    std::string psi_id;
    Rat delta;
    Interval I;
    Enclosure measure;               // total measure of the union
    std::optional<Rat> measure_rat;  // exact value when all endpoints rational
    std::uint64_t poly_count = 0;
    std::uint64_t essential_count = 0;
    std::uint64_t nonessential_count = 0;
    double wall_ms = 0;
    double ratio = 0;  // measure / (H^(n-1) * psi(H)), filled by scaling_sweep
};

/// Measure of the union over P in P_n(H) of sigma(P) in one derivative
/// regime.  For MEDIUM also classifies components as essential or not
/// (across the whole family).  `workers` shards the family by raw odometer
/// index; results are merged in shard order, so output is independent of
/// the worker count.
MeasureRow measure_case(const CaseConfig& cfg, long H, DerivCase which,
                        unsigned workers = 1);

struct ScalingReport {
    std::vector<MeasureRow> rows;
    /// log2(measure ratio) per height doubling, from consecutive rows with
    /// positive measure; empty if fewer than two such rows.
    std::vector<double> log2_ratios;
};

/// measure_case over a doubling ladder of heights.
ScalingReport scaling_sweep(const CaseConfig& cfg, const std::vector<long>& heights,
                            DerivCase which, unsigned workers = 1);

struct BcRow {
    unsigned m = 0;
    Enclosure tau_measure;
    Enclosure partial_sum;  // sum of tau-measures up to this m
};

/// Partial sums of |tau_m| for m = 1..M (Borel-Cantelli bookkeeping).
std::vector<BcRow> bc_partial_sums(const CaseConfig& cfg, unsigned M);

struct CountRow {
    unsigned n = 0;
    long H = 0;
    std::uint64_t exact_height = 0;           // #{height exactly H}
    std::uint64_t primitive_irreducible = 0;  // #P*_n(H)
    double ratio_to_hn = 0;                   // #P*_n(H) / H^n
};

std::vector<CountRow> count_sweep(unsigned n, const std::vector<long>& heights);

struct BestApproxRow {
    long H = 0;
    IntPoly p;         // minimizer of |P(x)| over P_n with height <= H
    Enclosure value;   // |P(x)|; a point enclosure {0} when x is a root
    bool exact_zero = false;
    double log_ratio;  // -log|P(x)| / log H (+inf when exact_zero)
};

/// min { |P(x)| : P in Z[t], deg <= n, 0 < height <= H } per height, with
/// the derived w_n(x) exponent estimate.  x may be rational or algebraic;
/// candidates are ranked exactly (adaptive refinement, sign test on
/// P^2 - Q^2 to break enclosure ties).
std::vector<BestApproxRow> wn_table(const RealPoint& x, unsigned n,
                                    const std::vector<long>& heights);

inline BestApproxRow best_approx(const RealPoint& x, unsigned n, long H) {
    return wn_table(x, n, {H}).front();
}

}  // namespace dioph

#endif
