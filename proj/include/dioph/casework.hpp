#ifndef DIOPH_CASEWORK_HPP
#define DIOPH_CASEWORK_HPP

#include <map>

#include "dioph/family.hpp"
#include "dioph/roots.hpp"

namespace dioph {

/// The approximation function: either c * H^(-w) or an explicit table.
struct PsiSpec {
    enum Kind { POWER_LAW, TABLE } kind = POWER_LAW;
    Rat c{1};
    Rat w{3};
    std::map<long, Rat> table;

    static PsiSpec power_law(Rat c, Rat w) { return {POWER_LAW, std::move(c), std::move(w), {}}; }
    static PsiSpec from_table(std::map<long, Rat> t) { return {TABLE, Rat(0), Rat(0), std::move(t)}; }

    /// Exact value when available (integer-exponent power law, table entry).
    std::optional<Rat> eval_exact(long H) const;
    Enclosure eval_enclosure(long H, unsigned prec_bits = 96) const;
    /// Threshold usable in the exact solvers (works for fractional w too).
    Threshold threshold(long H) const;
    std::string id() const;
};

enum class DerivCase { BIG, MEDIUM, SMALL };
std::string case_name(DerivCase c);

struct CaseConfig {
    unsigned n = 2;
    Rat delta{1, 10};   // 1/delta must be a positive integer
    Interval I = Interval::closed(Rat(1), Rat(2));
    PsiSpec psi;
    Rat tol{1, 1000000000};

    void validate() const;
    Rat a() const { return I.a.rational(); }
    Rat b() const { return I.b.rational(); }
};

/// sigma(P) for one derivative regime, with the per-component minimizers of
/// |P'| (MEDIUM only).
struct StratifiedSet {
    IntPoly p;
    DerivCase deriv_case;
    long H = 0;
    IntervalUnion set;
    std::vector<RealPoint> gamma;            // per component (MEDIUM)
    std::vector<Enclosure> dp_at_gamma_abs;  // |P'(gamma)| per component
};

StratifiedSet sigma_case(const IntPoly& p, const CaseConfig& cfg, DerivCase which);

/// (I', I''): I'' is the pair of edge strips of width 4*psi(H), I' the rest.
std::pair<IntervalUnion, IntervalUnion> edge_strips(const Interval& I, const Rat& psiH);

/// Roots alpha of P in I with |P'(alpha)| >= 1/2.
RootList z_set(const IntPoly& p, const Interval& I);

/// Clipped interval around alpha of radius 2*psi(H)/|P'(alpha)|, outer
/// enclosure direction.
IntervalUnion sigma_alpha(const IntPoly& p, const RealPoint& alpha, const Rat& psiH,
                          const Interval& I);

struct Lemma2Report {
    long H = 0;
    std::uint64_t polys_tested = 0;
    std::uint64_t points_tested = 0;
    std::uint64_t points_passed = 0;
    struct Failure {
        IntPoly p;
        Rat x0_approx;
    };
    std::vector<Failure> failures;
    bool all_passed() const { return points_passed == points_tested; }
};

/// Checks Lemma 2 for every P in P_n(H): each tested point x0 of
/// sigma_BIG(P) ∩ I' must admit a root alpha of P in I with
/// |P'(alpha)| > |P'(x0)|/2 and |x0 - alpha| < 2 psi(H)/|P'(alpha)|.
Lemma2Report lemma2_certify(const CaseConfig& cfg, long H);

struct RootSumDiagnostic {
    std::vector<Rat> breakpoints;       // w_0 .. w_s (rational samples)
    std::vector<Enclosure> piece_sums;  // per piece, sum of 1/|R~'(alpha)|
    std::uint64_t root_count = 0;
};

/// Eq.-(16)-style diagnostic for the family P_n(H,k,R): partitions I at the
/// critical points of R~' (R~ = x^-k R) and sums 1/|R~'(alpha)| over
/// alpha in Z_{I,R} per piece.
RootSumDiagnostic root_sum_diagnostic(unsigned k, const IntPoly& R, const CaseConfig& cfg,
                                      long H);

struct Expansions {
    IntervalUnion sigma1;
    IntervalUnion sigma2;
    bool subset_certified = false;  // sigma1 ⊆ sigma2
};

/// sigma1/sigma2 dilations of a MEDIUM stratified set; certifies
/// sigma1 ⊆ sigma2 with directed enclosures.
Expansions gamma_and_expansions(const StratifiedSet& s, const CaseConfig& cfg);

/// One sigma(P)-component with its sigma1 expansion, for the essential sweep.
struct MediumComponent {
    IntPoly p;
    Interval sigma;       // the component itself
    Rat sigma1_lo, sigma1_hi;  // rational outer endpoints of sigma1
    bool essential = true;
    // witness for a non-essential verdict
    IntPoly q;
    Int b_m, b_k;
};

struct EssentialVerdictList {
    unsigned k = 0, m = 0;
    IntPoly R;
    std::vector<MediumComponent> components;
    std::uint64_t essential_count() const {
        std::uint64_t c = 0;
        for (const auto& e : components) c += e.essential;
        return c;
    }
};

/// Essential/non-essential classification of all MEDIUM components in the
/// pair family P_n(H,k,m,R): a component is essential iff its sigma1 is
/// disjoint from the sigma1 of every component of every other member.
EssentialVerdictList classify_essential(unsigned k, unsigned m, const IntPoly& R,
                                        long H, const CaseConfig& cfg);

struct DiffPairReport {
    Int b_m, b_k;
    bool bm_nonzero = true;
    double c0 = 0;         // max |P(x)| / H^(-1+4d) over sample points
    double c1 = 0;         // max |P'(x)| / H^(2d)
    double resolvent = 0;  // max |x^(m-k) + b_k/b_m| * |b_m| * H^(1-4d)
    std::uint64_t points = 0;
};

/// Eq. (20)/(21) diagnostics for a non-essential pair on its overlap.
DiffPairReport diff_pair_check(const IntPoly& p, const IntPoly& q, unsigned k, unsigned m,
                               const CaseConfig& cfg, const IntervalUnion& overlap, long H);

struct CkWindowResult {
    IntervalUnion set;
    std::uint64_t components = 0;
    std::uint64_t component_bound = 0;  // k(k+1)/2 + 1
    Enclosure max_length;               // 0 when empty
    std::optional<Enclosure> length_bound;  // nullopt = +infinity
    bool count_ok = false;
    bool length_ok = false;
};

/// The C^k window set {|f| <= a0, b_j <= |f^(j)| <= a_j} on (a,b) with its
/// component-count and length certificate.  alphas[j] (j = 0..k-1) may be
/// nullopt (+infinity); betas[j-1] holds b_j for j = 1..k.
CkWindowResult ck_window(const IntPoly& f, unsigned k,
                         const std::vector<std::optional<Rat>>& alphas,
                         const std::vector<Rat>& betas, const Rat& a, const Rat& b);

Rat delta_prime(unsigned n, const Rat& delta);

/// tau_m: union over 2^(m-1) < H <= 2^m and P in P_n(H) of
/// {x in I : |P(x)| < H^(-n+1), |P'(x)| < H^(-delta)}.
IntervalUnion tau_set(unsigned m, const CaseConfig& cfg);

}  // namespace dioph

#endif
