#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dioph/experiments.hpp"
#include "dioph/report.hpp"

using namespace dioph;

namespace {

const Rat kTol{1, 1000000000};

CaseConfig cfg_n1() {
    CaseConfig cfg;
    cfg.n = 1;
    cfg.delta = Rat(1, 10);
    cfg.I = Interval::closed(Rat(1, 4), Rat(3, 4));
    cfg.psi = PsiSpec::power_law(Rat(1), Rat(2));
    cfg.tol = kTol;
    return cfg;
}

}  // namespace

TEST_CASE("measure_case BIG n=1 H=1 matches a grid oracle") {
    CaseConfig cfg = cfg_n1();
    MeasureRow row = measure_case(cfg, 1, DerivCase::BIG);
    CHECK(row.poly_count == 8);

    // oracle: union over the 8 height-1 linear polynomials of
    // {|a1 x + a0| < 1, |a1| >= 1} on [1/4, 3/4]
    double step = 1e-6, grid = 0;
    for (double x = 0.25; x <= 0.75; x += step) {
        bool in = false;
        for (int a1 = -1; a1 <= 1 && !in; ++a1)
            for (int a0 = -1; a0 <= 1 && !in; ++a0) {
                if (std::max(std::abs(a1), std::abs(a0)) != 1) continue;
                if (std::abs(a1) >= 1 && std::abs(a1 * x + a0) < 1) in = true;
            }
        if (in) grid += step;
    }
    CHECK(std::abs(rat_double(row.measure.mid()) - grid) < 1e-5);
}

TEST_CASE("measure_case is bit-identical across worker counts") {
    CaseConfig cfg = cfg_n1();
    cfg.n = 2;
    cfg.I = Interval::closed(Rat(1), Rat(2));
    cfg.psi = PsiSpec::power_law(Rat(1), Rat(1));
    for (DerivCase which : {DerivCase::BIG, DerivCase::MEDIUM, DerivCase::SMALL}) {
        MeasureRow a = measure_case(cfg, 2, which, 1);
        MeasureRow b = measure_case(cfg, 2, which, 7);
        CHECK(a.measure.lo == b.measure.lo);
        CHECK(a.measure.hi == b.measure.hi);
        CHECK(a.poly_count == b.poly_count);
        CHECK(a.essential_count == b.essential_count);
        CHECK(a.nonessential_count == b.nonessential_count);
    }
}

TEST_CASE("stratified BIG measure never exceeds the unstratified union") {
    CaseConfig cfg = cfg_n1();
    cfg.n = 2;
    cfg.I = Interval::closed(Rat(1), Rat(2));
    MeasureRow row = measure_case(cfg, 3, DerivCase::BIG);
    std::vector<Interval> parts;
    FamilyRange fam{FamilySpec{2, 3, {}, std::nullopt}};
    fam.for_each([&](const IntPoly& p) {
        IntervalUnion u = solve_abs_lt(p, cfg.psi.threshold(3), cfg.I);
        for (auto& part : u.parts()) parts.push_back(part);
    });
    Enclosure whole = IntervalUnion::from_parts(std::move(parts)).measure(kTol);
    CHECK(row.measure.lo <= whole.hi + kTol);
}

TEST_CASE("scaling_sweep fills ratios against H^(n-1) psi(H)") {
    CaseConfig cfg = cfg_n1();
    ScalingReport rep = scaling_sweep(cfg, {1, 2, 4}, DerivCase::BIG);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& r : rep.rows) {
        double denom = std::pow(static_cast<double>(r.H), 0.0) *
                       rat_double(cfg.psi.eval_exact(r.H).value());
        if (denom > 0 && rat_double(r.measure.mid()) > 0)
            CHECK(r.ratio ==
                  doctest::Approx(rat_double(r.measure.mid()) / denom).epsilon(1e-9));
    }
}

TEST_CASE("bc partial sums are nondecreasing") {
    CaseConfig cfg = cfg_n1();
    cfg.n = 2;
    cfg.I = Interval::closed(Rat(1), Rat(2));
    cfg.psi = PsiSpec::power_law(Rat(1), Rat(3));
    auto rows = bc_partial_sums(cfg, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].tau_measure.lo >= 0);
    CHECK(rows[1].partial_sum.hi >= rows[0].partial_sum.hi);
    CHECK(rows[1].partial_sum.lo >=
          rows[0].partial_sum.lo + rows[1].tau_measure.lo - kTol);
}

TEST_CASE("count_sweep frozen values") {
    auto rows = count_sweep(2, {1, 2});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].exact_height == 26);
    CHECK(rows[0].primitive_irreducible == 10);
    CHECK(rows[1].exact_height == 98);
    CHECK(rows[1].primitive_irreducible <= 98);
    CHECK(rows[1].primitive_irreducible ==
          count_primitive_irreducible(2, 2));  // internal consistency
}

TEST_CASE("wn_table: rational x is hit exactly") {
    auto rows = wn_table(RealPoint(Rat(1, 3)), 1, {1, 3});
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].exact_zero);  // heights <= 1 cannot produce 3x-1
    CHECK(rows[1].exact_zero);        // 3x - 1 at height 3
    CHECK(rows[1].value.is_point());
    CHECK(rows[1].value.lo == 0);
}

TEST_CASE("wn_table: algebraic x of degree <= n is hit exactly") {
    RealPoint sqrt2{std::make_shared<AlgRoot>(IntPoly{-2, 0, 1},
                                              Enclosure{Rat(1), Rat(3, 2)}, -1)};
    auto rows = wn_table(sqrt2, 2, {2});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].exact_zero);
    CHECK(sign_at(rows[0].p, sqrt2) == 0);
}

TEST_CASE("wn_table Dirichlet check for sqrt(2), n=1") {
    RealPoint sqrt2{std::make_shared<AlgRoot>(IntPoly{-2, 0, 1},
                                              Enclosure{Rat(1), Rat(3, 2)}, -1)};
    // Heights where the Dirichlet-style bound is checkable under the
    // max-coefficient height: 5x-7 (height 7) gives |5 sqrt2 - 7| < 1/8.
    auto rows = wn_table(sqrt2, 1, {7, 10, 20});
    for (const auto& r : rows) {
        CHECK_FALSE(r.exact_zero);
        CHECK(r.value.hi < Rat(1, r.H + 1));  // |a1 sqrt2 + a0| < 1/(H+1)
    }
}

TEST_CASE("wn_table best value at H=1, x=3/2 is 1/2") {
    auto rows = wn_table(RealPoint(Rat(3, 2)), 1, {1});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].value.lo <= Rat(1, 2));
    CHECK(rows[0].value.hi >= Rat(1, 2));
    CHECK(rat_abs(rows[0].p.eval(Rat(3, 2))) == Rat(1, 2));
}
