#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dioph/roots.hpp"

using namespace dioph;

namespace {

const Rat kTol{1, 1000000000};
const Interval kI12 = Interval::closed(Rat(1), Rat(2));

double grid_measure(const IntPoly& p, double theta, double a, double b, double step) {
    double m = 0;
    for (double x = a; x <= b; x += step) {
        double v = 0;
        for (int i = p.coeffs().size() - 1; i >= 0; --i)
            v = v * x + p.coeff(i).get_d();
        if (std::abs(v) < theta) m += step;
    }
    return m;
}

}  // namespace

TEST_CASE("isolate_roots on the frozen examples") {
    RootList r = isolate_roots(IntPoly{-2, 0, 1}, kI12);
    REQUIRE(r.size() == 1);
    Enclosure iso = r.roots[0].root.enclosure(Rat(1, 1000));
    CHECK(iso.lo >= 1);
    CHECK(iso.hi <= Rat(3, 2));
    CHECK(r.roots[0].deriv_sign == 1);

    CHECK(isolate_roots(IntPoly{1, 0, 1}, Interval::closed(Rat(-10), Rat(10))).empty());

    IntPoly multi = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-2, 1};
    RootList rm = isolate_roots(multi, Interval::closed(Rat(0), Rat(3)));
    REQUIRE(rm.size() == 2);
    CHECK(compare(rm.roots[0].root, RealPoint(Rat(1))) == 0);
    CHECK(compare(rm.roots[1].root, RealPoint(Rat(2))) == 0);
}

TEST_CASE("root count is bounded by square-free degree; Descartes agrees with Sturm") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-10, 10);
    for (int t = 0; t < 100; ++t) {
        std::vector<Int> c;
        for (int i = 0; i < 5; ++i) c.emplace_back(coeff(rng));
        IntPoly p{c};
        if (p.is_zero()) continue;
        Interval I = Interval::closed(Rat(-4), Rat(4));
        int sturm = count_roots(p, I);
        CHECK(sturm <= std::max(p.square_free_part().degree(), 0));
        int desc = descartes_bound(p, Rat(-4), Rat(4));
        CHECK(desc >= sturm);
        if (desc <= 1) CHECK(desc == sturm);
    }
}

TEST_CASE("solve_abs_lt frozen examples") {
    IntervalUnion u1 = solve_abs_lt(IntPoly{0, 1}, Threshold::rational(Rat(1, 10)),
                                    Interval::closed(Rat(-1), Rat(1)));
    CHECK(u1.measure(kTol).lo == Rat(1, 5));
    CHECK_FALSE(u1.contains(RealPoint(Rat(1, 10))));  // strict boundary

    CHECK(solve_abs_lt(IntPoly{1, 0, 1}, Threshold::rational(Rat(1, 2)),
                       Interval::closed(Rat(-1), Rat(1)))
              .empty());

    Enclosure m = solve_abs_lt(IntPoly{-2, 0, 1}, Threshold::rational(Rat(1, 10)), kI12)
                      .measure(kTol);
    CHECK(m.lo > Rat(7073278, 100000000));  // sqrt(21/10) - sqrt(19/10)
    CHECK(m.hi < Rat(7073280, 100000000));
}

TEST_CASE("solve_abs_lt completeness at component midpoints and outside") {
    IntPoly p{1, -3, 0, 2};  // 2x^3-3x+1 = (x-1)(2x-1)(x+...)
    Threshold th = Threshold::rational(Rat(1, 5));
    Interval I = Interval::closed(Rat(-2), Rat(2));
    IntervalUnion u = solve_abs_lt(p, th, I);
    REQUIRE_FALSE(u.empty());
    for (const Interval& part : u.parts()) {
        Rat mid = rational_between(part.a, part.b);
        CHECK(rat_abs(p.eval(mid)) < Rat(1, 5));
        // just outside a refined endpoint, |P| >= theta
        Enclosure ea = part.a.enclosure(Rat(1, Int(1) << 40));
        Rat outside = ea.lo - Rat(1, 1000000000);
        if (outside > Rat(-2) && !u.contains(RealPoint(outside)))
            CHECK(rat_abs(p.eval(outside)) >= Rat(1, 5));
    }
}

TEST_CASE("solve_band frozen examples") {
    IntPoly dp{0, 2};  // 2x
    CHECK(solve_band(dp, Threshold::rational(Rat(0)), Threshold::rational(Rat(1)), kI12)
              .empty());
    IntervalUnion full =
        solve_band(dp, Threshold::rational(Rat(1)), Threshold::infinite(), kI12);
    CHECK(full.measure(kTol).lo == Rat(1));

    // |x| in [4^(-1/2), 1) on [0,2] -> [1/2, 1), cleared via q=2
    IntervalUnion band = solve_band(IntPoly{0, 1}, Threshold::power(Int(4), Rat(-1, 2)),
                                    Threshold::rational(Rat(1)),
                                    Interval::closed(Rat(0), Rat(2)));
    Enclosure m = band.measure(kTol);
    CHECK(m.lo == Rat(1, 2));
    CHECK(band.contains(RealPoint(Rat(1, 2))));
    CHECK_FALSE(band.contains(RealPoint(Rat(1))));
}

TEST_CASE("power thresholds compare exactly") {
    Threshold t = Threshold::power(Int(4), Rat(-1, 2));  // = 1/2
    CHECK(t.compare_abs(Rat(1, 2)) == 0);
    CHECK(t.compare_abs(Rat(49, 100)) < 0);
    CHECK(t.compare_abs(Rat(51, 100)) > 0);
    Threshold tt = Threshold::power(Int(32), Rat(-1, 10));  // 32^(-1/10) = 2^(-1/2)
    CHECK(tt.compare_abs(Rat(7, 10)) < 0);
    CHECK(tt.compare_abs(Rat(71, 100)) > 0);
    Enclosure e = tt.enclosure(64);
    CHECK(e.lo * e.lo < Rat(1, 2));
    CHECK(e.hi * e.hi > Rat(1, 2));
}

TEST_CASE("min_abs_on frozen examples") {
    auto [m1, w1] = min_abs_on(IntPoly{0, 2}, kI12, kTol);
    CHECK(m1.lo == Rat(2));
    CHECK(compare(w1, RealPoint(Rat(1))) == 0);

    auto [m2, w2] = min_abs_on(IntPoly{-2, 0, 1}, kI12, kTol);
    CHECK(m2.lo == 0);
    CHECK(m2.hi == 0);
    CHECK(sign_at(IntPoly{-2, 0, 1}, w2) == 0);  // witness is sqrt(2)

    auto [m3, w3] = min_abs_on(IntPoly{-1, 0, 3}, Interval::closed(Rat(0), Rat(1)), kTol);
    CHECK(m3.hi == 0);  // root 1/sqrt(3) inside
}

TEST_CASE("min_abs_on lower-bounds random samples") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> coeff(-8, 8);
    std::uniform_int_distribution<long> num(0, 100);
    for (int t = 0; t < 20; ++t) {
        std::vector<Int> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
        IntPoly p{c};
        if (p.is_zero()) continue;
        Interval J = Interval::closed(Rat(-1), Rat(2));
        auto [m, w] = min_abs_on(p, J, kTol);
        for (int s = 0; s < 10; ++s) {
            Rat x = Rat(-100 + 3 * num(rng), 100);
            CHECK(m.lo <= rat_abs(p.eval(x)) + kTol);
        }
    }
}

TEST_CASE("grid oracle agreement on a few fixed instances") {
    struct Case {
        IntPoly p;
        Rat theta;
    };
    for (const auto& c : {Case{IntPoly{1, -3, 0, 2}, Rat(1, 4)},
                          Case{IntPoly{-2, 1, 1}, Rat(1, 2)},
                          Case{IntPoly{3, -5, 0, 0, 1}, Rat(2)}}) {
        IntervalUnion u = solve_abs_lt(c.p, Threshold::rational(c.theta),
                                       Interval::closed(Rat(-2), Rat(2)));
        double exact = rat_double(u.measure(kTol).mid());
        double grid = grid_measure(c.p, rat_double(c.theta), -2, 2, 1e-5);
        CHECK(std::abs(exact - grid) < 1e-4);
    }
}
