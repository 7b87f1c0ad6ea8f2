#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dioph/poly.hpp"

using namespace dioph;

TEST_CASE("evaluation at rational points") {
    IntPoly p{-2, 0, 1};  // x^2 - 2
    CHECK(p.eval(Rat(3, 2)) == Rat(1, 4));
    IntPoly q{1, -3, 0, 2};  // 2x^3 - 3x + 1
    CHECK(q.eval(Rat(2)) == Rat(11));
}

TEST_CASE("enclosure evaluation brackets the range") {
    IntPoly p{-2, 0, 1};
    Enclosure e = p.eval(Enclosure{Rat(141, 100), Rat(142, 100)});
    CHECK(e.contains_zero());  // sign change across sqrt(2)
}

TEST_CASE("derivatives") {
    IntPoly p{-2, 0, 1};
    CHECK(p.derivative() == IntPoly{0, 2});
    IntPoly cube{0, 0, 0, 1};
    CHECK(cube.derivative(3) == IntPoly{6});  // n! * a_n
    IntPoly c{5};
    CHECK(c.derivative().is_zero());
}

TEST_CASE("height and degree") {
    IntPoly p{1, -3, 0, 2};
    CHECK(p.degree() == 3);
    CHECK(p.height() == 3);
    CHECK(IntPoly{0, 0, 7, 0}.degree() == 2);
    CHECK(IntPoly::zero().is_zero());
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = IntPoly{4, 0, 2}.content_and_primitive();  // 2x^2+4
    CHECK(c1 == 2);
    CHECK(p1 == IntPoly{2, 0, 1});
    auto [c2, p2] = IntPoly{-2, 0, 1}.content_and_primitive();
    CHECK(c2 == 1);
    CHECK(p2 == IntPoly{-2, 0, 1});
    auto [c3, p3] = IntPoly{0, -9, 0, 6}.content_and_primitive();  // 6x^3-9x
    CHECK(c3 == 3);
    CHECK(p3 == IntPoly{0, -3, 0, 2});
}

TEST_CASE("square-free part drops multiplicities") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{-2, 1};  // (x-1)^2(x-2)
    IntPoly sf = p.square_free_part();
    CHECK(sf.degree() == 2);
    CHECK(sf.sign_at(Rat(1)) == 0);
    CHECK(sf.sign_at(Rat(2)) == 0);
}

TEST_CASE("irreducibility on the frozen examples") {
    CHECK(is_irreducible(IntPoly{-2, 0, 1}));  // x^2-2
    std::pair<IntPoly, IntPoly> w;
    CHECK_FALSE(is_irreducible(IntPoly{-1, 0, 1}, &w));  // x^2-1
    CHECK(w.first * w.second == IntPoly{-1, 0, 1});
    CHECK(is_irreducible(IntPoly{1, 1, 1}));  // x^2+x+1
}

TEST_CASE("irreducibility witnesses multiply back for quartics") {
    // (x^2+1)(x^2-3) and (2x+1)(x^3-x+1)
    for (IntPoly p : {IntPoly{1, 0, 1} * IntPoly{-3, 0, 1},
                      IntPoly{1, 2} * IntPoly{1, -1, 0, 1}}) {
        std::pair<IntPoly, IntPoly> w;
        CHECK_FALSE(is_irreducible(p, &w));
        CHECK(w.first * w.second == p);
        CHECK(w.first.degree() >= 1);
        CHECK(w.second.degree() >= 1);
    }
    CHECK(is_irreducible(IntPoly{2, 0, 0, 0, 1}));  // x^4+2 (Eisenstein)
}

TEST_CASE("derivative is linear on random pairs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int t = 0; t < 50; ++t) {
        std::vector<Int> a, b;
        for (int i = 0; i < 5; ++i) {
            a.emplace_back(coeff(rng));
            b.emplace_back(coeff(rng));
        }
        IntPoly p{a}, q{b};
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
}
