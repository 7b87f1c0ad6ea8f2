#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dioph/rational.hpp"

using namespace dioph;

TEST_CASE("parse_rat handles fractions, decimals and exponents") {
    CHECK(parse_rat("1/10") == Rat(1, 10));
    CHECK(parse_rat("-3/4") == Rat(-3, 4));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK(parse_rat("1e-9") == Rat(1, 1000000000));
    CHECK(parse_rat("2.5e1") == Rat(25));
    CHECK_THROWS(parse_rat("abc"));
    CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("rat_str round-trips") {
    for (const char* s : {"1/10", "-3/4", "7", "0"}) {
        Rat q = parse_rat(s);
        CHECK(parse_rat(rat_str(q)) == q);
    }
}

TEST_CASE("enclosure arithmetic is outward-sound") {
    Enclosure a{Rat(1, 3), Rat(1, 2)};
    Enclosure b{Rat(-1, 4), Rat(1, 4)};
    Enclosure s = a + b;
    CHECK(s.lo == Rat(1, 12));
    CHECK(s.hi == Rat(3, 4));
    Enclosure p = a * b;
    CHECK(p.lo == Rat(-1, 8));
    CHECK(p.hi == Rat(1, 8));
    CHECK(a.abs().lo == Rat(1, 3));
    CHECK(b.abs().lo == 0);
    CHECK(b.abs().hi == Rat(1, 4));
    Enclosure inv = a.inverse();
    CHECK(inv.lo == Rat(2));
    CHECK(inv.hi == Rat(3));
    CHECK_THROWS(b.inverse());
}

TEST_CASE("root_enclosure brackets sqrt(2) tightly") {
    Enclosure e = root_enclosure(Rat(2), 2, 80);
    CHECK(e.lo * e.lo <= 2);
    CHECK(e.hi * e.hi >= 2);
    CHECK(e.width() <= Rat(1, Int(1) << 80));
}

TEST_CASE("root_enclosure is exact on perfect powers") {
    Enclosure e = root_enclosure(Rat(27, 8), 3, 16);
    CHECK(e.is_point());
    CHECK(e.lo == Rat(3, 2));
}

TEST_CASE("rational_power_enclosure: exact and certified cases") {
    Enclosure exact = rational_power_enclosure(Rat(1024), Rat(-4, 5), 32);
    CHECK(exact.is_point());
    CHECK(exact.lo == Rat(1, 256));

    // 2^(1/2) irrational: point-free enclosure that still brackets it
    Enclosure e = rational_power_enclosure(Rat(2), Rat(1, 2), 64);
    CHECK_FALSE(e.is_point());
    CHECK(e.lo * e.lo < 2);
    CHECK(e.hi * e.hi > 2);
    CHECK(e.width() <= Rat(1, Int(1) << 64));
}
