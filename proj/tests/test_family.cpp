#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dioph/family.hpp"

using namespace dioph;

namespace {

std::vector<IntPoly> collect(const FamilyRange& fam) {
    std::vector<IntPoly> out;
    fam.for_each([&](const IntPoly& p) { out.push_back(p); });
    return out;
}

}  // namespace

TEST_CASE("frozen enumeration counts") {
    CHECK(FamilyRange{FamilySpec{1, 1, {}, std::nullopt}}.count() == 8);
    CHECK(FamilyRange{FamilySpec{2, 2, {}, std::nullopt}}.count() == 98);
    CHECK(FamilyRange{FamilySpec{2, 2, {1}, std::nullopt}}.count() == 16);
}

TEST_CASE("count identity across n <= 4, H <= 12") {
    for (unsigned n = 1; n <= 4; ++n)
        for (long H = 1; H <= 12; ++H) {
            if (n == 4 && H > 6) break;  // keep the loop under a second
            FamilyRange fam{FamilySpec{n, H, {}, std::nullopt}};
            CHECK(Int(fam.count()) == exact_height_count(n + 1, H));
        }
}

TEST_CASE("members are distinct, exact-height, and deterministic") {
    FamilyRange fam{FamilySpec{2, 2, {}, std::nullopt}};
    std::set<std::string> seen;
    fam.for_each([&](const IntPoly& p) {
        CHECK(p.height() == 2);
        CHECK_FALSE(p.is_zero());
        CHECK(seen.insert(p.str()).second);
    });
    CHECK(seen.size() == 98);

    // splitting at any cut reproduces the full stream
    auto whole = collect(fam);
    std::vector<IntPoly> split;
    std::uint64_t cut = fam.raw_size() / 3;
    fam.for_each(0, cut, [&](const IntPoly& p) { split.push_back(p); });
    fam.for_each(cut, fam.raw_size(), [&](const IntPoly& p) { split.push_back(p); });
    REQUIRE(split.size() == whole.size());
    for (size_t i = 0; i < whole.size(); ++i) CHECK(split[i] == whole[i]);
}

TEST_CASE("residual families fix the residual coefficients") {
    // P_2(H=1, k=0, m=1, R=x^2): members x^2 + a1 x + a0
    FamilyRange fam{FamilySpec{2, 1, {0, 1}, IntPoly{0, 0, 1}}};
    auto members = collect(fam);
    CHECK(members.size() == 9);
    for (const auto& p : members) {
        CHECK(p.coeff(2) == 1);
        CHECK(p.height() == 1);
    }
}

TEST_CASE("canonical-k decomposition partitions the zero-coefficient members") {
    // canonical k = smallest index with a_k = 0; summing members of
    // P_n(H,k) that have no earlier zero reproduces #{P : some a_j = 0}
    unsigned n = 2;
    long H = 2;
    std::uint64_t with_zero = 0;
    FamilyRange all{FamilySpec{n, H, {}, std::nullopt}};
    all.for_each([&](const IntPoly& p) {
        for (unsigned j = 0; j <= n; ++j)
            if (sgn(p.coeff(j)) == 0) {
                ++with_zero;
                break;
            }
    });
    std::uint64_t canonical_sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        FamilyRange fk{FamilySpec{n, H, {k}, std::nullopt}};
        fk.for_each([&](const IntPoly& p) {
            for (unsigned j = 0; j < k; ++j)
                if (sgn(p.coeff(j)) == 0) return;
            ++canonical_sum;
        });
    }
    CHECK(canonical_sum == with_zero);
}

TEST_CASE("primitive irreducible counts") {
    CHECK(count_primitive_irreducible(2, 1) == 10);
    CHECK(count_primitive_irreducible(1, 1) == 6);  // {+-x, +-x+-1}
    CHECK(exact_height_count(2, 3) == 24);          // #P_1(3) = 7^2 - 5^2

    // #P*_n(H) <= #P_n(H) always
    for (long H = 1; H <= 4; ++H)
        CHECK(Int(static_cast<long>(count_primitive_irreducible(2, H))) <=
              exact_height_count(3, H));
}

TEST_CASE("FamilySpec validation") {
    CHECK_THROWS(FamilySpec{0, 1, {}, std::nullopt}.validate());
    CHECK_THROWS(FamilySpec{2, 0, {}, std::nullopt}.validate());
    // residual must vanish at the zeroed indices
    CHECK_THROWS(FamilySpec{2, 1, {0}, IntPoly{1, 0, 1}}.validate());
    // residual height must not exceed H
    CHECK_THROWS(FamilySpec{2, 1, {0}, IntPoly{0, 0, 5}}.validate());
}
