#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cyccover/construct.hpp"
#include "cyccover/isbell.hpp"

using namespace cyccover;

TEST_CASE("build_isbell_group degrees and closure") {
    Subspace W = thm31(2, 2).subspace;  // codim 1 in F_2^3
    PermGroup H = build_isbell_group(2, 3, W);
    CHECK(H.degree == 6);  // p^a * b = 2 * 3
    // |H| divides |G| = p^b * b
    CHECK(24 % H.order() == 0);
    for (const auto& g : H.elements) {
        std::vector<char> seen(H.degree, 0);
        for (int x : g) {
            CHECK(x >= 0);
            CHECK(x < H.degree);
            CHECK_FALSE(seen[x]);
            seen[x] = 1;
        }
    }

    CHECK_THROWS_AS(build_isbell_group(2, 4, full_space(make_field(2, 1), 4)), NotCoprime);
    CHECK_THROWS_AS(
        build_isbell_group(2, 3, rref(make_field(2, 1), 3, {{1, 0, 0}})), NotCovering);
    CHECK_THROWS_AS(build_isbell_group(2, 3, W, /*cap=*/4), CapExceeded);
}

TEST_CASE("acceptance instances") {
    struct Case {
        long p;
        int b, a;
        long long degree;
    };
    for (auto [p, b, a, degree] :
         {Case{2, 3, 1, 6}, Case{2, 7, 2, 28}, Case{3, 8, 1, 24}}) {
        CAPTURE(p);
        CAPTURE(b);
        Subspace W = default_isbell_witness(p, b);
        CHECK(codim(W) == a);
        PermGroup H = build_isbell_group(p, b, W);
        IsbellReport R = verify_isbell(H, p);
        CHECK(R.degree == degree);
        CHECK(R.a == a);
        CHECK(R.b == b);
        CHECK(R.transitive);
        CHECK_FALSE(R.fpf_p_power_found);
        CHECK(R.m_p_lower == a + 1);
    }
}

TEST_CASE("verify_isbell on the trivial group") {
    PermGroup id;
    id.degree = 1;
    id.elements = {{0}};
    IsbellReport R = verify_isbell(id, 2);
    CHECK(R.transitive);
    CHECK_FALSE(R.fpf_p_power_found);
}

TEST_CASE("fixed-point-free detection is not vacuous") {
    // C_2 acting on itself regularly: the non-identity element is a
    // fixed-point-free 2-power element
    PermGroup C2;
    C2.degree = 2;
    C2.elements = {{0, 1}, {1, 0}};
    IsbellReport R = verify_isbell(C2, 2);
    CHECK(R.fpf_p_power_found);
}

TEST_CASE("p-power-order elements all fix a point in built groups") {
    Subspace W = default_isbell_witness(2, 7);
    PermGroup H = build_isbell_group(2, 7, W);
    for (const auto& g : H.elements) {
        // order from cycle structure
        std::vector<char> done(H.degree, 0);
        long long order = 1;
        for (int x = 0; x < H.degree; ++x) {
            if (done[x]) continue;
            long long len = 0;
            int y = x;
            do {
                done[y] = 1;
                ++len;
                y = g[y];
            } while (y != x);
            order = std::lcm(order, len);
        }
        long long t = order;
        while (t % 2 == 0) t /= 2;
        if (t == 1 && order > 1) {
            bool fixes = false;
            for (int x = 0; x < H.degree; ++x)
                if (g[x] == x) fixes = true;
            CHECK(fixes);
        }
    }
}

TEST_CASE("default witness selection") {
    // b = p^d - 1 picks the theorem 3.1 witness
    CHECK(codim(default_isbell_witness(2, 7)) == 2);
    CHECK(codim(default_isbell_witness(3, 8)) == 1);
    // otherwise h_search
    CHECK(codim(default_isbell_witness(2, 5)) == 2);
}
