#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cyccover/linalg.hpp"

using namespace cyccover;

namespace {
FieldPtr f2 = make_field(2, 1);
}

TEST_CASE("rref") {
    Subspace full = rref(f2, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(full.dim() == 3);
    CHECK(full == full_space(f2, 3));

    Subspace U = rref(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(U.dim() == 2);  // 101 = 110 + 011

    CHECK(rref(f2, 3, {}).dim() == 0);
    CHECK_THROWS_AS(rref(f2, 3, {{1, 0}}), DimensionMismatch);

    // idempotence: reducing a canonical basis returns the same subspace
    CHECK(rref(f2, 3, U.rows) == U);
}

TEST_CASE("contains") {
    Subspace U = rref(f2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(contains(U, std::vector<int>{1, 0, 1}));
    CHECK_FALSE(contains(U, std::vector<int>{1, 0, 0}));
    CHECK(contains(full_space(f2, 3), std::vector<int>{1, 1, 1}));
}

TEST_CASE("contains agrees with span enumeration") {
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + int(rng() % 7);
        std::vector<std::vector<int>> gens(2 + rng() % 3, std::vector<int>(n));
        for (auto& g : gens)
            for (auto& x : g) x = int(rng() % 2);
        Subspace U = rref(f2, n, gens);
        std::set<long long> span;
        for (long long mask = 0; mask < (1 << U.dim()); ++mask) {
            std::vector<int> v(n, 0);
            for (int i = 0; i < U.dim(); ++i)
                if ((mask >> i) & 1)
                    for (int j = 0; j < n; ++j) v[j] ^= U.rows[i][j];
            long long code = 0;
            for (int x : v) code = code * 2 + x;
            span.insert(code);
        }
        for (long long code = 0; code < (1 << n); ++code) {
            std::vector<int> v(n);
            for (int j = 0; j < n; ++j) v[j] = int((code >> (n - 1 - j)) & 1);
            CHECK(contains(U, v) == (span.count(code) != 0));
        }
    }
}

TEST_CASE("codim and sums") {
    CHECK(codim(full_space(f2, 3)) == 0);
    CHECK(codim(zero_space(f2, 3)) == 3);
    Subspace a = rref(f2, 3, {{1, 0, 0}});
    Subspace b = rref(f2, 3, {{0, 1, 0}});
    CHECK(sum(a, b, true).dim() == 2);
    CHECK(sum(a, zero_space(f2, 3)) == a);
    CHECK_THROWS_AS(sum(a, a, true), NotDirect);
    // codim(U + W) = codim U + codim W - n for direct sums
    Subspace s = sum(a, b, true);
    CHECK(codim(s) == codim(a) + codim(b) - 3);
}

TEST_CASE("shift_subspace and parity check") {
    Subspace U = rref(f2, 3, {{1, 1, 0}});
    Subspace sU = shift_subspace(U, 1);
    CHECK(sU == rref(f2, 3, {{0, 1, 1}}));
    CHECK(shift_subspace(U, 3) == U);

    auto H = parity_check(U);
    CHECK(int(H.size()) == codim(U));
    CHECK(kernel_of(f2, 3, H) == U);

    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
        int n = 3 + int(rng() % 8);
        std::vector<std::vector<int>> gens(1 + rng() % 4, std::vector<int>(n));
        for (auto& g : gens)
            for (auto& x : g) x = int(rng() % 2);
        Subspace W = rref(f2, n, gens);
        CHECK(kernel_of(f2, n, parity_check(W)) == W);
    }
}

TEST_CASE("matrix helpers") {
    auto f3 = make_field(3, 1);
    std::vector<std::vector<int>> M{{1, 2}, {0, 1}};
    auto Minv = mat_inverse(f3, M);
    CHECK(mat_mul(f3, M, Minv) == mat_identity(2));
    CHECK(mat_rank(f3, M) == 2);
    CHECK_THROWS_AS(mat_inverse(f3, std::vector<std::vector<int>>{{1, 2}, {2, 1}}),
                    NotInvertible);  // det = 1 - 4 = 0 mod 3
    CHECK(mat_apply(f3, M, std::vector<int>{1, 1}) == std::vector<int>{0, 1});
}

TEST_CASE("file round trip") {
    Subspace U = rref(f2, 5, {{1, 1, 1, 1, 1}, {1, 0, 1, 0, 0}, {0, 0, 0, 1, 1}});
    std::string text = subspace_to_file(U);
    CHECK(subspace_from_file(text) == U);
    CHECK_THROWS_AS(subspace_from_file("2 5"), ParseError);
    CHECK_THROWS_AS(subspace_from_file("2 3 2\n110\n110\n"), ParseError);
}
