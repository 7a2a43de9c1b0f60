#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyccover/serialize.hpp"

using namespace cyccover;

TEST_CASE("fnv1a") {
    // reference vectors for 64-bit FNV-1a
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("cover result json") {
    auto R = h_search(2, 5);
    auto j = to_json(R);
    CHECK(j["q"] == 2);
    CHECK(j["n"] == 5);
    CHECK(j["h"] == 2);
    CHECK(j["exhausted"] == true);
    CHECK(j["candidates_tested"].get<long long>() == R.candidates_tested);
    CHECK(subspace_from_file(j["witness"].get<std::string>()) == R.witness);
    // byte determinism across thread counts
    CHECK(to_json(h_search(2, 5, 1)).dump() == to_json(h_search(2, 5, 8)).dump());
}

TEST_CASE("factorization json") {
    auto j = to_json(factor_xn_minus_1(2, 7));
    CHECK(j["factors"].size() == 3);
    CHECK(j["cosets"][1] == nlohmann::json::array({1, 2, 4}));
    CHECK(j["idempotents"].size() == 3);
}

TEST_CASE("construction json") {
    auto j = to_json(thm32(2, 2, 2, 1));
    CHECK(j["name"] == "thm32");
    CHECK(j["codim"] == 3);
    CHECK(j["verified"] == true);
    CHECK(j["paper_bound"] == 3);
    CHECK(j["parameters"]["q"] == 2);

    auto j4 = to_json(section4_sum({2, 3}));
    CHECK(j4.contains("inside"));
}

TEST_CASE("isbell json") {
    auto W = default_isbell_witness(2, 3);
    auto R = verify_isbell(build_isbell_group(2, 3, W), 2);
    auto j = to_json(R);
    CHECK(j["degree"] == 6);
    CHECK(j["transitive"] == true);
    CHECK(j["m_p_lower"] == 2);
}

TEST_CASE("table rows") {
    auto rows = table_rows(2, 9);
    REQUIRE(rows.size() == 9);
    std::vector<int> expect{0, 0, 1, 0, 2, 2, 2, 0, 3};
    for (int i = 0; i < 9; ++i) {
        CHECK(rows[i].n == i + 1);
        CHECK(rows[i].h == expect[i]);
        CHECK(rows[i].method == "search");
        CHECK(rows[i].witness_hash.size() == 16);
    }
    // determinism
    auto again = table_rows(2, 9, 8);
    for (int i = 0; i < 9; ++i) CHECK(rows[i].witness_hash == again[i].witness_hash);

    auto r3 = table_rows(3, 4);
    for (auto& r : r3) CHECK(r.h == 0);

    // a starved budget falls back to a construction lower bound
    auto starved = table_rows(2, 7, 1, /*budget=*/100);
    CHECK(starved[6].method == "lower-bound-only");
    CHECK(starved[6].h == 2);
}
