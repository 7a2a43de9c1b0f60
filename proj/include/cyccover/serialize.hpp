#pragma once

#include <json.hpp>

#include "cyccover/construct.hpp"
#include "cyccover/cyclo.hpp"
#include "cyccover/isbell.hpp"

namespace cyccover {

/// FNV-1a 64-bit digest as 16 hex characters; used to fingerprint witness
/// basis files so tables stay diffable.
std::string fnv1a_hex(const std::string& data);

nlohmann::json to_json(const Subspace& U);
nlohmann::json to_json(const Factorization& F);
nlohmann::json to_json(const CoverResult& R);
nlohmann::json to_json(const ConstructionReport& R);
nlohmann::json to_json(const IsbellReport& R);

/// One row of the h_q table. When the search for a row blows the budget the
/// row falls back to the best applicable construction and only carries a
/// lower bound.
struct TableRow {
    int n = 0;
    int h = 0;
    std::string method;  // "search" or "lower-bound-only"
    std::string witness_hash;
};

std::vector<TableRow> table_rows(long q, int n_max, int threads = 0,
                                 long long budget = kDefaultBudget);

}  // namespace cyccover
