#include "cyccover/serialize.hpp"

namespace cyccover {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

nlohmann::json to_json(const Subspace& U) {
    return nlohmann::json{{"q", U.field->q()},
                          {"n", U.n},
                          {"dim", U.dim()},
                          {"basis", subspace_to_file(U)}};
}

nlohmann::json to_json(const Factorization& F) {
    nlohmann::json j;
    j["q"] = F.q;
    j["n"] = F.n;
    j["cosets"] = F.cosets.cosets;
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : F.factors) factors.push_back(poly_str(f));
    j["factors"] = std::move(factors);
    nlohmann::json idems = nlohmann::json::array();
    for (const auto& u : F.idempotents) idems.push_back(ring_str(u));
    j["idempotents"] = std::move(idems);
    return j;
}

nlohmann::json to_json(const CoverResult& R) {
    return nlohmann::json{{"q", R.q},
                          {"n", R.n},
                          {"h", R.h},
                          {"witness", subspace_to_file(R.witness)},
                          {"exhausted", R.exhausted},
                          {"candidates_tested", R.candidates_tested}};
}

nlohmann::json to_json(const ConstructionReport& R) {
    nlohmann::json j;
    j["name"] = R.name;
    nlohmann::json params;
    for (const auto& [k, v] : R.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["codim"] = R.claimed_codim;
    j["verified"] = R.verified;
    j["subspace"] = subspace_to_file(R.subspace);
    if (R.paper_bound) j["paper_bound"] = *R.paper_bound;
    if (R.inside) j["inside"] = subspace_to_file(*R.inside);
    return j;
}

nlohmann::json to_json(const IsbellReport& R) {
    return nlohmann::json{{"p", R.p},
                          {"b", R.b},
                          {"a", R.a},
                          {"degree", R.degree},
                          {"transitive", R.transitive},
                          {"fpf_p_power_found", R.fpf_p_power_found},
                          {"m_p_lower", R.m_p_lower}};
}

std::vector<TableRow> table_rows(long q, int n_max, int threads, long long budget) {
    std::vector<TableRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        try {
            CoverResult R = h_search(q, n, threads, budget);
            row.h = R.h;
            row.method = "search";
            row.witness_hash = fnv1a_hex(subspace_to_file(R.witness));
        } catch (const BudgetExceeded&) {
            row.method = "lower-bound-only";
            Subspace best = full_space(field_from_order(q), n);
            int h = 0;
            // best construction applicable to this n
            for (int d = 2;; ++d) {
                long long pw = 1;
                for (int i = 0; i < d; ++i) pw *= q;
                if (pw - 1 > n) break;
                if (pw - 1 == n) {
                    ConstructionReport C = thm31(q, d, /*verify=*/false, budget);
                    h = C.claimed_codim;
                    best = C.subspace;
                }
            }
            if (q == 2 && n > 3 && n % 2 == 1 && h < 2) {
                ConstructionReport C = lemma21(n, /*verify=*/false, budget);
                h = C.claimed_codim;
                best = C.subspace;
            }
            row.h = h;
            row.witness_hash = fnv1a_hex(subspace_to_file(best));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cyccover
