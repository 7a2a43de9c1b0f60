// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cyccover/groups.hpp"
#include "cyccover/isbell.hpp"
#include "cyccover/serialize.hpp"

using namespace cyccover;

namespace {

int failures = 0;

void criterion(int num, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    printf("criterion %d: %-4s %s%s%s\n", num, ok ? "PASS" : "FAIL", label.c_str(),
           err.empty() ? "" : " -- ", err.c_str());
    if (!ok) ++failures;
}

bool expect(bool cond, const char* what) {
    if (!cond) fprintf(stderr, "  failed: %s\n", what);
    return cond;
}

}  // namespace

int main() {
    criterion(1, "exhaustive h_2(n) for n = 1..9", [] {
        std::vector<int> expected{0, 0, 1, 0, 2, 2, 2, 0, 3};
        auto rows = table_rows(2, 9);
        bool ok = expect(rows.size() == 9, "nine rows");
        for (size_t i = 0; ok && i < rows.size(); ++i)
            ok = expect(rows[i].h == expected[i] && rows[i].method == "search",
                        "h value from exhaustive search");
        return ok;
    });

    criterion(2, "zeros of h_2 up to 9; n=16 codim-1 band empty", [] {
        std::set<int> zeros;
        for (int n = 1; n <= 9; ++n)
            if (h_search(2, n).h == 0) zeros.insert(n);
        bool ok = expect(zeros == std::set<int>{1, 2, 4, 8}, "zeros exactly {1,2,4,8}");
        VectorOrbits V = sigma_orbit_groups(orbits(2, 16), make_field(2, 1));
        auto band = search_band(V, 1, 0);
        ok = ok && expect(!band.found, "no codim-1 cover of F_2^16");
        ok = ok && expect(band.tested == gaussian_binomial(16, 1, 2), "band exhausted");
        return ok;
    });

    criterion(3, "q=3 values with codim-2 exclusion for n=8", [] {
        bool ok = true;
        for (int n : {3, 4, 6, 9}) ok = ok && expect(h_search(3, n).h == 0, "h_3 zero");
        auto r8 = h_search(3, 8);
        ok = ok && expect(r8.h == 1 && r8.exhausted, "h_3(8) = 1, exhausted");
        VectorOrbits V = sigma_orbit_groups(orbits(3, 8), make_field(3, 1));
        auto band = search_band(V, 2, 0);
        ok = ok && expect(!band.found, "no codim-2 cover of F_3^8");
        ok = ok && expect(band.tested == gaussian_binomial(8, 2, 3),
                          "codim-2 band fully enumerated");
        return ok;
    });

    criterion(4, "note-added primes: h_2(5) = 2, h_3(5) = 0", [] {
        return expect(h_search(2, 5).h == 2, "2 a primitive root mod 5") &&
               expect(h_search(3, 5).h == 0, "h_3(5) = 0");
    });

    criterion(5, "constructions verified with their claimed codimensions", [] {
        bool ok = true;
        for (auto [d, cd] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 3}}) {
            auto R = thm31(2, d);
            ok = ok && expect(R.verified && R.claimed_codim == cd, "thm31");
        }
        auto R32 = thm32(2, 2, 2, 1);
        ok = ok && expect(R32.verified && R32.subspace.n == 21 && R32.claimed_codim == 3,
                          "thm32 n=21 codim 3");
        auto R33 = thm33(2, 3, 1);
        ok = ok && expect(R33.verified && R33.subspace.n == 9 && R33.claimed_codim == 3,
                          "thm33 n=9 codim 3");
        for (int n : {5, 7, 9}) {
            auto R = lemma21(n);
            ok = ok && expect(R.verified && R.claimed_codim == 2, "lemma21");
        }
        Subspace W3 = h_search(2, 3).witness;
        for (int m : {2, 3}) {
            auto R = product_cover(W3, m);
            ok = ok && expect(R.verified && R.claimed_codim == 1, "product");
        }
        auto R4 = section4_sum({2, 3});
        ok = ok && expect(R4.verified && R4.claimed_codim == 3, "section4 [2,3]");
        return ok;
    });

    criterion(6, "orbit and ring-algebra property suite", [] {
        bool ok = true;
        // Burnside agreement for q^n <= 2^20
        for (long q : {2L, 3L, 4L, 5L}) {
            for (int n = 1;; ++n) {
                long long qn = 1;
                bool fits = true;
                for (int i = 0; i < n; ++i) {
                    qn *= q;
                    if (qn > (1 << 20)) fits = false;
                }
                if (!fits) break;
                long long burnside = 0;
                for (int r = 0; r < n; ++r) {
                    long long pw = 1;
                    int g = n;
                    for (int a = r, b = n; a;) {
                        int t = b % a;
                        b = a;
                        a = t;
                        g = b;
                    }
                    for (int i = 0; i < g; ++i) pw *= q;
                    burnside += pw;
                }
                ok = ok && expect((long long)orbits(q, n).reps.size() == burnside / n,
                                  "Burnside orbit count");
            }
        }
        // ring identities over a (q, n) grid
        for (auto [q, n] : std::vector<std::pair<long, long>>{
                 {2, 3}, {2, 7}, {2, 9}, {2, 15}, {3, 8}}) {
            auto F = factor_xn_minus_1(q, n);
            Poly prod = poly_one(F.field);
            for (auto& f : F.factors) prod = poly_mul(prod, f);
            ok = ok && expect(prod == poly_sub(poly_monomial(F.field, int(n)),
                                               poly_one(F.field)),
                              "product of factors is X^n - 1");
            RingElement s = ring_zero(F.field, int(n));
            for (auto& u : F.idempotents) s = ring_add(s, u);
            bool is_one = s.coeffs[0] == 1;
            for (int i = 1; i < n; ++i) is_one = is_one && s.coeffs[i] == 0;
            ok = ok && expect(is_one, "idempotents sum to 1");
            for (size_t i = 0; ok && i < F.idempotents.size(); ++i)
                for (size_t j = 0; j < F.idempotents.size(); ++j) {
                    RingElement p = ring_mul(F.idempotents[i], F.idempotents[j]);
                    ok = ok && expect(i == j ? p == F.idempotents[i] : ring_code(p) == 0,
                                      "idempotent orthogonality");
                }
            for (size_t i = 0; ok && i < F.factors.size(); ++i) {
                Subspace V = component_subspace(F, i);
                ok = ok && expect(shift_subspace(V, 1) == V, "component sigma-invariance");
            }
        }
        // thm31 orbit = V_1 \ {0} for n in {3, 7, 15}
        for (int n : {3, 7, 15}) {
            auto F = factor_xn_minus_1(2, n);
            size_t i1 = F.coset_index_of(1);
            Subspace V1 = component_subspace(F, i1);
            std::set<long long> orbit;
            RingElement u = F.idempotents[i1];
            for (int r = 0; r < n; ++r) {
                orbit.insert(ring_code(u));
                u = shift(u, 1);
            }
            bool all_in = true;
            for (long long c : orbit)
                all_in = all_in && contains(V1, ring_from_code(F.field, n, c));
            ok = ok && expect((long long)orbit.size() == (1LL << V1.dim()) - 1 && all_in,
                              "thm31 orbit equals V_1 minus zero");
        }
        // thm33 tiling for n = 9 happens inside the construction; rebuild it
        ok = ok && expect(thm33(2, 3, 1).verified, "thm33 tiling for n = 9");
        return ok;
    });

    criterion(7, "Cor 4.4 sandwich and Thm 5.2 zeros", [] {
        auto f2 = make_field(2, 1);
        auto F = factor_xn_minus_1(2, 21);
        Subspace W1 = component_subspace(F, F.coset_index_of(7));
        Subspace W2 = component_subspace(F, F.coset_index_of(3));
        Subspace V = sum(W1, W2, true);
        auto repV = restrict_rep(rep_close(f2, 21, {shift_matrix(21)}), V);
        auto coords = [&](const Subspace& W) {
            std::vector<std::vector<int>> rows;
            for (const auto& r : W.rows) {
                std::vector<int> c;
                for (int p : V.pivots) c.push_back(r[p]);
                rows.push_back(std::move(c));
            }
            return rref(f2, V.dim(), rows);
        };
        auto B = cor44_bounds(repV, {coords(W1), coords(W2)});
        bool ok = expect(B.h_parts == std::vector<int>{1, 2} && B.h_total == 3 &&
                             B.log_bound == 4 && B.sandwich_holds,
                         "section-4 example sandwich");

        auto f3 = make_field(3, 1);
        Mat s = shift_matrix(6);
        Mat s2 = mat_mul(f3, s, s);
        Mat s3 = mat_mul(f3, s2, s);
        ok = ok && expect(h_g_search(rep_close(f3, 6, {s3, s2})).h == 0,
                          "C_2 x C_3 on F_3^6 is zero");
        ok = ok && expect(h_g_search(rep_close(f2, 4, {shift_matrix(4)})).h == 0,
                          "C_4 on F_2^4 is zero");
        return ok;
    });

    criterion(8, "Isbell instances (2,3), (2,7), (3,8)", [] {
        struct Case {
            long p;
            int b, a;
            long long degree;
        };
        bool ok = true;
        for (auto [p, b, a, degree] :
             {Case{2, 3, 1, 6}, Case{2, 7, 2, 28}, Case{3, 8, 1, 24}}) {
            Subspace W = default_isbell_witness(p, b);
            auto R = verify_isbell(build_isbell_group(p, b, W), p);
            ok = ok && expect(R.degree == degree && R.transitive &&
                                  !R.fpf_p_power_found && R.m_p_lower == a + 1,
                              "isbell instance");
        }
        return ok;
    });

    criterion(9, "search output byte-identical across thread counts", [] {
        bool ok = true;
        for (auto [q, n] : std::vector<std::pair<long, int>>{
                 {2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4}, {3, 8}}) {
            std::string one = to_json(h_search(q, n, 1)).dump(2);
            std::string eight = to_json(h_search(q, n, 8)).dump(2);
            ok = ok && expect(one == eight, "identical JSON for 1 vs 8 threads");
        }
        return ok;
    });

    if (failures) printf("%d criteria FAILED\n", failures);
    return failures ? 1 : 0;
}
