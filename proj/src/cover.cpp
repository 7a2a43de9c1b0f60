#include "cyccover/cover.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyccover {

namespace {

long long checked_power(long q, int n, long long budget, const char* what) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / q)
            throw BudgetExceeded(std::string(what) + " needs q^n = " + std::to_string(q) + "^" +
                                 std::to_string(n) + " > budget " + std::to_string(budget));
        total *= q;
    }
    return total;
}

void code_to_digits(long long code, long q, int n, int8_t* d) {
    for (int j = n; j-- > 0;) {
        d[j] = int8_t(code % q);
        code /= q;
    }
}

// Pivot-column combinations in lexicographic order.
bool next_comb(std::vector<int>& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Free entries of a c x n RREF parity-check with the given pivot columns,
// row-major; the first entry is the most significant digit of the candidate
// counter, so the counter order is lexicographic on matrices.
std::vector<std::pair<int, int>> free_slots(const std::vector<int>& comb, int n) {
    std::vector<char> piv(n, 0);
    for (int x : comb) piv[x] = 1;
    std::vector<std::pair<int, int>> fp;
    for (size_t i = 0; i < comb.size(); ++i)
        for (int j = comb[i] + 1; j < n; ++j)
            if (!piv[j]) fp.emplace_back(int(i), j);
    return fp;
}

// Per-group flattened coordinate digits of the orbit members, for the
// generic-field covering check.
struct DigitOrbits {
    const Field* F = nullptr;
    int n = 0;
    bool prime = false;
    std::vector<std::vector<int8_t>> digs;
};

DigitOrbits digit_orbits(const VectorOrbits& V) {
    DigitOrbits G;
    G.F = V.field.get();
    G.n = V.n;
    G.prime = V.field->m() == 1;
    long q = V.field->q();
    G.digs.reserve(V.groups.size());
    for (const auto& g : V.groups) {
        std::vector<int8_t> d(g.size() * V.n);
        for (size_t m = 0; m < g.size(); ++m) code_to_digits(g[m], q, V.n, d.data() + m * V.n);
        G.digs.push_back(std::move(d));
    }
    return G;
}

bool covers_digits(const DigitOrbits& G, const std::vector<std::vector<int>>& H,
                   bool use_prime_path) {
    int c = int(H.size());
    long p = G.F->p();
    for (const auto& d : G.digs) {
        size_t members = d.size() / G.n;
        bool hit = false;
        for (size_t m = 0; m < members && !hit; ++m) {
            const int8_t* v = d.data() + m * G.n;
            int j = 0;
            for (; j < c; ++j) {
                if (use_prime_path) {
                    long s = 0;
                    for (int t = 0; t < G.n; ++t) s += long(H[j][t]) * v[t];
                    if (s % p != 0) break;
                } else {
                    int s = 0;
                    for (int t = 0; t < G.n; ++t)
                        if (H[j][t] != 0 && v[t] != 0) s = G.F->add(s, G.F->mul(H[j][t], v[t]));
                    if (s != 0) break;
                }
            }
            if (j == c) hit = true;
        }
        if (!hit) return false;
    }
    return true;
}

// Deterministic parallel scan of [0, count): the least index satisfying
// `test` wins regardless of thread count or scheduling.
template <class TestFn>
long long parallel_scan(long long count, int threads, TestFn&& test) {
    std::atomic<long long> best(LLONG_MAX);
    const long long kBlock = 512;
    long long nblocks = (count + kBlock - 1) / kBlock;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (long long b = 0; b < nblocks; ++b) {
        long long start = b * kBlock;
        if (start >= best.load(std::memory_order_relaxed)) continue;
        long long end = std::min(start + kBlock, count);
        for (long long t = start; t < end; ++t) {
            if (t >= best.load(std::memory_order_relaxed)) break;
            if (test(t)) {
                long long prev = best.load();
                while (t < prev && !best.compare_exchange_weak(prev, t)) {
                }
                break;
            }
        }
    }
    long long w = best.load();
    return w == LLONG_MAX ? -1 : w;
}

std::vector<std::vector<int>> build_check(const std::vector<int>& comb,
                                          const std::vector<std::pair<int, int>>& fp, int n,
                                          long q, long long t) {
    int c = int(comb.size());
    std::vector<std::vector<int>> H(c, std::vector<int>(n, 0));
    for (int i = 0; i < c; ++i) H[i][comb[i]] = 1;
    for (size_t k = fp.size(); k-- > 0;) {
        H[fp[k].first][fp[k].second] = int(t % q);
        t /= q;
    }
    return H;
}

}  // namespace

OrbitTable orbits(long q, int n, long long budget) {
    if (n < 1) throw BadN("n must be >= 1");
    long long total = checked_power(q, n, budget, "orbit table");
    long long top = total / q;
    OrbitTable T;
    T.q = q;
    T.n = n;
    T.offset.push_back(0);
    std::vector<char> seen(total, 0);
    for (long long v = 0; v < total; ++v) {
        if (seen[v]) continue;
        T.reps.push_back(v);
        long long x = v;
        int sz = 0;
        do {
            seen[x] = 1;
            T.members.push_back(x);
            ++sz;
            x = shift_code(x, n, q, top);
        } while (x != v);
        T.sizes.push_back(sz);
        T.offset.push_back(T.members.size());
    }
    return T;
}

VectorOrbits sigma_orbit_groups(const OrbitTable& T, FieldPtr field) {
    VectorOrbits V;
    V.field = std::move(field);
    V.n = T.n;
    std::vector<size_t> idx(T.reps.size());
    std::iota(idx.begin(), idx.end(), size_t(0));
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return T.sizes[a] < T.sizes[b]; });
    for (size_t i : idx) {
        if (T.reps[i] == 0) continue;  // zero lies in every subspace
        V.groups.emplace_back(T.members.begin() + T.offset[i], T.members.begin() + T.offset[i + 1]);
    }
    return V;
}

long long gaussian_binomial(int n, int c, long q) {
    if (c < 0 || c > n) return 0;
    __int128 num = 1, den = 1;
    auto qpow = [&](int e) {
        __int128 r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (int i = 0; i < c; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
    }
    return (long long)(num / den);
}

bool check_covers(const VectorOrbits& V, const std::vector<std::vector<int>>& H) {
    DigitOrbits G = digit_orbits(V);
    return covers_digits(G, H, G.prime);
}

BandOutcome search_band(const VectorOrbits& V, int c, int threads) {
    const Field& F = *V.field;
    long q = F.q();
    int n = V.n;
    if (c < 1 || c > n) throw PreconditionError("codimension band out of range");
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif

    // GF(2): orbit members double as bitmasks of their coordinates, so a
    // parity-check row is one mask per row and membership is c popcount
    // parities. Other fields go through the digit tables.
    bool two = (q == 2);
    DigitOrbits G;
    if (!two) G = digit_orbits(V);

    BandOutcome out;
    std::vector<int> comb(c);
    std::iota(comb.begin(), comb.end(), 0);
    long long base = 0;
    do {
        auto fp = free_slots(comb, n);
        long long count = 1;
        for (size_t i = 0; i < fp.size(); ++i) count *= q;

        long long winner;
        if (two) {
            std::vector<uint64_t> base_rows(c, 0);
            for (int i = 0; i < c; ++i) base_rows[i] = 1ull << (n - 1 - comb[i]);
            // free slot k toggles bit (n-1-col) of its row; slot 0 is the
            // most significant bit of t
            std::vector<std::pair<int, int>> bits;
            bits.reserve(fp.size());
            for (auto [row, col] : fp) bits.emplace_back(row, n - 1 - col);
            int nf = int(bits.size());
            winner = parallel_scan(count, threads, [&](long long t) {
                uint64_t H[64];
                for (int i = 0; i < c; ++i) H[i] = base_rows[i];
                for (int k = 0; k < nf; ++k)
                    if ((t >> (nf - 1 - k)) & 1) H[bits[k].first] |= 1ull << bits[k].second;
                for (const auto& g : V.groups) {
                    bool hit = false;
                    for (long long m : g) {
                        int j = 0;
                        for (; j < c; ++j)
                            if (__builtin_parityll(H[j] & (uint64_t)m)) break;
                        if (j == c) {
                            hit = true;
                            break;
                        }
                    }
                    if (!hit) return false;
                }
                return true;
            });
        } else {
            winner = parallel_scan(count, threads, [&](long long t) {
                return covers_digits(G, build_check(comb, fp, n, q, t), G.prime);
            });
        }

        if (winner >= 0) {
            out.found = true;
            out.tested = base + winner + 1;
            out.check = build_check(comb, fp, n, q, winner);
            return out;
        }
        base += count;
    } while (next_comb(comb, n));
    out.tested = base;
    return out;
}

BandOutcome search_band_reference(const VectorOrbits& V, int c) {
    long q = V.field->q();
    int n = V.n;
    if (c < 1 || c > n) throw PreconditionError("codimension band out of range");
    DigitOrbits G = digit_orbits(V);

    BandOutcome out;
    std::vector<int> comb(c);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        auto fp = free_slots(comb, n);
        long long count = 1;
        for (size_t i = 0; i < fp.size(); ++i) count *= q;
        for (long long t = 0; t < count; ++t) {
            auto H = build_check(comb, fp, n, q, t);
            ++out.tested;
            // always the plain field-arithmetic path, as a check on the
            // specialized kernels
            if (covers_digits(G, H, false)) {
                out.found = true;
                out.check = std::move(H);
                return out;
            }
        }
    } while (next_comb(comb, n));
    return out;
}

CoveringCheck is_covering(const Subspace& U, long long budget) {
    long q = U.field->q();
    OrbitTable T = orbits(q, U.n, budget);
    auto H = parity_check(U);
    if (H.empty()) return {true, -1};
    const Field& F = *U.field;
    std::vector<int8_t> d(U.n);
    for (size_t i = 0; i < T.reps.size(); ++i) {
        if (T.reps[i] == 0) continue;
        bool hit = false;
        for (size_t k = T.offset[i]; k < T.offset[i + 1] && !hit; ++k) {
            code_to_digits(T.members[k], q, U.n, d.data());
            bool in = true;
            for (const auto& h : H) {
                int s = 0;
                for (int t = 0; t < U.n; ++t)
                    if (h[t] != 0 && d[t] != 0) s = F.add(s, F.mul(h[t], d[t]));
                if (s != 0) {
                    in = false;
                    break;
                }
            }
            hit = in;
        }
        if (!hit) return {false, T.reps[i]};  // reps ascend, so this is lex-least
    }
    return {true, -1};
}

namespace {

CoverResult h_search_impl(long q, int n, int threads, long long budget, bool parallel) {
    FieldPtr field = field_from_order(q);
    if (n < 1) throw BadN("n must be >= 1");
    int cap = 0;
    for (long long pw = q; pw <= n; pw *= q) ++cap;

    OrbitTable T = orbits(q, n, budget);
    VectorOrbits V = sigma_orbit_groups(T, field);

    CoverResult R;
    R.q = q;
    R.n = n;
    R.witness = full_space(field, n);
    R.exhausted = true;
    for (int c = cap; c >= 1; --c) {
        long long gauss = gaussian_binomial(n, c, q);
        if (gauss > budget)
            throw BudgetExceeded("codimension-" + std::to_string(c) + " band has " +
                                 std::to_string(gauss) + " candidates > budget " +
                                 std::to_string(budget));
        BandOutcome out =
            parallel ? search_band(V, c, threads) : search_band_reference(V, c);
        R.candidates_tested += out.tested;
        if (out.found) {
            R.h = c;
            R.witness = kernel_of(field, n, out.check);
            return R;
        }
    }
    return R;  // h = 0, witness = the full space
}

}  // namespace

CoverResult h_search(long q, int n, int threads, long long budget) {
    return h_search_impl(q, n, threads, budget, true);
}

CoverResult h_search_reference(long q, int n, long long budget) {
    return h_search_impl(q, n, 0, budget, false);
}

Subspace restrict_even_weight(const Subspace& U, long long budget) {
    if (U.field->q() != 2) throw PreconditionError("even-weight restriction needs q = 2");
    if (U.n % 2 == 0) throw PreconditionError("even-weight restriction needs odd n");
    CoveringCheck ck = is_covering(U, budget);
    if (!ck.covering)
        throw NotCovering("subspace is not covering; uncovered representative " +
                          std::to_string(ck.failing_rep));
    const Field& F = *U.field;
    auto weight_parity = [&](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s ^= x;
        return s;
    };
    // Basis rows split by weight parity; even rows stay, odd rows pair up.
    std::vector<std::vector<int>> even, odd;
    for (const auto& r : U.rows) (weight_parity(r) ? odd : even).push_back(r);
    std::vector<std::vector<int>> basis = even;
    for (size_t i = 1; i < odd.size(); ++i) {
        std::vector<int> s(U.n);
        for (int j = 0; j < U.n; ++j) s[j] = F.add(odd[0][j], odd[i][j]);
        basis.push_back(std::move(s));
    }
    return rref(U.field, U.n, basis);
}

Subspace lift_even_weight(const Subspace& W) {
    std::vector<std::vector<int>> rows = W.rows;
    rows.emplace_back(W.n, 1);
    return rref(W.field, W.n, rows);
}

}  // namespace cyccover
