#include "cyccover/isbell.hpp"

#include <map>
#include <numeric>
#include <set>

#include "cyccover/construct.hpp"

namespace cyccover {

namespace {

long long power_ll(long p, long e) {
    long long r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

PermGroup build_isbell_group(long p, int b, const Subspace& W, long long cap, long long budget) {
    if (std::gcd(p, long(b)) != 1) throw NotCoprime("gcd(p, b) > 1");
    if (W.n != b || W.field->q() != p)
        throw DimensionMismatch("witness must live in F_p^b");
    CoveringCheck ck = is_covering(W, budget);
    if (!ck.covering)
        throw NotCovering("witness is not covering; uncovered representative " +
                          std::to_string(ck.failing_rep));

    int a = codim(W);
    long long pa = power_ll(p, a), pb = power_ll(p, b);
    long long degree = pa * b;
    if (degree > cap) throw CapExceeded("degree exceeds cap");

    // Shifted copies of W and the coset labels: coset (v, sigma^j) iota(W)
    // is keyed by j and the residue of v modulo sigma^j(W); the residue is
    // supported on the non-pivot coordinates, which ranks it in [0, p^a).
    std::vector<Subspace> S;
    std::vector<std::vector<int>> nonpiv(b);
    for (int j = 0; j < b; ++j) {
        S.push_back(shift_subspace(W, j));
        std::vector<char> is_pivot(b, 0);
        for (int x : S[j].pivots) is_pivot[x] = 1;
        for (int col = 0; col < b; ++col)
            if (!is_pivot[col]) nonpiv[j].push_back(col);
    }
    auto coset_index = [&](int j, const std::vector<int>& v) {
        std::vector<int> r = reduce_mod(S[j], v);
        long long rank = 0;
        for (int col : nonpiv[j]) rank = rank * p + r[col];
        return (long long)j * pa + rank;
    };
    // representative vector of coset (j, rank): the residue itself
    auto coset_rep = [&](long long idx, int& j_out) {
        j_out = int(idx / pa);
        long long rank = idx % pa;
        std::vector<int> v(b, 0);
        for (size_t t = nonpiv[j_out].size(); t-- > 0;) {
            v[nonpiv[j_out][t]] = int(rank % p);
            rank /= p;
        }
        return v;
    };

    const Field& F = *W.field;
    // permutation image of one group element (v, sigma^i)
    auto perm_of = [&](const std::vector<int>& v, int i) {
        std::vector<int> img(degree);
        for (long long idx = 0; idx < degree; ++idx) {
            int j;
            std::vector<int> u = coset_rep(idx, j);
            // (v, s^i)(u, s^j) = (v + s^i(u), s^(i+j))
            RingElement su = shift(RingElement{W.field, b, u}, i);
            std::vector<int> w(b);
            for (int t = 0; t < b; ++t) w[t] = F.add(v[t], su.coeffs[t]);
            img[idx] = int(coset_index((i + j) % b, w));
        }
        return img;
    };

    PermGroup H;
    H.degree = int(degree);
    // generators of G: the unit translations and the shift
    for (int t = 0; t < b; ++t) {
        std::vector<int> e(b, 0);
        e[t] = 1;
        H.generators.push_back(perm_of(e, 0));
    }
    H.generators.push_back(perm_of(std::vector<int>(b, 0), 1));

    // Full image: one permutation per element of G, deduplicated.
    std::set<std::vector<int>> seen;
    std::vector<int> v(b, 0);
    for (int i = 0; i < b; ++i) {
        for (long long code = 0; code < pb; ++code) {
            long long x = code;
            for (int t = b; t-- > 0;) {
                v[t] = int(x % p);
                x /= p;
            }
            std::vector<int> g = perm_of(v, i);
            if (seen.insert(g).second) {
                if ((long long)H.elements.size() >= cap)
                    throw CapExceeded("group order exceeds cap");
                H.elements.push_back(std::move(g));
            }
        }
    }
    return H;
}

IsbellReport verify_isbell(const PermGroup& H, long p) {
    IsbellReport R;
    R.p = p;
    R.degree = H.degree;
    R.a = 0;
    long long d = H.degree;
    while (d % p == 0) {
        d /= p;
        ++R.a;
    }
    R.b = d;
    R.m_p_lower = R.a + 1;

    std::vector<char> reached(H.degree, 0);
    for (const auto& g : H.elements) reached[g[0]] = 1;
    R.transitive =
        std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });

    for (const auto& g : H.elements) {
        // order = lcm of cycle lengths
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
        if (order <= 1) continue;
        long long t = order;
        while (t % p == 0) t /= p;
        if (t != 1) continue;  // not a p-power order
        bool fixes = false;
        for (int x = 0; x < H.degree; ++x)
            if (g[x] == x) {
                fixes = true;
                break;
            }
        if (!fixes) {
            R.fpf_p_power_found = true;
            break;
        }
    }
    return R;
}

Subspace default_isbell_witness(long p, int b, int threads, long long budget) {
    long long pw = p;
    for (int d = 1; pw - 1 <= b; ++d, pw *= p)
        if (pw - 1 == b) return thm31(p, d, /*verify=*/true, budget).subspace;
    return h_search(p, b, threads, budget).witness;
}

}  // namespace cyccover
