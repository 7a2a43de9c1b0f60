#include "cyccover/construct.hpp"

#include <numeric>
#include <set>

namespace cyccover {

namespace {

long long power_ll(long q, long e) {
    long long r = 1;
    for (long i = 0; i < e; ++i) r *= q;
    return r;
}

// All vectors of U as coefficient combinations of its basis rows.
std::vector<std::vector<int>> span_vectors(const Subspace& U, long long budget) {
    const Field& F = *U.field;
    long q = F.q();
    long long count = 1;
    for (int i = 0; i < U.dim(); ++i) {
        if (count > budget / q)
            throw BudgetExceeded("subspace enumeration of q^" + std::to_string(U.dim()) +
                                 " vectors exceeds budget");
        count *= q;
    }
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (long long t = 0; t < count; ++t) {
        std::vector<int> v(U.n, 0);
        long long x = t;
        for (int i = U.dim(); i-- > 0;) {
            int c = int(x % q);
            x /= q;
            if (c == 0) continue;
            for (int j = 0; j < U.n; ++j) v[j] = F.add(v[j], F.mul(c, U.rows[i][j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

long long vec_code(const std::vector<int>& v, long q) {
    long long code = 0;
    for (int x : v) code = code * q + x;
    return code;
}

void finish_verify(ConstructionReport& R, bool verify, long long budget) {
    const Subspace& ref = R.inside ? *R.inside : full_space(R.subspace.field, R.subspace.n);
    int actual = ref.dim() - R.subspace.dim();
    if (actual != R.claimed_codim)
        throw Error(R.name + ": built codimension " + std::to_string(actual) +
                    " differs from claimed " + std::to_string(R.claimed_codim));
    if (!verify) return;
    if (R.inside) {
        // covering of the invariant subspace: every vector of `inside` has
        // some shift in the output
        for (const auto& v : span_vectors(*R.inside, budget)) {
            RingElement e{R.subspace.field, R.subspace.n, v};
            bool hit = false;
            for (int r = 0; r < R.subspace.n && !hit; ++r) {
                if (contains(R.subspace, e)) hit = true;
                e = shift(e, 1);
            }
            if (!hit)
                throw NotCovering(R.name + ": vector " + ring_str({R.subspace.field,
                                  R.subspace.n, v}) + " has no shift in the span");
        }
    } else {
        CoveringCheck ck = is_covering(R.subspace, budget);
        if (!ck.covering)
            throw NotCovering(R.name + ": uncovered representative " +
                              std::to_string(ck.failing_rep));
    }
    R.verified = true;
}

}  // namespace

ConstructionReport lemma21(int n, bool verify, long long budget) {
    if (n <= 3 || n % 2 == 0) throw BadN("lemma21 needs odd n > 3");
    FieldPtr f2 = make_field(2, 1);
    std::vector<std::vector<int>> rows;
    rows.emplace_back(n, 1);  // 1...1
    std::vector<int> v(n, 0);
    v[0] = v[2] = 1;  // 10100...0
    rows.push_back(v);
    for (int j = 4; j < n; ++j) {  // e_j + e_(j+1), 1-based coordinates
        std::vector<int> w(n, 0);
        w[j - 1] = w[j] = 1;
        rows.push_back(std::move(w));
    }
    ConstructionReport R;
    R.name = "lemma21";
    R.parameters = {{"n", n}};
    R.subspace = rref(f2, n, rows);
    if (R.subspace.dim() != n - 2) throw Error("lemma21 generators are dependent");
    R.claimed_codim = 2;
    finish_verify(R, verify, budget);
    return R;
}

ConstructionReport product_cover(const Subspace& U, int m, bool verify, long long budget) {
    if (m < 1) throw PreconditionError("m must be >= 1");
    CoveringCheck ck = is_covering(U, budget);
    if (!ck.covering)
        throw NotCovering("input subspace is not covering; uncovered representative " +
                          std::to_string(ck.failing_rep));
    int n = U.n, nm = n * m;
    std::vector<std::vector<int>> rows;
    for (const auto& u : U.rows) {
        // u's coordinate i lands at coordinate m*i of F_q^(nm)
        std::vector<int> x(nm, 0);
        for (int i = 1; i <= n; ++i) x[m * i - 1] = u[i - 1];
        rows.push_back(std::move(x));
    }
    for (int j = 1; j <= nm; ++j) {
        if (j % m == 0) continue;
        std::vector<int> e(nm, 0);
        e[j - 1] = 1;
        rows.push_back(std::move(e));
    }
    ConstructionReport R;
    R.name = "product";
    R.parameters = {{"n", n}, {"m", m}};
    R.subspace = rref(U.field, nm, rows);
    R.claimed_codim = codim(U);
    finish_verify(R, verify, budget);
    return R;
}

ConstructionReport thm31(long q, int d, bool verify, long long budget) {
    if (d < 1) throw PreconditionError("d must be >= 1");
    long long n = power_ll(q, d) - 1;
    Factorization F = factor_xn_minus_1(q, n);
    size_t i1 = F.coset_index_of(1);

    std::vector<RingElement> gens{F.idempotents[i1]};
    for (size_t i = 0; i < F.factors.size(); ++i) {
        if (i == i1) continue;
        Subspace V = component_subspace(F, i);
        for (const auto& row : V.rows) gens.push_back({F.field, int(n), row});
    }
    ConstructionReport R;
    R.name = "thm31";
    R.parameters = {{"q", q}, {"d", d}};
    R.subspace = rref_rings(F.field, int(n), gens);
    R.claimed_codim = d - 1;
    finish_verify(R, verify, budget);
    return R;
}

ConstructionReport thm32(long q, int k, int d, long c, bool verify, long long budget) {
    if (k < 1 || d < 1 || c < 1) throw PreconditionError("k, d, c must be >= 1");
    long kd1 = long(k) * (d + 1);
    long long qk = power_ll(q, k);
    long long big = power_ll(q, kd1);  // q^(k(d+1))
    long long M = (q - 1) * ((big - 1) / (qk - 1));
    // c < (q-1)(q^k - q^(-kd))/(q^k - 1), cleared of the negative power
    if (c * power_ll(q, long(k) * d) * (qk - 1) >= (q - 1) * (big - 1))
        throw PreconditionC("c = " + std::to_string(c) + " is not below the Theorem 3.2 bound");
    if (M % c != 0)
        throw BadDivisor("c = " + std::to_string(c) + " does not divide M = " + std::to_string(M));
    long long n = M / c;

    Factorization F = factor_xn_minus_1(q, n);
    size_t i1 = F.coset_index_of(1);
    if (F.factors[i1].deg() != int(kd1))
        throw Error("thm32: component of the coset of 1 has unexpected degree");
    Subspace V1 = component_subspace(F, i1);

    // Representatives (lex-least) of the sigma-orbits of V_1 \ {0}; every
    // orbit must have size exactly n.
    long long s = (big - 1) / n;
    if (s * n != big - 1) throw Error("thm32: n does not divide q^(k(d+1)) - 1");
    std::set<long long> codes;
    for (const auto& v : span_vectors(V1, budget)) codes.insert(vec_code(v, q));
    codes.erase(0);
    long long top = power_ll(q, long(n) - 1);
    std::set<long long> seen;
    std::vector<RingElement> gens;
    for (long long code : codes) {
        if (seen.count(code)) continue;
        long long x = code;
        long sz = 0;
        do {
            seen.insert(x);
            ++sz;
            x = shift_code(x, int(n), q, top);
        } while (x != code);
        if (sz != n) throw Error("thm32: a sigma-orbit of V_1 has size " + std::to_string(sz));
        gens.push_back(ring_from_code(F.field, int(n), code));
    }
    if ((long long)gens.size() != s) throw Error("thm32: orbit count differs from s");

    for (size_t i = 0; i < F.factors.size(); ++i) {
        if (i == i1) continue;
        Subspace V = component_subspace(F, i);
        for (const auto& row : V.rows) gens.push_back({F.field, int(n), row});
    }
    ConstructionReport R;
    R.name = "thm32";
    R.parameters = {{"q", q}, {"k", k}, {"d", d}, {"c", c}};
    R.subspace = rref_rings(F.field, int(n), gens);
    R.claimed_codim = int(n) - R.subspace.dim();
    R.paper_bound = long(k) * d + k - s;
    if (R.claimed_codim < *R.paper_bound)
        throw Error("thm32: codimension fell below the paper bound");
    finish_verify(R, verify, budget);
    return R;
}

ConstructionReport thm33(long q, int k, int d, bool verify, long long budget) {
    if (k < 1 || d < 1) throw PreconditionError("k, d must be >= 1");
    long long qk = power_ll(q, k);
    if (std::gcd(1LL * d + 1, qk - 1) != 1)
        throw PreconditionGcd("gcd(d+1, q^k - 1) = " +
                              std::to_string(std::gcd(1LL * d + 1, qk - 1)) + " != 1");
    long kd1 = long(k) * (d + 1);
    long long big = power_ll(q, kd1);
    long long n = (big - 1) / (qk - 1);

    Factorization F = factor_xn_minus_1(q, n);
    size_t i1 = F.coset_index_of(1);
    if (F.factors[i1].deg() != int(kd1))
        throw Error("thm33: component of the coset of 1 has unexpected degree");
    Subspace V1 = component_subspace(F, i1);
    const RingElement& one = F.idempotents[i1];

    // V_1 is a field with identity u_1 under ring multiplication. Take the
    // least-code element gamma of full multiplicative order; its power of
    // order q^k - 1 generates the GF(q^k) subfield.
    auto elems = span_vectors(V1, budget);
    auto mul_order = [&](const RingElement& a) {
        long long t = 1;
        RingElement x = a;
        while (!(x == one)) {
            x = ring_mul(x, a);
            ++t;
            if (t > big) throw Error("thm33: element order overflow");
        }
        return t;
    };
    std::sort(elems.begin(), elems.end(),
              [&](const auto& a, const auto& b) { return vec_code(a, q) < vec_code(b, q); });
    RingElement gamma;
    bool found = false;
    for (const auto& v : elems) {
        if (vec_code(v, q) == 0) continue;
        RingElement e{F.field, int(n), v};
        if (mul_order(e) == big - 1) {
            gamma = e;
            found = true;
            break;
        }
    }
    if (!found) throw Error("thm33: V_1 has no multiplicative generator");
    RingElement z = one;
    for (long long i = 0; i < (big - 1) / (qk - 1); ++i) z = ring_mul(z, gamma);

    // U = the GF(q^k)-line through u_1: GF(q)-span of u_1, z, ..., z^(k-1).
    std::vector<RingElement> line{one};
    RingElement zp = one;
    for (int i = 1; i < k; ++i) {
        zp = ring_mul(zp, z);
        line.push_back(zp);
    }
    Subspace U = rref_rings(F.field, int(n), line);
    if (U.dim() != k) throw Error("thm33: the GF(q^k)-line has wrong GF(q)-dimension");

    // Shift tiling of V_1: the X^a U are pairwise {0}-intersecting and
    // exhaust V_1 (equivalently, all shifts of all nonzero u are distinct
    // and fill V_1 \ {0}).
    {
        long long top = power_ll(q, long(n) - 1);
        std::set<long long> v1codes;
        for (const auto& v : elems) v1codes.insert(vec_code(v, q));
        std::set<long long> hit;
        for (const auto& u : span_vectors(U, budget)) {
            long long code = vec_code(u, q);
            if (code == 0) continue;
            for (long long a = 0; a < n; ++a) {
                if (!hit.insert(code).second)
                    throw Error("thm33: shift tiles of U overlap");
                if (!v1codes.count(code)) throw Error("thm33: shift tile escapes V_1");
                code = shift_code(code, int(n), q, top);
            }
        }
        if ((long long)hit.size() != big - 1) throw Error("thm33: shift tiles do not fill V_1");
    }

    std::vector<RingElement> gens = line;
    for (size_t i = 0; i < F.factors.size(); ++i) {
        if (i == i1) continue;
        Subspace V = component_subspace(F, i);
        for (const auto& row : V.rows) gens.push_back({F.field, int(n), row});
    }
    ConstructionReport R;
    R.name = "thm33";
    R.parameters = {{"q", q}, {"k", k}, {"d", d}};
    R.subspace = rref_rings(F.field, int(n), gens);
    R.claimed_codim = long(k) * d;
    finish_verify(R, verify, budget);
    return R;
}

ConstructionReport section4_sum(const std::vector<int>& m_list, bool verify, long long budget) {
    if (m_list.empty()) throw PreconditionError("m_list must be nonempty");
    std::vector<long long> ni;
    for (int m : m_list) {
        if (m < 1) throw PreconditionError("every m_i must be >= 1");
        ni.push_back(power_ll(2, m) - 1);
    }
    for (size_t i = 0; i < ni.size(); ++i)
        for (size_t j = i + 1; j < ni.size(); ++j)
            if (std::gcd(ni[i], ni[j]) != 1)
                throw NotCoprime("gcd(2^" + std::to_string(m_list[i]) + "-1, 2^" +
                                 std::to_string(m_list[j]) + "-1) > 1");
    long long n = 1;
    for (long long x : ni) n *= x;

    Factorization F = factor_xn_minus_1(2, n);
    std::vector<RingElement> idems;
    Subspace V = zero_space(F.field, int(n));
    for (size_t i = 0; i < ni.size(); ++i) {
        size_t ci = F.coset_index_of(n / ni[i]);
        if (int(F.cosets.cosets[ci].size()) != m_list[i])
            throw Error("section4: component degree differs from m_i");
        idems.push_back(F.idempotents[ci]);
        V = sum(V, component_subspace(F, ci), /*require_direct=*/true);
    }
    ConstructionReport R;
    R.name = "section4";
    for (size_t i = 0; i < m_list.size(); ++i)
        R.parameters.emplace_back("m" + std::to_string(i + 1), m_list[i]);
    R.subspace = rref_rings(F.field, int(n), idems);
    if (R.subspace.dim() != int(m_list.size()))
        throw Error("section4: idempotents are dependent");
    R.inside = std::move(V);
    R.claimed_codim = 0;
    for (int m : m_list) R.claimed_codim += m - 1;
    finish_verify(R, verify, budget);
    return R;
}

}  // namespace cyccover
