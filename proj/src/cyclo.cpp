#include "cyccover/cyclo.hpp"

#include <numeric>

namespace cyccover {

CosetPartition cyclotomic_cosets(long q, long n) {
    if (std::gcd(q, n) != 1)
        throw NotCoprime("gcd(n, q) > 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
    CosetPartition P{q, n, {}};
    std::vector<char> seen(n, 0);
    for (long s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<long> coset;
        long x = s;
        do {
            seen[x] = 1;
            coset.push_back(x);
            x = x * q % n;
        } while (x != s);
        std::sort(coset.begin(), coset.end());
        P.cosets.push_back(std::move(coset));
    }
    return P;
}

long order_mod(long q, long n) {
    if (n < 1) throw PreconditionError("n must be >= 1");
    if (std::gcd(q, n) != 1)
        throw NotCoprime("gcd(n, q) > 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
    if (n == 1) return 1;
    long L = 1, x = q % n;
    while (x != 1) {
        x = x * q % n;
        ++L;
    }
    return L;
}

FieldElem primitive_root_of_unity(long q, long n) {
    long L = order_mod(q, n);
    FieldPtr base = field_from_order(q);
    FieldPtr big = make_field(base->p(), base->m() * L);
    long long e = (big->q() - 1) / n;
    return fe_pow(find_generator(big), e);
}

Poly min_poly(const FieldElem& omega, long q) {
    if (omega.code == 0) throw ZeroElement("minimal polynomial of zero");
    FieldPtr base = field_from_order(q);
    const FieldPtr& big = omega.field;

    std::vector<int> conj;
    int x = omega.code;
    do {
        conj.push_back(x);
        x = big->pow(x, q);
    } while (x != omega.code);

    // Expand prod (X - c) over the big field.
    std::vector<int> coeffs{1};
    for (int c : conj) {
        std::vector<int> next(coeffs.size() + 1, 0);
        int negc = big->neg(c);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = big->add(next[i + 1], coeffs[i]);
            next[i] = big->add(next[i], big->mul(negc, coeffs[i]));
        }
        coeffs = std::move(next);
    }

    SubfieldMap down(big, base);
    std::vector<int> base_coeffs(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) base_coeffs[i] = down.decode(coeffs[i]);
    return make_poly(base, std::move(base_coeffs));
}

size_t Factorization::coset_index_of(long s) const {
    s %= n;
    if (s < 0) s += n;
    for (size_t i = 0; i < cosets.cosets.size(); ++i)
        for (long x : cosets.cosets[i])
            if (x == s) return i;
    throw Error("coset index not found");  // unreachable
}

Factorization factor_xn_minus_1(long q, long n) {
    Factorization F;
    F.q = q;
    F.n = n;
    F.cosets = cyclotomic_cosets(q, n);
    F.field = field_from_order(q);

    FieldElem omega = primitive_root_of_unity(q, n);
    for (const auto& coset : F.cosets.cosets) {
        Poly f = min_poly(fe_pow(omega, coset[0]), q);
        if (f.deg() != int(coset.size()))
            throw Error("factor degree does not match coset size");
        F.factors.push_back(std::move(f));
    }

    // prod f_i = X^n - 1, exactly.
    Poly prod = poly_one(F.field);
    for (const Poly& f : F.factors) prod = poly_mul(prod, f);
    Poly xn1 = poly_sub(poly_monomial(F.field, int(n)), poly_one(F.field));
    if (!(prod == xn1)) throw Error("factor product is not X^n - 1");

    // Idempotents via Bezout: 1 = s f_i + t g_i with g_i = (X^n - 1)/f_i;
    // u_i = t g_i mod (X^n - 1).
    for (const Poly& f : F.factors) {
        auto [g, rem] = poly_divrem(xn1, f);
        if (!rem.is_zero()) throw Error("factor does not divide X^n - 1");
        Poly s, t;
        Poly gcd = poly_egcd(f, g, &s, &t);
        if (!(gcd == poly_one(F.field))) throw Error("factors are not coprime");
        F.idempotents.push_back(ring_reduce(F.field, int(n), poly_mul(t, g)));
    }
    return F;
}

Subspace component_subspace(const Factorization& F, size_t i) {
    if (i >= F.factors.size()) throw PreconditionError("component index out of range");
    int d = F.factors[i].deg();
    std::vector<RingElement> basis;
    basis.reserve(d);
    for (int r = 0; r < d; ++r) basis.push_back(shift(F.idempotents[i], r));
    Subspace V = rref_rings(F.field, int(F.n), basis);
    if (V.dim() != d) throw Error("component dimension mismatch");
    return V;
}

}  // namespace cyccover
