#pragma once

#include "cyccover/linalg.hpp"
#include "cyccover/poly.hpp"

namespace cyccover {

/// Orbit partition of Z_n under multiplication by q. Cosets are sorted
/// internally and ordered by least element.
struct CosetPartition {
    long q = 0, n = 0;
    std::vector<std::vector<long>> cosets;
};

/// Throws NotCoprime when gcd(n, q) > 1.
CosetPartition cyclotomic_cosets(long q, long n);

/// Least L >= 1 with q^L = 1 mod n (L = 1 when n = 1). Throws NotCoprime.
long order_mod(long q, long n);

/// A primitive nth root of unity in GF(q^L), L = order_mod(q, n).
/// Deterministic: g^((q^L - 1)/n) for the canonical generator g.
FieldElem primitive_root_of_unity(long q, long n);

/// Minimal polynomial of omega over GF(q): the expanded product of
/// (X - conjugate) over the distinct Frobenius conjugates omega^(q^j).
/// Throws CoefficientEscape if a coefficient fails the GF(q) membership
/// check (an implementation bug, not a user error).
Poly min_poly(const FieldElem& omega, long q);

/// The factorization of X^n - 1 over GF(q) into distinct monic irreducibles,
/// one per cyclotomic coset, with the CRT idempotents of R_n.
struct Factorization {
    long q = 0, n = 0;
    FieldPtr field;  // GF(q)
    CosetPartition cosets;
    std::vector<Poly> factors;          // ordered to match cosets
    std::vector<RingElement> idempotents;

    /// Index of the coset containing s (s taken mod n).
    size_t coset_index_of(long s) const;
};

/// Throws NotCoprime when gcd(n, q) > 1.
Factorization factor_xn_minus_1(long q, long n);

/// The sigma-invariant component V_i = { p : prod_{j != i} f_j divides p },
/// with dim V_i = deg f_i; basis {X^r u_i : 0 <= r < deg f_i} canonicalized.
Subspace component_subspace(const Factorization& F, size_t i);

}  // namespace cyccover
