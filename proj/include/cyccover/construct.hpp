#pragma once

#include <optional>

#include "cyccover/cover.hpp"
#include "cyccover/cyclo.hpp"

namespace cyccover {

/// A built covering subspace together with the codimension claim it came
/// with. verified=true means the covering property was actually checked.
struct ConstructionReport {
    std::string name;
    std::vector<std::pair<std::string, long>> parameters;  // insertion order
    Subspace subspace;
    int claimed_codim = 0;
    bool verified = false;
    /// Lower bound on the codimension when the construction only promises
    /// "at least" (thm32); claimed_codim is the exact codim of the output.
    std::optional<long> paper_bound;
    /// For constructions covering a proper invariant subspace rather than
    /// the whole ambient (section4_sum): that subspace; claimed_codim is
    /// then the codimension inside it.
    std::optional<Subspace> inside;
};

/// span{1...1, 10100...0, e_j+e_(j+1) for 4 <= j < n}; codim 2, q = 2,
/// n odd > 3 (throws BadN otherwise).
ConstructionReport lemma21(int n, bool verify = true, long long budget = kDefaultBudget);

/// Covering subspace of F_q^(nm) of the same codimension as the covering
/// subspace U of F_q^n: interleaved basis at coordinates divisible by m,
/// plus every unit vector e_j with m not dividing j.
ConstructionReport product_cover(const Subspace& U, int m, bool verify = true,
                                 long long budget = kDefaultBudget);

/// n = q^d - 1: span(u_1) direct-summed with every component except the one
/// of the coset of 1; codim d - 1.
ConstructionReport thm31(long q, int d, bool verify = true, long long budget = kDefaultBudget);

/// n = M/c with M = (q-1)(q^(k(d+1))-1)/(q^k-1): one representative per
/// sigma-orbit of V_1 \ {0} (each orbit checked to have size n), spanned and
/// direct-summed with the other components. paper_bound = kd+k-s with
/// s = c(q^k-1)/(q-1). Throws PreconditionC, BadDivisor.
ConstructionReport thm32(long q, int k, int d, long c, bool verify = true,
                         long long budget = kDefaultBudget);

/// n = (q^(k(d+1))-1)/(q^k-1), gcd(d+1, q^k-1) = 1: the GF(q^k)-line
/// through u_1 inside the field V_1, direct-summed with the other
/// components; codim kd. Also checks the pairwise-{0} shift tiling of V_1.
/// Throws PreconditionGcd.
ConstructionReport thm33(long q, int k, int d, bool verify = true,
                         long long budget = kDefaultBudget);

/// q = 2, the 2^(m_i)-1 pairwise coprime, n their product: U = span of the
/// k component idempotents u_i, covering V = direct sum of those components
/// under sigma, with codim sum(m_i - 1) inside V. Throws NotCoprime.
ConstructionReport section4_sum(const std::vector<int>& m_list, bool verify = true,
                                long long budget = kDefaultBudget);

}  // namespace cyccover
