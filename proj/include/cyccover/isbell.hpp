#pragma once

#include "cyccover/cover.hpp"

namespace cyccover {

/// Cap on materialized permutation-group element lists.
constexpr long long kDefaultIsbellCap = 100000;

/// A permutation group on {0, ..., degree-1} with its full element list.
struct PermGroup {
    int degree = 0;
    std::vector<std::vector<int>> generators;  // point images
    std::vector<std::vector<int>> elements;    // deduplicated, deterministic order

    long long order() const { return (long long)elements.size(); }
};

struct IsbellReport {
    long p = 0;
    long b = 0;
    int a = 0;               // codim of the covering witness
    long long degree = 0;    // p^a * b
    bool transitive = false;
    bool fpf_p_power_found = false;  // a fixed-point-free p-power element exists
    long m_p_lower = 0;              // a + 1, valid when transitive and not fpf
};

/// The permutation image of G = F_p^b x| C_b acting by left multiplication
/// on the left cosets of {(w, id) : w in W}, W a covering subspace of
/// codim a. Cosets are indexed by (j, residue of v modulo sigma^j(W)),
/// j-major, residues in ascending code order.
/// Throws NotCoprime when gcd(p, b) > 1, NotCovering, CapExceeded.
PermGroup build_isbell_group(long p, int b, const Subspace& W,
                             long long cap = kDefaultIsbellCap,
                             long long budget = kDefaultBudget);

/// Checks transitivity (orbit of point 0 under the element list) and scans
/// every element of p-power order > 1 for a fixed point. a and b are read
/// off the degree: a = v_p(degree), b = degree / p^a.
IsbellReport verify_isbell(const PermGroup& H, long p);

/// The witness used when none is supplied: the Theorem 3.1 subspace when
/// b = p^d - 1 for some d, otherwise an h_search witness.
Subspace default_isbell_witness(long p, int b, int threads = 0,
                                long long budget = kDefaultBudget);

}  // namespace cyccover
