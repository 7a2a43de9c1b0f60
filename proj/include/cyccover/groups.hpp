#pragma once

#include "cyccover/cover.hpp"

namespace cyccover {

using Mat = std::vector<std::vector<int>>;

/// Default cap on materialized group orders.
constexpr long long kDefaultGroupCap = 10000;

/// A matrix group over GF(q) with its full element list. Every group in
/// scope is tiny, so explicit lists keep covering checks and order scans
/// exact and trivial.
struct MatrixRep {
    FieldPtr field;
    int dim = 0;
    std::vector<Mat> generators;
    std::vector<Mat> elements;  // BFS closure from the identity, deterministic order

    long long order() const { return (long long)elements.size(); }
};

/// Breadth-first closure of the generated group. Throws NotInvertible on a
/// singular generator, CapExceeded past the cap.
MatrixRep rep_close(FieldPtr field, int dim, std::vector<Mat> generators,
                    long long cap = kDefaultGroupCap);

/// The cyclic-shift permutation matrix on F_q^n (sigma as a matrix).
Mat shift_matrix(int n);

/// Orbit partition of F_q^dim under the group, in the cover module's
/// grouped form (zero orbit dropped, ascending orbit size).
VectorOrbits group_vector_orbits(const MatrixRep& R, long long budget = kDefaultBudget);

/// True iff every vector of V lands in U under some group element.
bool is_g_covering(const Subspace& U, const MatrixRep& R, long long budget = kDefaultBudget);

/// Exact h_{G,rho}(V) with witness, descending from floor(log_q |G|).
CoverResult h_g_search(const MatrixRep& R, int threads = 0, long long budget = kDefaultBudget);

/// G-invariant complement W' with V = W + W' (direct), by the averaged
/// projection (1/|G|) sum_g g^{-1} pi g. Throws CharDivides when
/// char(F) divides |G|, NotInvariant when W is not G-invariant.
Subspace maschke_complement(const Subspace& W, const MatrixRep& R);

/// The restriction of the rep to an invariant subspace, in the coordinates
/// of W's canonical basis (pivot-column coefficient extraction).
MatrixRep restrict_rep(const MatrixRep& R, const Subspace& W);

/// The Corollary 4.4 sandwich data for a decomposition V = direct sum W_i.
struct BoundRecord {
    std::vector<int> h_parts;  // h on each W_i under the restricted rep
    int h_total = 0;           // h on V
    long max_lower = 0;        // max_i h(W_i)
    long sum_bound = 0;        // sum_i h(W_i)
    long log_bound = 0;        // floor(log_q |G|)
    bool sandwich_holds = false;
};

/// Throws NotDecomposition unless the W_i are invariant and direct-sum to V.
BoundRecord cor44_bounds(const MatrixRep& R, const std::vector<Subspace>& decomposition,
                         int threads = 0, long long budget = kDefaultBudget);

/// Rep file format: header "q dim ngen", then ngen matrices as dim rows of
/// dim coordinate codes.
std::string rep_to_file(const MatrixRep& R);
MatrixRep rep_from_file(const std::string& text, long long cap = kDefaultGroupCap);

}  // namespace cyccover
