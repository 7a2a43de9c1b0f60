#pragma once

#include <cstdint>

#include "cyccover/linalg.hpp"

namespace cyccover {

/// Default enumeration budget: bound on the candidate count of a search band
/// and on q^n for orbit enumeration.
constexpr long long kDefaultBudget = 100000000;

/// All orbits of F_q^n under the cyclic shift. Representatives are the
/// lexicographically least members, listed in ascending order.
struct OrbitTable {
    long q = 0;
    int n = 0;
    std::vector<long long> reps;
    std::vector<int> sizes;
    std::vector<long long> members;  // flattened, grouped per orbit
    std::vector<size_t> offset;      // reps.size() + 1 entries

    long long total() const { return offset.empty() ? 0 : (long long)members.size(); }
};

/// Throws BudgetExceeded when q^n exceeds the budget.
OrbitTable orbits(long q, int n, long long budget = kDefaultBudget);

/// sigma on big-endian vector codes (coordinate 1 most significant).
inline long long shift_code(long long code, int n, long q, long long top_unit) {
    return code / q + code % q * top_unit;  // top_unit = q^(n-1)
}

struct CoveringCheck {
    bool covering = false;
    long long failing_rep = -1;  // lex-least uncovered representative when not covering
};

/// True iff every sigma-orbit meets U. Builds the orbit table on demand.
CoveringCheck is_covering(const Subspace& U, long long budget = kDefaultBudget);

struct CoverResult {
    long q = 0;
    int n = 0;
    int h = 0;
    Subspace witness;
    bool exhausted = false;
    long long candidates_tested = 0;
};

/// Exact h_q(n) with a covering witness of codimension h. Descends from the
/// floor(log_q n) cap; at each codimension every subspace is enumerated once
/// as a canonical RREF parity-check matrix. The first success is h_q(n).
/// OpenMP-parallel; the result is independent of the thread count.
CoverResult h_search(long q, int n, int threads = 0, long long budget = kDefaultBudget);

/// Straightforward serial implementation kept as a reference for testing.
CoverResult h_search_reference(long q, int n, long long budget = kDefaultBudget);

/// Number of c-codimensional subspaces of F_q^n.
long long gaussian_binomial(int n, int c, long q);

/// U cap V_n for covering U over GF(2), n odd: the restriction to the
/// even-weight space, whose codimension inside V_n equals codim(U).
Subspace restrict_even_weight(const Subspace& U, long long budget = kDefaultBudget);

/// span(W u {1...1}): the converse lift.
Subspace lift_even_weight(const Subspace& W);

// ---- search engine, shared with the groups module ----

/// Orbit member codes grouped per orbit, zero orbit excluded, groups ordered
/// by ascending orbit size (small orbits prune non-covers fastest).
struct VectorOrbits {
    FieldPtr field;
    int n = 0;
    std::vector<std::vector<long long>> groups;
};

VectorOrbits sigma_orbit_groups(const OrbitTable& T, FieldPtr field);

struct BandOutcome {
    bool found = false;
    long long tested = 0;  // candidates visited; on success, winner index + 1
    std::vector<std::vector<int>> check;  // winning parity-check rows
};

/// Scans every codim-c subspace (canonical order) for a covering one and
/// returns the first hit. Deterministic under any thread count.
BandOutcome search_band(const VectorOrbits& V, int c, int threads);
BandOutcome search_band_reference(const VectorOrbits& V, int c);

/// True iff every orbit group meets the kernel of H.
bool check_covers(const VectorOrbits& V, const std::vector<std::vector<int>>& H);

}  // namespace cyccover
