#pragma once

#include <string>
#include <vector>

#include "cyccover/poly.hpp"

namespace cyccover {

/// A subspace of F_q^n in canonical form: the basis matrix is in reduced
/// row echelon form (pivot columns strictly increasing, pivots 1, pivot
/// columns zero elsewhere). Two subspaces are equal iff their matrices are
/// identical.
struct Subspace {
    FieldPtr field;
    int n = 0;
    std::vector<std::vector<int>> rows;
    std::vector<int> pivots;

    int dim() const { return int(rows.size()); }
    bool operator==(const Subspace& o) const {
        return n == o.n && field->same(*o.field) && rows == o.rows;
    }
};

/// Canonical basis of the span. Throws DimensionMismatch on ragged input.
Subspace rref(FieldPtr field, int n, const std::vector<std::vector<int>>& vectors);
Subspace rref_rings(FieldPtr field, int n, const std::vector<RingElement>& vectors);

Subspace zero_space(FieldPtr field, int n);
Subspace full_space(FieldPtr field, int n);

bool contains(const Subspace& U, const std::vector<int>& v);
bool contains(const Subspace& U, const RingElement& v);

/// Canonical coset representative: v reduced by U's pivot rows.
std::vector<int> reduce_mod(const Subspace& U, std::vector<int> v);

int codim(const Subspace& U);

/// Span of the union. With require_direct, verifies dim U + dim W = dim sum
/// and throws NotDirect otherwise.
Subspace sum(const Subspace& U, const Subspace& W, bool require_direct = false);

/// Image sigma^r(U) (still in canonical form).
Subspace shift_subspace(const Subspace& U, long r);

/// Image of U under an n x n matrix (row-major), re-canonicalized.
Subspace apply_matrix(const std::vector<std::vector<int>>& M, const Subspace& U);

/// Parity-check matrix H with codim(U) rows: v in U iff Hv = 0.
std::vector<std::vector<int>> parity_check(const Subspace& U);

/// The kernel {v : Hv = 0} of a matrix given by rows over the field.
Subspace kernel_of(FieldPtr field, int n, const std::vector<std::vector<int>>& H);

/// Matrix helpers over a field (square, row-major).
std::vector<std::vector<int>> mat_mul(const FieldPtr& f,
                                      const std::vector<std::vector<int>>& A,
                                      const std::vector<std::vector<int>>& B);
std::vector<int> mat_apply(const FieldPtr& f, const std::vector<std::vector<int>>& M,
                           const std::vector<int>& v);
std::vector<std::vector<int>> mat_identity(int n);
/// Throws NotInvertible.
std::vector<std::vector<int>> mat_inverse(const FieldPtr& f,
                                          const std::vector<std::vector<int>>& M);
int mat_rank(const FieldPtr& f, std::vector<std::vector<int>> M);

/// Subspace file format: first line "q n dim", then dim lines of n
/// coordinate codes (RREF rows).
std::string subspace_to_file(const Subspace& U);
Subspace subspace_from_file(const std::string& text);

}  // namespace cyccover
