#include "cyccover/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace cyccover {

namespace {

// In-place RREF of a row list; returns pivot columns.
std::vector<int> reduce_rows(const Field& F, std::vector<std::vector<int>>& rows, int n) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        int inv = F.inv(rows[r][col]);
        for (int j = 0; j < n; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int f = rows[i][col];
            for (int j = 0; j < n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

Subspace rref(FieldPtr field, int n, const std::vector<std::vector<int>>& vectors) {
    for (const auto& v : vectors)
        if (int(v.size()) != n) throw DimensionMismatch("vector length differs from ambient");
    std::vector<std::vector<int>> rows = vectors;
    std::vector<int> pivots = reduce_rows(*field, rows, n);
    return {std::move(field), n, std::move(rows), std::move(pivots)};
}

Subspace rref_rings(FieldPtr field, int n, const std::vector<RingElement>& vectors) {
    std::vector<std::vector<int>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.n != n || !v.field->same(*field))
            throw DimensionMismatch("ring element does not match ambient");
        rows.push_back(v.coeffs);
    }
    return rref(std::move(field), n, rows);
}

Subspace zero_space(FieldPtr field, int n) { return {std::move(field), n, {}, {}}; }

Subspace full_space(FieldPtr field, int n) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    std::vector<int> pivots(n);
    for (int i = 0; i < n; ++i) {
        rows[i][i] = 1;
        pivots[i] = i;
    }
    return {std::move(field), n, std::move(rows), std::move(pivots)};
}

std::vector<int> reduce_mod(const Subspace& U, std::vector<int> v) {
    if (int(v.size()) != U.n) throw DimensionMismatch("vector length differs from ambient");
    const Field& F = *U.field;
    for (size_t i = 0; i < U.rows.size(); ++i) {
        int c = v[U.pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < U.n; ++j) v[j] = F.sub(v[j], F.mul(c, U.rows[i][j]));
    }
    return v;
}

bool contains(const Subspace& U, const std::vector<int>& v) {
    std::vector<int> r = reduce_mod(U, v);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool contains(const Subspace& U, const RingElement& v) { return contains(U, v.coeffs); }

int codim(const Subspace& U) { return U.n - U.dim(); }

Subspace sum(const Subspace& U, const Subspace& W, bool require_direct) {
    if (U.n != W.n || !U.field->same(*W.field))
        throw DimensionMismatch("subspaces in different ambients");
    std::vector<std::vector<int>> rows = U.rows;
    rows.insert(rows.end(), W.rows.begin(), W.rows.end());
    Subspace S = rref(U.field, U.n, rows);
    if (require_direct && S.dim() != U.dim() + W.dim())
        throw NotDirect("sum is not direct");
    return S;
}

Subspace shift_subspace(const Subspace& U, long r) {
    std::vector<std::vector<int>> rows;
    rows.reserve(U.rows.size());
    for (const auto& row : U.rows)
        rows.push_back(shift(RingElement{U.field, U.n, row}, r).coeffs);
    return rref(U.field, U.n, rows);
}

Subspace apply_matrix(const std::vector<std::vector<int>>& M, const Subspace& U) {
    std::vector<std::vector<int>> rows;
    rows.reserve(U.rows.size());
    for (const auto& row : U.rows) rows.push_back(mat_apply(U.field, M, row));
    return rref(U.field, U.n, rows);
}

std::vector<std::vector<int>> parity_check(const Subspace& U) {
    const Field& F = *U.field;
    std::vector<char> is_pivot(U.n, 0);
    for (int p : U.pivots) is_pivot[p] = 1;
    std::vector<std::vector<int>> H;
    H.reserve(U.n - U.dim());
    for (int col = 0; col < U.n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<int> h(U.n, 0);
        h[col] = 1;
        for (size_t i = 0; i < U.rows.size(); ++i)
            h[U.pivots[i]] = F.neg(U.rows[i][col]);
        H.push_back(std::move(h));
    }
    return H;
}

Subspace kernel_of(FieldPtr field, int n, const std::vector<std::vector<int>>& H) {
    std::vector<std::vector<int>> rows = H;
    for (const auto& r : rows)
        if (int(r.size()) != n) throw DimensionMismatch("matrix row length differs from ambient");
    std::vector<int> pivots = reduce_rows(*field, rows, n);
    const Field& F = *field;
    std::vector<char> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<int>> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<int> v(n, 0);
        v[col] = 1;
        for (size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = F.neg(rows[i][col]);
        basis.push_back(std::move(v));
    }
    return rref(std::move(field), n, basis);
}

std::vector<std::vector<int>> mat_mul(const FieldPtr& f, const std::vector<std::vector<int>>& A,
                                      const std::vector<std::vector<int>>& B) {
    size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    std::vector<std::vector<int>> C(n, std::vector<int>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                C[i][j] = f->add(C[i][j], f->mul(A[i][t], B[t][j]));
        }
    return C;
}

std::vector<int> mat_apply(const FieldPtr& f, const std::vector<std::vector<int>>& M,
                           const std::vector<int>& v) {
    std::vector<int> r(M.size(), 0);
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (M[i][j] != 0 && v[j] != 0) r[i] = f->add(r[i], f->mul(M[i][j], v[j]));
    return r;
}

std::vector<std::vector<int>> mat_identity(int n) {
    std::vector<std::vector<int>> I(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

std::vector<std::vector<int>> mat_inverse(const FieldPtr& f,
                                          const std::vector<std::vector<int>>& M) {
    int n = int(M.size());
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<int>> aug(n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = M[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> pivots = reduce_rows(*f, aug, 2 * n);
    for (int i = 0; i < n; ++i)
        if (i >= int(pivots.size()) || pivots[i] != i)
            throw NotInvertible("matrix is singular");
    std::vector<std::vector<int>> inv(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

int mat_rank(const FieldPtr& f, std::vector<std::vector<int>> M) {
    if (M.empty()) return 0;
    return int(reduce_rows(*f, M, int(M[0].size())).size());
}

std::string subspace_to_file(const Subspace& U) {
    std::ostringstream os;
    os << U.field->q() << ' ' << U.n << ' ' << U.dim() << '\n';
    for (const auto& row : U.rows)
        os << ring_str(RingElement{U.field, U.n, row}) << '\n';
    return os.str();
}

Subspace subspace_from_file(const std::string& text) {
    std::istringstream is(text);
    long q;
    int n, dim;
    if (!(is >> q >> n >> dim)) throw ParseError("bad subspace header");
    FieldPtr field = field_from_order(q);
    std::string line;
    std::getline(is, line);
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < dim; ++i) {
        if (!std::getline(is, line)) throw ParseError("missing subspace row");
        rows.push_back(ring_parse(field, n, line).coeffs);
    }
    Subspace U = rref(field, n, rows);
    if (U.dim() != dim) throw ParseError("subspace rows not independent");
    return U;
}

}  // namespace cyccover
