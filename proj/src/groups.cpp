#include "cyccover/groups.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace cyccover {

namespace {

std::vector<int> flatten(const Mat& M) {
    std::vector<int> f;
    f.reserve(M.size() * M.size());
    for (const auto& row : M) f.insert(f.end(), row.begin(), row.end());
    return f;
}

long long checked_power(long q, int n, long long budget) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > budget / q)
            throw BudgetExceeded("q^dim exceeds budget " + std::to_string(budget));
        total *= q;
    }
    return total;
}

void code_digits_be(long long code, long q, int n, std::vector<int>& d) {
    for (int j = n; j-- > 0;) {
        d[j] = int(code % q);
        code /= q;
    }
}

long long digits_code_be(const std::vector<int>& d, long q) {
    long long code = 0;
    for (int x : d) code = code * q + x;
    return code;
}

}  // namespace

MatrixRep rep_close(FieldPtr field, int dim, std::vector<Mat> generators, long long cap) {
    for (const auto& g : generators) {
        if (int(g.size()) != dim) throw DimensionMismatch("generator is not dim x dim");
        for (const auto& row : g)
            if (int(row.size()) != dim) throw DimensionMismatch("generator is not dim x dim");
        mat_inverse(field, g);  // throws NotInvertible
    }
    MatrixRep R;
    R.field = std::move(field);
    R.dim = dim;
    R.generators = std::move(generators);
    R.elements.push_back(mat_identity(dim));
    std::map<std::vector<int>, int> seen;
    seen[flatten(R.elements[0])] = 0;
    for (size_t head = 0; head < R.elements.size(); ++head) {
        for (const auto& g : R.generators) {
            Mat prod = mat_mul(R.field, R.elements[head], g);
            auto key = flatten(prod);
            if (seen.count(key)) continue;
            if ((long long)R.elements.size() >= cap)
                throw CapExceeded("group order exceeds cap " + std::to_string(cap));
            seen[key] = int(R.elements.size());
            R.elements.push_back(std::move(prod));
        }
    }
    return R;
}

Mat shift_matrix(int n) {
    Mat M(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) M[i][(i - 1 + n) % n] = 1;
    return M;
}

VectorOrbits group_vector_orbits(const MatrixRep& R, long long budget) {
    long q = R.field->q();
    long long total = checked_power(q, R.dim, budget);
    std::vector<char> seen(total, 0);
    std::vector<std::vector<long long>> groups;
    std::vector<int> d(R.dim);
    for (long long v = 0; v < total; ++v) {
        if (seen[v]) continue;
        if (v == 0) {
            seen[0] = 1;
            continue;
        }
        // flood fill with the generators; same orbits as the full group
        std::vector<long long> orbit{v};
        seen[v] = 1;
        for (size_t head = 0; head < orbit.size(); ++head) {
            code_digits_be(orbit[head], q, R.dim, d);
            for (const auto& g : R.generators) {
                long long w = digits_code_be(mat_apply(R.field, g, d), q);
                if (!seen[w]) {
                    seen[w] = 1;
                    orbit.push_back(w);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        groups.push_back(std::move(orbit));
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    VectorOrbits V;
    V.field = R.field;
    V.n = R.dim;
    V.groups = std::move(groups);
    return V;
}

bool is_g_covering(const Subspace& U, const MatrixRep& R, long long budget) {
    if (U.n != R.dim || !U.field->same(*R.field))
        throw DimensionMismatch("subspace ambient differs from representation");
    if (U.dim() == U.n) return true;
    VectorOrbits V = group_vector_orbits(R, budget);
    return check_covers(V, parity_check(U));
}

CoverResult h_g_search(const MatrixRep& R, int threads, long long budget) {
    long q = R.field->q();
    int cap = 0;
    for (long long pw = q; pw <= R.order(); pw *= q) ++cap;
    cap = std::min(cap, R.dim);
    VectorOrbits V = group_vector_orbits(R, budget);

    CoverResult res;
    res.q = q;
    res.n = R.dim;
    res.witness = full_space(R.field, R.dim);
    res.exhausted = true;
    for (int c = cap; c >= 1; --c) {
        long long gauss = gaussian_binomial(R.dim, c, q);
        if (gauss > budget)
            throw BudgetExceeded("codimension-" + std::to_string(c) + " band has " +
                                 std::to_string(gauss) + " candidates > budget " +
                                 std::to_string(budget));
        BandOutcome out = search_band(V, c, threads);
        res.candidates_tested += out.tested;
        if (out.found) {
            res.h = c;
            res.witness = kernel_of(R.field, R.dim, out.check);
            return res;
        }
    }
    return res;
}

Subspace maschke_complement(const Subspace& W, const MatrixRep& R) {
    if (W.n != R.dim || !W.field->same(*R.field))
        throw DimensionMismatch("subspace ambient differs from representation");
    const Field& F = *R.field;
    if (R.order() % F.p() == 0)
        throw CharDivides("char " + std::to_string(F.p()) + " divides |G| = " +
                          std::to_string(R.order()));
    for (const auto& g : R.generators)
        if (!(apply_matrix(g, W) == W)) throw NotInvariant("subspace is not G-invariant");

    int n = R.dim;
    // pi: coordinate projection onto W along the non-pivot axes
    Mat P(n, std::vector<int>(n, 0));
    for (size_t j = 0; j < W.rows.size(); ++j)
        for (int a = 0; a < n; ++a) P[a][W.pivots[j]] = W.rows[j][a];

    Mat avg(n, std::vector<int>(n, 0));
    for (const auto& g : R.elements) {
        Mat t = mat_mul(R.field, mat_inverse(R.field, g), mat_mul(R.field, P, g));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) avg[a][b] = F.add(avg[a][b], t[a][b]);
    }
    int scale = F.inv(int(R.order() % F.p()));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) avg[a][b] = F.mul(scale, avg[a][b]);

    Subspace comp = kernel_of(R.field, n, avg);
    for (const auto& g : R.generators)
        if (!(apply_matrix(g, comp) == comp))
            throw Error("averaged complement is not invariant");
    sum(W, comp, /*require_direct=*/true);
    if (W.dim() + comp.dim() != n) throw Error("complement does not complete the space");
    return comp;
}

MatrixRep restrict_rep(const MatrixRep& R, const Subspace& W) {
    int k = W.dim();
    std::vector<Mat> gens;
    for (const auto& g : R.generators) {
        if (!(apply_matrix(g, W) == W)) throw NotInvariant("subspace is not G-invariant");
        Mat S(k, std::vector<int>(k, 0));
        for (int i = 0; i < k; ++i) {
            std::vector<int> img = mat_apply(R.field, g, W.rows[i]);
            // coordinates in W's RREF basis are just the pivot entries
            for (int j = 0; j < k; ++j) S[j][i] = img[W.pivots[j]];
        }
        gens.push_back(std::move(S));
    }
    return rep_close(R.field, k, std::move(gens),
                     std::max<long long>(R.order(), kDefaultGroupCap));
}

BoundRecord cor44_bounds(const MatrixRep& R, const std::vector<Subspace>& decomposition,
                         int threads, long long budget) {
    Subspace acc = zero_space(R.field, R.dim);
    for (const auto& W : decomposition) {
        for (const auto& g : R.generators)
            if (!(apply_matrix(g, W) == W))
                throw NotDecomposition("a summand is not G-invariant");
        try {
            acc = sum(acc, W, /*require_direct=*/true);
        } catch (const NotDirect&) {
            throw NotDecomposition("summands are not in direct sum");
        }
    }
    if (acc.dim() != R.dim) throw NotDecomposition("summands do not span the space");

    BoundRecord B;
    for (const auto& W : decomposition) {
        MatrixRep sub = restrict_rep(R, W);
        B.h_parts.push_back(h_g_search(sub, threads, budget).h);
    }
    B.h_total = h_g_search(R, threads, budget).h;
    B.max_lower = *std::max_element(B.h_parts.begin(), B.h_parts.end());
    B.sum_bound = std::accumulate(B.h_parts.begin(), B.h_parts.end(), 0L);
    long q = R.field->q();
    B.log_bound = 0;
    for (long long pw = q; pw <= R.order(); pw *= q) ++B.log_bound;
    B.sandwich_holds = B.max_lower <= B.h_total &&
                       B.h_total <= std::min(B.sum_bound, B.log_bound);
    return B;
}

std::string rep_to_file(const MatrixRep& R) {
    std::ostringstream os;
    os << R.field->q() << ' ' << R.dim << ' ' << R.generators.size() << '\n';
    for (const auto& g : R.generators)
        for (const auto& row : g) {
            for (int j = 0; j < R.dim; ++j) os << row[j] << (j + 1 < R.dim ? " " : "\n");
        }
    return os.str();
}

MatrixRep rep_from_file(const std::string& text, long long cap) {
    std::istringstream is(text);
    long q;
    int dim, ngen;
    if (!(is >> q >> dim >> ngen)) throw ParseError("bad representation header");
    FieldPtr field = field_from_order(q);
    std::vector<Mat> gens(ngen, Mat(dim, std::vector<int>(dim)));
    for (auto& g : gens)
        for (auto& row : g)
            for (auto& x : row) {
                if (!(is >> x) || x < 0 || x >= field->q())
                    throw ParseError("bad matrix entry");
            }
    return rep_close(std::move(field), dim, std::move(gens), cap);
}

}  // namespace cyccover
