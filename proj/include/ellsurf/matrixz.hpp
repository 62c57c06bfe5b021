// Exact linear algebra over Z and Q: Bareiss determinants, Smith normal form
// with unimodular transforms, and rational matrix inversion.  Matrices are
// dense row-major vectors of vectors; everything stays small (lattice ranks
// of at most a dozen or so).
#pragma once

#include <ellsurf/rational.hpp>

#include <utility>
#include <vector>

namespace ellsurf {

using MatZ = std::vector<std::vector<Int>>;
using MatQ = std::vector<std::vector<Rat>>;

inline MatZ matz_identity(size_t n) {
    MatZ m(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline MatZ matz_mul(const MatZ& a, const MatZ& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    MatZ r(n, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

// Signed determinant by fraction-free Gaussian elimination (Bareiss).
inline Int det_bareiss(MatZ a) {
    size_t n = a.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // exact by Bareiss theory
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ----- Smith normal form -----

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    MatZ U, D, V;
};

inline SmithForm smith_normal_form(MatZ a) {
    size_t n = a.size();
    size_t m = n ? a[0].size() : 0;
    MatZ U = matz_identity(n), V = matz_identity(m);

    auto swap_rows = [&](size_t i, size_t j) { std::swap(a[i], a[j]); std::swap(U[i], U[j]); };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < m; ++r) std::swap(V[r][i], V[r][j]);
    };
    auto addmul_row = [&](size_t dst, size_t src, const Int& f) {
        for (size_t j = 0; j < m; ++j) a[dst][j] += f * a[src][j];
        for (size_t j = 0; j < n; ++j) U[dst][j] += f * U[src][j];
    };
    auto addmul_col = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
        for (size_t i = 0; i < m; ++i) V[i][dst] += f * V[i][src];
    };
    auto negate_row = [&](size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : U[i]) x = -x;
    };

    size_t t = 0;
    while (t < n && t < m) {
        // find a nonzero pivot in the remaining block
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < n && !found; ++i)
            for (size_t j = t; j < m && !found; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                addmul_row(i, t, -q);
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < m; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                addmul_col(j, t, -q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry; otherwise fold a bad
            // row in and restart the reduction
            bool divides = true;
            for (size_t i = t + 1; i < n && divides; ++i)
                for (size_t j = t + 1; j < m && divides; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        addmul_row(t, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) negate_row(t);
        ++t;
    }
    return SmithForm{std::move(U), std::move(a), std::move(V)};
}

// ----- rational matrices -----

inline MatQ matq_from(const MatZ& a) {
    MatQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) r[i].emplace_back(x);
    return r;
}

inline std::vector<Rat> matq_apply(const MatQ& a, const std::vector<Rat>& v) {
    std::vector<Rat> r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline MatQ matq_inverse(MatQ a) {
    size_t n = a.size();
    MatQ inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw Error("singular-matrix", "matrix is not invertible");
        std::swap(a[k], a[piv]);
        std::swap(inv[k], inv[piv]);
        Rat d = a[k][k];
        for (size_t j = 0; j < n; ++j) { a[k][j] /= d; inv[k][j] /= d; }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

}  // namespace ellsurf
