#pragma once

// Exact integer/rational linear algebra: Smith normal form, cokernel,
// rational solve, and the inertia of symmetric matrices by congruence
// diagonalization.  No floating point anywhere.

#include "legkit/types.hpp"

#include <algorithm>
#include <vector>

namespace legkit {

/// Dense integer matrix, row major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool is_square() const { return rows == cols; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < cols; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

inline IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw validation_error("matrix product shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

/// Smith normal form decomposition u * m * v = d with u, v unimodular and d
/// diagonal with positive entries satisfying the divisibility chain.
struct SmithForm {
    IntMatrix u, d, v;
    std::vector<Int> diag() const {
        std::vector<Int> out;
        for (int i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d(i, i));
        return out;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
    IntMatrix& d = s.d;
    const int n = std::min(m.rows, m.cols);

    auto swap_rows = [&](int i, int j) {
        for (int k = 0; k < d.cols; ++k) std::swap(d(i, k), d(j, k));
        for (int k = 0; k < s.u.cols; ++k) std::swap(s.u(i, k), s.u(j, k));
    };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < d.rows; ++k) std::swap(d(k, i), d(k, j));
        for (int k = 0; k < s.v.rows; ++k) std::swap(s.v(k, i), s.v(k, j));
    };
    auto add_row = [&](int dst, int src, const Int& f) {
        for (int k = 0; k < d.cols; ++k) d(dst, k) += f * d(src, k);
        for (int k = 0; k < s.u.cols; ++k) s.u(dst, k) += f * s.u(src, k);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int k = 0; k < d.rows; ++k) d(k, dst) += f * d(k, src);
        for (int k = 0; k < s.v.rows; ++k) s.v(k, dst) += f * s.v(k, src);
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < d.cols; ++k) d(i, k) = -d(i, k);
        for (int k = 0; k < s.u.cols; ++k) s.u(i, k) = -s.u(i, k);
    };

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the lower-right block -> pivot (t,t)
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < d.rows; ++i)
                for (int j = t; j < d.cols; ++j)
                    if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < best)) {
                        best = abs(d(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // block is zero
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool dirty = false;
            for (int i = t + 1; i < d.rows; ++i)
                if (d(i, t) != 0) {
                    add_row(i, t, -(d(i, t) / d(t, t)));
                    if (d(i, t) != 0) dirty = true;
                }
            for (int j = t + 1; j < d.cols; ++j)
                if (d(t, j) != 0) {
                    add_col(j, t, -(d(t, j) / d(t, t)));
                    if (d(t, j) != 0) dirty = true;
                }
            if (dirty) continue;
            // pivot divides the rest of the block?
            bool divides = true;
            for (int i = t + 1; i < d.rows && divides; ++i)
                for (int j = t + 1; j < d.cols && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) negate_row(t);
    }
    return s;
}

/// Finitely generated abelian group: free rank plus invariant factors
/// d1 | d2 | ..., each >= 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;
    bool is_finite() const { return free_rank == 0; }
    Int order() const {
        if (!is_finite()) throw validation_error("infinite group has no order");
        Int o = 1;
        for (const auto& d : torsion) o *= d;
        return o;
    }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline std::string to_string(const AbelianGroup& g) {
    std::string out;
    auto add = [&](const std::string& piece) {
        if (!out.empty()) out += " + ";
        out += piece;
    };
    if (g.free_rank == 1) add("Z");
    else if (g.free_rank > 1) add("Z^" + std::to_string(g.free_rank));
    for (const auto& d : g.torsion) add("Z/" + d.str());
    if (out.empty()) out = "0";
    return out;
}

/// Cokernel of a square integer matrix via Smith normal form (unit factors
/// dropped, zero diagonal entries counted as free rank).
inline AbelianGroup homology(const IntMatrix& m) {
    if (!m.is_square()) throw validation_error("homology expects a square matrix");
    AbelianGroup g;
    auto diag = smith_normal_form(m).diag();
    for (const auto& d : diag) {
        if (d == 0) ++g.free_rank;
        else if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank += m.rows - static_cast<int>(diag.size());
    return g;
}

/// One rational solution of m x = b, or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& m,
                                                      const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw validation_error("rhs size mismatch");
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<Rat>> t(R, std::vector<Rat>(C + 1));
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) t[i][j] = Rat(m(i, j));
        t[i][C] = Rat(b[i]);
    }
    std::vector<int> pivot_col(R, -1);
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (t[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(t[p], t[r]);
        Rat inv = t[r][c];
        for (int j = c; j <= C; ++j) t[r][j] /= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (int j = c; j <= C; ++j) t[i][j] -= f * t[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    for (int i = r; i < R; ++i)
        if (t[i][C] != 0) return std::nullopt;
    std::vector<Rat> x(C, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = t[i][C];
    return x;
}

/// Inertia of a symmetric matrix (counts of positive / negative / zero
/// eigenvalues), by exact congruence diagonalization over Q.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
    int signature() const { return positive - negative; }
    bool degenerate() const { return zero > 0; }
};

inline Inertia symmetric_inertia(IntMatrix m) {
    if (!m.is_symmetric()) throw validation_error("inertia expects a symmetric matrix");
    const int n = m.rows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    Inertia out;
    auto add_row_col = [&](int dst, int src, const Rat& f, int from) {
        for (int k = from; k < n; ++k) a[dst][k] += f * a[src][k];
        for (int k = from; k < n; ++k) a[k][dst] += f * a[k][src];
    };
    for (int t = 0; t < n; ++t) {
        if (a[t][t] == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a[i][i] != 0) { p = i; break; }
            if (p >= 0) {
                std::swap(a[t], a[p]);
                for (int k = 0; k < n; ++k) std::swap(a[k][t], a[k][p]);
            } else {
                int q = -1;
                for (int i = t + 1; i < n; ++i)
                    if (a[t][i] != 0) { q = i; break; }
                if (q < 0) { ++out.zero; continue; }
                add_row_col(t, q, 1, t);  // creates 2*a[t][q] on the diagonal
            }
        }
        Rat piv = a[t][t];
        if (piv > 0) ++out.positive;
        else ++out.negative;
        for (int i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            Rat f = -a[i][t] / piv;
            add_row_col(i, t, f, t);
        }
    }
    return out;
}

/// Exact determinant by fraction-free Gaussian elimination (Bareiss).
inline Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw validation_error("determinant expects a square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (a(t, t) == 0) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (a(i, t) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int k = 0; k < n; ++k) std::swap(a(t, k), a(p, k));
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(t, t) - a(i, t) * a(t, j)) / prev;
        prev = a(t, t);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace legkit
