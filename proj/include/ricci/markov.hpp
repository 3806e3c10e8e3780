#pragma once

#include <utility>
#include <vector>

#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Row-stochastic rational matrix over the graph's vertex order.
struct Kernel {
    std::vector<std::vector<Rational>> rows;

    int size() const { return static_cast<int>(rows.size()); }
    const Rational& operator()(int i, int j) const { return rows[i][j]; }
};

inline bool is_row_stochastic(const Kernel& k) {
    for (const auto& row : k.rows) {
        Rational s = 0;
        for (const auto& v : row) {
            if (v < 0) return false;
            s += v;
        }
        if (s != 1) return false;
    }
    return true;
}

/// Stationary probability measure of the transition kernel.
struct PerronMeasure {
    std::vector<Rational> m;

    int size() const { return static_cast<int>(m.size()); }
    const Rational& operator()(int i) const { return m[i]; }
};

/// P(x,y) = mu_xy / mu(x).
inline Kernel transition_kernel(const DiGraph& g) {
    const int n = g.size();
    Kernel P{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
    for (int i = 0; i < n; ++i)
        for (int j : g.out_neighbors(i)) P.rows[i][j] = g.weight(i, j) / g.out_weight(i);
    return P;
}

namespace detail {

/// Exact Gaussian elimination with first-nonzero pivoting.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A,
                                          std::vector<Rational> b) {
    const int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw SingularSystemError("singular linear system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            Rational factor = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= factor * A[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return x;
}

}  // namespace detail

/// Unique probability solution of m P = m, by exact elimination on
/// (P^T - I) with the first row replaced by the normalization sum m = 1.
inline PerronMeasure perron_measure(const Kernel& P) {
    const int n = P.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    std::vector<Rational> b(n, Rational(0));
    for (int x = 0; x < n; ++x) A[0][x] = 1;
    b[0] = 1;
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < n; ++x) A[y][x] = P(x, y) - Rational(x == y ? 1 : 0);

    PerronMeasure m{detail::solve_linear(std::move(A), std::move(b))};

    // Strong connectivity promises a unique strictly positive solution;
    // anything else means the input kernel broke the precondition.
    for (const auto& v : m.m)
        if (v <= 0) throw SingularSystemError("stationary measure not positive");
    for (int y = 0; y < n; ++y) {
        Rational s = 0;
        for (int x = 0; x < n; ++x) s += m.m[x] * P(x, y);
        if (s != m.m[y]) throw SingularSystemError("stationary equation violated");
    }
    return m;
}

/// Reverse kernel: P_rev(x,y) = m(y) P(y,x) / m(x). Row-stochastic by
/// stationarity of m.
inline Kernel reverse_kernel(const Kernel& P, const PerronMeasure& m) {
    const int n = P.size();
    Kernel R{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) R.rows[x][y] = m(y) * P(y, x) / m(x);
    return R;
}

/// Mean kernel: entrywise average of P and its reverse.
inline Kernel mean_kernel(const Kernel& P, const Kernel& P_rev) {
    const int n = P.size();
    Kernel M{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            M.rows[x][y] = (P(x, y) + P_rev(x, y)) / 2;
    return M;
}

/// Closed form of the mean kernel for unweighted Eulerian graphs:
/// 1/deg_out(x) for bidirectional neighbors, 1/(2 deg_out(x)) for
/// one-directional ones. Independent route used to cross-check mean_kernel.
inline Kernel eulerian_mean_kernel(const DiGraph& g) {
    if (!g.is_unweighted())
        throw NotUnweightedError("closed-form mean kernel needs unit weights");
    if (!is_eulerian(g))
        throw NotEulerianError("closed-form mean kernel needs an Eulerian graph");
    const int n = g.size();
    Kernel M{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
    for (int x = 0; x < n; ++x) {
        const Rational half(1, 2);
        for (int y = 0; y < n; ++y) {
            int links = (g.has_edge(x, y) ? 1 : 0) + (g.has_edge(y, x) ? 1 : 0);
            if (links) M.rows[x][y] = Rational(links) * half / g.out_degree(x);
        }
    }
    return M;
}

/// (Lf)(x) = f(x) - sum_y M(x,y) f(y).
inline std::vector<Rational> laplacian_apply(const Kernel& M,
                                             const std::vector<Rational>& f) {
    const int n = M.size();
    std::vector<Rational> out(n);
    for (int x = 0; x < n; ++x) {
        Rational s = 0;
        for (int y = 0; y < n; ++y) s += M(x, y) * f[y];
        out[x] = f[x] - s;
    }
    return out;
}

/// m(x) M(x,y) = m(y) M(y,x) for all pairs (reversibility of the mean kernel).
inline bool detailed_balance(const Kernel& M, const PerronMeasure& m) {
    for (int x = 0; x < M.size(); ++x)
        for (int y = x + 1; y < M.size(); ++y)
            if (m(x) * M(x, y) != m(y) * M(y, x)) return false;
    return true;
}

/// Everything per-graph analysis needs, computed once.
struct Analysis {
    DiGraph g;
    DistMatrix d;
    Kernel P;        // transition kernel
    Kernel P_rev;    // reverse kernel
    Kernel M;        // mean kernel (the one the Laplacian uses)
    PerronMeasure m;

    int size() const { return g.size(); }
};

inline Analysis analyze(DiGraph g) {
    DistMatrix d = all_pairs_distance(g);
    Kernel P = transition_kernel(g);
    PerronMeasure m = perron_measure(P);
    Kernel R = reverse_kernel(P, m);
    Kernel M = mean_kernel(P, R);
    return Analysis{std::move(g), std::move(d), std::move(P), std::move(R),
                    std::move(M), std::move(m)};
}

}  // namespace ricci
