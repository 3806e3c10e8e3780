#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"
#include "ricci/simplex.hpp"
#include "ricci/transport.hpp"

namespace ricci {

/// Asymptotic mean curvatures at each vertex:
///   H(x)     = -sum_y M(x,y) d(x,y)   (outward)
///   H_rev(x) = -sum_y M(x,y) d(y,x)   (inward)
struct MeanCurvatures {
    std::vector<Rational> H, H_rev;
};

inline MeanCurvatures mean_curvature(const Analysis& a) {
    const int n = a.size();
    MeanCurvatures mc{std::vector<Rational>(n, Rational(0)),
                      std::vector<Rational>(n, Rational(0))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (a.M(x, y) == 0) continue;
            mc.H[x] -= a.M(x, y) * Rational(a.d(x, y));
            mc.H_rev[x] -= a.M(x, y) * Rational(a.d(y, x));
        }
    return mc;
}

/// Mixed mean curvature of an ordered pair: -(H(x) + H_rev(y)).
inline Rational mixed_mean_curvature(const MeanCurvatures& mc, int x, int y) {
    return -(mc.H[x] + mc.H_rev[y]);
}

/// sup over all ordered pairs (x, y), x = y allowed, of the mixed mean
/// curvature. The sup separates into independent maxima over x and y.
inline Rational lambda_sup(const MeanCurvatures& mc) {
    const Rational hx = *std::min_element(mc.H.begin(), mc.H.end());
    const Rational hy = *std::min_element(mc.H_rev.begin(), mc.H_rev.end());
    return -(hx + hy);
}

/// One-step coarse curvature: kappa_eps = 1 - W(nu_x^eps, nu_y^eps)/d(x,y).
inline Rational kappa_eps(const Analysis& a, int x, int y,
                          const Rational& eps) {
    if (x == y) throw SamePairError("curvature needs two distinct vertices");
    const ProbMeasure nu0 = smoothed_measure(a.M, x, eps);
    const ProbMeasure nu1 = smoothed_measure(a.M, y, eps);
    const Rational w = wasserstein(a.d, nu0, nu1).first;
    return 1 - w / Rational(a.d(x, y));
}

/// Exact curvature of the ordered pair (x, y) via a single LP.
///
/// The limit of kappa_eps/eps equals 1 + (1/d) min { sum_z c_z f(z) } with
/// c = M(x,.) - M(y,.), minimized over 1-Lipschitz f with f(y) - f(x) = d.
/// This routine solves the LP dual of that inner problem: a min-cost flow
/// on the graph's own edges (each of length one) with divergence c, plus a
/// free circulation of strength u between x and y priced at -d per unit.
/// Restricting flow variables to actual edges is lossless, since any
/// transport along a non-edge pair reroutes over a shortest path at equal
/// cost without disturbing the divergence constraints.
inline Rational curvature(const Analysis& a, int x, int y) {
    if (x == y) throw SamePairError("curvature needs two distinct vertices");
    const int n = a.size();
    const Rational d(a.d(x, y));
    const auto es = a.g.edges();
    const int ne = static_cast<int>(es.size());

    lp::Program p;
    p.A.assign(n, std::vector<Rational>(ne + 2, Rational(0)));
    p.b.resize(n);
    p.c.assign(ne + 2, Rational(0));
    for (int e = 0; e < ne; ++e) {
        p.A[es[e].first][e] += 1;
        p.A[es[e].second][e] -= 1;
        p.c[e] = 1;
    }
    p.c[ne] = -d;  // u+: circulation y -> x of strength u, priced -d
    p.A[x][ne] -= 1;
    p.A[y][ne] += 1;
    p.c[ne + 1] = d;  // u-: the reverse orientation
    p.A[x][ne + 1] += 1;
    p.A[y][ne + 1] -= 1;
    for (int z = 0; z < n; ++z) p.b[z] = a.M(x, z) - a.M(y, z);

    const lp::Solution sol = lp::solve(p);
    return 1 - sol.value / d;
}

/// Independent oracle for `curvature`: enumerate integer-valued potentials
/// directly. f(x) = 0 and f(y) = d(x,y) are pinned, every other value is
/// confined by the Lipschitz cone and the [-diam, diam] box (which the
/// integral minimizer never leaves), and sum c_z f(z) is minimized exactly.
inline Rational curvature_bruteforce(const Analysis& a, int x, int y) {
    if (x == y) throw SamePairError("curvature needs two distinct vertices");
    const int n = a.size();
    if (n > 8) throw TooLargeError(n, 8);
    const int D = diameter(a.d);
    const int d = a.d(x, y);

    std::vector<Rational> c(n);
    for (int z = 0; z < n; ++z) c[z] = a.M(x, z) - a.M(y, z);

    std::vector<int> order{x, y};
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) order.push_back(v);

    std::vector<int> f(n, 0);
    f[x] = 0;
    f[y] = d;
    std::optional<Rational> best;

    auto rec = [&](auto&& self, int k, const Rational& acc) -> void {
        if (k == n) {
            if (!best || acc < *best) best = acc;
            return;
        }
        const int v = order[k];
        int lo = -D, hi = D;
        for (int j = 0; j < k; ++j) {
            const int u = order[j];
            hi = std::min(hi, f[u] + a.d(u, v));
            lo = std::max(lo, f[u] - a.d(v, u));
        }
        for (int val = lo; val <= hi; ++val) {
            f[v] = val;
            self(self, k + 1, c[v] == 0 ? acc : acc + val * c[v]);
        }
    };
    // The two pinned values must themselves satisfy the Lipschitz pair
    // constraints; they always do, since d(x,y) = d and d <= d(y,x) + 0 is
    // vacuous for the potential f = rho_x which witnesses feasibility.
    rec(rec, 2, c[y] == 0 ? Rational(0) : Rational(d) * c[y]);
    if (!best) throw NumericalError("potential enumeration found nothing");
    return 1 + *best / Rational(d);
}

/// Third route: evaluate kappa_eps on the halving schedule eps = 2^-k and
/// stop when two consecutive secant ratios kappa_eps/eps agree exactly.
/// W is convex piecewise linear in eps, so kappa_eps is concave with value
/// zero at eps = 0; equal ratios at eps and eps/2 force linearity on the
/// whole initial segment, making the shared ratio the exact limit.
inline Rational curvature_eps_limit(const Analysis& a, int x, int y) {
    if (x == y) throw SamePairError("curvature needs two distinct vertices");
    std::optional<Rational> prev;
    for (int k = 4; k <= 20; ++k) {
        const Rational eps(1, 1 << k);
        const Rational ratio = kappa_eps(a, x, y, eps) / eps;
        if (prev && ratio == *prev) return ratio;
        prev = ratio;
    }
    throw NoStabilizationError("kappa_eps/eps did not stabilize by eps = 2^-20");
}

enum class PairSet { kEdges, kAll };

/// Curvatures over a pair set, the edge infimum K, and the global constants.
struct RicciReport {
    std::vector<std::pair<int, int>> pairs;
    std::vector<Rational> kappa;  // aligned with `pairs`
    Rational K;                   // inf of kappa over directed edges
    Rational Lambda;              // sup of mixed mean curvature
    MeanCurvatures mc;

    std::optional<Rational> kappa_at(int x, int y) const {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == x && pairs[i].second == y) return kappa[i];
        return std::nullopt;
    }
};

namespace detail {

/// Report lookup with on-demand fallback for pairs outside the report.
inline Rational kappa_of(const Analysis& a, const RicciReport& r, int x,
                         int y) {
    if (auto k = r.kappa_at(x, y)) return *k;
    return curvature(a, x, y);
}

}  // namespace detail

inline RicciReport curvature_report(const Analysis& a,
                                    PairSet set = PairSet::kAll) {
    const int n = a.size();
    RicciReport r;
    if (set == PairSet::kAll) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) r.pairs.emplace_back(x, y);
    } else {
        r.pairs = a.g.edges();
    }
    r.kappa.reserve(r.pairs.size());
    for (const auto& [x, y] : r.pairs) r.kappa.push_back(curvature(a, x, y));

    std::optional<Rational> k_min;
    for (size_t i = 0; i < r.pairs.size(); ++i) {
        if (!a.g.has_edge(r.pairs[i].first, r.pairs[i].second)) continue;
        if (!k_min || r.kappa[i] < *k_min) k_min = r.kappa[i];
    }
    r.K = *k_min;  // strong connectivity with n >= 2 guarantees an edge
    r.mc = mean_curvature(a);
    r.Lambda = lambda_sup(r.mc);
    return r;
}

/// Curvature is superadditive along minimal geodesics: with x_0 ... x_l a
/// minimal geodesic and 0 <= s < t <= l,
///   kappa(x_0, x_l) d(x_0, x_l) >= sum_{i < s} kappa(x_i, x_{i+1})
///                                  + kappa(x_s, x_t) d(x_s, x_t)
///                                  + sum_{i >= t} kappa(x_i, x_{i+1}).
struct ChainCheck {
    Rational lhs, rhs;
    bool holds;
};

inline ChainCheck chain_inequality_check(const Analysis& a,
                                         const RicciReport& r,
                                         const std::vector<int>& path, int s,
                                         int t) {
    if (!is_minimal_geodesic(a.g, a.d, path))
        throw NotAGeodesicError("path is not a minimal geodesic");
    const int l = static_cast<int>(path.size()) - 1;
    if (s < 0 || t > l || s >= t)
        throw BadParamsError("need 0 <= s < t <= path length");

    ChainCheck out;
    out.lhs = detail::kappa_of(a, r, path[0], path[l]) *
              Rational(a.d(path[0], path[l]));
    out.rhs = 0;
    for (int i = 0; i < s; ++i)
        out.rhs += detail::kappa_of(a, r, path[i], path[i + 1]);
    out.rhs += detail::kappa_of(a, r, path[s], path[t]) *
               Rational(a.d(path[s], path[t]));
    for (int i = t; i < l; ++i)
        out.rhs += detail::kappa_of(a, r, path[i], path[i + 1]);
    out.holds = out.lhs >= out.rhs;
    return out;
}

}  // namespace ricci
