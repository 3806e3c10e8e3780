#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"
#include "ricci/simplex.hpp"
#include "ricci/spectral.hpp"

namespace ricci {

/// Diameter bound diam <= Lambda / K for positively curved graphs.
struct BonnetMyers {
    Rational bound;
    bool holds;
    bool equality;
};

inline BonnetMyers bonnet_myers(const RicciReport& r, int diam) {
    if (r.K <= 0)
        throw NotApplicableError("diameter bound needs positive curvature");
    BonnetMyers out;
    out.bound = r.Lambda / r.K;
    out.holds = Rational(diam) <= out.bound;
    out.equality = Rational(diam) == out.bound;
    return out;
}

/// Per-pair sharpening of the diameter bound:
/// d(x,y) <= H(x,y) / kappa(x,y) whenever kappa(x,y) > 0.
inline bool pairwise_diameter_check(const Analysis& a, const RicciReport& r) {
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const Rational k = detail::kappa_of(a, r, x, y);
            if (k <= 0) continue;
            if (Rational(a.d(x, y)) * k > mixed_mean_curvature(r.mc, x, y))
                return false;
        }
    return true;
}

/// Residuals of the Laplacian comparison at basepoint x:
///   r     = L rho_x    - K rho_x    - H(x)
///   r_rev = L rho_rev_x - K rho_rev_x - H_rev(x)
/// Both are >= 0 entrywise; both vanish identically in the rigid case.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
laplacian_comparison_residual(const Analysis& a, const Rational& K, int x) {
    const int n = a.size();
    const std::vector<Rational> rho = dist_from(a.d, x);
    const std::vector<Rational> rho_rev = dist_to(a.d, x);
    const std::vector<Rational> lr = laplacian_apply(a.M, rho);
    const std::vector<Rational> lrr = laplacian_apply(a.M, rho_rev);
    std::vector<Rational> r(n), r_rev(n);
    for (int z = 0; z < n; ++z) {
        r[z] = lr[z] - K * rho[z] - lr[x];  // lr[x] = H(x)
        r_rev[z] = lrr[z] - K * rho_rev[z] - lrr[x];
    }
    return {std::move(r), std::move(r_rev)};
}

/// The three spherical-suspension conditions for a pole pair (x, y).
struct SuspensionCheck {
    bool covered;      // rho_x(z) + rho_rev_y(z) = d(x,y) for all z
    bool kappa_const;  // kappa = K on every geodesic pair of (x, y)
    bool mixed_max;    // H(x,y) = Lambda

    bool all() const { return covered && kappa_const && mixed_max; }
};

inline SuspensionCheck is_spherically_suspended(const Analysis& a,
                                                const RicciReport& r, int x,
                                                int y) {
    if (x == y) throw SamePairError("poles must be distinct");
    SuspensionCheck s{true, true, true};
    const int dxy = a.d(x, y);
    for (int z = 0; z < a.size(); ++z)
        if (a.d(x, z) + a.d(z, y) != dxy) {
            s.covered = false;
            break;
        }
    for (const auto& [z, w] : geodesic_pairs(a.d, x, y))
        if (detail::kappa_of(a, r, z, w) != r.K) {
            s.kappa_const = false;
            break;
        }
    s.mixed_max = mixed_mean_curvature(r.mc, x, y) == r.Lambda;
    return s;
}

/// Outcome of the full maximal-diameter rigidity battery.
struct RigidityVerdict {
    Rational K, Lambda;
    int diam = 0;
    bool applicable = false;  // K > 0
    Rational bound;           // Lambda / K when applicable
    bool is_maximal = false;  // applicable and diam = Lambda / K

    std::vector<std::pair<int, int>> poles;  // ordered pairs at distance diam
    // The following are evaluated only when is_maximal; otherwise they stay
    // vacuously true and `suspension` stays empty.
    std::vector<SuspensionCheck> suspension;  // aligned with poles
    bool suspension_ok = true;
    bool pole_identity = true;       // K = kappa(x,y) = H(x,y)/d = Lambda/diam
    bool laplacian_equality = true;  // comparison residuals vanish at poles
    bool eigen_equality = true;      // L f = K f for f = rho_x + H(x)/K
    double lambda1 = 0.0;
    bool lambda1_matches = true;  // |lambda1 - K| <= 1e-9

    bool all_pass() const {
        return suspension_ok && pole_identity && laplacian_equality &&
               eigen_equality && lambda1_matches;
    }
};

inline RigidityVerdict cheng_verify(const Analysis& a,
                                    const RicciReport& r) {
    RigidityVerdict v;
    v.K = r.K;
    v.Lambda = r.Lambda;
    v.diam = diameter(a.d);
    v.applicable = r.K > 0;
    if (v.applicable) {
        v.bound = r.Lambda / r.K;
        v.is_maximal = Rational(v.diam) == v.bound;
    }
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (x != y && a.d(x, y) == v.diam) v.poles.emplace_back(x, y);

    if (!v.is_maximal) return v;

    v.pole_identity = v.K * Rational(v.diam) == v.Lambda;
    for (const auto& [x, y] : v.poles) {
        v.suspension.push_back(is_spherically_suspended(a, r, x, y));
        if (!v.suspension.back().all()) v.suspension_ok = false;

        if (detail::kappa_of(a, r, x, y) != v.K ||
            mixed_mean_curvature(r.mc, x, y) != v.K * Rational(a.d(x, y)))
            v.pole_identity = false;

        const auto from_x = laplacian_comparison_residual(a, v.K, x);
        const auto from_y = laplacian_comparison_residual(a, v.K, y);
        for (const auto& t : from_x.first)
            if (t != 0) v.laplacian_equality = false;
        for (const auto& t : from_y.second)
            if (t != 0) v.laplacian_equality = false;

        // Explicit eigenfunction f = rho_x + H(x)/K with L f = K f exactly.
        std::vector<Rational> f = dist_from(a.d, x);
        const Rational shift = r.mc.H[x] / v.K;
        for (auto& t : f) t += shift;
        const std::vector<Rational> lf = laplacian_apply(a.M, f);
        for (int z = 0; z < a.size(); ++z)
            if (lf[z] != v.K * f[z]) v.eigen_equality = false;
    }

    v.lambda1 = lambda1(spectrum(a));
    v.lambda1_matches = std::abs(v.lambda1 - to_double(v.K)) <= 1e-9;
    return v;
}

inline RigidityVerdict cheng_verify(const Analysis& a) {
    return cheng_verify(a, curvature_report(a, PairSet::kAll));
}

/// Exact testable form of the minimum principle: the largest possible value
/// of f(v) - f(u), over all vertex pairs and all superharmonic f (L f >= 0)
/// with f confined to [-1, 1]. Strong connectivity forces every such f to
/// be constant, so the spread must be exactly zero.
inline Rational superharmonic_spread(const Analysis& a) {
    const int n = a.size();
    // Substituting p = f + 1 in [0, 2] keeps L p = L f (constants are
    // harmonic). Variables: p (n), slack t for L p - t = 0 (n), slack s
    // for p + s = 2 (n).
    lp::Program base;
    base.A.assign(2 * n, std::vector<Rational>(3 * n, Rational(0)));
    base.b.assign(2 * n, Rational(0));
    base.c.assign(3 * n, Rational(0));
    for (int z = 0; z < n; ++z) {
        base.A[z][z] = 1;
        for (int w = 0; w < n; ++w)
            if (a.M(z, w) != 0) base.A[z][w] -= a.M(z, w);
        base.A[z][n + z] = -1;
        base.A[n + z][z] = 1;
        base.A[n + z][2 * n + z] = 1;
        base.b[n + z] = 2;
    }
    Rational best(0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            lp::Program p = base;
            p.c[u] = 1;   // minimize p(u) - p(v), i.e. -(spread)
            p.c[v] = -1;
            const Rational spread = -lp::solve(p).value;
            if (spread > best) best = spread;
        }
    return best;
}

/// L(rho_x + rho_rev_y), which is superharmonic for diameter poles of a
/// positively curved graph with maximal diameter, and identically zero once
/// the full rigidity theorem applies.
inline std::vector<Rational> pole_sum_harmonicity(const Analysis& a,
                                                  const RicciReport& r, int x,
                                                  int y) {
    const int diam = diameter(a.d);
    bool ok = r.K > 0;
    if (ok) ok = Rational(diam) * r.K == r.Lambda;  // maximality
    if (ok) ok = a.d(x, y) == diam;
    if (!ok)
        throw PreconditionError(
            "needs K > 0, maximal diameter, and a pole pair");
    std::vector<Rational> f = dist_from(a.d, x);
    const std::vector<Rational> g = dist_to(a.d, y);
    for (int z = 0; z < a.size(); ++z) f[z] += g[z];
    return laplacian_apply(a.M, f);
}

/// If kappa(x,y) already attains the edge infimum K, every sub-pair of a
/// minimal geodesic from x to y attains it too.
inline bool subconstant_check(const Analysis& a, const RicciReport& r, int x,
                              int y, const std::vector<int>& path) {
    if (!is_minimal_geodesic(a.g, a.d, path))
        throw NotAGeodesicError("path is not a minimal geodesic");
    if (path.front() != x || path.back() != y)
        throw BadParamsError("geodesic endpoints must be (x, y)");
    if (detail::kappa_of(a, r, x, y) != r.K)
        throw PreconditionError("kappa(x,y) must equal K");
    const int l = static_cast<int>(path.size()) - 1;
    for (int i = 0; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            if (detail::kappa_of(a, r, path[i], path[j]) != r.K) return false;
    return true;
}

}  // namespace ricci
