#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// A weighted Cartesian product of two graphs with mixing weights
/// alpha (right-factor moves) and beta (left-factor moves).
struct ProductSpec {
    DiGraph left, right;
    Rational alpha, beta;
};

inline std::string product_name(const std::string& u, const std::string& v) {
    return "(" + u + "," + v + ")";
}

/// Product graph on V x V' with
///   weight((x,x') -> (y,y')) = beta mu'(x') mu_xy   when x' = y'
///                            + alpha mu(x) mu'_x'y' when x  = y,
/// where mu(x) denotes the total outgoing weight at x in its factor.
inline DiGraph cartesian_product(const ProductSpec& s) {
    if (s.alpha <= 0 || s.beta <= 0)
        throw BadParamsError("product weights must be positive");
    const int n = s.left.size(), np = s.right.size();
    std::vector<std::string> order;
    order.reserve(n * np);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < np; ++v)
            order.push_back(product_name(s.left.name(u), s.right.name(v)));

    std::vector<Edge> edges;
    for (const auto& [x, y] : s.left.edges())
        for (int xp = 0; xp < np; ++xp)
            edges.push_back({product_name(s.left.name(x), s.right.name(xp)),
                             product_name(s.left.name(y), s.right.name(xp)),
                             s.beta * s.right.out_weight(xp) *
                                 s.left.weight(x, y)});
    for (int x = 0; x < n; ++x)
        for (const auto& [xp, yp] : s.right.edges())
            edges.push_back({product_name(s.left.name(x), s.right.name(xp)),
                             product_name(s.left.name(x), s.right.name(yp)),
                             s.alpha * s.left.out_weight(x) *
                                 s.right.weight(xp, yp)});
    return DiGraph::from_edges(edges, order);
}

/// Closed form for the product curvature of ((x,x'), (y,y')):
/// left and right moves mix with weights beta/(alpha+beta) and
/// alpha/(alpha+beta), and a genuinely mixed pair additionally splits by
/// the distance shares d/(d+d') and d'/(d+d').
inline Rational predicted_ricci(const ProductSpec& s, const Analysis& la,
                                const RicciReport& lr, const Analysis& ra,
                                const RicciReport& rr, int x, int xp, int y,
                                int yp) {
    if (x == y && xp == yp)
        throw SamePairError("curvature needs two distinct vertices");
    const Rational ab = s.alpha + s.beta;
    if (xp == yp) return s.beta / ab * detail::kappa_of(la, lr, x, y);
    if (x == y) return s.alpha / ab * detail::kappa_of(ra, rr, xp, yp);
    const Rational d(la.d(x, y)), dp(ra.d(xp, yp));
    return s.beta / ab * (d / (d + dp)) * detail::kappa_of(la, lr, x, y) +
           s.alpha / ab * (dp / (d + dp)) * detail::kappa_of(ra, rr, xp, yp);
}

/// Mean curvatures on the product are convex combinations of the factors'.
struct ProductMeanPrediction {
    Rational H;      // at (x, x')
    Rational H_rev;  // at (y, y')
    Rational mixed;  // of the ordered pair
};

inline ProductMeanPrediction predicted_mean_curvature(
    const ProductSpec& s, const MeanCurvatures& lmc, const MeanCurvatures& rmc,
    int x, int xp, int y, int yp) {
    const Rational ab = s.alpha + s.beta;
    ProductMeanPrediction out;
    out.H = s.beta / ab * lmc.H[x] + s.alpha / ab * rmc.H[xp];
    out.H_rev = s.beta / ab * lmc.H_rev[y] + s.alpha / ab * rmc.H_rev[yp];
    out.mixed = -(out.H + out.H_rev);
    return out;
}

struct ProductConstants {
    int diam;
    Rational Lambda;
    Rational K;
};

inline ProductConstants predicted_constants(const ProductSpec& s, int ldiam,
                                            const RicciReport& lr, int rdiam,
                                            const RicciReport& rr) {
    const Rational ab = s.alpha + s.beta;
    ProductConstants out;
    out.diam = ldiam + rdiam;
    out.Lambda = s.beta / ab * lr.Lambda + s.alpha / ab * rr.Lambda;
    const Rational kl = s.beta * lr.K / ab;
    const Rational kr = s.alpha * rr.K / ab;
    out.K = kl < kr ? kl : kr;
    return out;
}

/// Two-sided test of the product maximality criterion:
///   lhs — both factors have maximal diameter and alpha D Lambda' =
///         beta D' Lambda (the closed-form characterization);
///   rhs — the product graph itself has maximal diameter, established by
///         direct computation of its diameter, K, and Lambda.
struct ProductEquivalence {
    bool lhs, rhs, agree;
};

inline ProductEquivalence maxdiam_product_equivalence(const ProductSpec& s) {
    const Analysis la = analyze(s.left);
    const Analysis ra = analyze(s.right);
    const RicciReport lr = curvature_report(la, PairSet::kEdges);
    const RicciReport rr = curvature_report(ra, PairSet::kEdges);
    if (lr.K <= 0 || rr.K <= 0)
        throw NotApplicableError("both factors need positive curvature");
    const int ld = diameter(la.d), rd = diameter(ra.d);

    ProductEquivalence out;
    const bool left_max = Rational(ld) * lr.K == lr.Lambda;
    const bool right_max = Rational(rd) * rr.K == rr.Lambda;
    const bool balanced =
        s.alpha * Rational(ld) * rr.Lambda == s.beta * Rational(rd) * lr.Lambda;
    out.lhs = left_max && right_max && balanced;

    const Analysis pa = analyze(cartesian_product(s));
    const RicciReport pr = curvature_report(pa, PairSet::kEdges);
    out.rhs = pr.K > 0 && Rational(diameter(pa.d)) * pr.K == pr.Lambda;
    out.agree = out.lhs == out.rhs;
    return out;
}

}  // namespace ricci
