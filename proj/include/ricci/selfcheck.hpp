#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ricci/curvature.hpp"
#include "ricci/digraph.hpp"
#include "ricci/generators.hpp"
#include "ricci/markov.hpp"
#include "ricci/products.hpp"
#include "ricci/rational.hpp"
#include "ricci/rigidity.hpp"
#include "ricci/spectral.hpp"
#include "ricci/transport.hpp"

namespace ricci {

struct CriterionResult {
    int id;
    std::string label;
    bool pass;
    std::string detail;  // first few failure descriptions, empty on pass
};

namespace selfcheck_detail {

struct Check {
    bool ok = true;
    std::string detail;
    int failures = 0;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (++failures <= 4) {
            if (!detail.empty()) detail += "; ";
            detail += what;
        } else if (failures == 5) {
            detail += "; ...";
        }
    }
};

struct Fixture {
    Analysis a;
    RicciReport r;
};

inline Fixture make_fixture(DiGraph g) {
    Analysis a = analyze(std::move(g));
    RicciReport r = curvature_report(a, PairSet::kAll);
    return {std::move(a), std::move(r)};
}

/// The deterministic random-graph corpus shared by the property criteria:
/// seeds 1..50 with n cycling over 4..7 and density over {.2, .35, .5}.
inline std::vector<DiGraph> corpus() {
    const double densities[] = {0.2, 0.35, 0.5};
    std::vector<DiGraph> out;
    out.reserve(50);
    for (int seed = 1; seed <= 50; ++seed)
        out.push_back(random_strongly_connected(
            4 + (seed - 1) % 4, densities[(seed - 1) % 3], seed));
    return out;
}

inline std::string pair_str(const Analysis& a, int x, int y) {
    return "(" + a.g.name(x) + "," + a.g.name(y) + ")";
}

}  // namespace selfcheck_detail

/// Runs the embedded fixture-and-property suite (the first eight acceptance
/// criteria). Each entry is independent; all are always evaluated.
inline std::vector<CriterionResult> run_selfcheck() {
    using namespace selfcheck_detail;
    std::vector<CriterionResult> out;

    // --- 1: the 3-vertex directed complete graph, fully rigid.
    Fixture k3 = make_fixture(directed_complete(3));
    {
        Check c;
        for (const auto& [x, y] : k3.a.g.edges())
            c.expect(*k3.r.kappa_at(x, y) == Rational(3, 2),
                     "kappa" + pair_str(k3.a, x, y) + " != 3/2");
        c.expect(diameter(k3.a.d) == 2, "diameter != 2");
        c.expect(k3.r.Lambda == 3, "Lambda != 3");
        c.expect(k3.r.K == Rational(3, 2), "K != 3/2");
        c.expect(k3.r.Lambda / k3.r.K == Rational(diameter(k3.a.d)),
                 "Lambda/K != diameter");
        const RigidityVerdict v = cheng_verify(k3.a, k3.r);
        c.expect(v.is_maximal, "not maximal");
        c.expect(v.all_pass(), "rigidity battery failed");
        c.expect(std::abs(v.lambda1 - 1.5) <= 1e-9, "lambda1 != 1.5");
        out.push_back({1, "3-vertex complete digraph fixture", c.ok, c.detail});
    }

    // --- 2: complete digraphs n = 4..7, curvature tables and constants.
    std::vector<Fixture> kn;
    {
        Check c;
        for (int n = 4; n <= 7; ++n) {
            kn.push_back(make_fixture(directed_complete(n)));
            const Fixture& f = kn.back();
            const std::string tag = "n=" + std::to_string(n) + ": ";
            const Rational h = -(1 + Rational(1, 2 * (n - 2)));
            for (int i = 0; i < n; ++i) {
                c.expect(f.r.mc.H[i] == h, tag + "H wrong");
                c.expect(f.r.mc.H_rev[i] == h, tag + "H_rev wrong");
            }
            c.expect(f.r.Lambda == 2 + Rational(1, n - 2), tag + "Lambda wrong");
            c.expect(diameter(f.a.d) == 2, tag + "diameter != 2");
            c.expect(f.r.K == 1, tag + "K != 1");
            // kappa(x1, xi) over the out-neighbors x2..x_{n-1} of x1.
            for (int i = 2; i <= n - 1; ++i) {
                Rational want;
                if (n == 4)
                    want = (i == 2) ? Rational(1) : Rational(3, 2);
                else if (n == 5)
                    want = (i == 2) ? Rational(1) : Rational(7, 6);
                else
                    want = (i == 3 || i == n - 1)
                               ? 1 + Rational(1, 2 * (n - 2))
                               : Rational(1);
                c.expect(*f.r.kappa_at(0, i - 1) == want,
                         tag + "kappa(x1,x" + std::to_string(i) + ") wrong");
            }
            const BonnetMyers bm = bonnet_myers(f.r, diameter(f.a.d));
            c.expect(bm.holds && !bm.equality,
                     tag + "diameter bound should hold strictly");
        }
        out.push_back(
            {2, "complete digraph fixtures n=4..7", c.ok, c.detail});
    }

    // --- 3: the triforce graph, constant curvature 3/4 and fully rigid.
    Fixture tf = make_fixture(triforce());
    {
        Check c;
        const auto& a = tf.a;
        const int x1 = 0, x2 = 1, x3 = 2, x4 = 3, x6 = 5;
        c.expect(a.M(x1, x2) == Rational(1, 2) &&
                     a.M(x1, x6) == Rational(1, 2) &&
                     a.M(x1, x1) + a.M(x1, x3) + a.M(x1, x4) == 0,
                 "mean kernel row x1 wrong");
        for (int z : {x1, x3, x4, x6})
            c.expect(a.M(x2, z) == Rational(1, 4),
                     "mean kernel row x2 wrong at " + a.g.name(z));
        c.expect(a.M(x2, x2) == 0 && a.M(x2, 4) == 0,
                 "mean kernel row x2 has stray mass");
        for (int i = 0; i < 6; ++i) {
            c.expect(tf.r.mc.H[i] == Rational(-3, 2), "H wrong");
            c.expect(tf.r.mc.H_rev[i] == Rational(-3, 2), "H_rev wrong");
        }
        c.expect(tf.r.Lambda == 3, "Lambda != 3");
        c.expect(diameter(a.d) == 4, "diameter != 4");
        for (const auto& [x, y] : a.g.edges())
            c.expect(*tf.r.kappa_at(x, y) == Rational(3, 4),
                     "kappa" + pair_str(a, x, y) + " != 3/4");
        c.expect(tf.r.K == Rational(3, 4), "K != 3/4");
        const RigidityVerdict v = cheng_verify(tf.a, tf.r);
        c.expect(v.is_maximal, "not maximal");
        c.expect(v.all_pass(), "rigidity battery failed");
        c.expect(std::abs(v.lambda1 - 0.75) <= 1e-9, "lambda1 != 0.75");
        out.push_back({3, "triforce fixture", c.ok, c.detail});
    }

    // --- 4: intermediate transport values on the triforce, with explicit
    // primal (coupling) and dual (potential) witnesses.
    {
        Check c;
        const auto& a = tf.a;
        for (const Rational& eps : {Rational(1, 10), Rational(1, 64)}) {
            const std::string tag = "eps=" + fraction_str(eps) + ": ";
            const ProbMeasure nu0 = smoothed_measure(a.M, 0, eps);
            const ProbMeasure nu1 = smoothed_measure(a.M, 1, eps);
            const Rational want = 1 - 3 * eps / 4;
            const auto [w, coup] = wasserstein(a.d, nu0, nu1);
            c.expect(w == want, tag + "W value wrong");
            c.expect(is_coupling(coup, nu0, nu1), tag + "coupling infeasible");
            c.expect(coupling_cost(a.d, coup) == w, tag + "coupling cost");

            // Hand-checkable optimal coupling: keep the bulk on (x1,x2),
            // fix up the smoothing mass locally.
            Coupling pi{std::vector<std::vector<Rational>>(
                6, std::vector<Rational>(6, Rational(0)))};
            pi.pi[0][1] = 1 - 3 * eps / 2;
            pi.pi[0][0] = eps / 4;
            pi.pi[0][2] = eps / 4;
            pi.pi[5][3] = eps / 4;
            pi.pi[5][5] = eps / 4;
            pi.pi[1][1] = eps / 2;
            c.expect(is_coupling(pi, nu0, nu1), tag + "witness coupling bad");
            c.expect(coupling_cost(a.d, pi) == want,
                     tag + "witness coupling cost != 1 - 3eps/4");

            // Matching dual potential.
            const std::vector<Rational> f = {0, 1, 2, 0, 0, -1};
            c.expect(is_lipschitz(f, 1, a.d), tag + "witness f not Lipschitz");
            Rational dual(0);
            for (int z = 0; z < 6; ++z) dual += f[z] * (nu1(z) - nu0(z));
            c.expect(dual == want, tag + "dual witness value wrong");
        }
        out.push_back(
            {4, "triforce smoothed-measure transport values", c.ok, c.detail});
    }

    // --- 5: product fixtures, closed forms against direct computation.
    const ProductSpec s1{k3.a.g, k3.a.g, Rational(1), Rational(1)};
    Fixture p1 = make_fixture(cartesian_product(s1));
    const ProductSpec s2{p1.a.g, k3.a.g, Rational(1), Rational(2)};
    Fixture p2 = make_fixture(cartesian_product(s2));
    {
        Check c;
        c.expect(diameter(p1.a.d) == 4, "9-vertex product: diameter != 4");
        c.expect(p1.r.Lambda == 3, "9-vertex product: Lambda != 3");
        c.expect(p1.r.K == Rational(3, 4), "9-vertex product: K != 3/4");
        const int np = 3;
        for (int x = 0; x < 3; ++x)
            for (int xp = 0; xp < np; ++xp)
                for (int y = 0; y < 3; ++y)
                    for (int yp = 0; yp < np; ++yp) {
                        if (x == y && xp == yp) continue;
                        const Rational pred = predicted_ricci(
                            s1, k3.a, k3.r, k3.a, k3.r, x, xp, y, yp);
                        c.expect(*p1.r.kappa_at(x * np + xp, y * np + yp) ==
                                     pred,
                                 "9-vertex product: kappa != closed form");
                    }

        c.expect(diameter(p2.a.d) == 6, "27-vertex product: diameter != 6");
        c.expect(p2.r.Lambda == 3, "27-vertex product: Lambda != 3");
        c.expect(p2.r.K == Rational(1, 2), "27-vertex product: K != 1/2");
        const ProductEquivalence eq = maxdiam_product_equivalence(s2);
        c.expect(eq.lhs && eq.rhs && eq.agree,
                 "27-vertex product: maximality equivalence failed");
        out.push_back({5, "product fixtures", c.ok, c.detail});
    }

    // --- 6 and 7 share the corpus; 8 sweeps corpus and fixtures.
    std::vector<Fixture> fleet;
    for (DiGraph& g : corpus()) fleet.push_back(make_fixture(std::move(g)));

    {
        Check c;
        const Rational eps(1, 16);
        for (const Fixture& f : fleet) {
            const int n = f.a.size();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    const Rational lp = *f.r.kappa_at(x, y);
                    c.expect(curvature_bruteforce(f.a, x, y) == lp,
                             "LP vs enumeration " + pair_str(f.a, x, y));
                    c.expect(curvature_eps_limit(f.a, x, y) == lp,
                             "LP vs eps limit " + pair_str(f.a, x, y));
                    const ProbMeasure nu0 = smoothed_measure(f.a.M, x, eps);
                    const ProbMeasure nu1 = smoothed_measure(f.a.M, y, eps);
                    c.expect(wasserstein(f.a.d, nu0, nu1).first ==
                                 kantorovich_bruteforce(f.a.d, nu0, nu1).first,
                             "primal vs dual W " + pair_str(f.a, x, y));
                }
        }
        out.push_back(
            {6, "oracle agreement on the random corpus", c.ok, c.detail});
    }

    {
        Check c;
        for (size_t gi = 0; gi < fleet.size(); ++gi) {
            const Fixture& f = fleet[gi];
            const std::string tag = "graph " + std::to_string(gi + 1) + ": ";
            const int n = f.a.size();
            c.expect(detailed_balance(f.a.M, f.a.m), tag + "detailed balance");
            for (int x = 0; x < n; ++x) {
                const auto res = laplacian_comparison_residual(f.a, f.r.K, x);
                for (int z = 0; z < n; ++z)
                    c.expect(res.first[z] >= 0 && res.second[z] >= 0,
                             tag + "negative comparison residual");
            }
            c.expect(pairwise_diameter_check(f.a, f.r),
                     tag + "pairwise diameter comparison");
            Rational all_min = f.r.kappa[0];
            for (const Rational& k : f.r.kappa)
                if (k < all_min) all_min = k;
            c.expect(all_min == f.r.K, tag + "all-pairs min != edge min");
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    for (const auto& path :
                         minimal_geodesics(f.a.g, f.a.d, x, y)) {
                        const int l = static_cast<int>(path.size()) - 1;
                        for (int s = 0; s < l; ++s)
                            for (int t = s + 1; t <= l; ++t)
                                c.expect(chain_inequality_check(f.a, f.r,
                                                                path, s, t)
                                             .holds,
                                         tag + "chain inequality");
                    }
                }
            if (f.r.K > 0)
                c.expect(lambda1(spectrum(f.a)) >= to_double(f.r.K) - 1e-9,
                         tag + "lambda1 below K");
            c.expect(superharmonic_spread(f.a) == 0,
                     tag + "superharmonic spread nonzero");
        }
        out.push_back(
            {7, "theorem properties on the random corpus", c.ok, c.detail});
    }

    {
        Check c;
        std::vector<std::pair<std::string, const Fixture*>> pool;
        pool.emplace_back("complete n=3", &k3);
        for (size_t i = 0; i < kn.size(); ++i)
            pool.emplace_back("complete n=" + std::to_string(i + 4), &kn[i]);
        pool.emplace_back("triforce", &tf);
        pool.emplace_back("product 9", &p1);
        pool.emplace_back("product 27", &p2);
        for (size_t gi = 0; gi < fleet.size(); ++gi)
            pool.emplace_back("corpus " + std::to_string(gi + 1), &fleet[gi]);

        int maximal_count = 0;
        for (const auto& [name, f] : pool) {
            const RigidityVerdict v = cheng_verify(f->a, f->r);
            if (!v.is_maximal) continue;
            ++maximal_count;
            c.expect(v.suspension_ok, name + ": suspension conditions");
            c.expect(v.pole_identity, name + ": pole identity");
            c.expect(v.laplacian_equality, name + ": rigid comparison");
            c.expect(v.eigen_equality, name + ": rigid eigenfunction");
            c.expect(v.lambda1_matches, name + ": lambda1 != K");
        }
        // The four structurally maximal fixtures must actually be swept.
        c.expect(maximal_count >= 4, "maximal fixtures missing from sweep");
        out.push_back(
            {8, "rigidity implications on maximal graphs", c.ok, c.detail});
    }

    return out;
}

}  // namespace ricci
