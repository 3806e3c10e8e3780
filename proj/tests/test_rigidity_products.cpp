// Diameter bounds, rigidity diagnostics, weighted Cartesian products,
// and JSON report round-trips.

#include <catch2/catch_amalgamated.hpp>

#include "ricci/curvature.hpp"
#include "ricci/generators.hpp"
#include "ricci/products.hpp"
#include "ricci/report.hpp"
#include "ricci/rigidity.hpp"

using namespace ricci;

namespace {
struct Fx {
    Analysis a;
    RicciReport r;
};
Fx fx(DiGraph g) {
    Analysis a = analyze(std::move(g));
    RicciReport r = curvature_report(a, PairSet::kAll);
    return {std::move(a), std::move(r)};
}
}  // namespace

TEST_CASE("diameter bound on complete digraphs", "[rigidity]") {
    const Fx f = fx(directed_complete(6));
    CHECK(f.r.K == 1);
    CHECK(f.r.Lambda == Rational(9, 4));
    const BonnetMyers bm = bonnet_myers(f.r, diameter(f.a.d));
    CHECK(bm.bound == Rational(9, 4));
    CHECK(bm.holds);
    CHECK_FALSE(bm.equality);
    CHECK(pairwise_diameter_check(f.a, f.r));
}

TEST_CASE("diameter bound requires positive curvature", "[rigidity]") {
    const Fx f = fx(directed_cycle(4));
    CHECK(f.r.K == 0);
    CHECK_THROWS_AS(bonnet_myers(f.r, diameter(f.a.d)), NotApplicableError);
    // The per-pair comparison is vacuous at K = 0 but must not throw.
    CHECK(pairwise_diameter_check(f.a, f.r));
}

TEST_CASE("laplacian comparison residuals", "[rigidity]") {
    const Fx tf = fx(triforce());
    // The diameter pairs are (x1,x5), (x3,x1), (x5,x3): at those poles the
    // comparison is an exact equality; elsewhere it is a strict inequality
    // somewhere.
    for (int x : {0, 2, 4}) {
        const auto [r, r_rev] =
            laplacian_comparison_residual(tf.a, tf.r.K, x);
        for (int z = 0; z < 6; ++z) {
            CHECK(r[z] == 0);
            CHECK(r_rev[z] == 0);
        }
    }
    for (int x : {1, 3, 5}) {
        const auto [r, r_rev] =
            laplacian_comparison_residual(tf.a, tf.r.K, x);
        CHECK(r[x] == 0);
        CHECK(r_rev[x] == 0);
        bool strict = false;
        for (int z = 0; z < 6; ++z) {
            CHECK(r[z] >= 0);
            CHECK(r_rev[z] >= 0);
            if (r[z] > 0) strict = true;
        }
        CHECK(strict);
    }
    const Fx k6 = fx(directed_complete(6));
    bool strict = false;
    for (int x = 0; x < 6; ++x) {
        const auto [r, r_rev] =
            laplacian_comparison_residual(k6.a, k6.r.K, x);
        CHECK(r[x] == 0);
        for (int z = 0; z < 6; ++z) {
            CHECK(r[z] >= 0);
            CHECK(r_rev[z] >= 0);
            if (r[z] > 0) strict = true;
        }
    }
    CHECK(strict);  // K6 is not maximal, so some slack must appear
}

TEST_CASE("spherical suspension conditions", "[rigidity]") {
    const Fx tf = fx(triforce());
    CHECK_THROWS_AS(is_spherically_suspended(tf.a, tf.r, 2, 2),
                    SamePairError);
    // (x1, x5) is a diameter pair of the maximal triforce.
    const SuspensionCheck s = is_spherically_suspended(tf.a, tf.r, 0, 4);
    CHECK(s.covered);
    CHECK(s.kappa_const);
    CHECK(s.mixed_max);
    CHECK(s.all());
    // (x1, x3) is too close: x5 lies on no minimal x1 -> x3 geodesic.
    const SuspensionCheck t = is_spherically_suspended(tf.a, tf.r, 0, 2);
    CHECK_FALSE(t.covered);
    CHECK_FALSE(t.all());
}

TEST_CASE("full rigidity verdict on fixtures", "[rigidity]") {
    const RigidityVerdict tri = cheng_verify(analyze(triforce()));
    CHECK(tri.applicable);
    CHECK(tri.is_maximal);
    CHECK(tri.all_pass());
    CHECK_FALSE(tri.poles.empty());
    CHECK(std::abs(tri.lambda1 - 0.75) <= 1e-9);

    // K6 satisfies the bound strictly: no rigidity claims are made.
    const RigidityVerdict k6 = cheng_verify(analyze(directed_complete(6)));
    CHECK(k6.applicable);
    CHECK_FALSE(k6.is_maximal);
    CHECK(k6.all_pass());            // vacuously: nothing is claimed
    CHECK_FALSE(k6.poles.empty());   // diameter pairs are still listed
    CHECK(k6.suspension.empty());    // but carry no suspension claims
}

TEST_CASE("superharmonic functions have no spread", "[rigidity]") {
    CHECK(superharmonic_spread(analyze(triforce())) == 0);
    CHECK(superharmonic_spread(analyze(directed_complete(4))) == 0);
    CHECK(superharmonic_spread(
              analyze(random_strongly_connected(6, 0.4, 21))) == 0);
}

TEST_CASE("pole sums are harmonic exactly at maximal diameter",
          "[rigidity]") {
    const Fx tf = fx(triforce());
    // x5 is at distance 4 = diam from x1.
    const std::vector<Rational> h = pole_sum_harmonicity(tf.a, tf.r, 0, 4);
    for (const Rational& v : h) CHECK(v == 0);
    // Non-diameter pair fails the precondition.
    CHECK_THROWS_AS(pole_sum_harmonicity(tf.a, tf.r, 0, 2),
                    PreconditionError);
    // K6 misses the bound, so no pair qualifies.
    const Fx k6 = fx(directed_complete(6));
    CHECK_THROWS_AS(pole_sum_harmonicity(k6.a, k6.r, 0, 3),
                    PreconditionError);
}

TEST_CASE("minimal curvature propagates along geodesics from a minimal pair",
          "[rigidity]") {
    const Fx tf = fx(triforce());
    CHECK(subconstant_check(tf.a, tf.r, 0, 4, {0, 1, 2, 3, 4}));
    CHECK(subconstant_check(tf.a, tf.r, 0, 1, {0, 1}));
    CHECK_THROWS_AS(subconstant_check(tf.a, tf.r, 0, 4, {0, 1, 2}),
                    BadParamsError);  // valid geodesic, wrong endpoints
    CHECK_THROWS_AS(subconstant_check(tf.a, tf.r, 0, 4, {0, 5, 3, 4}),
                    NotAGeodesicError);

    // Precondition: the endpoint pair must realize K itself.
    const Fx k4 = fx(directed_complete(4));
    REQUIRE(*k4.r.kappa_at(0, 2) != k4.r.K);  // kappa(x1,x3) = 3/2 > K = 1
    CHECK_THROWS_AS(subconstant_check(k4.a, k4.r, 0, 2, {0, 2}),
                    PreconditionError);
}

TEST_CASE("product graph names, order, and weights", "[products]") {
    const DiGraph left =
        build_graph({{"a", "b", 2}, {"b", "a", 1}});
    const DiGraph right = build_graph({{"c", "d", 1}, {"d", "c", 1}});
    const ProductSpec spec{left, right, Rational(1), Rational(3)};
    const DiGraph p = cartesian_product(spec);
    REQUIRE(p.size() == 4);
    CHECK(p.name(0) == "(a,c)");
    CHECK(p.name(1) == "(a,d)");
    CHECK(p.name(2) == "(b,c)");
    CHECK(p.name(3) == "(b,d)");
    // Left move: beta * mu'(x') * mu_xy; right move: alpha * mu(x) * mu'_x'y'.
    CHECK(p.weight(p.index("(a,c)"), p.index("(b,c)")) == 6);
    CHECK(p.weight(p.index("(a,c)"), p.index("(a,d)")) == 2);
    CHECK(p.weight(p.index("(b,d)"), p.index("(a,d)")) == 3);
    CHECK(p.weight(p.index("(b,d)"), p.index("(b,c)")) == 1);
    CHECK(p.edge_count() == 8);

    CHECK_THROWS_AS(
        cartesian_product(ProductSpec{left, right, Rational(0), Rational(1)}),
        BadParamsError);
    CHECK_THROWS_AS(
        cartesian_product(ProductSpec{left, right, Rational(1), Rational(-2)}),
        BadParamsError);
}

TEST_CASE("product curvature closed forms match direct computation",
          "[products]") {
    const DiGraph k3 = directed_complete(3);
    const ProductSpec spec{k3, k3, Rational(2), Rational(1)};
    const Analysis fa = analyze(k3);
    const RicciReport fr = curvature_report(fa, PairSet::kAll);
    const Analysis pa = analyze(cartesian_product(spec));
    const RicciReport pr = curvature_report(pa, PairSet::kAll);
    const MeanCurvatures pm = mean_curvature(pa);
    const MeanCurvatures fm = mean_curvature(fa);

    CHECK_THROWS_AS(predicted_ricci(spec, fa, fr, fa, fr, 1, 2, 1, 2),
                    SamePairError);
    for (int x = 0; x < 3; ++x)
        for (int xp = 0; xp < 3; ++xp)
            for (int y = 0; y < 3; ++y)
                for (int yp = 0; yp < 3; ++yp) {
                    const int u = 3 * x + xp, v = 3 * y + yp;
                    const ProductMeanPrediction mp = predicted_mean_curvature(
                        spec, fm, fm, x, xp, y, yp);
                    CHECK(pm.H[u] == mp.H);
                    CHECK(pm.H_rev[v] == mp.H_rev);
                    CHECK(mixed_mean_curvature(pm, u, v) == mp.mixed);
                    if (u == v) continue;
                    CHECK(*pr.kappa_at(u, v) ==
                          predicted_ricci(spec, fa, fr, fa, fr, x, xp, y, yp));
                }

    const ProductConstants pc =
        predicted_constants(spec, 2, fr, 2, fr);
    CHECK(pc.diam == diameter(pa.d));
    CHECK(pc.Lambda == pr.Lambda);
    CHECK(pc.K == pr.K);
}

TEST_CASE("maximality transfers through balanced products", "[products]") {
    const DiGraph k3 = directed_complete(3);
    const ProductEquivalence eq =
        maxdiam_product_equivalence(ProductSpec{k3, k3, Rational(1), Rational(1)});
    CHECK(eq.lhs);
    CHECK(eq.rhs);
    CHECK(eq.agree);

    // Unbalanced weights break the equality condition on both sides.
    const ProductEquivalence uneq =
        maxdiam_product_equivalence(ProductSpec{k3, k3, Rational(1), Rational(3)});
    CHECK_FALSE(uneq.lhs);
    CHECK_FALSE(uneq.rhs);
    CHECK(uneq.agree);

    // A flat factor (K = 0) makes the question inapplicable.
    CHECK_THROWS_AS(
        maxdiam_product_equivalence(
            ProductSpec{directed_cycle(4), k3, Rational(1), Rational(1)}),
        NotApplicableError);
}

TEST_CASE("json reports round-trip byte-identically", "[report]") {
    const Analysis a = analyze(triforce());
    const RicciReport r = curvature_report(a, PairSet::kAll);
    const Spectrum sp = spectrum(a);
    const RigidityVerdict v = cheng_verify(a, r);
    const SuspensionCheck s = is_spherically_suspended(a, r, 0, 4);

    const std::vector<Json> reports = {
        json_info(a),
        json_ricci(a, r),
        json_mean(a, r.mc),
        json_bounds(a, r),
        json_maximal(a, v),
        json_suspension(a, s, 0, 4),
        json_spectrum(sp, r.K),
    };
    for (const Json& j : reports) {
        const std::string text = j.dump(2);
        Json parsed = Json::parse(text);
        rederive_floats(parsed);
        CHECK(parsed.dump(2) == text);
    }
}

TEST_CASE("json rationals carry fraction strings with derived floats",
          "[report]") {
    const Json j = rational_json(Rational(-7, 8));
    CHECK(j.at("frac") == "-7/8");
    CHECK(j.at("value") == -0.875);
    Json k = rational_json(Rational(1, 3));
    const double v = k.at("value").get<double>();
    CHECK(v == to_double(Rational(1, 3)));
    // Corrupting the float and re-deriving restores it from the fraction.
    Json wrapped = Json::object();
    wrapped["x"] = rational_json(Rational(1, 3));
    wrapped["x"]["value"] = 0.0;
    rederive_floats(wrapped);
    CHECK(wrapped["x"]["value"].get<double>() == v);
}
