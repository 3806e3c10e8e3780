// Markov kernels, the exact simplex solver, and optimal transport.

#include <catch2/catch_amalgamated.hpp>

#include "ricci/generators.hpp"
#include "ricci/markov.hpp"
#include "ricci/simplex.hpp"
#include "ricci/transport.hpp"

using namespace ricci;

TEST_CASE("transition kernel row-normalizes edge weights", "[markov]") {
    // a->b (2), b->a (1), b->c (1), c->b (1): P(b,a) = P(b,c) = 1/2.
    const DiGraph g = build_graph(
        {{"a", "b", 2}, {"b", "a", 1}, {"b", "c", 1}, {"c", "b", 1}});
    const Kernel P = transition_kernel(g);
    CHECK(is_row_stochastic(P));
    CHECK(P(0, 1) == 1);
    CHECK(P(1, 0) == Rational(1, 2));
    CHECK(P(1, 2) == Rational(1, 2));
    CHECK(P(2, 1) == 1);
    CHECK(P(0, 0) == 0);
}

TEST_CASE("perron measure solves mP = m exactly", "[markov]") {
    const DiGraph g = build_graph(
        {{"a", "b", 2}, {"b", "a", 1}, {"b", "c", 1}, {"c", "b", 1}});
    const Kernel P = transition_kernel(g);
    const PerronMeasure m = perron_measure(P);
    CHECK(m(0) == Rational(1, 4));
    CHECK(m(1) == Rational(1, 2));
    CHECK(m(2) == Rational(1, 4));

    // Stationarity and normalization as exact identities, on a random graph.
    const DiGraph h = random_strongly_connected(6, 0.4, 11);
    const Kernel Q = transition_kernel(h);
    const PerronMeasure mu = perron_measure(Q);
    Rational total(0);
    for (int x = 0; x < h.size(); ++x) {
        CHECK(mu(x) > 0);
        total += mu(x);
        Rational col(0);
        for (int z = 0; z < h.size(); ++z) col += mu(z) * Q(z, x);
        CHECK(col == mu(x));
    }
    CHECK(total == 1);
}

TEST_CASE("triforce stationary measure and mean kernel rows", "[markov]") {
    const Analysis a = analyze(triforce());
    const std::vector<Rational> want = {Rational(1, 9), Rational(2, 9),
                                        Rational(1, 9), Rational(2, 9),
                                        Rational(1, 9), Rational(2, 9)};
    for (int x = 0; x < 6; ++x) CHECK(a.m(x) == want[x]);
    CHECK(a.M(0, 1) == Rational(1, 2));
    CHECK(a.M(0, 5) == Rational(1, 2));
    for (int z : {0, 2, 3, 5}) CHECK(a.M(1, z) == Rational(1, 4));
    CHECK(a.M(1, 1) == 0);
    CHECK(a.M(1, 4) == 0);
    CHECK(is_row_stochastic(a.M));
}

TEST_CASE("mean kernel is reversible; reverse kernel inverts time",
          "[markov]") {
    for (uint64_t seed : {2, 5, 8}) {
        const DiGraph g = random_strongly_connected(5, 0.5, seed);
        const Analysis a = analyze(g);
        CHECK(is_row_stochastic(a.P_rev));
        CHECK(is_row_stochastic(a.M));
        CHECK(detailed_balance(a.M, a.m));
        // m(x) P(x,y) = m(y) P_rev(y,x) defines the reversal.
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y)
                CHECK(a.m(x) * a.P(x, y) == a.m(y) * a.P_rev(y, x));
    }
}

TEST_CASE("eulerian closed form agrees with the linear-algebra route",
          "[markov]") {
    for (const DiGraph& g :
         {triforce(), directed_complete(5), directed_cycle(4)}) {
        const Analysis a = analyze(g);
        const Kernel E = eulerian_mean_kernel(g);
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y) CHECK(E(x, y) == a.M(x, y));
    }
    CHECK_THROWS_AS(
        eulerian_mean_kernel(build_graph(
            {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}, {"a", "c", 1}})),
        NotEulerianError);
    CHECK_THROWS_AS(
        eulerian_mean_kernel(build_graph({{"a", "b", 2}, {"b", "a", 2}})),
        NotUnweightedError);
}

TEST_CASE("laplacian annihilates constants and fixes sign conventions",
          "[markov]") {
    const Analysis a = analyze(triforce());
    const std::vector<Rational> ones(6, Rational(1));
    const std::vector<Rational> lf = laplacian_apply(a.M, ones);
    for (const Rational& v : lf) CHECK(v == 0);
    // L rho_x at x2 equals 1 - (0 + 2 + 3 + 2)/4 = -3/4.
    const std::vector<Rational> rho = dist_from(a.d, 0);
    CHECK(laplacian_apply(a.M, rho)[1] == Rational(-3, 4));
}

TEST_CASE("simplex solves small standard-form programs exactly",
          "[simplex]") {
    // min -x1 subject to x1 + x2 = 1.
    lp::Program p1{{{1, 1}}, {1}, {-1, 0}};
    const lp::Solution s1 = lp::solve(p1);
    CHECK(s1.value == -1);
    CHECK(s1.x == std::vector<Rational>{1, 0});

    // Fractional data stays exact: min x1/3 + x2, x1 + 2x2 = 5/2.
    lp::Program p2{{{1, 2}}, {Rational(5, 2)}, {Rational(1, 3), 1}};
    const lp::Solution s2 = lp::solve(p2);
    CHECK(s2.value == Rational(5, 6));

    // Two constraints, three variables.
    lp::Program p3{{{1, 1, 0}, {0, 1, 1}}, {2, 3}, {1, 1, 1}};
    const lp::Solution s3 = lp::solve(p3);
    CHECK(s3.value == 3);  // x = (0, 2, 1) or (2, 0, 3): min cost 3

    // Redundant row (sum of the others) must not break phase one.
    lp::Program p4{{{1, 0}, {0, 1}, {1, 1}}, {1, 2, 3}, {1, 1}};
    CHECK(lp::solve(p4).value == 3);
}

TEST_CASE("simplex reports infeasible and unbounded programs", "[simplex]") {
    lp::Program infeasible{{{1, 0}, {1, 0}}, {1, 2}, {0, 0}};
    CHECK_THROWS_AS(lp::solve(infeasible), lp::InfeasibleError);
    CHECK_THROWS_AS(lp::solve(infeasible), NumericalError);

    lp::Program unbounded{{{0, 1}}, {1}, {-1, 0}};
    CHECK_THROWS_AS(lp::solve(unbounded), lp::UnboundedError);

    // Negative right-hand sides are normalized, not rejected.
    lp::Program negated{{{-1, -1}}, {-1}, {1, 0}};
    CHECK(lp::solve(negated).value == 0);
}

TEST_CASE("probability measures validate their data", "[transport]") {
    CHECK_THROWS_AS(ProbMeasure::from({Rational(1, 2), Rational(1, 4)}),
                    BadParamsError);
    CHECK_THROWS_AS(ProbMeasure::from({Rational(3, 2), Rational(-1, 2)}),
                    BadParamsError);
    const ProbMeasure nu = dirac(3, 1);
    CHECK(nu(1) == 1);
    CHECK(nu(0) == 0);

    const Analysis a = analyze(triforce());
    CHECK_THROWS_AS(smoothed_measure(a.M, 0, Rational(-1, 10)),
                    EpsOutOfRangeError);
    CHECK_THROWS_AS(smoothed_measure(a.M, 0, 2), EpsOutOfRangeError);
    const ProbMeasure lazy = smoothed_measure(a.M, 0, Rational(1, 10));
    CHECK(lazy(0) == Rational(9, 10));
    CHECK(lazy(1) == Rational(1, 20));
    CHECK(lazy(5) == Rational(1, 20));
    // eps = 0 is the dirac mass; eps = 1 is the kernel row.
    CHECK(smoothed_measure(a.M, 2, 0)(2) == 1);
    CHECK(smoothed_measure(a.M, 1, 1)(4) == 0);
    CHECK(smoothed_measure(a.M, 1, 1)(0) == Rational(1, 4));
}

TEST_CASE("coupling validation checks marginals and sign", "[transport]") {
    const ProbMeasure nu0 = ProbMeasure::from({Rational(1, 2), Rational(1, 2)});
    const ProbMeasure nu1 = ProbMeasure::from({Rational(1, 4), Rational(3, 4)});
    Coupling good{{{Rational(1, 4), Rational(1, 4)},
                   {Rational(0), Rational(1, 2)}}};
    CHECK(is_coupling(good, nu0, nu1));
    Coupling wrong_marginal{{{Rational(1, 2), Rational(0)},
                             {Rational(0), Rational(1, 2)}}};
    CHECK_FALSE(is_coupling(wrong_marginal, nu0, nu1));
    Coupling negative{{{Rational(3, 4), Rational(-1, 4)},
                       {Rational(-1, 2), Rational(1)}}};
    CHECK_FALSE(is_coupling(negative, nu0, nu1));
}

TEST_CASE("wasserstein between point masses is the distance", "[transport]") {
    const Analysis a = analyze(triforce());
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            const auto [w, c] = wasserstein(a.d, dirac(6, x), dirac(6, y));
            CHECK(w == a.d(x, y));
            CHECK(is_coupling(c, dirac(6, x), dirac(6, y)));
        }
}

TEST_CASE("wasserstein returns an optimal feasible coupling", "[transport]") {
    const Analysis a = analyze(triforce());
    const Rational eps(1, 10);
    const ProbMeasure nu0 = smoothed_measure(a.M, 0, eps);
    const ProbMeasure nu1 = smoothed_measure(a.M, 1, eps);
    const auto [w, c] = wasserstein(a.d, nu0, nu1);
    CHECK(w == Rational(37, 40));
    CHECK(is_coupling(c, nu0, nu1));
    CHECK(coupling_cost(a.d, c) == w);

    const auto [w64, c64] = wasserstein(
        a.d, smoothed_measure(a.M, 0, Rational(1, 64)),
        smoothed_measure(a.M, 1, Rational(1, 64)));
    CHECK(w64 == Rational(253, 256));
}

TEST_CASE("dual enumeration matches the primal simplex", "[transport]") {
    for (uint64_t seed : {3, 7, 12}) {
        const DiGraph g = random_strongly_connected(5, 0.4, seed);
        const Analysis a = analyze(g);
        const Rational eps(1, 8);
        for (int x = 0; x < a.size(); ++x)
            for (int y = 0; y < a.size(); ++y) {
                if (x == y) continue;
                const ProbMeasure nu0 = smoothed_measure(a.M, x, eps);
                const ProbMeasure nu1 = smoothed_measure(a.M, y, eps);
                const auto [primal, coupling] = wasserstein(a.d, nu0, nu1);
                const auto [dual, f] = kantorovich_bruteforce(a.d, nu0, nu1);
                CHECK(primal == dual);
                CHECK(is_lipschitz(f, 1, a.d));
            }
    }
    const Analysis big = analyze(random_strongly_connected(9, 0.3, 1));
    CHECK_THROWS_AS(
        kantorovich_bruteforce(big.d, dirac(9, 0), dirac(9, 1)),
        TooLargeError);
    try {
        kantorovich_bruteforce(big.d, dirac(9, 0), dirac(9, 1));
    } catch (const TooLargeError& e) {
        CHECK(e.n == 9);
    }
}
