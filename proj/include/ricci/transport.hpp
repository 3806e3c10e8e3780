#pragma once

#include <utility>
#include <vector>

#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"
#include "ricci/markov.hpp"
#include "ricci/rational.hpp"
#include "ricci/simplex.hpp"

namespace ricci {

/// Probability measure on the vertex set, validated on construction.
struct ProbMeasure {
    std::vector<Rational> p;

    static ProbMeasure from(std::vector<Rational> vals) {
        Rational sum(0);
        for (const auto& v : vals) {
            if (v < 0) throw BadParamsError("measure has a negative mass");
            sum += v;
        }
        if (sum != 1) throw BadParamsError("measure does not sum to one");
        return ProbMeasure{std::move(vals)};
    }

    int size() const { return static_cast<int>(p.size()); }
    const Rational& operator()(int i) const { return p[i]; }
};

inline ProbMeasure dirac(int n, int x) {
    std::vector<Rational> p(n, Rational(0));
    p[x] = 1;
    return ProbMeasure{std::move(p)};
}

/// nu_x^eps = (1 - eps) delta_x + eps M(x, .)
inline ProbMeasure smoothed_measure(const Kernel& M, int x,
                                    const Rational& eps) {
    if (eps < 0 || eps > 1)
        throw EpsOutOfRangeError("smoothing parameter must lie in [0, 1]");
    const int n = M.size();
    std::vector<Rational> p(n);
    for (int z = 0; z < n; ++z) p[z] = eps * M(x, z);
    p[x] += 1 - eps;
    return ProbMeasure{std::move(p)};
}

/// Transport plan between two measures, stored as a full matrix.
struct Coupling {
    std::vector<std::vector<Rational>> pi;

    int size() const { return static_cast<int>(pi.size()); }
    const Rational& operator()(int i, int j) const { return pi[i][j]; }
};

inline bool is_coupling(const Coupling& c, const ProbMeasure& nu0,
                        const ProbMeasure& nu1) {
    const int n = c.size();
    if (nu0.size() != n || nu1.size() != n) return false;
    for (int i = 0; i < n; ++i) {
        Rational row(0);
        for (int j = 0; j < n; ++j) {
            if (c(i, j) < 0) return false;
            row += c(i, j);
        }
        if (row != nu0(i)) return false;
    }
    for (int j = 0; j < n; ++j) {
        Rational col(0);
        for (int i = 0; i < n; ++i) col += c(i, j);
        if (col != nu1(j)) return false;
    }
    return true;
}

inline Rational coupling_cost(const DistMatrix& d, const Coupling& c) {
    Rational cost(0);
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
            if (c(i, j) != 0) cost += Rational(d(i, j)) * c(i, j);
    return cost;
}

/// Exact Wasserstein distance W(nu0, nu1) for the graph metric, together
/// with an optimal coupling. Solved as a transportation LP restricted to
/// the two supports.
inline std::pair<Rational, Coupling> wasserstein(const DistMatrix& d,
                                                 const ProbMeasure& nu0,
                                                 const ProbMeasure& nu1) {
    const int n = d.size();
    std::vector<int> s0, s1;
    for (int i = 0; i < n; ++i)
        if (nu0(i) != 0) s0.push_back(i);
    for (int j = 0; j < n; ++j)
        if (nu1(j) != 0) s1.push_back(j);
    const int a = static_cast<int>(s0.size());
    const int b = static_cast<int>(s1.size());

    lp::Program prog;
    prog.A.assign(a + b, std::vector<Rational>(a * b, Rational(0)));
    prog.b.resize(a + b);
    prog.c.resize(a * b);
    for (int i = 0; i < a; ++i) {
        prog.b[i] = nu0(s0[i]);
        for (int j = 0; j < b; ++j) {
            prog.A[i][i * b + j] = 1;
            prog.A[a + j][i * b + j] = 1;
            prog.c[i * b + j] = d(s0[i], s1[j]);
        }
    }
    for (int j = 0; j < b; ++j) prog.b[a + j] = nu1(s1[j]);

    lp::Solution sol = lp::solve(prog);
    Coupling c{std::vector<std::vector<Rational>>(
        n, std::vector<Rational>(n, Rational(0)))};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) c.pi[s0[i]][s1[j]] = sol.x[i * b + j];
    return {sol.value, std::move(c)};
}

/// Independent check of W by the dual: enumerate integer-valued potentials
/// f with f(vertex 0) = 0 that satisfy f(w) - f(v) <= d(v, w) for every
/// ordered pair, and maximize sum f d(nu1 - nu0). An integral maximizer
/// exists because the dual feasible set is an integral polyhedron and the
/// gauge f(0) = 0 plus the Lipschitz bounds confine f to [-diam, diam].
inline std::pair<Rational, std::vector<Rational>> kantorovich_bruteforce(
    const DistMatrix& d, const ProbMeasure& nu0, const ProbMeasure& nu1) {
    const int n = d.size();
    if (n > 8) throw TooLargeError(n, 8);
    const int D = diameter(d);

    std::vector<Rational> diff(n);
    for (int v = 0; v < n; ++v) diff[v] = nu1(v) - nu0(v);

    std::vector<int> f(n, 0), best_f(n, 0);
    bool have_best = false;
    Rational best(0);

    auto rec = [&](auto&& self, int v, const Rational& acc) -> void {
        if (v == n) {
            if (!have_best || acc > best) {
                have_best = true;
                best = acc;
                best_f.assign(f.begin(), f.end());
            }
            return;
        }
        int lo = -D, hi = D;
        for (int u = 0; u < v; ++u) {
            hi = std::min(hi, f[u] + d(u, v));
            lo = std::max(lo, f[u] - d(v, u));
        }
        for (int val = lo; val <= hi; ++val) {
            f[v] = val;
            self(self, v + 1, diff[v] == 0 ? acc : acc + val * diff[v]);
        }
    };
    f[0] = 0;
    rec(rec, 1, Rational(0));
    if (!have_best) throw NumericalError("dual enumeration found no potential");

    std::vector<Rational> out(n);
    for (int v = 0; v < n; ++v) out[v] = best_f[v];
    return {best, std::move(out)};
}

}  // namespace ricci
