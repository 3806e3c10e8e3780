#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ricci/digraph.hpp"
#include "ricci/errors.hpp"

namespace ricci {

namespace detail {

/// SplitMix64: tiny seedable generator with identical output on every
/// platform, which the generated-graph contract requires.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::vector<std::string> numbered_vertices(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace detail

/// Directed complete graph on x1..xn: the bidirected complete graph minus
/// the reversed Hamiltonian cycle, i.e. x_i -> x_j iff j differs from both
/// i and i-1 (mod n). So x_i reaches everyone except its cycle predecessor,
/// and n = 3 degenerates to the directed triangle.
inline DiGraph directed_complete(int n) {
    if (n < 3) throw TooSmallError("directed complete graph needs n >= 3");
    const auto names = detail::numbered_vertices(n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i || j == (i + n - 1) % n) continue;
            edges.push_back({names[i], names[j], Rational(1)});
        }
    return DiGraph::from_edges(edges, names);
}

/// Three directed triangles sharing a consistently oriented inner triangle:
/// top x1 x2 x6, left x2 x3 x4, right x4 x5 x6, inner x2 x6 x4.
inline DiGraph triforce() {
    const auto names = detail::numbered_vertices(6);
    const std::vector<std::pair<int, int>> arcs = {{1, 2}, {2, 6}, {6, 1},
                                                   {2, 3}, {3, 4}, {4, 2},
                                                   {4, 5}, {5, 6}, {6, 4}};
    std::vector<Edge> edges;
    for (const auto& [u, v] : arcs)
        edges.push_back({names[u - 1], names[v - 1], Rational(1)});
    return DiGraph::from_edges(edges, names);
}

inline DiGraph directed_cycle(int n) {
    if (n < 3) throw TooSmallError("directed cycle needs n >= 3");
    const auto names = detail::numbered_vertices(n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({names[i], names[(i + 1) % n], Rational(1)});
    return DiGraph::from_edges(edges, names);
}

/// Random unit-weight graph: a random Hamiltonian directed cycle (which
/// guarantees strong connectivity) plus independent extra arcs, each kept
/// with probability `density`. Deterministic for a fixed seed.
inline DiGraph random_strongly_connected(int n, double density,
                                         std::uint64_t seed) {
    if (n < 3) throw BadParamsError("random graph needs n >= 3");
    if (!(density >= 0.0 && density <= 1.0))
        throw BadParamsError("density must lie in [0, 1]");
    detail::SplitMix64 rng{seed};

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i >= 1; --i) {
        const int j = static_cast<int>(rng.next() % (i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) has[perm[i]][perm[(i + 1) % n]] = true;

    // Compare the top 53 bits of a draw against density * 2^53, so the
    // acceptance region is exact at both endpoints.
    const auto threshold =
        static_cast<std::uint64_t>(density * 9007199254740992.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || has[x][y]) continue;
            if ((rng.next() >> 11) < threshold) has[x][y] = true;
        }

    const auto names = detail::numbered_vertices(n);
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (has[x][y]) edges.push_back({names[x], names[y], Rational(1)});
    return DiGraph::from_edges(edges, names);
}

}  // namespace ricci
