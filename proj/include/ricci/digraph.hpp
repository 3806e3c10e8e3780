#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// One weighted directed edge, endpoints by name.
struct Edge {
    std::string from, to;
    Rational weight = 1;
};

/// Immutable simple strongly connected weighted directed graph.
///
/// Vertex indices follow first appearance in the edge list unless an explicit
/// order is supplied. Construction validates simplicity (no loops, no
/// duplicate edges, positive weights) and strong connectivity; everything
/// downstream may assume both.
class DiGraph {
public:
    static DiGraph from_edges(const std::vector<Edge>& edges) {
        std::vector<std::string> order;
        std::map<std::string, int> seen;
        for (const auto& e : edges) {
            for (const auto& v : {e.from, e.to}) {
                if (seen.emplace(v, 0).second) order.push_back(v);
            }
        }
        return from_edges(edges, order);
    }

    static DiGraph from_edges(const std::vector<Edge>& edges,
                              const std::vector<std::string>& vertex_order) {
        DiGraph g;
        for (const auto& v : vertex_order) {
            if (g.index_.count(v))
                throw BadParamsError("vertex '" + v + "' repeated in vertex order");
            g.index_[v] = static_cast<int>(g.names_.size());
            g.names_.push_back(v);
        }
        const int n = g.size();
        if (n < 2) throw BadParamsError("graph needs at least 2 vertices");

        g.w_.assign(n, std::vector<Rational>(n, Rational(0)));
        for (const auto& e : edges) {
            if (e.from == e.to) throw SelfLoopError(e.from);
            if (e.weight <= 0)
                throw BadParamsError("edge (" + e.from + ", " + e.to +
                                     ") has non-positive weight");
            auto iu = g.index_.find(e.from), iv = g.index_.find(e.to);
            if (iu == g.index_.end() || iv == g.index_.end())
                throw BadParamsError("edge endpoint missing from vertex order");
            Rational& slot = g.w_[iu->second][iv->second];
            if (slot != 0) throw DuplicateEdgeError(e.from, e.to);
            slot = e.weight;
        }

        g.adj_out_.assign(n, {});
        g.adj_in_.assign(n, {});
        g.out_w_.assign(n, Rational(0));
        g.edge_count_ = 0;
        g.unweighted_ = true;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (g.w_[i][j] == 0) continue;
                g.adj_out_[i].push_back(j);
                g.adj_in_[j].push_back(i);
                g.out_w_[i] += g.w_[i][j];
                ++g.edge_count_;
                if (g.w_[i][j] != 1) g.unweighted_ = false;
            }
        }
        g.check_strongly_connected();
        return g;
    }

    int size() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }
    bool is_unweighted() const { return unweighted_; }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }

    int index(const std::string& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw BadParamsError("unknown vertex '" + v + "'");
        return it->second;
    }
    bool has_vertex(const std::string& v) const { return index_.count(v) > 0; }

    const Rational& weight(int i, int j) const { return w_[i][j]; }
    bool has_edge(int i, int j) const { return w_[i][j] != 0; }

    const std::vector<int>& out_neighbors(int i) const { return adj_out_[i]; }
    const std::vector<int>& in_neighbors(int i) const { return adj_in_[i]; }
    int out_degree(int i) const { return static_cast<int>(adj_out_[i].size()); }
    int in_degree(int i) const { return static_cast<int>(adj_in_[i].size()); }

    /// Vertex weight mu(x) = sum of outgoing edge weights.
    const Rational& out_weight(int i) const { return out_w_[i]; }

    /// All edges in (source, target) index order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(edge_count_);
        for (int i = 0; i < size(); ++i)
            for (int j : adj_out_[i]) es.emplace_back(i, j);
        return es;
    }

private:
    DiGraph() = default;

    void check_strongly_connected() const {
        const int n = size();
        auto sweep = [&](bool forward) {
            std::vector<char> vis(n, 0);
            std::queue<int> q;
            vis[0] = 1;
            q.push(0);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : forward ? adj_out_[u] : adj_in_[u]) {
                    if (!vis[v]) {
                        vis[v] = 1;
                        q.push(v);
                    }
                }
            }
            return vis;
        };
        auto fwd = sweep(true);
        for (int v = 0; v < n; ++v)
            if (!fwd[v]) throw NotStronglyConnectedError(names_[0], names_[v]);
        auto bwd = sweep(false);
        for (int v = 0; v < n; ++v)
            if (!bwd[v]) throw NotStronglyConnectedError(names_[v], names_[0]);
    }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::vector<Rational>> w_;
    std::vector<std::vector<int>> adj_out_, adj_in_;
    std::vector<Rational> out_w_;
    int edge_count_ = 0;
    bool unweighted_ = true;
};

inline DiGraph build_graph(const std::vector<Edge>& edges) {
    return DiGraph::from_edges(edges);
}

/// Exact hop-count distances; edge weights never enter.
class DistMatrix {
public:
    explicit DistMatrix(std::vector<std::vector<int>> d) : d_(std::move(d)) {}
    int operator()(int i, int j) const { return d_[i][j]; }
    int size() const { return static_cast<int>(d_.size()); }

private:
    std::vector<std::vector<int>> d_;
};

inline DistMatrix all_pairs_distance(const DiGraph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        d[s][s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.out_neighbors(u)) {
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
            }
        }
    }
    return DistMatrix(std::move(d));
}

inline int diameter(const DistMatrix& d) {
    int m = 0;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) m = std::max(m, d(i, j));
    return m;
}

/// rho_x as a rational vector: rho_x(z) = d(x,z).
inline std::vector<Rational> dist_from(const DistMatrix& d, int x) {
    std::vector<Rational> f(d.size());
    for (int z = 0; z < d.size(); ++z) f[z] = d(x, z);
    return f;
}

/// Reverse distance function: (dist_to x)(z) = d(z,x).
inline std::vector<Rational> dist_to(const DistMatrix& d, int x) {
    std::vector<Rational> f(d.size());
    for (int z = 0; z < d.size(); ++z) f[z] = d(z, x);
    return f;
}

/// Out-degree equals in-degree at every vertex (edge counts; weights ignored).
inline bool is_eulerian(const DiGraph& g) {
    for (int i = 0; i < g.size(); ++i)
        if (g.out_degree(i) != g.in_degree(i)) return false;
    return true;
}

/// One-sided Lipschitz test: f(y) - f(x) <= L d(x,y) for ALL ordered pairs.
inline bool is_lipschitz(const std::vector<Rational>& f, const Rational& L,
                         const DistMatrix& d) {
    for (int x = 0; x < d.size(); ++x)
        for (int y = 0; y < d.size(); ++y)
            if (f[y] - f[x] > L * d(x, y)) return false;
    return true;
}

/// Ordered pairs (z,w), z != w, with d(x,z) + d(z,w) + d(w,y) = d(x,y).
/// These are exactly the pairs (x_i, x_j), i < j, realizable on some minimal
/// geodesic from x to y.
inline std::vector<std::pair<int, int>> geodesic_pairs(const DistMatrix& d,
                                                       int x, int y) {
    if (x == y) throw SamePairError("geodesic_pairs needs x != y");
    std::vector<std::pair<int, int>> out;
    for (int z = 0; z < d.size(); ++z)
        for (int w = 0; w < d.size(); ++w)
            if (z != w && d(x, z) + d(z, w) + d(w, y) == d(x, y))
                out.emplace_back(z, w);
    return out;
}

/// Is `path` a minimal geodesic (consecutive edges, length = distance)?
inline bool is_minimal_geodesic(const DiGraph& g, const DistMatrix& d,
                                const std::vector<int>& path) {
    if (path.size() < 2) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return static_cast<int>(path.size()) - 1 == d(path.front(), path.back());
}

/// Every minimal geodesic from x to y, as vertex index sequences.
inline std::vector<std::vector<int>> minimal_geodesics(const DiGraph& g,
                                                       const DistMatrix& d,
                                                       int x, int y) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{x};
    const int l = d(x, y);
    auto rec = [&](auto&& self, int v, int depth) -> void {
        if (depth == l) {
            if (v == y) out.push_back(path);
            return;
        }
        for (int u : g.out_neighbors(v)) {
            if (d(x, u) == depth + 1 && d(u, y) == l - depth - 1) {
                path.push_back(u);
                self(self, u, depth + 1);
                path.pop_back();
            }
        }
    };
    rec(rec, x, 0);
    return out;
}

}  // namespace ricci
