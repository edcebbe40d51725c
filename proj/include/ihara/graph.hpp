#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ihara/common.hpp"

namespace ihara {

// Connected finite multigraph, loops allowed. Edge i as listed defines the
// positively oriented edge i (tail -> head); oriented edges are indexed
// 0..2m-1 with i+m the reversal of i. All downstream matrix indexing relies
// on this i <-> i+m pairing.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count), edges_(std::move(edge_list)) {
        if (n_ <= 0) throw EmptyGraph("graph has no vertices");
        for (auto [t, h] : edges_) {
            if (t < 0 || t >= n_ || h < 0 || h >= n_)
                throw ParseError("edge endpoint out of range");
        }
        degree_.assign(n_, 0);
        for (auto [t, h] : edges_) {
            degree_[t]++;
            degree_[h]++;
        }
        check_connected();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int oriented_count() const { return 2 * edge_count(); }
    int genus() const { return edge_count() - n_ + 1; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // a(0) and a(1) of oriented edge a.
    int tail(int a) const {
        const int m = edge_count();
        return a < m ? edges_[a].first : edges_[a - m].second;
    }
    int head(int a) const {
        const int m = edge_count();
        return a < m ? edges_[a].second : edges_[a - m].first;
    }
    int inverse(int a) const {
        const int m = edge_count();
        return a < m ? a + m : a - m;
    }
    int underlying(int a) const {
        const int m = edge_count();
        return a < m ? a : a - m;
    }
    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }

    // Loops contribute two to the degree (one per orientation).
    int degree(int v) const { return degree_[v]; }

private:
    void check_connected() const {
        std::vector<char> seen(n_, 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto [t, h] : edges_) {
                int u = -1;
                if (t == v && !seen[h]) u = h;
                else if (h == v && !seen[t]) u = t;
                if (u >= 0) {
                    seen[u] = 1;
                    reached++;
                    queue.push_back(u);
                }
            }
        }
        if (reached != n_) throw DisconnectedGraph("graph is not connected");
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
};

// a feeds into b: head-to-tail without backtracking. A loop feeds into
// itself (the two orientations of a loop are distinct oriented edges).
inline bool feeds_into(const Graph& g, int a, int b) {
    return g.head(a) == g.tail(b) && b != g.inverse(a);
}

struct SpanningTree {
    std::vector<int> tree_edges;      // ascending edge indices, size n-1
    std::vector<int> non_tree_edges;  // ascending edge indices, size g
    std::vector<int> parent_vertex;   // -1 at the root (vertex 0)
    std::vector<int> parent_edge;     // -1 at the root
    std::vector<int> depth;
    std::vector<char> in_tree;        // flag per edge index
};

// Deterministic BFS from vertex 0, edges scanned in input order; the
// resulting non-tree edge list fixes the homology basis everywhere else.
inline SpanningTree spanning_tree(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    SpanningTree t;
    t.parent_vertex.assign(n, -1);
    t.parent_edge.assign(n, -1);
    t.depth.assign(n, 0);
    t.in_tree.assign(m, 0);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i = 0; i < m; ++i) {
            auto [a, b] = g.edges()[i];
            int u = -1;
            if (a == v && !seen[b]) u = b;
            else if (b == v && !seen[a]) u = a;
            if (u >= 0) {
                seen[u] = 1;
                t.parent_vertex[u] = v;
                t.parent_edge[u] = i;
                t.depth[u] = t.depth[v] + 1;
                t.in_tree[i] = 1;
                queue.push_back(u);
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        if (t.in_tree[i]) t.tree_edges.push_back(i);
        else t.non_tree_edges.push_back(i);
    }
    return t;
}

// Unique tree path from -> to as a sequence of oriented edges.
inline std::vector<int> tree_path(const Graph& g, const SpanningTree& t, int from, int to) {
    const int m = g.edge_count();
    auto step_up = [&](int v) {  // oriented edge v -> parent(v)
        int e = t.parent_edge[v];
        return g.edges()[e].second == v ? e + m : e;
    };
    std::vector<int> up, down;
    int a = from, b = to;
    while (t.depth[a] > t.depth[b]) { up.push_back(step_up(a)); a = t.parent_vertex[a]; }
    while (t.depth[b] > t.depth[a]) { down.push_back(step_up(b)); b = t.parent_vertex[b]; }
    while (a != b) {
        up.push_back(step_up(a));
        down.push_back(step_up(b));
        a = t.parent_vertex[a];
        b = t.parent_vertex[b];
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) up.push_back(g.inverse(*it));
    return up;
}

// The unique partition {V1,V2} of V(G) with respect to which T is bipartite;
// vertex 0 lands in V1. side[v] = 0 for V1, 1 for V2.
inline std::vector<char> tree_bipartition(const Graph& g, const SpanningTree& t) {
    std::vector<char> side(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) side[v] = static_cast<char>(t.depth[v] % 2);
    return side;
}

inline bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto [a, b] : g.edges()) {
            if (a != v && b != v) continue;
            int u = (a == v) ? b : a;
            if (a == b) return false;  // loop
            if (color[u] == -1) {
                color[u] = 1 - color[v];
                queue.push_back(u);
            } else if (color[u] == color[v]) {
                return false;
            }
        }
    }
    return true;
}

struct TwoCore {
    Graph core;
    std::vector<int> edge_map;    // core edge index -> original edge index
    std::vector<int> vertex_map;  // core vertex index -> original vertex index
};

// Repeatedly strip degree-1 vertices. Preserves the genus; the result has
// no degree-1 vertices.
inline TwoCore two_core(const Graph& g) {
    if (g.genus() < 1) throw GenusZero("two-core of a tree is empty");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<char> vdead(n, 0), edead(m, 0);
    std::vector<int> deg(n, 0);
    for (auto [a, b] : g.edges()) { deg[a]++; deg[b]++; }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (vdead[v] || deg[v] != 1) continue;
            for (int i = 0; i < m; ++i) {
                if (edead[i]) continue;
                auto [a, b] = g.edges()[i];
                if (a == v || b == v) {
                    edead[i] = 1;
                    deg[a]--;
                    deg[b]--;
                    break;
                }
            }
            vdead[v] = 1;
            changed = true;
        }
    }
    std::vector<int> vmap(n, -1), vlist, elist;
    for (int v = 0; v < n; ++v)
        if (!vdead[v]) {
            vmap[v] = static_cast<int>(vlist.size());
            vlist.push_back(v);
        }
    std::vector<std::pair<int, int>> core_edges;
    for (int i = 0; i < m; ++i)
        if (!edead[i]) {
            auto [a, b] = g.edges()[i];
            core_edges.emplace_back(vmap[a], vmap[b]);
            elist.push_back(i);
        }
    return TwoCore{Graph(static_cast<int>(vlist.size()), core_edges), elist, vlist};
}

// --- generators -----------------------------------------------------------

inline Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, e);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

// Two vertices 0 and 1 joined by three paths of lengths l0, l1, l2;
// interior vertices numbered path by path, edges listed path by path.
inline Graph theta_graph(int l0, int l1, int l2) {
    if (l0 < 1 || l1 < 1 || l2 < 1) throw ParseError("path lengths must be >= 1");
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int len : {l0, l1, l2}) {
        int prev = 0;
        for (int k = 0; k + 1 < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph(next, e);
}

// Random connected multigraph: a random attachment tree plus extra edges
// (loops and duplicates allowed). Deterministic for a given engine state.
inline Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max, int m_max) {
    std::uniform_int_distribution<int> nd(n_min, n_max);
    int n = nd(rng);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        e.emplace_back(pd(rng), v);
    }
    int lo = std::max(n - 1, 1);
    int hi = std::max(m_max, lo);
    std::uniform_int_distribution<int> md(lo, hi);
    int m = md(rng);
    std::uniform_int_distribution<int> vd(0, n - 1);
    while (static_cast<int>(e.size()) < m) e.emplace_back(vd(rng), vd(rng));
    return Graph(n, e);
}

// --- JSON ingestion -------------------------------------------------------

// {"vertices": n, "edges": [[tail, head], ...]}, 0-indexed.
inline Graph load_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("expected object with 'vertices' and 'edges'");
    if (!j["vertices"].is_number_integer()) throw ParseError("'vertices' must be an integer");
    int n = j["vertices"].get<int>();
    if (n <= 0) throw EmptyGraph("'vertices' must be positive");
    std::vector<std::pair<int, int>> e;
    for (const auto& it : j["edges"]) {
        if (!it.is_array() || it.size() != 2 || !it[0].is_number_integer() || !it[1].is_number_integer())
            throw ParseError("each edge must be [tail, head]");
        e.emplace_back(it[0].get<int>(), it[1].get<int>());
    }
    return Graph(n, e);
}

inline Graph load_graph(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

inline std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count();
    auto& arr = j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) arr.push_back({a, b});
    return j.dump();
}

}  // namespace ihara
