#include <catch2/catch_amalgamated.hpp>

#include "ihara/graph.hpp"
#include "ihara/twist.hpp"

using namespace ihara;

static const char* k4_json =
    R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})";

TEST_CASE("load_graph parses and validates") {
    Graph g = load_graph(std::string(k4_json));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.genus() == 3);

    Graph g1 = theta_graph(1, 2, 3);
    CHECK(g1.vertex_count() == 5);
    CHECK(g1.edge_count() == 6);
    CHECK(g1.genus() == 2);

    CHECK_THROWS_AS(load_graph(std::string(R"({"vertices": 3, "edges": [[0,1]]})")),
                    DisconnectedGraph);
    CHECK_THROWS_AS(load_graph(std::string(R"({"vertices": 0, "edges": []})")), EmptyGraph);
    CHECK_THROWS_AS(load_graph(std::string("{not json")), ParseError);
    CHECK_THROWS_AS(load_graph(std::string(R"({"vertices": 2, "edges": [[0,5]]})")), ParseError);
}

TEST_CASE("oriented edge indexing") {
    Graph g = load_graph(std::string(k4_json));
    const int m = g.edge_count();
    for (int a = 0; a < 2 * m; ++a) {
        CHECK(g.inverse(g.inverse(a)) == a);
        CHECK(g.tail(g.inverse(a)) == g.head(a));
        CHECK(g.head(g.inverse(a)) == g.tail(a));
    }
}

TEST_CASE("spanning tree is deterministic BFS") {
    Graph path(3, {{0, 1}, {1, 2}});
    SpanningTree tp = spanning_tree(path);
    CHECK(tp.non_tree_edges.empty());
    CHECK(tp.tree_edges == std::vector<int>{0, 1});

    Graph k4 = load_graph(std::string(k4_json));
    SpanningTree tk = spanning_tree(k4);
    CHECK(tk.non_tree_edges.size() == 3);

    Graph loops(1, {{0, 0}, {0, 0}});
    SpanningTree tl = spanning_tree(loops);
    CHECK(tl.tree_edges.empty());
    CHECK(tl.non_tree_edges == std::vector<int>{0, 1});

    // identical bytes, identical basis
    SpanningTree again = spanning_tree(load_graph(std::string(k4_json)));
    CHECK(again.non_tree_edges == tk.non_tree_edges);
}

TEST_CASE("tree path endpoints") {
    Graph g1 = theta_graph(1, 2, 3);
    SpanningTree t = spanning_tree(g1);
    for (int u = 0; u < g1.vertex_count(); ++u)
        for (int v = 0; v < g1.vertex_count(); ++v) {
            auto p = tree_path(g1, t, u, v);
            if (u == v) {
                CHECK(p.empty());
                continue;
            }
            CHECK(g1.tail(p.front()) == u);
            CHECK(g1.head(p.back()) == v);
            for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(g1.head(p[i]) == g1.tail(p[i + 1]));
        }
}

TEST_CASE("tree bipartition") {
    Graph c4 = cycle_graph(4);
    SpanningTree t4 = spanning_tree(c4);
    auto side4 = tree_bipartition(c4, t4);
    CHECK(std::count(side4.begin(), side4.end(), 0) == 2);
    CHECK(std::count(side4.begin(), side4.end(), 1) == 2);
    CHECK(side4[0] == 0);

    Graph k4 = load_graph(std::string(k4_json));
    SpanningTree tk = spanning_tree(k4);  // BFS star at vertex 0
    auto sidek = tree_bipartition(k4, tk);
    CHECK(sidek == std::vector<char>{0, 1, 1, 1});

    Graph single(1, {});
    auto sides = tree_bipartition(single, spanning_tree(single));
    CHECK(sides == std::vector<char>{0});

    // proper 2-coloring on the tree edges
    for (int e : tk.tree_edges) {
        auto [a, b] = k4.edges()[e];
        CHECK(sidek[a] != sidek[b]);
    }
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(theta_graph(1, 3, 5)));
    CHECK_FALSE(is_bipartite(theta_graph(1, 2, 3)));
    CHECK_FALSE(is_bipartite(Graph(1, {{0, 0}})));
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
}

TEST_CASE("two core") {
    // cycle with a pendant path
    Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    TwoCore core = two_core(g);
    CHECK(core.core.vertex_count() == 3);
    CHECK(core.core.edge_count() == 3);
    CHECK(core.core.genus() == g.genus());
    CHECK(core.edge_map == std::vector<int>{0, 1, 2});

    Graph c3 = cycle_graph(3);
    TwoCore fix = two_core(c3);
    CHECK(fix.core.vertex_count() == 3);
    CHECK(fix.core.edge_count() == 3);

    // theta graph plus pendant edge keeps genus 2
    Graph theta_pendant(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {1, 4}});
    CHECK(theta_pendant.genus() == 2);
    CHECK(two_core(theta_pendant).core.genus() == 2);

    CHECK_THROWS_AS(two_core(Graph(2, {{0, 1}})), GenusZero);
}

TEST_CASE("feeds_into") {
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK(feeds_into(path, 0, 1));
    CHECK_FALSE(feeds_into(path, 0, path.inverse(0)));
    Graph loop(1, {{0, 0}});
    CHECK(feeds_into(loop, 0, 0));
    CHECK(feeds_into(loop, 1, 1));
    CHECK_FALSE(feeds_into(loop, 0, 1));  // backtrack onto the reversal
}

TEST_CASE("edge adjacency row sums") {
    for (const Graph& g : {load_graph(std::string(k4_json)), theta_graph(1, 2, 3),
                           Graph(2, {{0, 1}, {0, 1}, {1, 1}})}) {
        Eigen::MatrixXcd w = edge_adjacency_twisted(g, OneForm::zero(g));
        long long nnz = 0;
        for (int a = 0; a < g.oriented_count(); ++a) {
            int row = 0, feeds = 0;
            for (int b = 0; b < g.oriented_count(); ++b) {
                if (w(a, b) != cd(0)) row++;
                if (feeds_into(g, a, b)) feeds++;
            }
            CHECK(row == g.degree(g.head(a)) - 1);
            CHECK(row == feeds);
            nnz += row;
        }
        CHECK(nnz == (w.array() != cd(0)).count());
    }
}
