#include <catch2/catch_amalgamated.hpp>

#include "ihara/io.hpp"

using namespace ihara;

TEST_CASE("spectrum serialization is sorted") {
    Spectrum s = spectrum(edge_adjacency_twisted(complete_graph(4), OneForm::zero(complete_graph(4))));
    ordered_json j = spectrum_to_json(s);
    REQUIRE(j.size() == 12);
    for (size_t i = 0; i + 1 < j.size(); ++i) {
        double re0 = j[i][0], im0 = j[i][1], re1 = j[i + 1][0], im1 = j[i + 1][1];
        CHECK((re0 < re1 || (re0 == re1 && im0 <= im1)));
    }
}

TEST_CASE("sweep csv layout and determinism") {
    Graph g = theta_graph(1, 2, 3);
    SweepTable t1 = radius_sweep(g, 4);
    SweepTable t2 = radius_sweep(g, 4);
    std::string csv1 = sweep_to_csv(t1, g.genus());
    std::string csv2 = sweep_to_csv(t2, g.genus());
    CHECK(csv1 == csv2);
    CHECK(csv1.substr(0, csv1.find('\n')) == "coord_1,coord_2,rho_A,rho_W");
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 17);  // header + 16 rows
}

TEST_CASE("counts csv layout") {
    Graph g = cycle_graph(3);
    HomologyData h = homology_data(g);
    ClassCounts c = counts_integral(g, h, 3);
    prime_counts(c, nullptr);
    std::string csv = counts_to_csv(c);
    CHECK(csv.substr(0, csv.find('\n')) == "class,l,N,pi,pi_c");
    CHECK(csv.find("1,3,3,1,1") != std::string::npos);

    ordered_json j = counts_to_json(c);
    CHECK(j["mode"] == "box");
    CHECK(j["classes"].size() == c.labels.size());
}

TEST_CASE("graph json round trip") {
    Graph g = theta_graph(2, 2, 4);
    Graph back = load_graph(graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}
