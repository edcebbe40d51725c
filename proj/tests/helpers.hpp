#pragma once

// Shared fixtures: the complete graph on 4 vertices with the 4-cycle
// twist family, and its known trace / counting tables.

#include <tuple>
#include <vector>

#include "ihara/homology.hpp"

namespace fixtures {

using ihara::Graph;
using ihara::OneForm;

// 1-form from directed vertex pairs (1-based labels as usually displayed).
inline OneForm form_on_pairs(const Graph& g,
                             const std::vector<std::tuple<int, int, double>>& terms) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(g.edge_count());
    for (auto [from, to, val] : terms) {
        bool found = false;
        for (int i = 0; i < g.edge_count() && !found; ++i) {
            auto [t, h] = g.edges()[i];
            if (t == from - 1 && h == to - 1) { c[i] += val; found = true; }
            else if (t == to - 1 && h == from - 1) { c[i] -= val; found = true; }
        }
        if (!found) throw std::runtime_error("no such edge");
    }
    return OneForm(std::move(c));
}

// coeff * (de12 + de23 + de34 + de41) on K4.
inline OneForm k4_cycle_form(const Graph& g, double coeff) {
    return form_on_pairs(g, {{1, 2, coeff}, {2, 3, coeff}, {3, 4, coeff}, {4, 1, coeff}});
}

namespace k4 {

// K(0,l) = N(l) and K(omega1,l) for l = 1..15.
inline const std::vector<long long> K0{0, 0, 24, 24, 0, 96, 168, 168, 528, 1200, 1848, 3960, 8736, 16128, 31944};
inline const std::vector<long long> KW1{0, 0, -12, 12, 0, -12, 0, 36, 96, -60, 0, -252, 0, -252, 768};

// index-3 quotient (kernel of the order-3 cycle character)
inline const std::vector<long long> N3_A0{0, 0, 0, 16, 0, 24, 56, 80, 240, 360, 616, 1152, 2912, 5208, 11160};
inline const std::vector<long long> N3_A1{0, 0, 12, 4, 0, 36, 56, 44, 144, 420, 616, 1404, 2912, 5460, 10392};
inline const std::vector<long long> PI3_A0{0, 0, 0, 4, 0, 4, 8, 8, 24, 36, 56, 92, 224, 368, 744};
inline const std::vector<long long> PIC3_A0{0, 0, 0, 4, 0, 4, 8, 12, 32, 36, 56, 102, 224, 376, 744};
inline const std::vector<long long> PI3_A1{0, 0, 4, 1, 0, 4, 8, 5, 16, 42, 56, 114, 224, 386, 692};
inline const std::vector<long long> PIC3_A1{0, 0, 4, 1, 0, 8, 8, 6, 16, 42, 56, 122, 224, 394, 696};

// index-6 quotient (kernel of the order-6 cycle character); rows i = 0..5
// are the classes of i times the triangle generator.
inline const std::vector<std::vector<long long>> N6{
    {0, 0, 0, 16, 0, 24, 0, 80, 0, 360, 0, 1152, 0, 5208, 0},
    {0, 0, 12, 0, 0, 0, 56, 0, 144, 0, 616, 0, 2912, 0, 10392},
    {0, 0, 0, 4, 0, 36, 0, 44, 0, 420, 0, 1404, 0, 5460, 0},
    {0, 0, 0, 0, 0, 0, 56, 0, 240, 0, 616, 0, 2912, 0, 11160},
    {0, 0, 0, 4, 0, 36, 0, 44, 0, 420, 0, 1404, 0, 5460, 0},
    {0, 0, 12, 0, 0, 0, 56, 0, 144, 0, 616, 0, 2912, 0, 10392}};
inline const std::vector<std::vector<long long>> PI6{
    {0, 0, 0, 4, 0, 4, 0, 8, 0, 36, 0, 92, 0, 368, 0},
    {0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 692},
    {0, 0, 0, 1, 0, 4, 0, 5, 0, 42, 0, 114, 0, 386, 0},
    {0, 0, 0, 0, 0, 0, 8, 0, 24, 0, 56, 0, 224, 0, 744},
    {0, 0, 0, 1, 0, 4, 0, 5, 0, 42, 0, 114, 0, 386, 0},
    {0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 692}};
inline const std::vector<std::vector<long long>> PIC6{
    {0, 0, 0, 4, 0, 4, 0, 12, 0, 36, 0, 102, 0, 376, 0},
    {0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 696},
    {0, 0, 0, 1, 0, 8, 0, 6, 0, 42, 0, 122, 0, 394, 0},
    {0, 0, 0, 0, 0, 0, 8, 0, 32, 0, 56, 0, 224, 0, 744},
    {0, 0, 0, 1, 0, 8, 0, 6, 0, 42, 0, 122, 0, 394, 0},
    {0, 0, 4, 0, 0, 0, 8, 0, 16, 0, 56, 0, 224, 0, 696}};

inline constexpr double EXP_IDENTITY = 5.172675227;
inline constexpr double EXP_IDENTITY_AVERAGED = 2.141622583;

}  // namespace k4

// spectral radii of the untwisted edge adjacency for the three genus-2
// sample graphs with path lengths (1,2,3), (1,3,5), (2,2,4)
inline constexpr double G1_RADIUS = 1.42405;
inline constexpr double G2_RADIUS = 1.27065;
inline constexpr double G3_RADIUS = 1.30216;

}  // namespace fixtures
