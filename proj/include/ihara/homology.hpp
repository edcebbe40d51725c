#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara {

// Integer 1-chain in coordinates of the positively oriented edges.
using Chain = std::vector<long long>;

// Real 1-form: coeffs[i] is the value on positively oriented edge i, so the
// value on the reversal is -coeffs[i].
struct OneForm {
    Eigen::VectorXd coeffs;

    OneForm() = default;
    explicit OneForm(Eigen::VectorXd c) : coeffs(std::move(c)) {}
    static OneForm zero(const Graph& g) { return OneForm(Eigen::VectorXd::Zero(g.edge_count())); }

    double value(int oriented_edge) const {
        const int m = static_cast<int>(coeffs.size());
        return oriented_edge < m ? coeffs[oriented_edge] : -coeffs[oriented_edge - m];
    }
    double pair(const Chain& c) const {
        double s = 0;
        for (int i = 0; i < static_cast<int>(c.size()); ++i) s += coeffs[i] * static_cast<double>(c[i]);
        return s;
    }
    double integrate(std::span<const int> walk) const {
        double s = 0;
        for (int a : walk) s += value(a);
        return s;
    }
};

inline OneForm operator+(const OneForm& a, const OneForm& b) { return OneForm(a.coeffs + b.coeffs); }
inline OneForm operator-(const OneForm& a, const OneForm& b) { return OneForm(a.coeffs - b.coeffs); }
inline OneForm operator-(const OneForm& a) { return OneForm(-a.coeffs); }
inline OneForm operator*(double s, const OneForm& a) { return OneForm(s * a.coeffs); }

inline Chain walk_chain(const Graph& g, std::span<const int> walk) {
    Chain c(g.edge_count(), 0);
    const int m = g.edge_count();
    for (int a : walk) {
        if (a < m) c[a] += 1;
        else c[a - m] -= 1;
    }
    return c;
}

// Boundary of a 1-chain: column for edge e is head(e) - tail(e); a loop
// contributes the zero column.
inline Eigen::MatrixXd boundary_matrix(const Graph& g) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(g.vertex_count(), g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = g.edges()[i];
        b(h, i) += 1;
        b(t, i) -= 1;
    }
    return b;
}

// d f = sum_e (f(head) - f(tail)) de; as a matrix this is the transpose of
// the boundary.
inline Eigen::MatrixXd differential_matrix(const Graph& g) {
    return boundary_matrix(g).transpose();
}

// Laplacian on functions, d* d. Row sums vanish; loops contribute nothing.
inline Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    Eigen::MatrixXd b = boundary_matrix(g);
    return b * b.transpose();
}

inline bool chain_is_closed(const Graph& g, const Chain& c) {
    std::vector<long long> bal(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = g.edges()[i];
        bal[h] += c[i];
        bal[t] -= c[i];
    }
    for (auto v : bal)
        if (v != 0) return false;
    return true;
}

struct HodgeParts {
    OneForm harmonic;
    OneForm exact;
    Eigen::VectorXd potential;  // f with exact = d f and f(0) = 0
};

// Orthogonal decomposition omega = harmonic + d f. The Laplace system is
// rank-deficient by one; anchoring f(0) = 0 picks the representative.
inline HodgeParts hodge_decompose(const Graph& g, const OneForm& omega) {
    const int n = g.vertex_count();
    Eigen::MatrixXd bnd = boundary_matrix(g);
    Eigen::VectorXd rhs = bnd * omega.coeffs;  // d* omega
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    if (n > 1) {
        Eigen::MatrixXd lap = bnd * bnd.transpose();
        Eigen::MatrixXd red = lap.block(1, 1, n - 1, n - 1);
        Eigen::LDLT<Eigen::MatrixXd> solver(red);
        if (solver.info() != Eigen::Success)
            throw LinearSolveFailure("reduced Laplacian factorization failed");
        Eigen::VectorXd sol = solver.solve(rhs.tail(n - 1));
        f.tail(n - 1) = sol;
        double resid = (lap * f - rhs).norm();
        if (resid > 1e-8 * (1.0 + rhs.norm()))
            throw LinearSolveFailure("residual " + std::to_string(resid));
    }
    Eigen::VectorXd df(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = g.edges()[i];
        df[i] = f[h] - f[t];
    }
    HodgeParts parts;
    parts.exact = OneForm(df);
    parts.harmonic = OneForm(omega.coeffs - df);
    parts.potential = f;
    return parts;
}

inline OneForm exact_form(const Graph& g, const Eigen::VectorXd& f) {
    Eigen::VectorXd df(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [t, h] = g.edges()[i];
        df[i] = f[h] - f[t];
    }
    return OneForm(df);
}

// Point of the character torus in the coordinates dual to the homology
// basis u_1..u_g (equivalently: coefficients on the non-tree edges).
struct Character {
    Eigen::VectorXd coords;  // entries in [0,1)

    Character() = default;
    explicit Character(Eigen::VectorXd c) : coords(std::move(c)) {
        for (int i = 0; i < coords.size(); ++i) coords[i] = mod1(coords[i]);
    }
    int dim() const { return static_cast<int>(coords.size()); }
    bool equals(const Character& o, double tol = 1e-9) const {
        if (o.dim() != dim()) return false;
        for (int i = 0; i < dim(); ++i)
            if (circle_dist(coords[i], o.coords[i]) > tol) return false;
        return true;
    }
    bool is_trivial(double tol = 1e-9) const { return equals(Character(Eigen::VectorXd::Zero(dim())), tol); }
    bool is_two_torsion(double tol = 1e-9) const {
        for (int i = 0; i < dim(); ++i) {
            double c = coords[i];
            if (circle_dist(c, 0.0) > tol && circle_dist(c, 0.5) > tol) return false;
        }
        return true;
    }
};

inline Character operator+(const Character& a, const Character& b) { return Character(a.coords + b.coords); }
inline Character operator-(const Character& a, const Character& b) { return Character(a.coords - b.coords); }
inline Character operator-(const Character& a) { return Character(-a.coords); }

// Homology basis u_i = e_i + (tree path closing it), its dual basis of
// harmonic forms, and the coordinate map for 1-chains.
struct HomologyData {
    SpanningTree tree;
    std::vector<Chain> basis;                     // u_1..u_g
    std::vector<OneForm> dual_basis;              // harmonic duals of u_i
    std::vector<std::vector<long long>> abel;     // g x m, chain -> u-coordinates

    int genus() const { return static_cast<int>(basis.size()); }

    std::vector<long long> coords_of(const Chain& c) const {
        std::vector<long long> out(basis.size(), 0);
        for (size_t i = 0; i < basis.size(); ++i) {
            long long s = 0;
            for (size_t j = 0; j < c.size(); ++j) s = checked_add(s, checked_mul(abel[i][j], c[j]));
            out[i] = s;
        }
        return out;
    }
};

inline HomologyData homology_data(const Graph& g, const SpanningTree& t) {
    HomologyData h;
    h.tree = t;
    const int m = g.edge_count();
    for (int e : t.non_tree_edges) {
        Chain u(m, 0);
        u[e] += 1;
        for (int a : tree_path(g, t, g.edges()[e].second, g.edges()[e].first)) {
            if (a < m) u[a] += 1;
            else u[a - m] -= 1;
        }
        h.basis.push_back(std::move(u));
    }
    for (int e : t.non_tree_edges) {
        Eigen::VectorXd de = Eigen::VectorXd::Zero(m);
        de[e] = 1.0;
        h.dual_basis.push_back(hodge_decompose(g, OneForm(de)).harmonic);
    }
    // A closed chain equals sum_i c_i u_i where c_i is its coefficient on
    // the i-th non-tree edge, so the coordinate map is a selection matrix.
    h.abel.assign(t.non_tree_edges.size(), std::vector<long long>(m, 0));
    for (size_t i = 0; i < t.non_tree_edges.size(); ++i) h.abel[i][t.non_tree_edges[i]] = 1;
    return h;
}

inline HomologyData homology_data(const Graph& g) { return homology_data(g, spanning_tree(g)); }

// Homology coordinates of a closed walk; NotClosed if a class is requested
// for a walk whose boundary does not vanish.
inline std::vector<long long> abelianize(const Graph& g, const HomologyData& h,
                                         std::span<const int> walk, bool require_closed = true) {
    Chain c = walk_chain(g, walk);
    if (require_closed && !chain_is_closed(g, c))
        throw NotClosed("walk is not a closed chain");
    return h.coords_of(c);
}

// chi_omega(alpha) = e(omega(alpha)).
inline cd char_value(const OneForm& omega, const Chain& alpha) {
    return unit_phase(omega.pair(alpha));
}
inline cd char_value(const Character& chi, std::span<const long long> alpha) {
    double s = 0;
    for (int i = 0; i < chi.dim(); ++i) s += chi.coords[i] * static_cast<double>(alpha[i]);
    return unit_phase(s);
}

// Character of a 1-form: coordinates are omega(u_i) mod 1.
inline Character character_of(const HomologyData& h, const OneForm& omega) {
    Eigen::VectorXd c(h.genus());
    for (int i = 0; i < h.genus(); ++i) c[i] = omega.pair(h.basis[i]);
    return Character(std::move(c));
}

// 1-form supported on the non-tree edges realizing the given coordinates.
inline OneForm form_from_character(const Graph& g, const SpanningTree& t, const Eigen::VectorXd& coords) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(g.edge_count());
    for (size_t i = 0; i < t.non_tree_edges.size(); ++i) c[t.non_tree_edges[i]] = coords[static_cast<int>(i)];
    return OneForm(std::move(c));
}
inline OneForm form_from_character(const Graph& g, const SpanningTree& t, const Character& chi) {
    return form_from_character(g, t, chi.coords);
}

}  // namespace ihara
