#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "ihara/homology.hpp"

namespace ihara {

inline Eigen::MatrixXcd adjacency_twisted(const Graph& g, const OneForm& omega) {
    const int n = g.vertex_count();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int e = 0; e < g.oriented_count(); ++e)
        a(g.tail(e), g.head(e)) += unit_phase(omega.value(e));
    return a;
}

// (W_omega)_{ab} = chi_omega(b) when a feeds into b.
inline Eigen::MatrixXcd edge_adjacency_twisted(const Graph& g, const OneForm& omega) {
    const int k = g.oriented_count();
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (feeds_into(g, a, b)) w(a, b) = unit_phase(omega.value(b));
    return w;
}

// Diagonal of e(omega(e)/2) over oriented edges.
inline Eigen::MatrixXcd half_twist_diagonal(const Graph& g, const OneForm& omega) {
    const int k = g.oriented_count();
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(k, k);
    for (int e = 0; e < k; ++e) b(e, e) = unit_phase(omega.value(e) / 2.0);
    return b;
}

inline Eigen::MatrixXd degree_minus_one_diagonal(const Graph& g) {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) q(v, v) = g.degree(v) - 1;
    return q;
}

struct TwistedMatrices {
    Eigen::MatrixXcd A;       // n x n, Hermitian
    Eigen::MatrixXcd W;       // 2m x 2m, entry chi(b) on a -> b
    Eigen::MatrixXcd Wprime;  // entry chi(a) on a -> b
    Eigen::MatrixXcd Wsecond; // entry chi(a/2) chi(b/2) on a -> b
    Eigen::MatrixXcd B;       // half-twist diagonal
    Eigen::MatrixXd Qdeg;     // diag(deg - 1)
};

inline TwistedMatrices twisted_matrices(const Graph& g, const OneForm& omega) {
    TwistedMatrices t;
    t.A = adjacency_twisted(g, omega);
    t.W = edge_adjacency_twisted(g, omega);
    const int k = g.oriented_count();
    t.Wprime = Eigen::MatrixXcd::Zero(k, k);
    t.Wsecond = Eigen::MatrixXcd::Zero(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (feeds_into(g, a, b)) {
                t.Wprime(a, b) = unit_phase(omega.value(a));
                t.Wsecond(a, b) = unit_phase(omega.value(a) / 2.0) * unit_phase(omega.value(b) / 2.0);
            }
    t.B = half_twist_diagonal(g, omega);
    t.Qdeg = degree_minus_one_diagonal(g);
    return t;
}

// Multiset of eigenvalues, sorted by (re, im).
struct Spectrum {
    std::vector<cd> values;

    int size() const { return static_cast<int>(values.size()); }
    double radius() const {
        double r = 0;
        for (const auto& v : values) r = std::max(r, std::abs(v));
        return r;
    }
    Spectrum negated() const {
        Spectrum s;
        for (const auto& v : values) s.values.push_back(-v);
        s.sort();
        return s;
    }
    Spectrum conjugated() const {
        Spectrum s;
        for (const auto& v : values) s.values.push_back(std::conj(v));
        s.sort();
        return s;
    }
    void sort() {
        std::sort(values.begin(), values.end(), [](const cd& a, const cd& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
    }
};

inline Spectrum spectrum(const Eigen::MatrixXcd& m) {
    Spectrum s;
    if (m.rows() == 0) return s;
    if (!m.allFinite()) throw EigenSolverFailure("matrix has non-finite entries");
    const double scale = std::max(1.0, m.norm());
    if ((m - m.adjoint()).norm() <= 1e-12 * scale) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        if (es.info() != Eigen::Success) throw EigenSolverFailure("Hermitian solver failed");
        for (int i = 0; i < es.eigenvalues().size(); ++i) s.values.emplace_back(es.eigenvalues()[i], 0.0);
    } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
        if (es.info() != Eigen::Success) throw EigenSolverFailure("complex solver failed");
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            cd lam = es.eigenvalues()[i];
            double resid = (m * es.eigenvectors().col(i) - lam * es.eigenvectors().col(i)).norm();
            if (resid > 1e-8 * scale)
                throw EigenSolverFailure("eigenpair residual " + std::to_string(resid));
            s.values.push_back(lam);
        }
    }
    s.sort();
    return s;
}

// Greedy nearest matching on the sorted multisets; returns the largest
// per-entry distance (inf if the sizes differ).
inline double spectrum_match_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<char> used(b.size(), 0);
    double worst = 0;
    for (const auto& v : a.values) {
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(v - b.values[j]);
            if (d < bd) { bd = d; best = j; }
        }
        used[best] = 1;
        worst = std::max(worst, bd);
    }
    return worst;
}

inline double spectrum_tolerance(const Spectrum& a) { return 1e-8 * std::max(1.0, a.radius()); }

inline bool spec_equal(const Spectrum& a, const Spectrum& b, double tol = -1) {
    if (tol < 0) tol = spectrum_tolerance(a);
    return spectrum_match_distance(a, b) <= tol;
}

// --- canonical 1-forms and the canonical character -------------------------

// Half of every positively oriented edge; chi(e) = -1 on all oriented edges.
inline OneForm canonical_form_orientation(const Graph& g) {
    return OneForm(Eigen::VectorXd::Constant(g.edge_count(), 0.5));
}

// Supported on non-tree edges: 0 on edges crossing the tree bipartition,
// 1/2 otherwise (loops always get 1/2).
inline OneForm canonical_form_tree(const Graph& g, const SpanningTree& t) {
    std::vector<char> side = tree_bipartition(g, t);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(g.edge_count());
    for (int e : t.non_tree_edges) {
        auto [u, v] = g.edges()[e];
        bool crossing = (u != v) && (side[u] != side[v]);
        c[e] = crossing ? 0.0 : 0.5;
    }
    return OneForm(std::move(c));
}

inline Character canonical_character(const Graph& g, const SpanningTree& t) {
    OneForm w = canonical_form_tree(g, t);
    Eigen::VectorXd coords(static_cast<int>(t.non_tree_edges.size()));
    for (size_t i = 0; i < t.non_tree_edges.size(); ++i)
        coords[static_cast<int>(i)] = w.coeffs[t.non_tree_edges[i]];
    return Character(std::move(coords));
}
inline Character canonical_character(const Graph& g) { return canonical_character(g, spanning_tree(g)); }

inline Character dual_character(const Graph& g, const Character& chi) {
    return canonical_character(g) - chi;
}

struct AntisymmetryReport {
    bool pass = false;
    double dev_adjacency = 0;
    double dev_edge = 0;
    double dev_conjugation = 0;
    double tolerance = 0;
};

// spec A_{omega'} = -spec A_omega and spec W_{1,omega'} = -spec W_{1,omega}
// for omega' a dual 1-form of omega, plus conjugation invariance of spec W.
// The edge spectra are compared on the two-core: trimming keeps the
// reciprocal L-polynomial, so it only strips exact zero eigenvalues, and the
// zero cluster of a pendant tree is defective, which makes its computed
// eigenvalues unmatchable at this tolerance.
inline AntisymmetryReport verify_antisymmetry(const Graph& g, const OneForm& omega, double tol = 1e-7) {
    SpanningTree t = spanning_tree(g);
    OneForm dual = canonical_form_tree(g, t) - omega;
    AntisymmetryReport rep;
    rep.tolerance = tol;
    Spectrum sa = spectrum(adjacency_twisted(g, omega));
    Spectrum sad = spectrum(adjacency_twisted(g, dual));
    rep.dev_adjacency = spectrum_match_distance(sad, sa.negated());
    if (g.genus() >= 1) {
        TwoCore core = two_core(g);
        auto restricted = [&](const OneForm& w) {
            Eigen::VectorXd c(core.core.edge_count());
            for (int i = 0; i < core.core.edge_count(); ++i) c[i] = w.coeffs[core.edge_map[i]];
            return OneForm(std::move(c));
        };
        Spectrum sw = spectrum(edge_adjacency_twisted(core.core, restricted(omega)));
        Spectrum swd = spectrum(edge_adjacency_twisted(core.core, restricted(dual)));
        rep.dev_edge = spectrum_match_distance(swd, sw.negated());
        rep.dev_conjugation = spectrum_match_distance(sw, sw.conjugated());
    }
    rep.pass = rep.dev_adjacency <= tol && rep.dev_edge <= tol && rep.dev_conjugation <= tol;
    return rep;
}

// --- torus sweep ------------------------------------------------------------

struct SweepRow {
    Eigen::VectorXd coords;
    double rho_A = 0;
    double rho_W = 0;
};

struct SweepTable {
    int grid_n = 0;
    std::vector<SweepRow> rows;
    double max_rho_A = 0;
    double max_rho_W = 0;
    std::vector<int> argmax_W;  // row indices attaining max_rho_W
};

inline SweepTable radius_sweep(const Graph& g, int grid_n, long long budget = default_budget()) {
    const int genus = g.genus();
    if (genus < 1) throw GenusZero("sweep needs genus >= 1");
    if (grid_n < 2) throw Error("grid_n must be >= 2");
    long long points = 1;
    for (int i = 0; i < genus; ++i) {
        points = checked_mul(points, grid_n);
        if (points > budget) throw BudgetExceeded("sweep grid " + std::to_string(points));
    }
    SpanningTree t = spanning_tree(g);
    SweepTable table;
    table.grid_n = grid_n;
    std::vector<int> digits(genus, 0);
    for (long long c = 0; c < points; ++c) {
        SweepRow row;
        row.coords = Eigen::VectorXd(genus);
        for (int i = 0; i < genus; ++i) row.coords[i] = static_cast<double>(digits[i]) / grid_n;
        OneForm w = form_from_character(g, t, row.coords);
        row.rho_A = spectrum(adjacency_twisted(g, w)).radius();
        row.rho_W = spectrum(edge_adjacency_twisted(g, w)).radius();
        table.max_rho_A = std::max(table.max_rho_A, row.rho_A);
        table.max_rho_W = std::max(table.max_rho_W, row.rho_W);
        table.rows.push_back(std::move(row));
        for (int i = genus - 1; i >= 0; --i) {
            if (++digits[i] < grid_n) break;
            digits[i] = 0;
        }
    }
    const double cut = table.max_rho_W - 1e-9 * std::max(1.0, table.max_rho_W);
    for (int i = 0; i < static_cast<int>(table.rows.size()); ++i)
        if (table.rows[i].rho_W >= cut) table.argmax_W.push_back(i);
    return table;
}

// --- regular graphs ---------------------------------------------------------

// For a (q+1)-regular graph, each adjacency eigenvalue lambda contributes
// the two roots of 1 - lambda u + q u^2, and the genus contributes g-1
// copies each of +1 and -1.
inline Spectrum regular_spec_map(int q, const Spectrum& spec_a, int genus) {
    Spectrum out;
    for (const auto& lam : spec_a.values) {
        cd disc = std::sqrt(lam * lam - cd(4.0 * q));
        out.values.push_back((lam + disc) / 2.0);
        out.values.push_back((lam - disc) / 2.0);
    }
    for (int i = 0; i < genus - 1; ++i) {
        out.values.emplace_back(1.0, 0.0);
        out.values.emplace_back(-1.0, 0.0);
    }
    out.sort();
    return out;
}

inline Spectrum regular_spec_map(const Graph& g, const OneForm& omega) {
    const int deg = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != deg) throw NotRegular("vertex degrees differ");
    return regular_spec_map(deg - 1, spectrum(adjacency_twisted(g, omega)), g.genus());
}

}  // namespace ihara
