#pragma once

#include <random>
#include <string>
#include <vector>

#include "ihara/counting.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

// Reusable check suites shared by the command line and the test binaries.

struct SuiteResult {
    std::string name;
    bool pass = true;
    double max_dev = 0;
    long long checks = 0;
    std::string detail;

    void fold(bool ok, double dev, const std::string& what) {
        checks++;
        max_dev = std::max(max_dev, dev);
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

inline std::vector<Graph> random_corpus(unsigned long long seed, int count, int n_min, int n_max,
                                        int m_max) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) out.push_back(random_connected_graph(rng, n_min, n_max, m_max));
    return out;
}

inline OneForm random_one_form(std::mt19937_64& rng, const Graph& g) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    Eigen::VectorXd c(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) c[i] = ud(rng);
    return OneForm(std::move(c));
}

// Dual-twist negation of both spectra plus conjugation invariance, over
// random 1-forms.
inline SuiteResult suite_antisymmetry(const std::vector<Graph>& graphs, int omegas_per_graph,
                                      unsigned long long seed, double tol = 1e-7) {
    SuiteResult res{"antisymmetry"};
    std::mt19937_64 rng(seed);
    for (const auto& g : graphs) {
        for (int i = 0; i < omegas_per_graph; ++i) {
            AntisymmetryReport rep = verify_antisymmetry(g, random_one_form(rng, g), tol);
            double dev = std::max(rep.dev_adjacency, std::max(rep.dev_edge, rep.dev_conjugation));
            res.fold(rep.pass, dev, "antisymmetry deviation " + std::to_string(dev));
        }
        AntisymmetryReport rep0 = verify_antisymmetry(g, OneForm::zero(g), tol);
        res.fold(rep0.pass, std::max(rep0.dev_adjacency, rep0.dev_edge), "untwisted antisymmetry");
    }
    return res;
}

// Edge-determinant and vertex-determinant expansions of 1/L must agree
// coefficientwise.
inline SuiteResult suite_determinant(const std::vector<Graph>& graphs, int omegas_per_graph,
                                     unsigned long long seed, double rel_tol = 1e-8) {
    SuiteResult res{"determinant"};
    std::mt19937_64 rng(seed);
    for (const auto& g : graphs) {
        for (int i = 0; i <= omegas_per_graph; ++i) {
            OneForm w = (i == 0) ? OneForm::zero(g) : random_one_form(rng, g);
            ComplexPoly pe = lfunc_edge(g, w);
            ComplexPoly pi = lfunc_ihara(g, w);
            double scale = std::max(1.0, std::max(pe.max_abs(), pi.max_abs()));
            double dev = poly_max_deviation(pe, pi);
            res.fold(dev <= rel_tol * scale, dev / scale, "determinant mismatch " + std::to_string(dev));
        }
    }
    return res;
}

inline SuiteResult suite_orthogonality(const Graph& g, const IMat& lattice, double tol = 1e-10) {
    SuiteResult res{"orthogonality"};
    QuotientGroup q = quotient_group(lattice);
    OrthogonalityReport rep = orthogonality_check(q, tol);
    res.fold(rep.ok, rep.max_dev,
             "pair (" + std::to_string(rep.bad_a) + "," + std::to_string(rep.bad_b) + ")");
    (void)g;
    return res;
}

inline SuiteResult suite_transforms(const Graph& g, const IMat& lattice, int L, double tol = 1e-7) {
    SuiteResult res{"transforms"};
    HomologyData h = homology_data(g);
    TransformReport rep = verify_transforms(g, h, quotient_group(lattice), L);
    res.fold(rep.pass(tol), rep.max_dev(), "transform identity deviation");
    return res;
}

// Spectral counts against the enumeration oracle: exact classwise equality
// for N, and for the prime/cycle tables via the Moebius route.
inline SuiteResult suite_oracle(const std::vector<Graph>& graphs, int L, long long budget,
                                long long lattice_scale = 2) {
    SuiteResult res{"oracle"};
    for (const auto& g : graphs) {
        HomologyData h = homology_data(g);
        OracleResult oracle = brute_force(g, h, L, budget);
        ClassCounts dft = counts_integral(g, h, L, L, budget);

        bool same = true;
        for (const auto& lab : oracle.counts.labels)
            for (int l = 1; l <= L; ++l)
                if (oracle.counts.N_of(lab, l) != dft.N_of(lab, l)) same = false;
        for (const auto& lab : dft.labels)
            for (int l = 1; l <= L; ++l)
                if (oracle.counts.N_of(lab, l) != dft.N_of(lab, l)) same = false;
        res.fold(same, same ? 0.0 : 1.0, "integral counts disagree with enumeration");

        prime_counts(dft, nullptr);
        bool primes_same = true;
        for (const auto& lab : oracle.counts.labels)
            for (int l = 1; l <= L; ++l)
                if (oracle.counts.pi_of(lab, l) != dft.pi_of(lab, l)) primes_same = false;
        res.fold(primes_same, primes_same ? 0.0 : 1.0, "prime counts disagree with enumeration");

        if (g.genus() >= 1) {
            QuotientGroup q = quotient_group(scaled_lattice(g.genus(), lattice_scale));
            ClassCounts mod = counts_mod_lattice(g, h, q, L);
            ClassCounts reduced = reduce_to_quotient(oracle.counts, q);
            bool mod_same = true;
            for (size_t r = 0; r < mod.labels.size(); ++r)
                for (int l = 1; l <= L; ++l)
                    if (mod.N[r][l - 1] != reduced.N_of(mod.labels[r], l)) mod_same = false;
            res.fold(mod_same, mod_same ? 0.0 : 1.0, "lattice counts disagree with enumeration");

            // both tables enumerate rows in the element order of q
            prime_counts(mod, &q);
            bool mod_primes = true;
            for (size_t r = 0; r < mod.labels.size(); ++r)
                for (int l = 1; l <= L; ++l)
                    if (mod.pi[r][l - 1] != reduced.pi[r][l - 1] ||
                        mod.pi_c[r][l - 1] != reduced.pi_c[r][l - 1])
                        mod_primes = false;
            res.fold(mod_primes, mod_primes ? 0.0 : 1.0, "prime tables disagree on the quotient");
        }
    }
    return res;
}

}  // namespace ihara
