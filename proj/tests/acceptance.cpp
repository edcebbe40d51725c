// Acceptance suite: end-to-end checks of the golden tables, the genus-2
// sweeps, and the randomized property suites, each with a pinned tolerance
// and wall-clock bound. Prints one line per criterion; exit code is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "helpers.hpp"
#include "ihara/verify.hpp"
#include "ihara/zeta.hpp"

using namespace ihara;
using fixtures::k4_cycle_form;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time ") + std::to_string(secs) +
                  "s > " + std::to_string(time_limit_s) + "s";
    }
    if (!ok) failures++;
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

struct K4 {
    Graph g = complete_graph(4);
    HomologyData h = homology_data(g);
    QuotientGroup q3 = quotient_group(kernel_lattice({1, 1, 1}, 3));
    QuotientGroup q6 = quotient_group(kernel_lattice({1, 1, 1}, 6));
    std::vector<long long> cls(const QuotientGroup& q, long long i) const {
        return q.reduce(std::vector<long long>{i, 0, 0});
    }
};

std::vector<long long> round_all(const std::vector<double>& v) {
    std::vector<long long> out;
    for (double x : v) out.push_back(round_to_integer(x, 1e-6, "sequence"));
    return out;
}

}  // namespace

int main() {
    K4 k4;

    criterion(1, "K4 circuit counts K(0,l), l=1..15", 1.0, [&](std::string& detail) {
        auto got = round_all(trace_distribution(k4.g, OneForm::zero(k4.g), 15));
        if (got != fixtures::k4::K0) {
            detail = "sequence mismatch";
            return false;
        }
        return true;
    });

    criterion(2, "K4 twisted traces K(omega1,l), l=1..15", 1.0, [&](std::string& detail) {
        auto got = round_all(trace_distribution(k4.g, k4_cycle_form(k4.g, 1.0 / 6), 15));
        if (got != fixtures::k4::KW1) {
            detail = "sequence mismatch";
            return false;
        }
        return true;
    });

    criterion(3, "K4 homology-class count tables for both quotients", 5.0, [&](std::string& detail) {
        ClassCounts c3 = counts_mod_lattice(k4.g, k4.h, k4.q3, 15);
        prime_counts(c3, &k4.q3);
        int r0 = c3.row_of(k4.cls(k4.q3, 0));
        int r1 = c3.row_of(k4.cls(k4.q3, 1));
        bool ok = c3.N[r0] == fixtures::k4::N3_A0 && c3.N[r1] == fixtures::k4::N3_A1 &&
                  c3.pi[r0] == fixtures::k4::PI3_A0 && c3.pi_c[r1] == fixtures::k4::PIC3_A1;
        ClassCounts c6 = counts_mod_lattice(k4.g, k4.h, k4.q6, 15);
        prime_counts(c6, &k4.q6);
        for (int i = 0; i < 6; ++i) {
            int r = c6.row_of(k4.cls(k4.q6, i));
            ok = ok && c6.N[r] == fixtures::k4::N6[i] && c6.pi[r] == fixtures::k4::PI6[i];
        }
        if (!ok) detail = "table mismatch";
        return ok;
    });

    criterion(4, "exponential trace identities at L=40", 1.0, [&](std::string& detail) {
        TraceFormulaResult r1 = trace_formula_eval(k4.g, OneForm::zero(k4.g), exp_function(), 40);
        bool ok1 = std::abs(r1.series_side - fixtures::k4::EXP_IDENTITY) < 1e-6 &&
                   std::abs(r1.spectral_side - cd(r1.series_side)) < 1e-8;
        cd spectral = 0;
        for (double coeff : {0.0, 1.0 / 6, 1.0 / 3}) {
            Spectrum s = spectrum(edge_adjacency_twisted(k4.g, k4_cycle_form(k4.g, coeff)));
            for (const auto& lam : s.values) spectral += std::exp(lam) - cd(1);
        }
        auto k0 = trace_distribution(k4.g, OneForm::zero(k4.g), 40);
        auto k1 = trace_distribution(k4.g, k4_cycle_form(k4.g, 1.0 / 6), 40);
        double series = 0, fact = 1;
        for (int l = 1; l <= 40; ++l) {
            fact *= l;
            series += (k0[l - 1] + 2.0 * k1[l - 1]) / fact;  // 3 N(class0,l)/l!
        }
        bool ok2 = std::abs(series - fixtures::k4::EXP_IDENTITY_AVERAGED) < 1e-6 &&
                   std::abs(spectral - cd(series)) < 1e-8;
        if (!ok1 || !ok2)
            detail = "values " + std::to_string(r1.series_side) + ", " + std::to_string(series);
        return ok1 && ok2;
    });

    criterion(5, "genus-2 radii and sweep extrema", 30.0, [&](std::string& detail) {
        Graph g1 = theta_graph(1, 2, 3), g2 = theta_graph(1, 3, 5), g3 = theta_graph(2, 2, 4);
        auto rho = [](const Graph& g) {
            return spectrum(edge_adjacency_twisted(g, OneForm::zero(g))).radius();
        };
        if (std::abs(rho(g1) - fixtures::G1_RADIUS) > 5e-5 ||
            std::abs(rho(g2) - fixtures::G2_RADIUS) > 5e-5 ||
            std::abs(rho(g3) - fixtures::G3_RADIUS) > 5e-5) {
            detail = "spectral radius off";
            return false;
        }
        SweepTable t1 = radius_sweep(g1, 64);
        if (t1.argmax_W.size() != 2) {
            detail = "expected exactly two maximizers on the 64x64 grid";
            return false;
        }
        auto near = [](const Eigen::VectorXd& c, double a, double b) {
            return circle_dist(c[0], a) < 1e-12 && circle_dist(c[1], b) < 1e-12;
        };
        const auto& c0 = t1.rows[t1.argmax_W[0]].coords;
        const auto& c1 = t1.rows[t1.argmax_W[1]].coords;
        if (!((near(c0, 0, 0) && near(c1, 0.5, 0)) || (near(c0, 0.5, 0) && near(c1, 0, 0)))) {
            detail = "maximizers not at (0,0) and (0.5,0)";
            return false;
        }
        SweepTable t3 = radius_sweep(g3, 16);
        int exceptional = 0;
        for (int idx : t3.argmax_W) {
            Character c(t3.rows[idx].coords);
            if (c.is_trivial()) continue;
            if (!c.is_two_torsion()) {
                detail = "non-torsion maximizer";
                return false;
            }
            exceptional++;
        }
        if (exceptional != 1) {
            detail = "expected exactly one exceptional two-torsion, got " +
                     std::to_string(exceptional);
            return false;
        }
        return true;
    });

    std::vector<Graph> corpus = random_corpus(2024, 20, 2, 7, 11);

    criterion(6, "spectral antisymmetry on 20 random graphs x 10 twists", 60.0,
              [&](std::string& detail) {
                  SuiteResult res = suite_antisymmetry(corpus, 10, 55);
                  detail = res.pass ? "" : res.detail;
                  return res.pass;
              });

    criterion(7, "determinant formula equality on the same corpus", 60.0,
              [&](std::string& detail) {
                  SuiteResult res = suite_determinant(corpus, 2, 77);
                  detail = res.pass ? "" : res.detail;
                  return res.pass;
              });

    criterion(8, "oracle equivalence of all counting routes, l<=8", 120.0,
              [&](std::string& detail) {
                  std::vector<Graph> graphs{complete_graph(4), theta_graph(1, 2, 3),
                                            theta_graph(1, 3, 5), theta_graph(2, 2, 4),
                                            cycle_graph(3)};
                  for (auto& g : random_corpus(31, 6, 2, 6, 9)) graphs.push_back(g);
                  SuiteResult res = suite_oracle(graphs, 8, default_budget());
                  detail = res.pass ? "" : res.detail;
                  return res.pass;
              });

    criterion(9, "transform identities on K4 for both quotients at L=15", 30.0,
              [&](std::string& detail) {
                  TransformReport r3 = verify_transforms(k4.g, k4.h, k4.q3, 15);
                  TransformReport r6 = verify_transforms(k4.g, k4.h, k4.q6, 15);
                  bool ok = r3.pass(1e-7) && r6.pass(1e-7);
                  if (!ok)
                      detail = "deviations " + std::to_string(r3.max_dev()) + ", " +
                               std::to_string(r6.max_dev());
                  return ok;
              });

    criterion(10, "desk-scale asymptotic ratios at l=15 (soft check)", 30.0,
              [&](std::string& detail) {
                  const double rho = 2.0;
                  ClassCounts c3 = counts_mod_lattice(k4.g, k4.h, k4.q3, 15);
                  prime_counts(c3, &k4.q3);
                  ClassCounts c6 = counts_mod_lattice(k4.g, k4.h, k4.q6, 15);
                  prime_counts(c6, &k4.q6);
                  auto ratio_ok = [&](const ClassCounts& c, const QuotientGroup& q, double cmul,
                                      std::string& why) {
                      bool any = false;
                      for (size_t row = 0; row < c.labels.size(); ++row) {
                          long long pi = c.pi[row][14];
                          if (pi == 0) continue;
                          any = true;
                          double r = static_cast<double>(pi) * 15.0 *
                                     static_cast<double>(q.order) /
                                     (cmul * std::pow(rho, 15));
                          if (r < 0.9 || r > 1.1) {
                              why = "ratio " + std::to_string(r);
                              return false;
                          }
                      }
                      return any;
                  };
                  return ratio_ok(c3, k4.q3, 1.0, detail) && ratio_ok(c6, k4.q6, 2.0, detail);
              });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
    return failures;
}
