#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "ihara/lattice.hpp"
#include "ihara/twist.hpp"

namespace ihara {

// --- trace distributions ----------------------------------------------------

namespace detail {
// scale: the sum of the magnitudes of the cancelling terms
inline double require_real(const cd& z, double scale, const char* what) {
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, scale))
        throw EigenSolverFailure(std::string(what) + ": imaginary residue " + std::to_string(z.imag()));
    return z.real();
}
}  // namespace detail

// K(omega, l) = sum of l-th powers of the twisted edge-adjacency spectrum,
// for l = 1..L. Always real up to solver noise.
inline std::vector<double> trace_distribution(const Graph& g, const OneForm& omega, int L) {
    Spectrum s = spectrum(edge_adjacency_twisted(g, omega));
    std::vector<cd> pw(s.values.begin(), s.values.end());
    std::vector<double> out(L, 0.0);
    for (int l = 1; l <= L; ++l) {
        cd acc = 0;
        double scale = 0;
        for (size_t i = 0; i < pw.size(); ++i) {
            acc += pw[i];
            scale += std::abs(pw[i]);
        }
        out[l - 1] = detail::require_real(acc, scale, "trace");
        if (l < L)
            for (size_t i = 0; i < pw.size(); ++i) pw[i] *= s.values[i];
    }
    return out;
}

// Same values through explicit matrix powers; used on dense sweep grids and
// as the spot check for the spectral route.
inline std::vector<double> trace_powers(const Eigen::MatrixXcd& w, int L) {
    std::vector<double> out(L, 0.0);
    if (w.rows() == 0) return out;
    Eigen::MatrixXcd p = w;
    for (int l = 1; l <= L; ++l) {
        out[l - 1] = detail::require_real(p.trace(), p.diagonal().cwiseAbs().sum(), "trace-power");
        if (l < L) p = p * w;
    }
    return out;
}

// Trace rows for a list of characters; the trivial row is prepended for the
// bound |K(omega,l)| <= K(0,l) and the integrality of K(0,l).
struct TraceTable {
    int L = 0;
    std::vector<Character> chars;
    std::vector<std::vector<double>> K;     // [char][l-1]
    std::vector<long long> circuit_totals;  // rounded K(0, l)
};

inline TraceTable trace_table(const Graph& g, const SpanningTree& t,
                              const std::vector<Character>& chars, int L) {
    TraceTable tab;
    tab.L = L;
    tab.chars = chars;
    std::vector<double> k0 = trace_distribution(g, OneForm::zero(g), L);
    for (int l = 1; l <= L; ++l) {
        long long n = round_to_integer(k0[l - 1], 1e-6, "K(0,l)");
        if (n < 0) throw RoundingFailure("negative circuit count");
        tab.circuit_totals.push_back(n);
    }
    for (const auto& chi : chars) {
        std::vector<double> row = trace_distribution(g, form_from_character(g, t, chi), L);
        for (int l = 1; l <= L; ++l)
            if (std::abs(row[l - 1]) > k0[l - 1] + 1e-6)
                throw RoundingFailure("|K(omega,l)| exceeds K(0,l)");
        tab.K.push_back(std::move(row));
    }
    return tab;
}

// --- class count tables -------------------------------------------------------

// Circuit / prime-cycle / cycle counts per homology class. Labels are Smith
// coordinates (lattice mode) or Z^g coordinates (box mode); absent labels
// mean zero counts.
struct ClassCounts {
    bool lattice_mode = false;
    int L = 0;
    std::vector<std::vector<long long>> labels;
    std::map<std::vector<long long>, int> index;
    std::vector<std::vector<long long>> N;     // [row][l-1]
    std::vector<std::vector<long long>> pi;    // prime cycles
    std::vector<std::vector<long long>> pi_c;  // cycles
    bool primes_filled = false;
    double fourier_roundtrip_dev = 0;

    int add_row(const std::vector<long long>& lab) {
        auto it = index.find(lab);
        if (it != index.end()) return it->second;
        int r = static_cast<int>(labels.size());
        index.emplace(lab, r);
        labels.push_back(lab);
        N.emplace_back(L, 0);
        pi.emplace_back(L, 0);
        pi_c.emplace_back(L, 0);
        return r;
    }
    int row_of(const std::vector<long long>& lab) const {
        auto it = index.find(lab);
        return it == index.end() ? -1 : it->second;
    }
    long long N_of(const std::vector<long long>& lab, int l) const {
        int r = row_of(lab);
        return r < 0 ? 0 : N[r][l - 1];
    }
    long long pi_of(const std::vector<long long>& lab, int l) const {
        int r = row_of(lab);
        return r < 0 ? 0 : pi[r][l - 1];
    }
    std::vector<long long> totals() const {
        std::vector<long long> t(L, 0);
        for (const auto& row : N)
            for (int l = 0; l < L; ++l) t[l] = checked_add(t[l], row[l]);
        return t;
    }
};

// N(class, l) over Q_Lambda by the finite Fourier inversion of the trace
// rows over the dual group; counts must round to integers.
inline ClassCounts counts_mod_lattice(const Graph& g, const HomologyData& h,
                                      const QuotientGroup& q, int L) {
    TraceTable tab = trace_table(g, h.tree, q.dual_chars, L);
    ClassCounts c;
    c.lattice_mode = true;
    c.L = L;
    const double scale = 1.0 / static_cast<double>(q.order);
    for (size_t a = 0; a < q.elements.size(); ++a) {
        int row = c.add_row(q.elements[a]);
        for (int l = 1; l <= L; ++l) {
            cd acc = 0;
            for (size_t k = 0; k < q.dual_labels.size(); ++k)
                acc += std::conj(q.pairing(q.dual_labels[k], q.elements[a])) * tab.K[k][l - 1];
            acc *= scale;
            if (std::abs(acc.imag()) > 1e-6) throw RoundingFailure("class count imaginary part");
            long long n = round_to_integer(acc.real(), 1e-6, "N(class,l)");
            if (n < 0) throw RoundingFailure("negative class count");
            c.N[row][l - 1] = n;
        }
    }
    // Fourier round trip: the counts must reconstruct every trace row.
    for (size_t k = 0; k < q.dual_labels.size(); ++k)
        for (int l = 1; l <= L; ++l) {
            cd acc = 0;
            for (size_t a = 0; a < q.elements.size(); ++a)
                acc += q.pairing(q.dual_labels[k], q.elements[a]) *
                       static_cast<double>(c.N[static_cast<int>(a)][l - 1]);
            c.fourier_roundtrip_dev = std::max(c.fourier_roundtrip_dev,
                                               std::abs(acc - cd(tab.K[k][l - 1])));
        }
    if (c.fourier_roundtrip_dev > 1e-7)
        throw RoundingFailure("Fourier round trip deviation " + std::to_string(c.fourier_roundtrip_dev));
    return c;
}

namespace detail {
// In-place DFT along one dimension of a flat row-major g-cube of extent ng.
inline void dft_dimension(std::vector<cd>& buf, int ng, long long stride, const std::vector<cd>& twiddle) {
    const long long size = static_cast<long long>(buf.size());
    const long long block = stride * ng;
    std::vector<cd> tmp(ng);
    for (long long base = 0; base < size; base += block)
        for (long long off = 0; off < stride; ++off) {
            const long long p0 = base + off;
            for (int a = 0; a < ng; ++a) {
                cd s = 0;
                for (int k = 0; k < ng; ++k) s += twiddle[static_cast<size_t>(a) * ng + k] * buf[p0 + k * stride];
                tmp[a] = s;
            }
            for (int a = 0; a < ng; ++a) buf[p0 + a * stride] = tmp[a];
        }
}
}  // namespace detail

// N(alpha, l) for alpha in the box |alpha_i| <= B via the exact torus
// integral: K(., l) in non-tree coordinates is a trigonometric polynomial of
// per-coordinate degree <= l, so a (2L+1)-point grid per dimension
// integrates it exactly. Zero rows are omitted.
inline ClassCounts counts_integral(const Graph& g, const HomologyData& h, int L,
                                   int B = -1, long long budget = default_budget()) {
    const int genus = h.genus();
    if (B < 0) B = L;
    if (B < L) throw Error("box bound must cover the truncation length");
    const int ng = 2 * L + 1;
    long long points = 1;
    for (int i = 0; i < genus; ++i) {
        points = checked_mul(points, ng);
        if (points > budget) throw BudgetExceeded("integration grid " + std::to_string(points));
    }

    // Trace rows on the uniform grid, by explicit powers of W.
    const int dim = g.oriented_count();
    std::vector<std::pair<int, int>> feeds;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (feeds_into(g, a, b)) feeds.emplace_back(a, b);
    std::vector<int> nt_of_edge(g.edge_count(), -1);
    for (size_t i = 0; i < h.tree.non_tree_edges.size(); ++i)
        nt_of_edge[h.tree.non_tree_edges[i]] = static_cast<int>(i);

    std::vector<double> kflat(static_cast<size_t>(points) * L);
    std::vector<int> digits(genus, 0);
    Eigen::MatrixXcd w(dim, dim);
    for (long long p = 0; p < points; ++p) {
        std::vector<cd> phase(dim);
        for (int e = 0; e < dim; ++e) {
            int u = e < g.edge_count() ? e : e - g.edge_count();
            int j = nt_of_edge[u];
            if (j < 0) {
                phase[e] = 1.0;
            } else {
                double c = static_cast<double>(digits[j]) / ng;
                phase[e] = unit_phase(e < g.edge_count() ? c : -c);
            }
        }
        w.setZero();
        for (auto [a, b] : feeds) w(a, b) = phase[b];
        std::vector<double> row = trace_powers(w, L);
        for (int l = 0; l < L; ++l) kflat[static_cast<size_t>(p) * L + l] = row[l];
        for (int i = genus - 1; i >= 0; --i) {
            if (++digits[i] < ng) break;
            digits[i] = 0;
        }
    }

    std::vector<cd> twiddle(static_cast<size_t>(ng) * ng);
    for (int a = 0; a < ng; ++a)
        for (int k = 0; k < ng; ++k)
            twiddle[static_cast<size_t>(a) * ng + k] = unit_phase(-static_cast<double>(a) * k / ng);

    ClassCounts c;
    c.lattice_mode = false;
    c.L = L;
    std::vector<cd> buf(points);
    const double norm = 1.0 / static_cast<double>(points);
    for (int l = 1; l <= L; ++l) {
        for (long long p = 0; p < points; ++p) buf[p] = kflat[static_cast<size_t>(p) * L + (l - 1)];
        long long stride = points / ng;
        for (int t = 0; t < genus; ++t) {
            detail::dft_dimension(buf, ng, stride, twiddle);
            stride /= ng;
        }
        std::fill(digits.begin(), digits.end(), 0);
        for (long long p = 0; p < points; ++p) {
            cd v = buf[p] * norm;
            if (std::abs(v.imag()) > 1e-6) throw RoundingFailure("integral count imaginary part");
            long long nval = round_to_integer(v.real(), 1e-6, "N(alpha,l)");
            if (nval != 0) {
                std::vector<long long> lab(genus);
                for (int i = 0; i < genus; ++i) lab[i] = digits[i] <= L ? digits[i] : digits[i] - ng;
                if (nval < 0) throw RoundingFailure("negative integral count");
                int row = c.add_row(lab);
                c.N[row][l - 1] = nval;
            }
            for (int i = genus - 1; i >= 0; --i) {
                if (++digits[i] < ng) break;
                digits[i] = 0;
            }
        }
    }
    return c;
}

// --- brute-force oracle -------------------------------------------------------

// Enumerate every circuit (cyclically non-backtracking edge sequence with a
// marked start) of length <= L_max. The callback returns false to abort.
template <class CB>
inline void enumerate_circuits(const Graph& g, int L_max, long long budget, CB&& cb) {
    const int dim = g.oriented_count();
    std::vector<std::vector<int>> next(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (feeds_into(g, a, b)) next[a].push_back(b);
    long long nodes = 0;
    std::vector<int> seq;
    bool stop = false;
    std::function<void(int)> grow = [&](int start) {
        if (stop) return;
        if (++nodes > budget) throw BudgetExceeded("circuit enumeration");
        int last = seq.back();
        if (feeds_into(g, last, start)) {
            if (!cb(std::as_const(seq))) {
                stop = true;
                return;
            }
        }
        if (static_cast<int>(seq.size()) == L_max) return;
        for (int b : next[last]) {
            seq.push_back(b);
            grow(start);
            seq.pop_back();
            if (stop) return;
        }
    };
    for (int s = 0; s < dim && !stop; ++s) {
        seq.assign(1, s);
        grow(s);
    }
}

struct OracleResult {
    ClassCounts counts;  // box mode, pi and pi_c filled from the census
    long long total_circuits = 0;
    std::vector<long long> N_per_length;
    int length_gcd = 0;  // gcd of observed circuit lengths
};

// Exhaustive census: counts, primitivity, and rotation weights per homology
// class. Independent of all spectral code.
inline OracleResult brute_force(const Graph& g, const HomologyData& h, int L_max,
                                long long budget = default_budget()) {
    std::vector<int> nt_of_edge(g.edge_count(), -1);
    for (size_t i = 0; i < h.tree.non_tree_edges.size(); ++i)
        nt_of_edge[h.tree.non_tree_edges[i]] = static_cast<int>(i);
    const int genus = h.genus();
    const int m = g.edge_count();

    OracleResult res;
    res.counts.lattice_mode = false;
    res.counts.L = L_max;
    res.N_per_length.assign(L_max, 0);
    std::map<std::vector<long long>, std::pair<std::vector<long long>, std::vector<long long>>> extra;
    // extra[label] = (primitive circuit counts, rotation weights), per length

    enumerate_circuits(g, L_max, budget, [&](const std::vector<int>& seq) {
        const int l = static_cast<int>(seq.size());
        std::vector<long long> lab(genus, 0);
        for (int a : seq) {
            int u = a < m ? a : a - m;
            int j = nt_of_edge[u];
            if (j >= 0) lab[j] += (a < m) ? 1 : -1;
        }
        int period = l;
        for (int p = 1; p < l; ++p) {
            if (l % p != 0) continue;
            bool ok = true;
            for (int i = p; i < l && ok; ++i) ok = seq[i] == seq[i - p];
            if (ok) {
                period = p;
                break;
            }
        }
        const long long r = l / period;
        int row = res.counts.add_row(lab);
        res.counts.N[row][l - 1]++;
        auto& ex = extra.try_emplace(lab, std::vector<long long>(L_max, 0),
                                     std::vector<long long>(L_max, 0)).first->second;
        if (period == l) ex.first[l - 1]++;
        ex.second[l - 1] += r;
        res.total_circuits++;
        res.N_per_length[l - 1]++;
        res.length_gcd = std::gcd(res.length_gcd, l);
        return true;
    });

    for (auto& [lab, ex] : extra) {
        int row = res.counts.row_of(lab);
        for (int l = 1; l <= L_max; ++l) {
            if (ex.first[l - 1] % l != 0 || ex.second[l - 1] % l != 0)
                throw NonIntegerResult("rotation census not divisible by length");
            res.counts.pi[row][l - 1] = ex.first[l - 1] / l;    // prime cycles
            res.counts.pi_c[row][l - 1] = ex.second[l - 1] / l; // cycles
        }
    }
    res.counts.primes_filled = true;
    return res;
}

// gcd of circuit lengths, computed on the two-core with early exit at the
// smallest value the bipartition class allows.
inline int nu_from_oracle(const Graph& g, long long budget = default_budget()) {
    if (g.genus() < 1) return 0;
    Graph core = two_core(g).core;
    const int target = is_bipartite(core) ? 2 : 1;
    int acc = 0;
    enumerate_circuits(core, 2 * core.edge_count(), budget, [&](const std::vector<int>& seq) {
        acc = std::gcd(acc, static_cast<int>(seq.size()));
        return acc != target;
    });
    return acc;
}

inline int dominant_count(const Spectrum& s, double rel_tol = 1e-8) {
    const double rho = s.radius();
    int c = 0;
    for (const auto& v : s.values)
        if (std::abs(v) >= rho * (1.0 - rel_tol)) c++;
    return c;
}

// --- Moebius inversion to prime cycles -----------------------------------------

inline int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

namespace detail {
// [alpha | k] in the ambient lattice: the unique alpha/k when k divides
// every coordinate, else empty.
inline std::vector<std::vector<long long>> box_preimages(const std::vector<long long>& a, long long k) {
    std::vector<long long> b(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] % k != 0) return {};
        b[i] = a[i] / k;
    }
    return {b};
}
}  // namespace detail

// pi(class, l) by Moebius inversion of the N table, then cycles from primes.
// Pass the quotient group in lattice mode, nullptr in box mode.
inline void prime_counts(ClassCounts& c, const QuotientGroup* q) {
    const int L = c.L;
    auto preim = [&](const std::vector<long long>& a, long long k) {
        return q ? preimages_under_multiplication(*q, a, k) : detail::box_preimages(a, k);
    };
    for (size_t row = 0; row < c.labels.size(); ++row) {
        for (int l = 1; l <= L; ++l) {
            long long acc = 0;
            for (int d : divisors(l)) {
                int mu = moebius(l / d);
                if (mu == 0) continue;
                long long inner = 0;
                for (const auto& b : preim(c.labels[row], l / d))
                    inner = checked_add(inner, c.N_of(b, d));
                acc = checked_add(acc, mu * inner);
            }
            if (acc % l != 0 || acc < 0)
                throw NonIntegerResult("pi(class," + std::to_string(l) + ") = " + std::to_string(acc) +
                                       "/" + std::to_string(l));
            c.pi[row][l - 1] = acc / l;
        }
    }
    for (size_t row = 0; row < c.labels.size(); ++row)
        for (int l = 1; l <= L; ++l) {
            long long acc = 0;
            for (int d : divisors(l))
                for (const auto& b : preim(c.labels[row], l / d)) acc = checked_add(acc, c.pi_of(b, d));
            c.pi_c[row][l - 1] = acc;
        }
    c.primes_filled = true;
}

// Aggregate a box-mode table into classes of Q_Lambda (N, pi, pi_c all
// aggregate; prime cycles are partitioned by their class).
inline ClassCounts reduce_to_quotient(const ClassCounts& box, const QuotientGroup& q) {
    ClassCounts out;
    out.lattice_mode = true;
    out.L = box.L;
    for (const auto& e : q.elements) out.add_row(e);
    for (size_t row = 0; row < box.labels.size(); ++row) {
        int r = out.row_of(q.reduce(box.labels[row]));
        for (int l = 0; l < box.L; ++l) {
            out.N[r][l] = checked_add(out.N[r][l], box.N[row][l]);
            out.pi[r][l] = checked_add(out.pi[r][l], box.pi[row][l]);
            out.pi_c[r][l] = checked_add(out.pi_c[r][l], box.pi_c[row][l]);
        }
    }
    out.primes_filled = box.primes_filled;
    return out;
}

// --- vanishing checks -----------------------------------------------------------

struct VanishingReport {
    bool ok = true;
    bool bipartite = false;
    bool theta_applicable = false;  // theta nontrivial and defined on the classes
    std::vector<std::pair<int, int>> violations;  // (row, l)
};

// Parity vanishing forced by the canonical character: classes pairing to +1
// have no odd-length circuits, classes pairing to -1 no even-length ones.
inline VanishingReport vanishing_check(const Graph& g, const ClassCounts& c,
                                       const QuotientGroup* q = nullptr) {
    VanishingReport rep;
    rep.bipartite = is_bipartite(g);
    Character theta = canonical_character(g);
    auto flag = [&](int row, int l) {
        rep.ok = false;
        rep.violations.emplace_back(row, l);
    };
    if (rep.bipartite) {
        for (size_t row = 0; row < c.labels.size(); ++row)
            for (int l = 1; l <= c.L; l += 2)
                if (c.N[row][l - 1] != 0) flag(static_cast<int>(row), l);
        return rep;
    }
    if (c.lattice_mode) {
        if (!q) throw Error("quotient group required for lattice-mode check");
        int kt = q->dual_index_of(theta);
        if (kt < 0) return rep;  // theta not a character of the quotient
        rep.theta_applicable = true;
        for (size_t row = 0; row < c.labels.size(); ++row) {
            cd v = q->pairing(q->dual_labels[kt], c.labels[row]);
            int sign = v.real() > 0 ? 1 : -1;
            for (int l = 1; l <= c.L; ++l) {
                bool must_vanish = (sign == 1 && l % 2 == 1) || (sign == -1 && l % 2 == 0);
                if (must_vanish && c.N[row][l - 1] != 0) flag(static_cast<int>(row), l);
            }
        }
    } else {
        rep.theta_applicable = !theta.is_trivial();
        if (!rep.theta_applicable) return rep;
        for (size_t row = 0; row < c.labels.size(); ++row) {
            cd v = char_value(theta, c.labels[row]);
            int sign = v.real() > 0 ? 1 : -1;
            for (int l = 1; l <= c.L; ++l) {
                bool must_vanish = (sign == 1 && l % 2 == 1) || (sign == -1 && l % 2 == 0);
                if (must_vanish && c.N[row][l - 1] != 0) flag(static_cast<int>(row), l);
            }
        }
    }
    return rep;
}

// --- desk-scale asymptotics --------------------------------------------------------

struct RatioRow {
    int row = 0;
    int l = 0;
    double ratio = 0;
};

struct RatioTable {
    bool applicable = false;  // requires genus >= 2
    std::vector<RatioRow> rows;
};

// pi(class,l) * l * |Q| / (c * nu * rho^l) with c = 2 when the canonical
// character doubles the leading term; rows only at nonvanishing lengths.
inline RatioTable asymptotic_ratio(const ClassCounts& c, double rho, int nu, long long q_order,
                                   bool doubling, int genus) {
    RatioTable t;
    if (genus < 2) return t;
    t.applicable = true;
    const double cmul = doubling ? 2.0 : 1.0;
    for (size_t row = 0; row < c.labels.size(); ++row)
        for (int l = 1; l <= c.L; ++l) {
            if (c.pi[row][l - 1] == 0) continue;
            double target = cmul * nu * std::pow(rho, l) / (static_cast<double>(l) * q_order);
            t.rows.push_back({static_cast<int>(row), l, static_cast<double>(c.pi[row][l - 1]) / target});
        }
    return t;
}

// --- trace formula ------------------------------------------------------------------

// Analytic function handle: point evaluator plus power series coefficients.
struct AnalyticFn {
    std::function<cd(cd)> eval;
    std::function<double(int)> coeff;  // coefficient of z^l
};

inline AnalyticFn exp_function() {
    AnalyticFn f;
    f.eval = [](cd z) { return std::exp(z); };
    f.coeff = [](int l) {
        double fact = 1;
        for (int i = 2; i <= l; ++i) fact *= i;
        return 1.0 / fact;
    };
    return f;
}

inline AnalyticFn monomial_function(int j) {
    AnalyticFn f;
    f.eval = [j](cd z) { return std::pow(z, j); };
    f.coeff = [j](int l) { return l == j ? 1.0 : 0.0; };
    return f;
}

struct TraceFormulaResult {
    cd spectral_side = 0;
    double series_side = 0;
    double deviation = 0;
};

// sum_lambda (h(lambda) - h(0)) against sum_l K(omega,l) hhat(l); the series
// tail past L must be negligible.
inline TraceFormulaResult trace_formula_eval(const Graph& g, const OneForm& omega,
                                             const AnalyticFn& h, int L) {
    Spectrum s = spectrum(edge_adjacency_twisted(g, omega));
    const double rho = s.radius();
    double tail = 0;
    for (int l = L + 1; l <= L + 64; ++l) tail += std::abs(h.coeff(l)) * std::pow(rho, l);
    if (tail > 1e-6) throw TailBoundViolated("series tail " + std::to_string(tail));
    TraceFormulaResult r;
    for (const auto& lam : s.values) r.spectral_side += h.eval(lam) - h.eval(cd(0));
    std::vector<double> K = trace_distribution(g, omega, L);
    for (int l = 1; l <= L; ++l) r.series_side += K[l - 1] * h.coeff(l);
    r.deviation = std::abs(r.spectral_side - cd(r.series_side));
    return r;
}

}  // namespace ihara
