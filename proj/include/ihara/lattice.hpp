#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "ihara/homology.hpp"

namespace ihara {

using IMat = std::vector<std::vector<long long>>;  // row-major

inline IMat identity_mat(int g) {
    IMat id(g, std::vector<long long>(g, 0));
    for (int i = 0; i < g; ++i) id[i][i] = 1;
    return id;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    int r = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = k ? static_cast<int>(b[0].size()) : 0;
    IMat out(r, std::vector<long long>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (int j = 0; j < c; ++j)
                    out[i][j] = checked_add(out[i][j], checked_mul(a[i][t], b[t][j]));
    return out;
}

// Determinant by fraction-free elimination; exact divisions in __int128.
inline long long integer_determinant(IMat m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    using big = __int128;
    std::vector<std::vector<big>> a(n, std::vector<big>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    big prev = 1;
    int sign = 1;
    const big lim = static_cast<big>(1) << 62;  // keeps products inside __int128
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                big v = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                if (v > lim || v < -lim) throw IntegerOverflow("determinant intermediate");
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    big det = sign * a[n - 1][n - 1];
    if (det > std::numeric_limits<long long>::max() || det < std::numeric_limits<long long>::min())
        throw IntegerOverflow("determinant result");
    return static_cast<long long>(det);
}

// Number of spanning trees, via any cofactor of the Laplacian.
inline long long complexity(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    IMat lap(n, std::vector<long long>(n, 0));
    for (auto [t, h] : g.edges()) {
        if (t == h) continue;
        lap[t][t]++;
        lap[h][h]++;
        lap[t][h]--;
        lap[h][t]--;
    }
    IMat minor(n - 1, std::vector<long long>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
    return integer_determinant(minor);
}

// vol(X) = 1/sqrt(w(G)); a finite-index quotient scales it by the order.
inline double torus_volume(const Graph& g) { return 1.0 / std::sqrt(static_cast<double>(complexity(g))); }
inline double torus_volume(const Graph& g, long long quotient_order) {
    return torus_volume(g) / static_cast<double>(quotient_order);
}

struct SmithNormalForm {
    IMat U, V;                 // unimodular, U * M * V = diag(d)
    std::vector<long long> d;  // invariant factors, d[i] | d[i+1], >= 0
};

inline SmithNormalForm smith_normal_form(IMat a) {
    const int g = static_cast<int>(a.size());
    SmithNormalForm s;
    s.U = identity_mat(g);
    s.V = identity_mat(g);
    auto row_sub = [&](int i, int k, long long q) {  // row i -= q * row k
        for (int j = 0; j < g; ++j) {
            a[i][j] = checked_sub(a[i][j], checked_mul(q, a[k][j]));
            s.U[i][j] = checked_sub(s.U[i][j], checked_mul(q, s.U[k][j]));
        }
    };
    auto col_sub = [&](int j, int k, long long q) {  // col j -= q * col k
        for (int i = 0; i < g; ++i) {
            a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][k]));
            s.V[i][j] = checked_sub(s.V[i][j], checked_mul(q, s.V[i][k]));
        }
    };
    auto row_swap = [&](int i, int k) { std::swap(a[i], a[k]); std::swap(s.U[i], s.U[k]); };
    auto col_swap = [&](int j, int k) {
        for (int i = 0; i < g; ++i) { std::swap(a[i][j], a[i][k]); std::swap(s.V[i][j], s.V[i][k]); }
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < g; ++j) { a[i][j] = -a[i][j]; s.U[i][j] = -s.U[i][j]; }
    };

    for (int k = 0; k < g; ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block into the pivot slot
            int pi = -1, pj = -1;
            for (int i = k; i < g; ++i)
                for (int j = k; j < g; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;  // trailing block is zero
            if (pi != k) row_swap(pi, k);
            if (pj != k) col_swap(pj, k);

            bool reduced = true;
            for (int i = k + 1; i < g; ++i)
                if (a[i][k] != 0) {
                    row_sub(i, k, a[i][k] / a[k][k]);
                    if (a[i][k] != 0) reduced = false;
                }
            for (int j = k + 1; j < g; ++j)
                if (a[k][j] != 0) {
                    col_sub(j, k, a[k][j] / a[k][k]);
                    if (a[k][j] != 0) reduced = false;
                }
            if (!reduced) continue;

            // divisibility fix-up: fold a non-multiple into the pivot row
            bool fixed = true;
            for (int i = k + 1; i < g && fixed; ++i)
                for (int j = k + 1; j < g && fixed; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        row_sub(k, i, -1);  // row k += row i
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (a[k][k] < 0) row_negate(k);
    }
    s.d.resize(g);
    for (int k = 0; k < g; ++k) s.d[k] = a[k][k];
    return s;
}

// Q_Lambda = Z^g / (lattice generated by the columns of gens), in Smith
// normal form coordinates, together with its character group.
struct QuotientGroup {
    IMat gens;  // columns are generators, in u-coordinates
    SmithNormalForm snf;
    std::vector<long long> d;
    long long order = 1;
    std::vector<std::vector<long long>> elements;     // reps, 0 <= a_i < d_i
    std::vector<std::vector<long long>> dual_labels;  // same index ranges
    std::vector<Character> dual_chars;

    int genus() const { return static_cast<int>(d.size()); }

    std::vector<long long> reduce(std::span<const long long> alpha) const {
        const int g = genus();
        std::vector<long long> r(g, 0);
        for (int i = 0; i < g; ++i) {
            long long s = 0;
            for (int j = 0; j < g; ++j) s = checked_add(s, checked_mul(snf.U[i][j], alpha[j]));
            r[i] = ((s % d[i]) + d[i]) % d[i];
        }
        return r;
    }

    int element_index(const std::vector<long long>& rep) const {
        long long idx = 0;
        for (int i = 0; i < genus(); ++i) idx = idx * d[i] + rep[i];
        return static_cast<int>(idx);
    }

    // chi with dual label k evaluated at the class with representative a:
    // e(sum_i k_i a_i / d_i).
    cd pairing(const std::vector<long long>& k, const std::vector<long long>& a) const {
        double phase = 0;
        for (int i = 0; i < genus(); ++i)
            phase += static_cast<double>((k[i] * a[i]) % d[i]) / static_cast<double>(d[i]);
        return unit_phase(phase);
    }

    // Is the given torus point a character of Q_Lambda, i.e. trivial on the
    // lattice? Checks integrality against every generator column.
    bool contains_character(const Character& chi, double tol = 1e-9) const {
        const int g = genus();
        for (int j = 0; j < g; ++j) {
            double s = 0;
            for (int i = 0; i < g; ++i) s += chi.coords[i] * static_cast<double>(gens[i][j]);
            if (circle_dist(s, 0.0) > tol) return false;
        }
        return true;
    }

    int dual_index_of(const Character& chi, double tol = 1e-9) const {
        for (size_t k = 0; k < dual_chars.size(); ++k)
            if (dual_chars[k].equals(chi, tol)) return static_cast<int>(k);
        return -1;
    }
};

inline QuotientGroup quotient_group(const IMat& gens, long long enumeration_budget = 1'000'000) {
    QuotientGroup q;
    q.gens = gens;
    q.snf = smith_normal_form(gens);
    q.d = q.snf.d;
    const int g = static_cast<int>(q.d.size());
    for (long long di : q.d) {
        if (di == 0) throw SingularLattice("lattice generators are singular");
        q.order = checked_mul(q.order, di);
    }
    if (q.order > enumeration_budget) throw BudgetExceeded("quotient order " + std::to_string(q.order));

    std::vector<long long> digits(g, 0);
    for (long long c = 0; c < q.order; ++c) {
        q.elements.push_back(digits);
        q.dual_labels.push_back(digits);
        for (int i = g - 1; i >= 0; --i) {
            if (++digits[i] < q.d[i]) break;
            digits[i] = 0;
        }
    }
    // Dual label k corresponds to torus coordinates U^T (k_i / d_i).
    for (const auto& k : q.dual_labels) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(g);
        for (int j = 0; j < g; ++j) {
            double s = 0;
            for (int i = 0; i < g; ++i)
                s += static_cast<double>(q.snf.U[i][j]) * static_cast<double>(k[i]) / static_cast<double>(q.d[i]);
            c[j] = s;
        }
        q.dual_chars.emplace_back(std::move(c));
    }
    return q;
}

// Generators of the kernel of Z^g -> Z/k, alpha |-> sum n_i alpha_i mod k.
// Columns of the result span {alpha : chi(alpha) = 1} with index k/gcd.
inline IMat kernel_lattice(const std::vector<long long>& nums, long long k) {
    const int g = static_cast<int>(nums.size());
    if (k <= 0) throw SingularLattice("modulus must be positive");
    std::vector<long long> r = nums;
    IMat v = identity_mat(g);
    auto col_sub = [&](int j, int t, long long qq) {
        r[j] = checked_sub(r[j], checked_mul(qq, r[t]));
        for (int i = 0; i < g; ++i) v[i][j] = checked_sub(v[i][j], checked_mul(qq, v[i][t]));
    };
    auto col_swap = [&](int j, int t) {
        std::swap(r[j], r[t]);
        for (int i = 0; i < g; ++i) std::swap(v[i][j], v[i][t]);
    };
    for (;;) {
        int p = -1;
        for (int j = 0; j < g; ++j)
            if (r[j] != 0 && (p < 0 || std::llabs(r[j]) < std::llabs(r[p]))) p = j;
        if (p < 0) break;
        if (p != 0) col_swap(0, p);
        bool done = true;
        for (int j = 1; j < g; ++j)
            if (r[j] != 0) {
                col_sub(j, 0, r[j] / r[0]);
                if (r[j] != 0) done = false;
            }
        if (done) break;
    }
    long long h = std::llabs(r.empty() ? 0 : r[0]);
    long long t = k / std::gcd(h, k);
    for (int i = 0; i < g; ++i) v[i][0] = checked_mul(v[i][0], t);
    return v;
}

// Scaled lattice t * Z^g (in u-coordinates).
inline IMat scaled_lattice(int g, long long t) {
    IMat m = identity_mat(g);
    for (int i = 0; i < g; ++i) m[i][i] = t;
    return m;
}

struct OrthogonalityReport {
    bool ok = true;
    double max_dev = 0;
    int bad_a = -1, bad_b = -1;
};

// (1/|Q|) sum_chi chi(a) conj(chi(b)) = delta_ab, checked for all pairs.
inline OrthogonalityReport orthogonality_check(const QuotientGroup& q, double tol = 1e-10) {
    OrthogonalityReport rep;
    const int N = static_cast<int>(q.elements.size());
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            cd s = 0;
            for (const auto& k : q.dual_labels)
                s += q.pairing(k, q.elements[a]) * std::conj(q.pairing(k, q.elements[b]));
            s /= static_cast<double>(q.order);
            double dev = std::abs(s - (a == b ? cd(1) : cd(0)));
            if (dev > rep.max_dev) {
                rep.max_dev = dev;
                rep.bad_a = a;
                rep.bad_b = b;
            }
        }
    rep.ok = rep.max_dev <= tol;
    return rep;
}

inline long long mod_inverse(long long a, long long n) {
    long long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long long qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw Error("mod_inverse: not coprime");
    return ((t % n) + n) % n;
}

// [a | k] in Q_Lambda: all classes b with k * b = a, solved per SNF
// coordinate. May be empty.
inline std::vector<std::vector<long long>> preimages_under_multiplication(
        const QuotientGroup& q, const std::vector<long long>& a, long long k) {
    const int g = q.genus();
    std::vector<std::vector<long long>> per_coord(g);
    for (int i = 0; i < g; ++i) {
        long long d = q.d[i];
        long long kk = ((k % d) + d) % d;
        long long h = std::gcd(kk, d);
        if (a[i] % h != 0) return {};
        if (kk == 0) {
            for (long long b = 0; b < d; ++b) per_coord[i].push_back(b);
        } else {
            long long dd = d / h;
            long long b0 = ((a[i] / h) % dd) * mod_inverse(kk / h, dd) % dd;
            for (long long s = 0; s < h; ++s) per_coord[i].push_back((b0 + s * dd) % d);
        }
    }
    std::vector<std::vector<long long>> out;
    std::vector<size_t> idx(g, 0);
    for (;;) {
        std::vector<long long> b(g);
        for (int i = 0; i < g; ++i) b[i] = per_coord[i][idx[i]];
        out.push_back(std::move(b));
        int i = g - 1;
        while (i >= 0 && ++idx[i] == per_coord[i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace ihara
