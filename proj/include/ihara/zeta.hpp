#pragma once

#include <vector>

#include "ihara/counting.hpp"

namespace ihara {

// Polynomial with complex coefficients, ascending degree.
struct ComplexPoly {
    std::vector<cd> c;

    ComplexPoly() : c{cd(1)} {}
    explicit ComplexPoly(std::vector<cd> coeffs) : c(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cd at(int i) const { return i < static_cast<int>(c.size()) ? c[i] : cd(0); }
    cd eval(cd u) const {
        cd acc = 0;
        for (int i = degree(); i >= 0; --i) acc = acc * u + c[i];
        return acc;
    }
    double max_abs() const {
        double m = 0;
        for (const auto& v : c) m = std::max(m, std::abs(v));
        return m;
    }
    void trim(double rel = 1e-12) {
        const double cut = rel * std::max(1.0, max_abs());
        while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
    }
};

inline ComplexPoly poly_mul(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cd> out(a.c.size() + b.c.size() - 1, cd(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return ComplexPoly(std::move(out));
}

// Exact division; the remainder must vanish to solver precision.
inline ComplexPoly poly_divide_exact(const ComplexPoly& num, const ComplexPoly& den) {
    std::vector<cd> r = num.c;
    const int dn = static_cast<int>(den.c.size()) - 1;
    if (dn < 0 || std::abs(den.c.back()) == 0.0) throw Error("division by zero polynomial");
    const int dq = static_cast<int>(r.size()) - 1 - dn;
    if (dq < 0) throw Error("division underflow");
    std::vector<cd> q(dq + 1, cd(0));
    for (int k = dq; k >= 0; --k) {
        cd f = r[k + dn] / den.c.back();
        q[k] = f;
        for (int j = 0; j <= dn; ++j) r[k + j] -= f * den.c[j];
    }
    double rem = 0;
    for (const auto& v : r) rem = std::max(rem, std::abs(v));
    if (rem > 1e-8 * std::max(1.0, num.max_abs())) throw Error("nonzero polynomial remainder");
    return ComplexPoly(std::move(q));
}

// prod (1 - lambda u) over a spectrum.
inline ComplexPoly poly_from_spectrum(const Spectrum& s) {
    std::vector<cd> c{cd(1)};
    for (const auto& lam : s.values) {
        c.push_back(cd(0));
        for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) c[i] -= lam * c[i - 1];
    }
    return ComplexPoly(std::move(c));
}

namespace detail {
inline bool is_zero_form(const OneForm& w) {
    for (int i = 0; i < w.coeffs.size(); ++i)
        if (w.coeffs[i] != 0.0) return false;
    return true;
}
inline void snap_integer_coeffs(ComplexPoly& p) {
    for (auto& v : p.c) {
        if (std::abs(v.imag()) > 1e-6) throw RoundingFailure("expected integer coefficient");
        v = cd(static_cast<double>(round_to_integer(v.real(), 1e-6, "zeta coefficient")), 0.0);
    }
}
}  // namespace detail

// 1/L(u, chi_omega) = det(I - u W_omega), expanded from the spectrum.
// Degree 2m; untwisted coefficients are snapped to their integer values.
inline ComplexPoly lfunc_edge(const Graph& g, const OneForm& omega) {
    ComplexPoly p = poly_from_spectrum(spectrum(edge_adjacency_twisted(g, omega)));
    if (detail::is_zero_form(omega)) detail::snap_integer_coeffs(p);
    p.trim();
    return p;
}

// 1/L(u, chi_omega) = (1-u^2)^{g-1} det(I - A_omega u + Q u^2). The quadratic
// pencil is linearized to the companion block [[A, -Q], [I, 0]] so the same
// eigensolver route applies.
inline ComplexPoly lfunc_ihara(const Graph& g, const OneForm& omega) {
    const int n = g.vertex_count();
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    comp.topLeftCorner(n, n) = adjacency_twisted(g, omega);
    comp.topRightCorner(n, n) = -degree_minus_one_diagonal(g).cast<cd>();
    comp.bottomLeftCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
    ComplexPoly p = poly_from_spectrum(spectrum(comp));
    ComplexPoly one_minus_u2(std::vector<cd>{cd(1), cd(0), cd(-1)});
    int e = g.genus() - 1;
    for (; e > 0; --e) p = poly_mul(p, one_minus_u2);
    for (; e < 0; ++e) p = poly_divide_exact(p, one_minus_u2);
    if (detail::is_zero_form(omega)) detail::snap_integer_coeffs(p);
    p.trim();
    return p;
}

inline double poly_max_deviation(const ComplexPoly& a, const ComplexPoly& b) {
    double dev = 0;
    int top = std::max(a.degree(), b.degree());
    for (int i = 0; i <= top; ++i) dev = std::max(dev, std::abs(a.at(i) - b.at(i)));
    return dev;
}

// Coefficients of log L(u, chi_omega) = sum c_l u^l up to the truncation.
struct LogSeries {
    int L = 0;
    std::vector<cd> c;  // c[l-1]
};

// Newton's recurrence on the reciprocal polynomial: with p = 1/L and
// P_l the power sums of its roots' inverses, c_l = P_l / l.
inline LogSeries log_series_of_poly(const ComplexPoly& p, int L) {
    if (std::abs(p.at(0) - cd(1)) > 1e-9) throw Error("reciprocal polynomial must have constant term 1");
    LogSeries s;
    s.L = L;
    std::vector<cd> power_sum(L + 1, cd(0));
    for (int l = 1; l <= L; ++l) {
        cd acc = static_cast<double>(l) * p.at(l);
        for (int j = 1; j < l; ++j) acc += power_sum[j] * p.at(l - j);
        power_sum[l] = -acc;
        s.c.push_back(power_sum[l] / static_cast<double>(l));
    }
    return s;
}

inline LogSeries log_series(const Graph& g, const OneForm& omega, int L) {
    return log_series_of_poly(lfunc_edge(g, omega), L);
}

struct TransformReport {
    double dev_char_expansion = 0;   // log L from the class zeta logs
    double dev_char_inversion = 0;   // class zeta logs from the L logs
    double dev_zeta_product = 0;     // log z as the sum over classes
    double dev_trivial_average = 0;  // averaged identity at the zero class
    double max_dev() const {
        return std::max(std::max(dev_char_expansion, dev_char_inversion),
                        std::max(dev_zeta_product, dev_trivial_average));
    }
    bool pass(double tol = 1e-7) const { return max_dev() <= tol; }
};

// Identities between log L(u, chi) over the dual group and the per-class
// zeta logs, whose coefficients are N(class, l) / l.
inline TransformReport verify_transforms(const Graph& g, const HomologyData& h,
                                         const QuotientGroup& q, int L,
                                         long long budget = default_budget()) {
    if (q.order > budget) throw BudgetExceeded("quotient order " + std::to_string(q.order));
    ClassCounts counts = counts_mod_lattice(g, h, q, L);
    const auto nq = q.elements.size();
    std::vector<LogSeries> logL;
    for (const auto& chi : q.dual_chars)
        logL.push_back(log_series(g, form_from_character(g, h.tree, chi), L));

    TransformReport rep;
    for (size_t k = 0; k < nq; ++k)
        for (int l = 1; l <= L; ++l) {
            cd rhs = 0;
            for (size_t a = 0; a < nq; ++a)
                rhs += q.pairing(q.dual_labels[k], q.elements[a]) *
                       (static_cast<double>(counts.N[static_cast<int>(a)][l - 1]) / l);
            rep.dev_char_expansion = std::max(rep.dev_char_expansion, std::abs(logL[k].c[l - 1] - rhs));
        }
    for (size_t a = 0; a < nq; ++a)
        for (int l = 1; l <= L; ++l) {
            cd rhs = 0;
            for (size_t k = 0; k < nq; ++k)
                rhs += std::conj(q.pairing(q.dual_labels[k], q.elements[a])) * logL[k].c[l - 1];
            rhs /= static_cast<double>(q.order);
            cd lhs = static_cast<double>(counts.N[static_cast<int>(a)][l - 1]) / static_cast<double>(l);
            rep.dev_char_inversion = std::max(rep.dev_char_inversion, std::abs(lhs - rhs));
        }
    for (int l = 1; l <= L; ++l) {
        cd rhs = 0;
        for (size_t a = 0; a < nq; ++a)
            rhs += static_cast<double>(counts.N[static_cast<int>(a)][l - 1]) / static_cast<double>(l);
        rep.dev_zeta_product = std::max(rep.dev_zeta_product, std::abs(logL[0].c[l - 1] - rhs));
    }
    for (int l = 1; l <= L; ++l) {
        cd rhs = 0;
        for (size_t k = 0; k < nq; ++k) rhs += logL[k].c[l - 1];
        rhs /= static_cast<double>(q.order);
        cd lhs = static_cast<double>(counts.N[0][l - 1]) / static_cast<double>(l);
        rep.dev_trivial_average = std::max(rep.dev_trivial_average, std::abs(lhs - rhs));
    }
    return rep;
}

}  // namespace ihara
