#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "ihara/counting.hpp"
#include "ihara/twist.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

using ordered_json = nlohmann::ordered_json;

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Spectra serialize as [re, im] pairs sorted lexicographically.
inline ordered_json spectrum_to_json(const Spectrum& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : s.values) arr.push_back({v.real(), v.imag()});
    return arr;
}

inline ordered_json character_to_json(const Character& chi) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < chi.dim(); ++i) arr.push_back(chi.coords[i]);
    return arr;
}

inline ordered_json poly_to_json(const ComplexPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : p.c) arr.push_back({v.real(), v.imag()});
    return arr;
}

inline std::string label_to_string(const std::vector<long long>& lab) {
    std::string s;
    for (size_t i = 0; i < lab.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(lab[i]);
    }
    return s;
}

inline std::string sweep_to_csv(const SweepTable& t, int genus) {
    std::string out;
    for (int i = 0; i < genus; ++i) out += "coord_" + std::to_string(i + 1) + ",";
    out += "rho_A,rho_W\n";
    for (const auto& row : t.rows) {
        for (int i = 0; i < genus; ++i) out += format_double(row.coords[i]) + ",";
        out += format_double(row.rho_A) + "," + format_double(row.rho_W) + "\n";
    }
    return out;
}

inline std::string trace_sweep_to_csv(const std::vector<std::pair<Eigen::VectorXd, double>>& rows,
                                      int genus) {
    std::string out;
    for (int i = 0; i < genus; ++i) out += "coord_" + std::to_string(i + 1) + ",";
    out += "K\n";
    for (const auto& [coords, k] : rows) {
        for (int i = 0; i < genus; ++i) out += format_double(coords[i]) + ",";
        out += format_double(k) + "\n";
    }
    return out;
}

inline std::string counts_to_csv(const ClassCounts& c) {
    std::string out = "class,l,N,pi,pi_c\n";
    for (size_t row = 0; row < c.labels.size(); ++row)
        for (int l = 1; l <= c.L; ++l) {
            out += label_to_string(c.labels[row]) + "," + std::to_string(l) + "," +
                   std::to_string(c.N[row][l - 1]) + ",";
            if (c.primes_filled)
                out += std::to_string(c.pi[row][l - 1]) + "," + std::to_string(c.pi_c[row][l - 1]);
            else
                out += ",";
            out += "\n";
        }
    return out;
}

inline ordered_json counts_to_json(const ClassCounts& c) {
    ordered_json j;
    j["mode"] = c.lattice_mode ? "lattice" : "box";
    j["L"] = c.L;
    ordered_json rows = ordered_json::array();
    for (size_t row = 0; row < c.labels.size(); ++row) {
        ordered_json r;
        r["class"] = c.labels[row];
        r["N"] = c.N[row];
        if (c.primes_filled) {
            r["pi"] = c.pi[row];
            r["pi_c"] = c.pi_c[row];
        }
        rows.push_back(std::move(r));
    }
    j["classes"] = std::move(rows);
    return j;
}

}  // namespace ihara
