#pragma once

#include <complex>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ihara {

using cd = std::complex<double>;

// e(x) = exp(2*pi*i*x), the standard unit character on R/Z.
inline cd unit_phase(double x) {
    const double t = 2.0 * M_PI * x;
    return cd(std::cos(t), std::sin(t));
}

// Reduce into [0,1), snapping values within eps of 1 back to 0 so that
// coordinates obtained from noisy arithmetic stay canonical.
inline double mod1(double x, double eps = 1e-12) {
    double r = x - std::floor(x);
    if (r >= 1.0 - eps) r = 0.0;
    if (std::abs(r) < eps) r = 0.0;
    return r;
}

// Distance on the circle R/Z.
inline double circle_dist(double a, double b) {
    double d = std::abs(mod1(a) - mod1(b));
    return std::min(d, 1.0 - d);
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError: " + m) {}
};
struct EmptyGraph : Error {
    explicit EmptyGraph(const std::string& m) : Error("EmptyGraph: " + m) {}
};
struct DisconnectedGraph : Error {
    explicit DisconnectedGraph(const std::string& m) : Error("DisconnectedGraph: " + m) {}
};
struct GenusZero : Error {
    explicit GenusZero(const std::string& m) : Error("GenusZero: " + m) {}
};
struct NotClosed : Error {
    explicit NotClosed(const std::string& m) : Error("NotClosed: " + m) {}
};
struct LinearSolveFailure : Error {
    explicit LinearSolveFailure(const std::string& m) : Error("LinearSolveFailure: " + m) {}
};
struct EigenSolverFailure : Error {
    explicit EigenSolverFailure(const std::string& m) : Error("EigenSolverFailure: " + m) {}
};
struct SingularLattice : Error {
    explicit SingularLattice(const std::string& m) : Error("SingularLattice: " + m) {}
};
struct IntegerOverflow : Error {
    explicit IntegerOverflow(const std::string& m) : Error("IntegerOverflow: " + m) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& m) : Error("BudgetExceeded: " + m) {}
};
struct RoundingFailure : Error {
    explicit RoundingFailure(const std::string& m) : Error("RoundingFailure: " + m) {}
};
struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& m) : Error("NonIntegerResult: " + m) {}
};
struct NotRegular : Error {
    explicit NotRegular(const std::string& m) : Error("NotRegular: " + m) {}
};
struct TailBoundViolated : Error {
    explicit TailBoundViolated(const std::string& m) : Error("TailBoundViolated: " + m) {}
};

// Global work budget (circuit enumeration nodes, sweep/DFT grid points).
// IHARA_BUDGET overrides the default.
inline long long default_budget() {
    if (const char* s = std::getenv("IHARA_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000LL;
}

// Checked 64-bit arithmetic used by the exact integer paths.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("add");
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("sub");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("mul");
    return r;
}

inline long long round_to_integer(double x, double guard, const char* what) {
    double r = std::round(x);
    if (std::abs(x - r) > guard)
        throw RoundingFailure(std::string(what) + ": residue " + std::to_string(std::abs(x - r)));
    return static_cast<long long>(r);
}

}  // namespace ihara
