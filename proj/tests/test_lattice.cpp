#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ihara/lattice.hpp"

using namespace ihara;

static IMat diag_times(const std::vector<long long>& d) {
    IMat m = identity_mat(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
    return m;
}

TEST_CASE("smith normal form") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> vd(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        int g = 1 + static_cast<int>(trial % 4);
        IMat m(g, std::vector<long long>(g));
        for (auto& row : m)
            for (auto& v : row) v = vd(rng);
        SmithNormalForm s = smith_normal_form(m);
        CHECK(std::llabs(integer_determinant(s.U)) == 1);
        CHECK(std::llabs(integer_determinant(s.V)) == 1);
        IMat prod = mat_mul(mat_mul(s.U, m), s.V);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) CHECK(prod[i][j] == (i == j ? s.d[i] : 0));
        long long dp = 1;
        for (int i = 0; i < g; ++i) {
            CHECK(s.d[i] >= 0);
            if (i + 1 < g && s.d[i + 1] != 0) CHECK((s.d[i] == 0 || s.d[i + 1] % s.d[i] == 0));
            dp *= s.d[i];
        }
        CHECK(std::llabs(dp) == std::llabs(integer_determinant(m)));
    }
}

TEST_CASE("complexity and torus volume") {
    CHECK(complexity(complete_graph(4)) == 16);
    CHECK(complexity(Graph(3, {{0, 1}, {1, 2}})) == 1);
    CHECK(complexity(cycle_graph(3)) == 3);
    CHECK(torus_volume(complete_graph(4)) == Catch::Approx(0.25));
    // loops do not change the count
    CHECK(complexity(Graph(3, {{0, 1}, {1, 2}, {2, 2}})) == 1);
    // multi-edge doubles it
    CHECK(complexity(Graph(2, {{0, 1}, {0, 1}})) == 2);
}

TEST_CASE("scaled quotient") {
    QuotientGroup q = quotient_group(scaled_lattice(3, 3));
    CHECK(q.order == 27);
    CHECK(q.d == std::vector<long long>{3, 3, 3});
    CHECK(q.elements.size() == 27);
    CHECK(q.dual_chars.size() == 27);
    CHECK_THROWS_AS(quotient_group(IMat{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), SingularLattice);

    const long long big = 1LL << 62;
    CHECK_THROWS_AS(quotient_group(IMat{{big, 1}, {1, big}}), IntegerOverflow);
    CHECK_THROWS_AS(quotient_group(scaled_lattice(2, 2000)), BudgetExceeded);
}

TEST_CASE("kernel lattices from characters") {
    // order-3 kernel of (1,1,1)/3 on Z^3
    IMat lam = kernel_lattice({1, 1, 1}, 3);
    QuotientGroup q = quotient_group(lam);
    CHECK(q.order == 3);
    for (int j = 0; j < 3; ++j) {
        long long s = 0;
        for (int i = 0; i < 3; ++i) s += lam[i][j];
        CHECK(s % 3 == 0);
    }

    // order-6 kernel of (1,1,1)/6: cyclic
    QuotientGroup q6 = quotient_group(kernel_lattice({1, 1, 1}, 6));
    CHECK(q6.order == 6);
    long long maxd = 0;
    for (long long d : q6.d) maxd = std::max(maxd, d);
    CHECK(maxd == 6);  // cyclic of order 6

    // trivial character kernel is everything
    CHECK(quotient_group(kernel_lattice({0, 0, 0}, 5)).order == 1);
}

TEST_CASE("orthogonality of dual characters") {
    for (const IMat& lat : {scaled_lattice(2, 4), kernel_lattice({1, 1, 1}, 3),
                            kernel_lattice({1, 1, 1}, 6), IMat{{2, 1}, {0, 3}}}) {
        QuotientGroup q = quotient_group(lat);
        REQUIRE(q.order <= 64);
        OrthogonalityReport rep = orthogonality_check(q);
        CHECK(rep.ok);
        CHECK(rep.max_dev <= 1e-10);

        // closed under negation
        for (const auto& chi : q.dual_chars) {
            Character neg(-chi.coords);
            CHECK(q.dual_index_of(neg) >= 0);
        }
        // nondegenerate pairing: only the zero class pairs trivially with all
        for (size_t a = 1; a < q.elements.size(); ++a) {
            bool separated = false;
            for (const auto& k : q.dual_labels)
                if (std::abs(q.pairing(k, q.elements[a]) - cd(1)) > 1e-9) separated = true;
            CHECK(separated);
        }
    }
}

TEST_CASE("preimages under multiplication") {
    // cyclic of order 3 embedded via (1,1,1)/3: [a|k] = {b : 3 | a - kb}
    QuotientGroup q = quotient_group(kernel_lattice({1, 1, 1}, 3));
    REQUIRE(q.d.back() == 3);
    auto lab = [&](long long x) {
        std::vector<long long> v(q.genus(), 0);
        v.back() = x;
        return v;
    };
    auto sols = preimages_under_multiplication(q, lab(0), 3);
    CHECK(sols.size() == 3);  // 3b = 0 has every b as a solution
    sols = preimages_under_multiplication(q, lab(1), 3);
    CHECK(sols.empty());
    sols = preimages_under_multiplication(q, lab(1), 2);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].back() == 2);  // 2*2 = 4 = 1 mod 3

    QuotientGroup q6 = quotient_group(kernel_lattice({1, 1, 1}, 6));
    auto lab6 = [&](long long x) {
        std::vector<long long> v(q6.genus(), 0);
        v.back() = x;
        return v;
    };
    CHECK(preimages_under_multiplication(q6, lab6(1), 3).empty());  // 3b = 1 mod 6
    auto s2 = preimages_under_multiplication(q6, lab6(2), 4);       // 4b = 2 mod 6: b = 2, 5
    CHECK(s2.size() == 2);
}

TEST_CASE("uniform grid orthogonality on the torus") {
    // fixed distinct classes: the grid average of chi(alpha) conj(chi(beta))
    // vanishes once the grid resolves the coordinate difference
    for (int g = 1; g <= 3; ++g) {
        std::vector<long long> alpha(g, 0), beta(g, 0);
        alpha[0] = 2;
        if (g > 1) alpha[1] = -3;
        beta[0] = -1;
        for (int n : {5, 9, 16}) {
            cd acc = 0;
            std::vector<int> digits(g, 0);
            long long total = 1;
            for (int i = 0; i < g; ++i) total *= n;
            for (long long c = 0; c < total; ++c) {
                Eigen::VectorXd coords(g);
                for (int i = 0; i < g; ++i) coords[i] = static_cast<double>(digits[i]) / n;
                Character chi(coords);
                acc += char_value(chi, alpha) * std::conj(char_value(chi, beta));
                for (int i = g - 1; i >= 0; --i) {
                    if (++digits[i] < n) break;
                    digits[i] = 0;
                }
            }
            CHECK(std::abs(acc) / static_cast<double>(total) < 1e-12);
        }
    }
}
