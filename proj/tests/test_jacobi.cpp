#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vqcopt/jacobi.hpp"
#include "vqcopt/rng.hpp"

using Catch::Approx;
using namespace vqcopt;

namespace {

template <std::size_t N>
double residual(const SymMat<N>& a, const EigenPair<N>& pair) {
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            row += a[i][j] * pair.vector[j];
        }
        row -= pair.value * pair.vector[i];
        total += row * row;
    }
    return std::sqrt(total);
}

template <std::size_t N>
SymMat<N> random_symmetric(Rng& rng, double scale) {
    SymMat<N> a{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            a[i][j] = scale * (2.0 * rng.uniform() - 1.0);
            a[j][i] = a[i][j];
        }
    }
    return a;
}

} // namespace

TEST_CASE("diagonal matrices are read off directly") {
    SymMat<3> d{};
    d[0][0] = 3.0;
    d[1][1] = 1.0;
    d[2][2] = 2.0;
    const auto pair = lowest_eigenpair_sym<3>(d);
    REQUIRE(pair.value == Approx(1.0).margin(1e-14));
    REQUIRE(std::abs(pair.vector[0]) < 1e-12);
    REQUIRE(pair.vector[1] == Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(pair.vector[2]) < 1e-12);
}

TEST_CASE("degenerate lowest eigenvalue keeps a valid eigenvector") {
    SymMat<4> d{};
    d[0][0] = 1.0;
    d[1][1] = -1.0;
    d[2][2] = -1.0;
    d[3][3] = 1.0;
    const auto pair = lowest_eigenpair_sym<4>(d);
    REQUIRE(pair.value == Approx(-1.0).margin(1e-12));
    REQUIRE(residual(d, pair) < 1e-10);
    // The eigenvector must lie in the degenerate span {e1, e2}.
    REQUIRE(std::abs(pair.vector[0]) < 1e-10);
    REQUIRE(std::abs(pair.vector[3]) < 1e-10);
}

TEST_CASE("random matrices match the characteristic-polynomial oracle") {
    Rng rng(404);
    for (int rep = 0; rep < 200; ++rep) {
        const auto a = random_symmetric<4>(rng, rep % 2 == 0 ? 1.0 : 10.0);
        const auto pair = lowest_eigenpair_sym<4>(a);
        const auto roots = test_oracles::sym4_eigenvalues_char_poly(a);
        REQUIRE(pair.value == Approx(roots.front()).margin(1e-9));
        REQUIRE(residual(a, pair) < 1e-10);

        double norm = 0.0;
        double first_nonzero = 0.0;
        for (double v : pair.vector) {
            norm += v * v;
            if (first_nonzero == 0.0 && v != 0.0) {
                first_nonzero = v;
            }
        }
        REQUIRE(norm == Approx(1.0).margin(1e-12));
        REQUIRE(first_nonzero > 0.0);
    }
}

TEST_CASE("3x3 path agrees with its own residual bound") {
    Rng rng(505);
    for (int rep = 0; rep < 100; ++rep) {
        const auto a = random_symmetric<3>(rng, 5.0);
        const auto pair = lowest_eigenpair_sym<3>(a);
        REQUIRE(residual(a, pair) < 1e-10);
    }
}

TEST_CASE("asymmetric input is rejected") {
    SymMat<3> a{};
    a[0][1] = 1.0;
    a[1][0] = 1.0 + 1e-6;
    REQUIRE_THROWS_AS(lowest_eigenpair_sym<3>(a), std::invalid_argument);
}
