#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vqcopt/gate_params.hpp"
#include "vqcopt/statevector.hpp"

using Catch::Approx;
using namespace vqcopt;

TEST_CASE("zero_state prepares |0...0>") {
    const StateVector s1 = zero_state(1);
    REQUIRE(s1.amps.size() == 2);
    REQUIRE(s1.amps[0] == cplx(1.0));
    REQUIRE(s1.amps[1] == cplx(0.0));

    const StateVector s2 = zero_state(2);
    REQUIRE(s2.amps.size() == 4);
    REQUIRE(s2.amps[0] == cplx(1.0));
    for (std::size_t i = 1; i < 4; ++i) {
        REQUIRE(s2.amps[i] == cplx(0.0));
    }

    const StateVector s4 = zero_state(4);
    REQUIRE(s4.amps.size() == 16);
    REQUIRE(norm_sq(s4) == Approx(1.0).margin(1e-15));

    REQUIRE_THROWS_AS(zero_state(0), std::invalid_argument);
    REQUIRE_THROWS_AS(zero_state(21), std::invalid_argument);
}

TEST_CASE("apply_single_qubit identity leaves the state alone") {
    Rng rng(7);
    StateVector s = random_state(3, rng);
    const StateVector before = s;
    for (int q = 0; q < 3; ++q) {
        apply_single_qubit(s, Mat2::identity(), q);
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        REQUIRE(std::abs(s.amps[i] - before.amps[i]) < 1e-15);
    }
}

TEST_CASE("-iX maps |0> to (0, -i)") {
    StateVector s = zero_state(1);
    apply_single_qubit(s, quaternion_to_matrix({0.0, 1.0, 0.0, 0.0}), 0);
    REQUIRE(std::abs(s.amps[0]) < 1e-15);
    REQUIRE(std::abs(s.amps[1] - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("gate application matches the dense tensor-product oracle") {
    Rng rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const Mat2 u = haar_random_u2(rng);
        const int qubit = static_cast<int>(rng.below(3));
        StateVector s = random_state(3, rng);
        const std::vector<cplx> expected =
            test_oracles::mat_vec(test_oracles::embed_single_qubit(u, qubit, 3), s.amps);
        apply_single_qubit(s, u, qubit);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            REQUIRE(std::abs(s.amps[i] - expected[i]) < 1e-12);
        }
    }
}

TEST_CASE("apply_single_qubit rejects bad input") {
    StateVector s = zero_state(2);
    REQUIRE_THROWS_AS(apply_single_qubit(s, Mat2{1.0, 0.0, 0.0, 2.0}, 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(apply_single_qubit(s, Mat2::identity(), 2), std::out_of_range);
    REQUIRE_THROWS_AS(apply_single_qubit(s, Mat2::identity(), -1), std::out_of_range);
}

TEST_CASE("controlled-Z phase structure") {
    StateVector s = zero_state(2);
    apply_cz(s, 0, 1);
    REQUIRE(s.amps[0] == cplx(1.0)); // |00> untouched

    StateVector s11 = zero_state(2);
    s11.amps = {0.0, 0.0, 0.0, 1.0};
    apply_cz(s11, 0, 1);
    REQUIRE(s11.amps[3] == cplx(-1.0));

    Rng rng(3);
    StateVector a = random_state(4, rng);
    StateVector b = a;
    apply_cz(a, 1, 3);
    apply_cz(b, 3, 1);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        REQUIRE(a.amps[i] == b.amps[i]);
    }

    REQUIRE_THROWS_AS(apply_cz(a, 2, 2), std::out_of_range);
}

TEST_CASE("norm is preserved by random gate sequences") {
    Rng rng(23);
    StateVector s = zero_state(4);
    for (int step = 0; step < 200; ++step) {
        if (rng.uniform() < 0.7) {
            apply_single_qubit(s, haar_random_u2(rng), static_cast<int>(rng.below(4)));
        } else {
            const int a = static_cast<int>(rng.below(4));
            const int b = (a + 1 + static_cast<int>(rng.below(3))) % 4;
            apply_cz(s, a, b);
        }
        REQUIRE(std::abs(norm_sq(s) - 1.0) < 1e-10);
    }
}

TEST_CASE("fidelity and trace distance") {
    const StateVector zero = zero_state(1);
    StateVector one = zero_state(1);
    one.amps = {0.0, 1.0};
    StateVector plus = zero_state(1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    plus.amps = {inv_sqrt2, inv_sqrt2};

    REQUIRE(fidelity(zero, zero) == Approx(1.0).margin(1e-15));
    REQUIRE(fidelity(zero, one) == Approx(0.0).margin(1e-15));
    REQUIRE(fidelity(zero, plus) == Approx(0.5).margin(1e-15));

    REQUIRE(trace_distance(zero, zero) == Approx(0.0).margin(1e-15));
    REQUIRE(trace_distance(zero, one) == Approx(1.0).margin(1e-15));
    REQUIRE(trace_distance(zero, plus) == Approx(std::sqrt(0.5)).margin(1e-12));

    StateVector wide = zero_state(2);
    REQUIRE_THROWS_AS(fidelity(zero, wide), std::invalid_argument);
}

TEST_CASE("trace_distance^2 + fidelity = 1 on random pairs") {
    Rng rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        const StateVector a = random_state(3, rng);
        const StateVector b = random_state(3, rng);
        const double t = trace_distance(a, b);
        REQUIRE(t * t + fidelity(a, b) == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("random_state is unit norm, seeded and unbiased") {
    Rng rng(5);
    const StateVector s = random_state(4, rng);
    REQUIRE(std::abs(norm_sq(s) - 1.0) < 1e-12);

    Rng r1(99);
    Rng r2(99);
    const StateVector a = random_state(3, r1);
    const StateVector b = random_state(3, r2);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        REQUIRE(a.amps[i] == b.amps[i]);
    }

    // |a_0|^2 ~ Beta(1, 3) at n = 2: mean 1/4, variance 3/80.
    Rng stat_rng(2024);
    const int draws = 10000;
    double total = 0.0;
    for (int i = 0; i < draws; ++i) {
        total += std::norm(random_state(2, stat_rng).amps[0]);
    }
    const double mean = total / draws;
    const double stderr_bound = 3.0 * std::sqrt(3.0 / 80.0) / std::sqrt(double(draws));
    REQUIRE(std::abs(mean - 0.25) < stderr_bound);
}
