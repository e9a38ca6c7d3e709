#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vqcopt/hamiltonians.hpp"
#include "vqcopt/pauli.hpp"

using Catch::Approx;
using namespace vqcopt;

TEST_CASE("single-qubit expectations on |0>") {
    const StateVector s = zero_state(1);
    REQUIRE(expectation(s, Observable::pauli_sum({{1.0, "Z"}})) == Approx(1.0).margin(1e-15));
    REQUIRE(expectation(s, Observable::pauli_sum({{1.0, "X"}})) == Approx(0.0).margin(1e-15));
    REQUIRE(expectation(s, Observable::pauli_sum({{1.0, "Y"}})) == Approx(0.0).margin(1e-15));
}

TEST_CASE("expectation matches the dense matrix oracle on H2") {
    const Observable h2 = h2_hamiltonian();
    const test_oracles::CMat dense = test_oracles::observable_dense(h2);
    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const StateVector s = random_state(4, rng);
        const double direct = expectation(s, h2);
        const double oracle = test_oracles::quadratic_form(s.amps, dense);
        REQUIRE(direct == Approx(oracle).margin(1e-10));
    }
}

TEST_CASE("expectation matches the dense oracle for mixed random strings") {
    Rng rng(41);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (int rep = 0; rep < 15; ++rep) {
        std::vector<PauliTerm> terms;
        for (int t = 0; t < 3; ++t) {
            std::string word;
            for (int q = 0; q < 3; ++q) {
                word.push_back(letters[rng.below(4)]);
            }
            terms.push_back({2.0 * rng.uniform() - 1.0, word});
        }
        const Observable obs = Observable::pauli_sum(terms);
        const test_oracles::CMat dense = test_oracles::observable_dense(obs);
        const StateVector s = random_state(3, rng);
        REQUIRE(expectation(s, obs) ==
                Approx(test_oracles::quadratic_form(s.amps, dense)).margin(1e-12));
    }
}

TEST_CASE("expectation is linear in the observable") {
    Rng rng(53);
    const StateVector s = random_state(3, rng);
    const PauliTerm p{0.7, "XZY"};
    const PauliTerm q{-1.3, "ZZI"};
    const double combined = expectation(s, Observable::pauli_sum({p, q}));
    const double split = expectation(s, Observable::pauli_sum({p})) +
                         expectation(s, Observable::pauli_sum({q}));
    REQUIRE(combined == Approx(split).margin(1e-12));
}

TEST_CASE("observable validation") {
    REQUIRE_THROWS_AS(Observable::pauli_sum({}), std::invalid_argument);
    REQUIRE_THROWS_AS(Observable::pauli_sum({{1.0, "XQ"}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Observable::pauli_sum({{1.0, "XX"}, {1.0, "X"}}), std::invalid_argument);

    const StateVector s = zero_state(2);
    REQUIRE_THROWS_AS(expectation(s, Observable::pauli_sum({{1.0, "Z"}})),
                      std::invalid_argument);
}

TEST_CASE("degenerate shot estimates are exact") {
    const StateVector s = zero_state(1);
    Rng rng(1);
    // <Z> = +1: the binomial is degenerate at every shot count.
    const Observable z = Observable::pauli_sum({{1.0, "Z"}});
    for (long shots : {1L, 10L, 8192L}) {
        REQUIRE(estimate_with_shots(s, z, shots, rng) == 1.0);
    }
    // Identity terms bypass sampling entirely.
    const Observable id = Observable::pauli_sum({{-0.09963387941370971, "I"}});
    REQUIRE(estimate_with_shots(s, id, 16, rng) == -0.09963387941370971);

    REQUIRE_THROWS_AS(estimate_with_shots(s, z, 0, rng), std::invalid_argument);
}

TEST_CASE("shot estimator is unbiased") {
    // Fixed term with a nontrivial expectation: <Z> on cos(0.4)|0> + sin(0.4)|1>.
    StateVector s = zero_state(1);
    s.amps = {std::cos(0.4), std::sin(0.4)};
    const Observable z = Observable::pauli_sum({{1.0, "Z"}});
    const double exact = expectation(s, z);
    const long shots = 256;
    const int repeats = 1000;
    Rng rng(777);
    double total = 0.0;
    for (int i = 0; i < repeats; ++i) {
        total += estimate_with_shots(s, z, shots, rng);
    }
    const double mean = total / repeats;
    const double sigma = std::sqrt((1.0 - exact * exact) / double(shots));
    REQUIRE(std::abs(mean - exact) < 4.0 * sigma / std::sqrt(double(repeats)));
}

TEST_CASE("projector observables sample the fidelity") {
    Rng rng(4);
    const StateVector target = random_state(2, rng);
    const Observable proj = Observable::projector(target);

    REQUIRE(expectation(target, proj) == Approx(-1.0).margin(1e-12));
    const double est = estimate_with_shots(target, proj, 4096, rng);
    REQUIRE(est == Approx(-1.0).margin(1e-12)); // F = 1 is degenerate too

    const StateVector other = random_state(2, rng);
    const double sampled = estimate_with_shots(other, proj, 4096, rng);
    REQUIRE(sampled <= 0.0);
    REQUIRE(sampled >= -1.0);
}
