#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vqcopt/rng.hpp"
#include "vqcopt/statevector.hpp"

namespace vqcopt {

// One weighted Pauli string; letters[k] acts on qubit k.
struct PauliTerm {
    double coeff = 0.0;
    std::string letters;
};

namespace detail {

// Bit masks that let a Pauli string act on basis indices directly:
// P|j> = phase(j) |j ^ flip_mask> with
// phase(j) = i^{y_count} * (-1)^{popcount(j & phase_mask)}.
struct CompiledTerm {
    double coeff = 0.0;
    std::uint64_t flip_mask = 0;  // X and Y positions
    std::uint64_t phase_mask = 0; // Y and Z positions
    int y_count = 0;
    bool is_identity = true;
};

inline CompiledTerm compile_term(const PauliTerm& term, int n_qubits) {
    if (static_cast<int>(term.letters.size()) != n_qubits) {
        throw std::invalid_argument("PauliTerm: letters length does not match qubit count");
    }
    CompiledTerm out;
    out.coeff = term.coeff;
    for (int k = 0; k < n_qubits; ++k) {
        const std::uint64_t bit = std::uint64_t{1} << (n_qubits - 1 - k);
        switch (term.letters[static_cast<std::size_t>(k)]) {
        case 'I':
            break;
        case 'X':
            out.flip_mask |= bit;
            out.is_identity = false;
            break;
        case 'Y':
            out.flip_mask |= bit;
            out.phase_mask |= bit;
            ++out.y_count;
            out.is_identity = false;
            break;
        case 'Z':
            out.phase_mask |= bit;
            out.is_identity = false;
            break;
        default:
            throw std::invalid_argument("PauliTerm: letters must be drawn from I, X, Y, Z");
        }
    }
    return out;
}

// <psi|P|psi>; real for any Pauli string, the imaginary residue cancels.
inline double term_expectation(const StateVector& s, const CompiledTerm& t) {
    static constexpr cplx i_powers[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const cplx base = i_powers[t.y_count & 3];
    cplx total{};
    const std::size_t dim = s.dim();
    for (std::size_t j = 0; j < dim; ++j) {
        const bool odd = std::popcount(j & t.phase_mask) & 1;
        const cplx contrib = std::conj(s.amps[j ^ t.flip_mask]) * s.amps[j];
        total += odd ? -contrib : contrib;
    }
    return (base * total).real();
}

} // namespace detail

// Hermitian cost operator: either a weighted sum of Pauli strings or the
// rank-1 projector M = -|target><target| used for state overlap tasks.
class Observable {
  public:
    enum class Kind { PauliSum, Projector };

    static Observable pauli_sum(std::vector<PauliTerm> terms) {
        if (terms.empty()) {
            throw std::invalid_argument("Observable: empty Pauli sum");
        }
        Observable obs;
        obs.kind_ = Kind::PauliSum;
        obs.n_qubits_ = static_cast<int>(terms[0].letters.size());
        obs.compiled_.reserve(terms.size());
        for (const PauliTerm& t : terms) {
            obs.compiled_.push_back(detail::compile_term(t, obs.n_qubits_));
        }
        obs.terms_ = std::move(terms);
        return obs;
    }

    static Observable projector(StateVector target) {
        if (std::abs(norm_sq(target) - 1.0) > 1e-10) {
            throw std::invalid_argument("Observable: projector target must be unit norm");
        }
        Observable obs;
        obs.kind_ = Kind::Projector;
        obs.n_qubits_ = target.n_qubits;
        obs.target_ = std::move(target);
        return obs;
    }

    Kind kind() const { return kind_; }
    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    const StateVector& target() const { return target_; }
    const std::vector<detail::CompiledTerm>& compiled_terms() const { return compiled_; }

  private:
    Observable() = default;

    Kind kind_ = Kind::PauliSum;
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
    std::vector<detail::CompiledTerm> compiled_;
    StateVector target_;
};

// Tr(M rho) for the pure state |psi><psi|.
inline double expectation(const StateVector& s, const Observable& obs) {
    if (s.n_qubits != obs.n_qubits()) {
        throw std::invalid_argument("expectation: observable and state widths differ");
    }
    if (obs.kind() == Observable::Kind::Projector) {
        return -fidelity(obs.target(), s);
    }
    double total = 0.0;
    for (const detail::CompiledTerm& t : obs.compiled_terms()) {
        total += t.coeff * detail::term_expectation(s, t);
    }
    return total;
}

// Shot-noise model: each non-identity term with exact expectation e in
// [-1, 1] is estimated from Binomial(shots, (1+e)/2) outcomes; identity
// terms contribute their coefficient exactly. A projector observable is
// sampled as a single Bernoulli term with success probability F.
inline double estimate_with_shots(const StateVector& s, const Observable& obs,
                                  long shots_per_term, Rng& rng) {
    if (shots_per_term < 1) {
        throw std::invalid_argument("estimate_with_shots: shot count must be >= 1");
    }
    if (s.n_qubits != obs.n_qubits()) {
        throw std::invalid_argument("estimate_with_shots: observable and state widths differ");
    }
    const double n = static_cast<double>(shots_per_term);
    if (obs.kind() == Observable::Kind::Projector) {
        const double f = std::clamp(fidelity(obs.target(), s), 0.0, 1.0);
        return -static_cast<double>(rng.binomial(shots_per_term, f)) / n;
    }
    double total = 0.0;
    for (const detail::CompiledTerm& t : obs.compiled_terms()) {
        if (t.is_identity) {
            total += t.coeff;
            continue;
        }
        const double e = std::clamp(detail::term_expectation(s, t), -1.0, 1.0);
        const long hits = rng.binomial(shots_per_term, 0.5 * (1.0 + e));
        total += t.coeff * (2.0 * static_cast<double>(hits) / n - 1.0);
    }
    return total;
}

} // namespace vqcopt
