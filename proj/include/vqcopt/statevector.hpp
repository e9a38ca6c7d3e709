#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vqcopt/matrix2.hpp"
#include "vqcopt/rng.hpp"

namespace vqcopt {

// Pure n-qubit state as 2^n amplitudes. Qubit 0 is the top wire; basis
// index bit k counted from the most significant end belongs to qubit k.
struct StateVector {
    int n_qubits = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }
};

inline std::size_t qubit_bit(const StateVector& s, int qubit) {
    return std::size_t{1} << (s.n_qubits - 1 - qubit);
}

inline void check_qubit_index(const StateVector& s, int qubit) {
    if (qubit < 0 || qubit >= s.n_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
}

inline StateVector zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw std::invalid_argument("zero_state: qubit count must be in [1, 20]");
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::size_t{1} << n_qubits, cplx{});
    s.amps[0] = 1.0;
    return s;
}

inline double norm_sq(const StateVector& s) {
    double total = 0.0;
    for (const cplx& a : s.amps) {
        total += std::norm(a);
    }
    return total;
}

// <a|b>
inline cplx inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits) {
        throw std::invalid_argument("inner: qubit counts differ");
    }
    cplx total{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a.amps[i]) * b.amps[i];
    }
    return total;
}

// In-place I (x) ... (x) U (x) ... (x) I without materializing the big matrix.
inline void apply_single_qubit(StateVector& s, const Mat2& gate, int qubit) {
    check_qubit_index(s, qubit);
    if (!is_unitary(gate)) {
        throw std::invalid_argument("apply_single_qubit: gate is not unitary");
    }
    const std::size_t stride = qubit_bit(s, qubit);
    const std::size_t dim = s.dim();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx a0 = s.amps[i];
            const cplx a1 = s.amps[i + stride];
            s.amps[i] = gate.a * a0 + gate.b * a1;
            s.amps[i + stride] = gate.c * a0 + gate.d * a1;
        }
    }
}

// Controlled-Z; symmetric in its arguments.
inline void apply_cz(StateVector& s, int qubit_a, int qubit_b) {
    check_qubit_index(s, qubit_a);
    check_qubit_index(s, qubit_b);
    if (qubit_a == qubit_b) {
        throw std::out_of_range("apply_cz: qubits must differ");
    }
    const std::size_t mask = qubit_bit(s, qubit_a) | qubit_bit(s, qubit_b);
    const std::size_t dim = s.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            s.amps[i] = -s.amps[i];
        }
    }
}

// F = |<a|b>|^2
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner(a, b));
}

// T = sqrt(1 - F), clamped against rounding.
inline double trace_distance(const StateVector& a, const StateVector& b) {
    const double f = fidelity(a, b);
    return std::sqrt(std::clamp(1.0 - f, 0.0, 1.0));
}

// Unit vector whose pre-normalization real and imaginary parts are
// independent standard normals: the induced distribution is uniform on
// the unit sphere of the Hilbert space.
inline StateVector random_state(int n_qubits, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw std::invalid_argument("random_state: qubit count must be in [1, 20]");
    }
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.resize(std::size_t{1} << n_qubits);
    double total = 0.0;
    do {
        for (cplx& a : s.amps) {
            const double re = rng.normal();
            const double im = rng.normal();
            a = cplx(re, im);
            total += std::norm(a);
        }
    } while (total == 0.0);
    const double scale = 1.0 / std::sqrt(total);
    for (cplx& a : s.amps) {
        a *= scale;
    }
    return s;
}

} // namespace vqcopt
