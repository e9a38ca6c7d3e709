#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "vqcopt/gate_params.hpp"
#include "vqcopt/statevector.hpp"

namespace vqcopt {

// Brick pattern of controlled-Z pairs applied after each layer of
// single-qubit gates: (0,1), (2,3), ... then (1,2), (3,4), ...
inline std::vector<std::pair<int, int>> brick_entangler(int n_qubits) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a + 1 < n_qubits; a += 2) {
        pairs.emplace_back(a, a + 1);
    }
    for (int a = 1; a + 1 < n_qubits; a += 2) {
        pairs.emplace_back(a, a + 1);
    }
    return pairs;
}

// Layered ansatz: each layer is one single-qubit gate slot per wire
// followed by the brick entangler. Slots are stored layer-major, top
// wire first, matching the order in which they are optimized.
struct AnsatzCircuit {
    int n_qubits = 0;
    int layers = 0;
    std::vector<GateParam> slots;
    std::vector<std::pair<int, int>> entangler;

    int slot_count() const { return n_qubits * layers; }
};

inline AnsatzCircuit make_ansatz(int n_qubits, int layers) {
    if (n_qubits < 1 || layers < 1) {
        throw std::invalid_argument("make_ansatz: need at least one qubit and one layer");
    }
    AnsatzCircuit c;
    c.n_qubits = n_qubits;
    c.layers = layers;
    c.slots.assign(static_cast<std::size_t>(n_qubits) * layers,
                   GateParam{FixedAngleGate{0.0, PauliAxis::Z}});
    c.entangler = brick_entangler(n_qubits);
    return c;
}

inline void prepare_state(const AnsatzCircuit& c, StateVector& out) {
    out.n_qubits = c.n_qubits;
    out.amps.assign(std::size_t{1} << c.n_qubits, cplx{});
    out.amps[0] = 1.0;
    for (int layer = 0; layer < c.layers; ++layer) {
        for (int k = 0; k < c.n_qubits; ++k) {
            const auto& slot = c.slots[static_cast<std::size_t>(layer) * c.n_qubits + k];
            apply_single_qubit(out, gate_matrix(slot), k);
        }
        for (auto [a, b] : c.entangler) {
            apply_cz(out, a, b);
        }
    }
}

inline StateVector prepare_state(const AnsatzCircuit& c) {
    StateVector out;
    prepare_state(c, out);
    return out;
}

} // namespace vqcopt
