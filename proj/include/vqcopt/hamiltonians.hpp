#pragma once

#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vqcopt/pauli.hpp"
#include "vqcopt/statevector.hpp"

namespace vqcopt {

struct LatticeGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

inline void validate_lattice(const LatticeGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges) {
        if (a == b) {
            throw std::invalid_argument("LatticeGraph: self-loop");
        }
        if (a < 0 || b < 0 || a >= g.n_vertices || b >= g.n_vertices) {
            throw std::invalid_argument("LatticeGraph: vertex out of range");
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("LatticeGraph: duplicate edge");
        }
    }
}

namespace detail {

inline std::string pauli_string(int n, std::initializer_list<std::pair<int, char>> ops) {
    std::string letters(static_cast<std::size_t>(n), 'I');
    for (auto [qubit, letter] : ops) {
        letters[static_cast<std::size_t>(qubit)] = letter;
    }
    return letters;
}

// J * sum_edges (XX + YY + ZZ) + h * sum_sites Z over an arbitrary graph.
inline Observable heisenberg_on_graph(const LatticeGraph& graph, double coupling,
                                      double field) {
    validate_lattice(graph);
    const int n = graph.n_vertices;
    std::vector<PauliTerm> terms;
    terms.reserve(3 * graph.edges.size() + static_cast<std::size_t>(n));
    for (auto [a, b] : graph.edges) {
        for (char letter : {'X', 'Y', 'Z'}) {
            terms.push_back({coupling, pauli_string(n, {{a, letter}, {b, letter}})});
        }
    }
    for (int site = 0; site < n; ++site) {
        terms.push_back({field, pauli_string(n, {{site, 'Z'}})});
    }
    return Observable::pauli_sum(std::move(terms));
}

} // namespace detail

inline LatticeGraph cyclic_chain(int n_sites) {
    LatticeGraph g{n_sites, {}};
    for (int i = 0; i < n_sites; ++i) {
        g.edges.emplace_back(i, (i + 1) % n_sites);
    }
    return g;
}

// Nearest-neighbour rectangular grid with open boundaries, row-major
// vertex numbering.
inline LatticeGraph rectangular_grid(int rows, int cols) {
    LatticeGraph g{rows * cols, {}};
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int v = r * cols + c;
            if (c + 1 < cols) {
                g.edges.emplace_back(v, v + 1);
            }
            if (r + 1 < rows) {
                g.edges.emplace_back(v, v + cols);
            }
        }
    }
    return g;
}

inline Observable heisenberg_1d(int n_sites, double coupling, double field) {
    if (n_sites < 3) {
        throw std::invalid_argument("heisenberg_1d: cyclic chain needs at least 3 sites");
    }
    return detail::heisenberg_on_graph(cyclic_chain(n_sites), coupling, field);
}

inline Observable heisenberg_2d(int rows, int cols, double coupling, double field) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw std::invalid_argument("heisenberg_2d: grid needs at least 2 sites");
    }
    return detail::heisenberg_on_graph(rectangular_grid(rows, cols), coupling, field);
}

// 4-qubit molecular hydrogen Hamiltonian at bond distance 0.742 A
// (STO-3G), embedded as data.
inline Observable h2_hamiltonian() {
    return Observable::pauli_sum({
        {-0.09963387941370971, "IIII"},
        {0.17110545123720233, "ZIII"},
        {0.17110545123720233, "IZII"},
        {0.16859349595532533, "ZZII"},
        {-0.22250914236600539, "IIZI"},
        {0.12051027989546245, "ZIZI"},
        {-0.22250914236600539, "IIIZ"},
        {0.16584090244119712, "ZIIZ"},
        {0.16584090244119712, "IZZI"},
        {0.12051027989546245, "IZIZ"},
        {0.1743207725924201, "IIZZ"},
        {0.04533062254573469, "YXXY"},
        {-0.04533062254573469, "XXYY"},
        {0.04533062254573469, "XYYX"},
        {-0.04533062254573469, "YYXX"},
    });
}

// M = -|target><target|, so the expectation is -F = T^2 - 1.
inline Observable projector_cost(StateVector target) {
    return Observable::projector(std::move(target));
}

// Dense 2^n x 2^n Hermitian matrix of a Pauli sum.
inline Eigen::MatrixXcd dense_matrix(const Observable& obs) {
    if (obs.kind() != Observable::Kind::PauliSum) {
        throw std::invalid_argument("dense_matrix: only Pauli sums are supported");
    }
    const std::size_t dim = std::size_t{1} << obs.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    static constexpr cplx i_powers[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (const detail::CompiledTerm& t : obs.compiled_terms()) {
        const cplx base = t.coeff * i_powers[t.y_count & 3];
        for (std::size_t j = 0; j < dim; ++j) {
            const bool odd = std::popcount(j & t.phase_mask) & 1;
            m(static_cast<Eigen::Index>(j ^ t.flip_mask), static_cast<Eigen::Index>(j)) +=
                odd ? -base : base;
        }
    }
    return m;
}

// Smallest eigenvalue of the dense matrix; the reference used to judge
// optimizer convergence against known ground energies.
inline double exact_ground_energy(const Observable& obs) {
    if (obs.kind() != Observable::Kind::PauliSum) {
        throw std::invalid_argument("exact_ground_energy: only Pauli sums are supported");
    }
    if (obs.n_qubits() > 12) {
        throw std::invalid_argument(
            "exact_ground_energy: dense diagonalization is capped at 12 qubits");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(obs),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("exact_ground_energy: eigensolver failed");
    }
    return solver.eigenvalues()(0);
}

} // namespace vqcopt
