#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace vqcopt {

template <std::size_t N>
using SymMat = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct EigenPair {
    double value = 0.0;
    std::array<double, N> vector{};
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const SymMat<N>& a) {
    double total = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = p + 1; q < N; ++q) {
            total += 2.0 * a[p][q] * a[p][q];
        }
    }
    return std::sqrt(total);
}

} // namespace detail

// Smallest eigenvalue and its eigenvector of a small real symmetric
// matrix via cyclic Jacobi sweeps, run until the off-diagonal norm drops
// below 1e-12. Ties go to the lowest diagonal slot after convergence and
// the eigenvector sign is fixed so its first nonzero entry is positive,
// which keeps downstream parameter updates reproducible.
template <std::size_t N>
EigenPair<N> lowest_eigenpair_sym(SymMat<N> a) {
    static_assert(N >= 2);
    for (std::size_t p = 0; p < N; ++p) {
        for (std::size_t q = p + 1; q < N; ++q) {
            if (std::abs(a[p][q] - a[q][p]) > 1e-12) {
                throw std::invalid_argument("lowest_eigenpair_sym: matrix is not symmetric");
            }
        }
    }

    std::array<std::array<double, N>, N> vecs{};
    for (std::size_t i = 0; i < N; ++i) {
        vecs[i][i] = 1.0;
    }

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) < 1e-12) {
            break;
        }
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const double app = a[p][p];
                const double aqq = a[q][q];
                const double apq = a[p][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (std::size_t k = 0; k < N; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double vkp = vecs[k][p];
                    const double vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < N; ++i) {
        if (a[i][i] < a[best][best]) {
            best = i;
        }
    }

    EigenPair<N> out;
    out.value = a[best][best];
    for (std::size_t k = 0; k < N; ++k) {
        out.vector[k] = vecs[k][best];
    }
    double norm = 0.0;
    for (double v : out.vector) {
        norm += v * v;
    }
    norm = std::sqrt(norm);
    double first_nonzero = 0.0;
    for (double v : out.vector) {
        if (v != 0.0) {
            first_nonzero = v;
            break;
        }
    }
    const double sign = first_nonzero < 0.0 ? -1.0 : 1.0;
    for (double& v : out.vector) {
        v *= sign / norm;
    }
    return out;
}

} // namespace vqcopt
