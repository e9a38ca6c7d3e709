#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "vqcopt/matrix2.hpp"
#include "vqcopt/rng.hpp"

namespace vqcopt {

// Unit quaternion (w, x, y, z): the gate it encodes is
// w*I - i*(x*sx + y*sy + z*sz), i.e. w = cos(psi/2) and (x, y, z) the
// scaled rotation axis.
struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
};

// Unit rotation axis for the fixed-angle-pi gate family.
struct Axis3 {
    double x = 1.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

enum class PauliAxis { X, Y, Z };

inline Mat2 pauli_matrix(PauliAxis p) {
    switch (p) {
    case PauliAxis::X:
        return Mat2::pauli_x();
    case PauliAxis::Y:
        return Mat2::pauli_y();
    default:
        return Mat2::pauli_z();
    }
}

// The four single-qubit gate parameterizations.
struct FixedAngleGate {
    double theta = 0.0;
    PauliAxis generator = PauliAxis::Z;
};

// Angle rotation about the conjugated generator V Z V^dagger.
struct HaarAngleGate {
    double theta = 0.0;
    Mat2 conjugator = Mat2::identity();
};

// Rotation by a fixed angle pi about a free axis: -i (n . sigma).
struct AxisGate {
    Axis3 axis;
};

struct QuatGate {
    Quaternion q;
};

using GateParam = std::variant<FixedAngleGate, HaarAngleGate, AxisGate, QuatGate>;

// [[w - iz, -y - ix], [y - ix, w + iz]]; special unitary for unit q.
inline Mat2 quaternion_to_matrix(const Quaternion& q) {
    if (std::abs(q.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("quaternion_to_matrix: quaternion must be unit norm");
    }
    return {cplx(q.w, -q.z), cplx(-q.y, -q.x), cplx(q.y, -q.x), cplx(q.w, q.z)};
}

// Reads the quaternion back off an SU(2) matrix.
inline Quaternion quaternion_from_matrix(const Mat2& u) {
    Quaternion q;
    q.w = 0.5 * (u.a + u.d).real();
    q.x = -0.5 * (u.b + u.c).imag();
    q.y = 0.5 * (u.c - u.b).real();
    q.z = 0.5 * (u.d - u.a).imag();
    const double n = q.norm();
    if (std::abs(n - 1.0) > 1e-8 || max_abs_diff(quaternion_to_matrix({q.w / n, q.x / n, q.y / n, q.z / n}), u) > 1e-8) {
        throw std::invalid_argument("quaternion_from_matrix: matrix is not special unitary");
    }
    q.w /= n;
    q.x /= n;
    q.y /= n;
    q.z /= n;
    return q;
}

inline Quaternion angles_to_quaternion(double psi, double theta, double phi) {
    const double half = 0.5 * psi;
    return {std::cos(half), std::sin(half) * std::cos(theta),
            std::sin(half) * std::sin(theta) * std::cos(phi),
            std::sin(half) * std::sin(theta) * std::sin(phi)};
}

// (cos t, sin t cos p, sin t sin p): zenith angle measured from the x axis.
inline Axis3 axis_from_spherical(double theta, double phi) {
    return {std::cos(theta), std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi)};
}

// Haar-distributed U(2): Gram-Schmidt on a complex Ginibre matrix. The
// positive-real-diagonal triangular factor implied by the normalization
// is exactly the phase convention that makes the output Haar.
inline Mat2 haar_random_u2(Rng& rng) {
    while (true) {
        const cplx g00(rng.normal(), rng.normal());
        const cplx g10(rng.normal(), rng.normal());
        const cplx g01(rng.normal(), rng.normal());
        const cplx g11(rng.normal(), rng.normal());
        const double c1 = std::sqrt(std::norm(g00) + std::norm(g10));
        if (c1 == 0.0) {
            continue;
        }
        const cplx q00 = g00 / c1;
        const cplx q10 = g10 / c1;
        const cplx overlap = std::conj(q00) * g01 + std::conj(q10) * g11;
        const cplx r01 = g01 - overlap * q00;
        const cplx r11 = g11 - overlap * q10;
        const double c2 = std::sqrt(std::norm(r01) + std::norm(r11));
        if (c2 == 0.0) {
            continue;
        }
        return {q00, r01 / c2, q10, r11 / c2};
    }
}

// Uniform on the unit sphere.
inline Axis3 random_unit_axis(Rng& rng) {
    while (true) {
        const double x = rng.normal();
        const double y = rng.normal();
        const double z = rng.normal();
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-12) {
            return {x / n, y / n, z / n};
        }
    }
}

// G = V Z V^dagger: Hermitian, unitary, traceless.
inline Mat2 conjugated_generator(const Mat2& v) {
    if (!is_unitary(v)) {
        throw std::invalid_argument("conjugated_generator: conjugator must be unitary");
    }
    return v * Mat2::pauli_z() * v.adjoint();
}

inline Mat2 rotation_about(const Mat2& generator, double theta) {
    const double half = 0.5 * theta;
    return std::cos(half) * Mat2::identity() +
           cplx(0.0, -std::sin(half)) * generator;
}

inline Mat2 gate_matrix(const GateParam& p) {
    struct Visitor {
        Mat2 operator()(const FixedAngleGate& g) const {
            return rotation_about(pauli_matrix(g.generator), g.theta);
        }
        Mat2 operator()(const HaarAngleGate& g) const {
            return rotation_about(conjugated_generator(g.conjugator), g.theta);
        }
        Mat2 operator()(const AxisGate& g) const {
            if (std::abs(g.axis.norm() - 1.0) > 1e-10) {
                throw std::invalid_argument("gate_matrix: axis must be unit norm");
            }
            const Mat2 n_dot_sigma = cplx(g.axis.x) * Mat2::pauli_x() +
                                     cplx(g.axis.y) * Mat2::pauli_y() +
                                     cplx(g.axis.z) * Mat2::pauli_z();
            return cplx(0.0, -1.0) * n_dot_sigma;
        }
        Mat2 operator()(const QuatGate& g) const { return quaternion_to_matrix(g.q); }
    };
    return std::visit(Visitor{}, p);
}

// Haar gate expressed as a quaternion: the U(2) draw is projected onto
// SU(2) by dividing out its determinant phase, which leaves the encoded
// gate's action unchanged.
inline Quaternion haar_random_su2_quaternion(Rng& rng) {
    const Mat2 u = haar_random_u2(rng);
    const cplx phase = std::sqrt(u.det());
    return quaternion_from_matrix((cplx(1.0) / phase) * u);
}

struct UnitaryDecomposition {
    double theta = 0.0;
    Mat2 conjugator = Mat2::identity();
};

// Solves exp(-i theta/2 V Z V^dagger) = U for a special unitary U. The
// columns of V are the rotation-axis eigenvectors ordered so the
// eigenvalue e^{-i theta/2} pairs with the +1 eigenvector of Z, which
// makes the reconstruction exact. theta comes out in [0, 2pi]: angles
// beyond pi encode gates with negative scalar part (Tr U < 0), which no
// angle in (-pi, pi] can reproduce without a sign flip of the matrix;
// U = +/-I maps to theta = 0 or 2pi with V = I.
inline UnitaryDecomposition decompose_unitary(const Mat2& u) {
    if (std::abs(u.det() - cplx(1.0)) > 1e-8) {
        throw std::invalid_argument("decompose_unitary: determinant must be 1");
    }
    const double w = 0.5 * (u.a + u.d).real();
    const double qx = -0.5 * (u.b + u.c).imag();
    const double qy = 0.5 * (u.c - u.b).real();
    const double qz = 0.5 * (u.d - u.a).imag();
    const double r = std::sqrt(qx * qx + qy * qy + qz * qz);

    UnitaryDecomposition out;
    out.theta = 2.0 * std::atan2(r, w);
    if (r == 0.0) {
        return out; // +/-I: any conjugator works, keep the identity
    }
    const double nx = qx / r;
    const double ny = qy / r;
    const double nz = qz / r;

    // +1 eigenvector of n . sigma, using whichever closed form avoids
    // cancellation near the poles.
    cplx v0, v1;
    if (nz >= 0.0) {
        const double scale = 1.0 / std::sqrt(2.0 * (1.0 + nz));
        v0 = cplx(1.0 + nz) * scale;
        v1 = cplx(nx, ny) * scale;
    } else {
        const double scale = 1.0 / std::sqrt(2.0 * (1.0 - nz));
        v0 = cplx(nx, -ny) * scale;
        v1 = cplx(1.0 - nz) * scale;
    }
    // Second column orthonormal to the first; keeps V in SU(2).
    out.conjugator = {v0, -std::conj(v1), v1, std::conj(v0)};
    return out;
}

} // namespace vqcopt
