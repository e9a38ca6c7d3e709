#pragma once

#include <cmath>
#include <complex>

namespace vqcopt {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// 2x2 complex matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static Mat2 pauli_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
    static Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

    Mat2 adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    friend Mat2 operator*(cplx s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }

    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
    }

    friend Mat2 operator-(const Mat2& l, const Mat2& r) {
        return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
    }
};

inline double max_abs_diff(const Mat2& l, const Mat2& r) {
    return std::max(std::max(std::abs(l.a - r.a), std::abs(l.b - r.b)),
                    std::max(std::abs(l.c - r.c), std::abs(l.d - r.d)));
}

inline bool is_unitary(const Mat2& m, double tol = 1e-10) {
    return max_abs_diff(m.adjoint() * m, Mat2::identity()) <= tol;
}

// Hermitian with H^2 = I (an involution), the shape every gate generator
// must have.
inline bool is_involutory_generator(const Mat2& m, double tol = 1e-10) {
    return max_abs_diff(m, m.adjoint()) <= tol &&
           max_abs_diff(m * m, Mat2::identity()) <= tol;
}

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * pi);
    if (a <= -pi) {
        a += 2.0 * pi;
    } else if (a > pi) {
        a -= 2.0 * pi;
    }
    return a;
}

} // namespace vqcopt
