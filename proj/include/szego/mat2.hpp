#ifndef SZEGO_MAT2_HPP
#define SZEGO_MAT2_HPP

#include <cmath>
#include <complex>

#include "szego/errors.hpp"

namespace szego {

using Complex = std::complex<double>;

/// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    Complex a{0.0}, b{0.0}, c{0.0}, d{0.0};

    Mat2() = default;
    Mat2(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator/(double s) const { return {a / s, b / s, c / s, d / s}; }

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }

    Mat2 inverse() const {
        Complex dt = det();
        if (std::abs(dt) == 0.0)
            throw SingularityError("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Mat2 adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    /// Largest entry magnitude; cheap scale for renormalized products.
    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }

    /// Operator norm (largest singular value), from the closed-form
    /// eigenvalues of M^H M.
    double norm() const {
        double s = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
        double dt = std::abs(det());
        // singular values s1 >= s2 satisfy s1^2 + s2^2 = s, s1 s2 = dt
        double disc = s * s - 4.0 * dt * dt;
        if (disc < 0.0) disc = 0.0;
        return std::sqrt(0.5 * (s + std::sqrt(disc)));
    }

    friend Mat2 operator*(Complex s, const Mat2& m) { return m * s; }
};

/// Apply to a column vector (x, y).
inline void apply(const Mat2& m, Complex& x, Complex& y) {
    Complex nx = m.a * x + m.b * y;
    Complex ny = m.c * x + m.d * y;
    x = nx;
    y = ny;
}

} // namespace szego

#endif
