#include "szego/core.hpp"

#include <cmath>

namespace szego {

Mat2 transfer_matrix(const Verblunsky& alpha, Complex z) {
    double inv_rho = 1.0 / alpha.rho;
    return {z * inv_rho, -std::conj(alpha.alpha) * inv_rho,
            -alpha.alpha * z * inv_rho, Complex{inv_rho, 0.0}};
}

static void require_real_positive(const Verblunsky& alpha) {
    if (alpha.alpha.imag() != 0.0 || alpha.alpha.real() <= 0.0 ||
        alpha.alpha.real() >= 1.0)
        throw InvalidCoefficientError(
            "conjugated_matrix: alpha must be real in (0,1)");
}

Mat2 conjugated_matrix(const Verblunsky& alpha, Complex w) {
    require_real_positive(alpha);
    double a = alpha.alpha.real();
    double inv_rho = 1.0 / alpha.rho;
    double re = w.real(), im = w.imag();
    return {Complex{(1.0 - a) * re * inv_rho, 0.0},
            Complex{-(1.0 - a) * im * inv_rho, 0.0},
            Complex{(1.0 + a) * im * inv_rho, 0.0},
            Complex{(1.0 + a) * re * inv_rho, 0.0}};
}

Mat2 conjugated_matrix_by_definition(const Verblunsky& alpha, Complex w) {
    require_real_positive(alpha);
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i{0.0, 1.0};
    Mat2 U{s, s, -i * s, i * s};
    Mat2 A = transfer_matrix(alpha, w * w);
    return (1.0 / w) * (U * A * U.inverse());
}

bool admissible_root(Complex w, double A) {
    if (!(A > 0.0 && A < 1.0)) return false;
    return w.real() > std::sqrt(1.0 - A * A) && std::fabs(w.imag()) < A;
}

Complex principal_root(const CirclePoint& z, double A) {
    if (!(A > 0.0 && A < 1.0))
        throw DomainError("principal_root: A must lie in (0,1)");
    if (!in_gap_arc(z, A))
        throw OutOfGapError("principal_root: z outside R_A");
    return std::polar(1.0, 0.5 * z.angle.theta);
}

ConeConstants cone_constants(double A, Complex w) {
    if (!(A > 0.0 && A < 1.0))
        throw DomainError("cone_constants: A must lie in (0,1)");
    if (!admissible_root(w, A))
        throw AdmissibilityError("cone_constants: w inadmissible for A");
    ConeConstants cc;
    cc.A = A;
    cc.w = w;
    cc.C = std::sqrt((1.0 + A) / (1.0 - A));
    cc.kappa = cc.C * w.real() - std::fabs(w.imag());
    return cc;
}

double gap_half_angle(double alpha_min) {
    if (!(alpha_min >= 0.0 && alpha_min < 1.0))
        throw DomainError("gap_arc: alpha_min must lie in [0,1)");
    return 2.0 * std::asin(alpha_min);
}

ArcSet gap_arc(double alpha_min) {
    double half = gap_half_angle(alpha_min);
    if (half == 0.0) return ArcSet{};
    return ArcSet::from_endpoints({{-half, half}});
}

bool in_gap_arc(const CirclePoint& z, double A) {
    return std::fabs(z.angle.theta) < gap_half_angle(A);
}

} // namespace szego
