#ifndef SZEGO_CORE_HPP
#define SZEGO_CORE_HPP

#include "szego/angle.hpp"
#include "szego/arcset.hpp"
#include "szego/mat2.hpp"
#include "szego/verblunsky.hpp"

namespace szego {

/// A(alpha, z) = (1/rho) [[z, -conj(alpha)], [-alpha z, 1]].
/// Accepts |z| <= 1; on the circle A lies in U(1,1) with det A = z.
Mat2 transfer_matrix(const Verblunsky& alpha, Complex z);

inline Mat2 transfer_matrix(const Verblunsky& alpha, const CirclePoint& z) {
    return transfer_matrix(alpha, z.value);
}

/// Cone-coordinate matrix B(alpha, w) = w^{-1} U A(alpha, w^2) U^{-1} with
/// U = (1/sqrt2) [[1, 1], [-i, i]]; real entries for real alpha in (0,1).
Mat2 conjugated_matrix(const Verblunsky& alpha, Complex w);

/// The conjugation route, for cross-checks of the closed form.
Mat2 conjugated_matrix_by_definition(const Verblunsky& alpha, Complex w);

/// Square root w of z in R_A with arg w = (arg z)/2, so that
/// Re w > sqrt(1-A^2) and |Im w| < A.
Complex principal_root(const CirclePoint& z, double A);

/// Admissibility of w for the cone parameter A.
bool admissible_root(Complex w, double A);

struct ConeConstants {
    double A = 0.0;
    Complex w{1.0, 0.0};
    double C = 1.0;
    double kappa = 1.0;
};

/// C = sqrt((1+A)/(1-A)), kappa = C Re w - |Im w| > 1.
ConeConstants cone_constants(double A, Complex w);

/// Open arc R_alpha = { e^{i theta} : |theta| < 2 arcsin(alpha) } around 1.
/// Empty when alpha_min == 0.
ArcSet gap_arc(double alpha_min);

/// Half-opening angle 2 arcsin(alpha) of R_alpha.
double gap_half_angle(double alpha_min);

/// Strict membership z in R_A (the arc is open).
bool in_gap_arc(const CirclePoint& z, double A);

} // namespace szego

#endif
