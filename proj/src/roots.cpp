#include "szego/roots.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "szego/errors.hpp"

namespace szego {

namespace {

// Parlett-Reinsch style balancing with powers of two (exact in floating
// point), to tame the companion matrix before the Schur iteration.
void balance(Eigen::MatrixXcd& m) {
    const auto n = m.rows();
    bool converged = false;
    while (!converged) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::abs(m(i, j));
                col += std::abs(m(j, i));
            }
            if (row == 0.0 || col == 0.0) continue;
            double f = 1.0;
            double s = row + col;
            while (col < row / 2.0) {
                col *= 2.0;
                row /= 2.0;
                f *= 2.0;
            }
            while (col >= row * 2.0) {
                col /= 2.0;
                row *= 2.0;
                f /= 2.0;
            }
            if (row + col < 0.95 * s && f != 1.0) {
                converged = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

} // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.size() < 2)
        throw DomainError("polynomial_roots: degree must be >= 1");
    const std::size_t p = coeffs.size() - 1;
    Complex lead = coeffs[p];
    if (std::abs(lead) == 0.0)
        throw DomainError("polynomial_roots: zero leading coefficient");

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(p),
                                                   static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i + 1 < p; ++i)
        comp(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t i = 0; i < p; ++i)
        comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p - 1)) =
            -coeffs[i] / lead;

    balance(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("polynomial_roots: eigenvalue iteration failed");

    std::vector<Complex> roots;
    roots.reserve(p);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        roots.push_back(solver.eigenvalues()(i));
    return roots;
}

} // namespace szego
