#ifndef SZEGO_DISCRIMINANT_HPP
#define SZEGO_DISCRIMINANT_HPP

#include <optional>
#include <vector>

#include "szego/cocycle.hpp"
#include "szego/zeroset.hpp"

namespace szego {

/// T(z) = Tr A(alpha_p, z) ... A(alpha_1, z), a degree-p polynomial in z
/// with leading coefficient 1 / prod(rho_j).
struct DiscriminantPoly {
    std::vector<Complex> coefficients; // c_0 ... c_p
    std::size_t word_length = 0;

    Complex eval(Complex z) const {
        Complex acc{0.0};
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }
};

/// Exact coefficient accumulation; capped at p = 4096 (the leading
/// coefficient 1/prod rho grows exponentially).
DiscriminantPoly discriminant_poly(const VerblunskyWord& word);

/// Normalized discriminant D(theta) = Re( e^{-ip theta/2} T(e^{i theta}) ),
/// real on the circle up to roundoff. The value is D = value; the relative
/// imaginary residual must stay below 1e-9.
struct NormalizedDisc {
    double value = 0.0;
    double im_residual = 0.0;
};

NormalizedDisc normalized_discriminant(const VerblunskyWord& word, Angle theta);

/// Scaled evaluation D = mantissa * exp(log_scale), usable for words of any
/// length (the plain value overflows in deep gaps of long words).
struct ScaledDisc {
    double mantissa = 0.0;    // real part of the scaled normalized trace
    double im_mantissa = 0.0; // imaginary residual at the same scale
    double log_scale = 0.0;
};

ScaledDisc disc_eval_scaled(const VerblunskyWord& word, double theta);

/// log |D(theta)|; -inf at zeros of the discriminant.
double log_abs_disc(const VerblunskyWord& word, double theta);

struct Band {
    Arc arc;
    Angle zero; // the one discriminant zero in the band interior
};

struct ClosedGap {
    Angle at;
};

struct BandStructure {
    ArcSet spectrum;               // merged closure of {|D| <= 2}
    std::vector<Angle> band_edges; // |D| = 2 crossings, refined
    std::vector<Band> bands;       // one zero per band interior
    std::vector<ClosedGap> closed_gaps;
    ZeroSet zeros;
};

/// Spectrum { |D| <= 2 } by grid scan plus bisection refinement of the
/// |D| = 2 crossings. grid_size == 0 picks 64 * p.
BandStructure band_structure(const VerblunskyWord& word, std::size_t grid_size = 0);

/// All p roots of the discriminant polynomial, as angles. Companion-matrix
/// eigenvalues cross-checked against sign changes of D for small p; pure
/// grid pipeline for long words.
ZeroSet discriminant_zeros(const VerblunskyWord& word);

/// Grid/bisection zero pipeline; `restrict_to` limits the scan to
/// [lo, hi] in theta (continuous parametrization, hi may exceed pi).
/// Pairs of zeros closer than the grid spacing produce no sign change and
/// may be missed, so the returned count is a lower bound for long words.
ZeroSet discriminant_zeros_grid(const VerblunskyWord& word,
                                std::size_t grid_size = 0,
                                double refine_tol = 1e-12,
                                std::optional<std::pair<double, double>> restrict_to = {});

/// Discriminant zeros of the word repeated `repetitions` times. Inside each
/// band the repeated-word discriminant is 2 cos(m gamma) with
/// 2 cos(gamma) = D_period, so the zeros solve D_period = 2 cos((2k+1)pi/2m)
/// band by band -- O(m p) instead of a grid over the full window.
ZeroSet periodic_window_zeros(const VerblunskyWord& word, std::size_t repetitions);

/// |D(z)| <= 2 + 1e-9.
bool spectrum_membership(const VerblunskyWord& word, const CirclePoint& z);

/// Spectrum of the constant-coefficient extended CMV matrix:
/// the complement of R_alpha.
ArcSet constant_spectrum(double alpha);

/// Rows of the half-line CMV matrix (five-diagonal factorized form).
/// Row r is returned as a dense vector over columns [0, cols).
std::vector<std::vector<Complex>> assemble_cmv_rows(const VerblunskyWord& word,
                                                    std::size_t row_begin,
                                                    std::size_t row_end,
                                                    std::size_t cols);

/// Dense N x N unitary CMV truncation: coefficients alpha_0..alpha_{N-2}
/// from the word, final coefficient replaced by a unimodular boundary value.
std::vector<std::vector<Complex>> finite_cmv_matrix(const VerblunskyWord& word,
                                                    Complex boundary);

/// Eigenvalue angles of the finite unitary truncation (diagonalization
/// oracle for band structure).
ZeroSet finite_cmv_eigenvalues(const VerblunskyWord& word, Complex boundary);

} // namespace szego

#endif
