#ifndef SZEGO_COCYCLE_HPP
#define SZEGO_COCYCLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "szego/core.hpp"

namespace szego {

/// A(alpha_n, z) ... A(alpha_1, z); identity for the empty word.
/// Overflows double for long hyperbolic words; use growth_trace then.
Mat2 product(const VerblunskyWord& word, Complex z);

inline Mat2 product(const VerblunskyWord& word, const CirclePoint& z) {
    return product(word, z.value);
}

/// Log-norms of all partial products, renormalized to avoid overflow.
struct GrowthTrace {
    std::vector<double> log_norms; // entry n-1 = log ||A_n ... A_1||
    double kappa_floor = 0.0;      // cone rate when the certificate applies
};

GrowthTrace growth_trace(const VerblunskyWord& word, const CirclePoint& z);

/// Uniform-hyperbolicity certificate: holds for every word with
/// coefficients in [A_min, 1) iff z lies in the open arc R_{A_min}.
struct HyperbolicityCertificate {
    bool holds = false;
    std::optional<ConeConstants> constants;
};

HyperbolicityCertificate hyperbolicity_certificate(double A_min, const CirclePoint& z);

/// Iterates v_k = B(alpha_k, w) v_{k-1} from v0 = (x0, y0) and checks the
/// cone inequalities y_k > C |x_k| and y_k > kappa y_{k-1} strictly at
/// every step. v0 must already satisfy y0 > C |x0|.
bool cone_orbit_check(double A, const VerblunskyWord& word, const CirclePoint& z,
                      double x0, double y0);

struct LyapunovEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    std::size_t trials = 0;
};

/// Monte Carlo estimate of L(z) = lim (1/n) E log ||A_z^n||. The sampler
/// maps a uniform variate in [0,1) to a coefficient; trials draw i.i.d.
/// words through IndexedRng streams, so the result is seed-reproducible.
LyapunovEstimate lyapunov_estimate(const std::function<Complex(double)>& sampler,
                                   Complex z, std::size_t n, std::size_t trials,
                                   std::uint64_t seed);

/// Stable/unstable eigendirections of the period monodromy matrix.
struct Splitting {
    Complex stable_dir[2];
    Complex unstable_dir[2];
    double contraction_rate = 1.0; // |small eigenvalue|^{1/p} < 1
};

Splitting splitting_periodic(const VerblunskyWord& word, const CirclePoint& z);

} // namespace szego

#endif
