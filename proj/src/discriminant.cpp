#include "szego/discriminant.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "szego/roots.hpp"

namespace szego {

namespace {

constexpr std::size_t kCoefficientCap = 4096;
// beyond this the grid pipeline runs alone: companion-matrix roots of
// high-degree trace polynomials drift off the circle past the 1e-8 gate
constexpr std::size_t kCompanionCap = 48;
constexpr int kRenormStride = 32;

std::size_t default_grid(std::size_t p) {
    std::size_t g = (p <= 512) ? 64 * p : 16 * p;
    return std::max<std::size_t>(g, 256);
}

} // namespace

DiscriminantPoly discriminant_poly(const VerblunskyWord& word) {
    const std::size_t p = word.size();
    if (p < 1) throw DomainError("discriminant_poly: word must be nonempty");
    if (p > kCoefficientCap)
        throw SizeError("discriminant_poly: word length exceeds coefficient cap 4096");

    // 2x2 matrix with polynomial entries; each factor is degree <= 1 in z
    using Poly = std::vector<Complex>;
    Poly m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    Poly t0(p + 1), t1(p + 1);
    for (std::size_t k = 0; k < p; ++k) {
        const Complex alpha = word[k].alpha;
        const double inv_rho = 1.0 / word[k].rho;
        const Complex abar = std::conj(alpha);
        const std::size_t deg = k + 1;
        // new0 = (z*m0 - abar*m1)/rho ; new1 = (-alpha*z*m0 + m1)/rho
        auto step = [&](Poly& m0, Poly& m1) {
            std::fill(t0.begin(), t0.begin() + static_cast<long>(deg) + 1, Complex{0.0});
            std::fill(t1.begin(), t1.begin() + static_cast<long>(deg) + 1, Complex{0.0});
            for (std::size_t i = 0; i < m0.size(); ++i) {
                t0[i + 1] += m0[i] * inv_rho;
                t1[i + 1] -= alpha * m0[i] * inv_rho;
            }
            for (std::size_t i = 0; i < m1.size(); ++i) {
                t0[i] -= abar * m1[i] * inv_rho;
                t1[i] += m1[i] * inv_rho;
            }
            m0.assign(t0.begin(), t0.begin() + static_cast<long>(deg) + 1);
            m1.assign(t1.begin(), t1.begin() + static_cast<long>(deg) + 1);
        };
        step(m00, m10);
        step(m01, m11);
    }

    DiscriminantPoly poly;
    poly.word_length = p;
    poly.coefficients.resize(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        Complex c{0.0};
        if (i < m00.size()) c += m00[i];
        if (i < m11.size()) c += m11[i];
        poly.coefficients[i] = c;
    }
    return poly;
}

ScaledDisc disc_eval_scaled(const VerblunskyWord& word, double theta) {
    const std::size_t p = word.size();
    if (p < 1) throw DomainError("disc_eval_scaled: word must be nonempty");
    const Complex z = std::polar(1.0, theta);
    Mat2 m = Mat2::identity();
    double log_scale = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
        m = transfer_matrix(word[k], z) * m;
        if ((k + 1) % kRenormStride == 0) {
            double s = m.max_abs();
            m = m / s;
            log_scale += std::log(s);
        }
    }
    // phase uses the raw theta so that scans stay continuous across the seam
    const Complex phase = std::polar(1.0, -0.5 * static_cast<double>(p) * theta);
    const Complex t = phase * m.trace();
    return {t.real(), t.imag(), log_scale};
}

NormalizedDisc normalized_discriminant(const VerblunskyWord& word, Angle theta) {
    ScaledDisc s = disc_eval_scaled(word, theta.theta);
    NormalizedDisc d;
    d.value = s.mantissa * std::exp(s.log_scale);
    double mag = std::hypot(s.mantissa, s.im_mantissa);
    d.im_residual = (mag > 1.0) ? std::fabs(s.im_mantissa) / mag
                                : std::fabs(s.im_mantissa) * std::exp(s.log_scale);
    return d;
}

double log_abs_disc(const VerblunskyWord& word, double theta) {
    ScaledDisc s = disc_eval_scaled(word, theta);
    return std::log(std::fabs(s.mantissa)) + s.log_scale;
}

ZeroSet discriminant_zeros_grid(const VerblunskyWord& word, std::size_t grid_size,
                                double refine_tol,
                                std::optional<std::pair<double, double>> restrict_to) {
    const std::size_t p = word.size();
    if (p < 1) throw DomainError("discriminant_zeros_grid: word must be nonempty");
    double lo = -kPi, hi = kPi;
    std::size_t grid = grid_size ? grid_size : default_grid(p);
    if (restrict_to) {
        lo = restrict_to->first;
        hi = restrict_to->second;
        if (!(hi > lo)) throw DomainError("discriminant_zeros_grid: bad scan range");
        grid = std::max<std::size_t>(
            16, static_cast<std::size_t>(std::ceil(grid * (hi - lo) / kTwoPi)));
    }
    const double step = (hi - lo) / static_cast<double>(grid);

    auto mantissa_at = [&](double t) { return disc_eval_scaled(word, t).mantissa; };

    std::vector<double> angles;
    double prev_t = lo;
    double prev_v = mantissa_at(prev_t);
    for (std::size_t i = 1; i <= grid; ++i) {
        const double t = lo + step * static_cast<double>(i);
        const double v = mantissa_at(t);
        if (prev_v == 0.0) {
            angles.push_back(prev_t);
        } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
            double a = prev_t, b = t, fa = prev_v;
            while (b - a > refine_tol) {
                double mid = 0.5 * (a + b);
                double fm = mantissa_at(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            angles.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_v = v;
    }
    // endpoint zero at hi (only relevant for full scans ending exactly at pi,
    // where lo == -pi already caught the same circle point)
    if (!restrict_to && prev_v == 0.0 && (angles.empty() || angles.front() != -kPi))
        angles.push_back(prev_t);
    return ZeroSet::from_angles(std::move(angles), refine_tol);
}

ZeroSet discriminant_zeros(const VerblunskyWord& word) {
    const std::size_t p = word.size();
    if (p < 1) throw DomainError("discriminant_zeros: word must be nonempty");
    if (p > kCompanionCap) return discriminant_zeros_grid(word);

    DiscriminantPoly poly = discriminant_poly(word);
    std::vector<Complex> roots = polynomial_roots(poly.coefficients);

    double coeff_scale = 0.0;
    for (const auto& c : poly.coefficients) coeff_scale += std::abs(c);

    std::vector<double> angles;
    angles.reserve(roots.size());
    for (Complex r : roots) {
        if (std::fabs(std::abs(r) - 1.0) > 1e-8)
            throw NumericalFailureError(
                "discriminant_zeros: root off the unit circle beyond 1e-8");
        angles.push_back(std::arg(r));
    }

    // independent route: sign changes of the normalized discriminant
    ZeroSet check = discriminant_zeros_grid(word);
    for (double t : angles) {
        double best = kPi;
        for (const auto& z : check.zeros())
            best = std::min(best, circle_distance(t, z.angle.theta));
        if (best > 1e-7) {
            // tangential (even-multiplicity) zeros produce no sign change;
            // accept them when the polynomial itself vanishes there
            if (std::abs(poly.eval(std::polar(1.0, t))) > 1e-7 * coeff_scale)
                throw NumericalFailureError(
                    "discriminant_zeros: companion and bisection pipelines disagree");
        }
    }
    return ZeroSet::from_angles(std::move(angles), 1e-9);
}

ZeroSet periodic_window_zeros(const VerblunskyWord& word, std::size_t repetitions) {
    if (repetitions < 1)
        throw DomainError("periodic_window_zeros: repetitions must be >= 1");
    if (repetitions == 1) return discriminant_zeros(word);

    BandStructure bs = band_structure(word);
    if (bs.band_edges.empty()) {
        // spectrum without |D| = 2 crossings (e.g. a zero coefficient);
        // the band-wise inversion needs edges, so scan the full window
        std::vector<Complex> values;
        values.reserve(repetitions * word.size());
        for (std::size_t i = 0; i < repetitions; ++i)
            for (const auto& v : word.coefficients()) values.push_back(v.alpha);
        return discriminant_zeros_grid(VerblunskyWord::from_complex(values));
    }

    auto disc = [&](double t) {
        ScaledDisc s = disc_eval_scaled(word, t);
        return s.mantissa * std::exp(s.log_scale);
    };

    const double m = static_cast<double>(repetitions);
    std::vector<double> angles;
    angles.reserve(repetitions * bs.bands.size());
    for (const auto& band : bs.bands) {
        const double a = band.arc.start;
        const double b = band.arc.end(); // continuous parametrization
        const double fa = disc(a);       // ~ +/-2 at the edges
        for (std::size_t k = 0; k < repetitions; ++k) {
            const double target =
                2.0 * std::cos((2.0 * static_cast<double>(k) + 1.0) * kPi / (2.0 * m));
            double lo = a, hi = b, flo = fa - target;
            for (int it = 0; it < 64 && hi - lo > 1e-11; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = disc(mid) - target;
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            angles.push_back(0.5 * (lo + hi));
        }
    }
    return ZeroSet::from_angles(std::move(angles), 0.0);
}

bool spectrum_membership(const VerblunskyWord& word, const CirclePoint& z) {
    ScaledDisc s = disc_eval_scaled(word, z.angle.theta);
    if (s.mantissa == 0.0) return true;
    return std::log(std::fabs(s.mantissa)) + s.log_scale <= std::log(2.0 + 1e-9);
}

ArcSet constant_spectrum(double alpha) {
    return gap_arc(alpha).complement();
}

BandStructure band_structure(const VerblunskyWord& word, std::size_t grid_size) {
    const std::size_t p = word.size();
    if (p < 1) throw DomainError("band_structure: word must be nonempty");
    if (grid_size == 0) grid_size = std::max<std::size_t>(64 * p, 256);
    if (grid_size < 64 * p)
        throw DomainError("band_structure: grid_size must be >= 64 * word length");

    // g > 0 outside the spectrum, g <= 0 inside
    auto g = [&](double t) { return log_abs_disc(word, t) - std::log(2.0); };

    const double step = kTwoPi / static_cast<double>(grid_size);
    std::vector<double> edges;
    double prev_t = -kPi;
    double prev_g = g(prev_t);
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double t = -kPi + step * static_cast<double>(i);
        const double cur_g = g(t);
        if ((prev_g > 0.0) != (cur_g > 0.0)) {
            double a = prev_t, b = t;
            bool a_out = prev_g > 0.0;
            while (b - a > 1e-10) {
                double mid = 0.5 * (a + b);
                if ((g(mid) > 0.0) == a_out)
                    a = mid;
                else
                    b = mid;
            }
            edges.push_back(0.5 * (a + b));
        }
        prev_t = t;
        prev_g = cur_g;
    }

    BandStructure bs;
    bs.zeros = discriminant_zeros(word);

    std::vector<std::pair<double, double>> band_intervals; // continuous (start, end)
    if (edges.empty()) {
        // no |D| = 2 crossing: either everything or nothing is spectrum
        if (g(0.0) <= 0.0 || g(kPi / 3.0) <= 0.0)
            band_intervals.push_back({-kPi, kPi});
        // a word whose discriminant exceeds 2 everywhere cannot occur
        // (the p zeros lie on the circle), so the other case stays empty
    } else {
        for (std::size_t j = 0; j < edges.size(); ++j) {
            double a = edges[j];
            double b = (j + 1 < edges.size()) ? edges[j + 1] : edges[0] + kTwoPi;
            if (g(0.5 * (a + b)) <= 0.0) band_intervals.push_back({a, b});
        }
    }

    // a |D| = 2 tangency can round either way on the grid, sometimes showing
    // up as a pair of crossings around a zero-width gap; merge such bands and
    // let the interior peak search below classify the joint as a closed gap
    constexpr double kSeamTol = 1e-7;
    if (band_intervals.size() > 1) {
        std::vector<std::pair<double, double>> joined;
        for (auto iv : band_intervals) {
            if (!joined.empty() && iv.first - joined.back().second < kSeamTol)
                joined.back().second = iv.second;
            else
                joined.push_back(iv);
        }
        if (joined.size() > 1 &&
            joined.front().first + kTwoPi - joined.back().second < kSeamTol) {
            joined.back().second = joined.front().second + kTwoPi;
            joined.erase(joined.begin());
        }
        band_intervals = std::move(joined);
    }

    for (double e : edges) bs.band_edges.push_back(Angle(e));

    // distribute zeros into intervals; split touching bands at interior
    // points where |D| returns to 2
    std::vector<Arc> arcs;
    for (auto [a, b] : band_intervals) {
        std::vector<double> in_band;
        for (const auto& z : bs.zeros.zeros()) {
            for (int wrap = -1; wrap <= 1; ++wrap) {
                double t = z.angle.theta + wrap * kTwoPi;
                if (t >= a - 1e-12 && t <= b + 1e-12) {
                    for (int m = 0; m < z.multiplicity; ++m) in_band.push_back(t);
                    break;
                }
            }
        }
        std::sort(in_band.begin(), in_band.end());
        arcs.push_back({canonical_angle(a), b - a});

        std::vector<double> cuts;
        for (std::size_t i = 0; i + 1 < in_band.size(); ++i) {
            // golden-section maximum of g between consecutive zeros
            double lo2 = in_band[i], hi2 = in_band[i + 1];
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = hi2 - gr * (hi2 - lo2), x2 = lo2 + gr * (hi2 - lo2);
            double g1 = g(x1), g2 = g(x2);
            for (int it = 0; it < 60 && hi2 - lo2 > 1e-11; ++it) {
                if (g1 < g2) {
                    lo2 = x1;
                    x1 = x2;
                    g1 = g2;
                    x2 = lo2 + gr * (hi2 - lo2);
                    g2 = g(x2);
                } else {
                    hi2 = x2;
                    x2 = x1;
                    g2 = g1;
                    x1 = hi2 - gr * (hi2 - lo2);
                    g1 = g(x1);
                }
            }
            double peak = 0.5 * (lo2 + hi2);
            if (g(peak) >= -1e-6) {
                bs.closed_gaps.push_back({Angle(peak)});
                cuts.push_back(peak);
            }
        }

        double seg_start = a;
        std::size_t zi = 0;
        auto flush_band = [&](double s, double e) {
            Band band;
            band.arc = {canonical_angle(s), e - s};
            // the zero inside (s, e)
            while (zi < in_band.size() && in_band[zi] < s) ++zi;
            if (zi < in_band.size() && in_band[zi] <= e)
                band.zero = Angle(in_band[zi++]);
            bs.bands.push_back(band);
        };
        for (double c : cuts) {
            flush_band(seg_start, c);
            seg_start = c;
        }
        flush_band(seg_start, b);
    }

    bs.spectrum = ArcSet::from_arcs(std::move(arcs));
    return bs;
}

std::vector<std::vector<Complex>> assemble_cmv_rows(const VerblunskyWord& word,
                                                    std::size_t row_begin,
                                                    std::size_t row_end,
                                                    std::size_t cols) {
    if (row_end < row_begin)
        throw DomainError("assemble_cmv_rows: empty row range");
    const std::size_t span = std::max(row_end, cols) + 2;
    if (word.size() < span)
        throw DomainError("assemble_cmv_rows: word too short for requested window");

    auto theta_block = [&](std::size_t j, Complex& a, Complex& b, Complex& c,
                           Complex& d) {
        a = std::conj(word[j].alpha);
        b = word[j].rho;
        c = word[j].rho;
        d = -word[j].alpha;
    };

    // C = L M with L = Theta_0 + Theta_2 + ..., M = 1 + Theta_1 + Theta_3 + ...
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(span),
                                                static_cast<Eigen::Index>(span));
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(span),
                                                static_cast<Eigen::Index>(span));
    M(0, 0) = 1.0;
    for (std::size_t j = 0; j + 1 < span; ++j) {
        Complex a, b, c, d;
        theta_block(j, a, b, c, d);
        auto& target = (j % 2 == 0) ? L : M;
        auto i0 = static_cast<Eigen::Index>(j);
        target(i0, i0) = a;
        target(i0, i0 + 1) = b;
        target(i0 + 1, i0) = c;
        target(i0 + 1, i0 + 1) = d;
    }
    Eigen::MatrixXcd C = L * M;

    std::vector<std::vector<Complex>> rows;
    for (std::size_t r = row_begin; r < row_end; ++r) {
        std::vector<Complex> row(cols);
        for (std::size_t k = 0; k < cols; ++k)
            row[k] = C(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<Complex>> finite_cmv_matrix(const VerblunskyWord& word,
                                                    Complex boundary) {
    const std::size_t n = word.size();
    if (n < 1) throw DomainError("finite_cmv_matrix: word must be nonempty");
    if (std::fabs(std::abs(boundary) - 1.0) > 1e-12)
        throw DomainError("finite_cmv_matrix: boundary must be unimodular");

    auto alpha_at = [&](std::size_t j) {
        return (j == n - 1) ? boundary : word[j].alpha;
    };
    auto rho_at = [&](std::size_t j) { return (j == n - 1) ? 0.0 : word[j].rho; };

    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(n));
    M(0, 0) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        auto& target = (j % 2 == 0) ? L : M;
        auto i0 = static_cast<Eigen::Index>(j);
        if (j == n - 1) {
            // final 2x2 block truncates to the scalar conj(alpha)
            target(i0, i0) = std::conj(alpha_at(j));
        } else {
            target(i0, i0) = std::conj(alpha_at(j));
            target(i0, i0 + 1) = rho_at(j);
            target(i0 + 1, i0) = rho_at(j);
            target(i0 + 1, i0 + 1) = -alpha_at(j);
        }
    }
    Eigen::MatrixXcd C = L * M;

    std::vector<std::vector<Complex>> out(n, std::vector<Complex>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r][c] = C(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return out;
}

ZeroSet finite_cmv_eigenvalues(const VerblunskyWord& word, Complex boundary) {
    auto mat = finite_cmv_matrix(word, boundary);
    const auto n = static_cast<Eigen::Index>(mat.size());
    Eigen::MatrixXcd C(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            C(r, c) = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(C, false);
    if (solver.info() != Eigen::Success)
        throw NumericalFailureError("finite_cmv_eigenvalues: eigensolver failed");

    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex ev = solver.eigenvalues()(i);
        if (std::fabs(std::abs(ev) - 1.0) > 1e-10)
            throw NumericalFailureError(
                "finite_cmv_eigenvalues: eigenvalue off the unit circle");
        angles.push_back(std::arg(ev));
    }
    return ZeroSet::from_angles(std::move(angles), 1e-12);
}

} // namespace szego
