#include "szego/cocycle.hpp"

#include <cmath>

#include "szego/rng.hpp"

namespace szego {

namespace {
constexpr int kRenormStride = 32;
}

Mat2 product(const VerblunskyWord& word, Complex z) {
    Mat2 m = Mat2::identity();
    for (const auto& v : word.coefficients()) m = transfer_matrix(v, z) * m;
    return m;
}

GrowthTrace growth_trace(const VerblunskyWord& word, const CirclePoint& z) {
    GrowthTrace tr;
    tr.log_norms.reserve(word.size());
    if (word.real_positive()) {
        double a_min = word.min_coefficient();
        if (in_gap_arc(z, a_min)) {
            tr.kappa_floor =
                cone_constants(a_min, principal_root(z, a_min)).kappa;
        }
    }
    Mat2 m = Mat2::identity();
    double log_scale = 0.0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        m = transfer_matrix(word[k], z.value) * m;
        if ((k + 1) % kRenormStride == 0) {
            double s = m.max_abs();
            m = m / s;
            log_scale += std::log(s);
        }
        tr.log_norms.push_back(log_scale + std::log(m.norm()));
    }
    return tr;
}

HyperbolicityCertificate hyperbolicity_certificate(double A_min, const CirclePoint& z) {
    if (!(A_min > 0.0 && A_min < 1.0))
        throw DomainError("hyperbolicity_certificate: A_min must lie in (0,1)");
    HyperbolicityCertificate cert;
    cert.holds = in_gap_arc(z, A_min);
    if (cert.holds)
        cert.constants = cone_constants(A_min, principal_root(z, A_min));
    return cert;
}

bool cone_orbit_check(double A, const VerblunskyWord& word, const CirclePoint& z,
                      double x0, double y0) {
    if (!word.real_positive() || word.min_coefficient() < A)
        throw DomainError("cone_orbit_check: word must be real-positive with min >= A");
    Complex w = principal_root(z, A);
    ConeConstants cc = cone_constants(A, w);
    if (!(y0 > cc.C * std::fabs(x0)))
        throw DomainError("cone_orbit_check: v0 outside the cone y > C|x|");

    double x = x0, y = y0;
    for (const auto& v : word.coefficients()) {
        Mat2 b = conjugated_matrix(v, w);
        double nx = b.a.real() * x + b.b.real() * y;
        double ny = b.c.real() * x + b.d.real() * y;
        if (!(ny > cc.C * std::fabs(nx))) return false;
        if (!(ny > cc.kappa * y)) return false;
        x = nx;
        y = ny;
    }
    return true;
}

LyapunovEstimate lyapunov_estimate(const std::function<Complex(double)>& sampler,
                                   Complex z, std::size_t n, std::size_t trials,
                                   std::uint64_t seed) {
    if (n < 1 || trials < 1)
        throw DomainError("lyapunov_estimate: n and trials must be >= 1");
    IndexedRng rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Mat2 m = Mat2::identity();
        double log_scale = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Verblunsky v(sampler(rng.uniform(t, k)));
            m = transfer_matrix(v, z) * m;
            if ((k + 1) % kRenormStride == 0) {
                double s = m.max_abs();
                m = m / s;
                log_scale += std::log(s);
            }
        }
        double val = (log_scale + std::log(m.norm())) / static_cast<double>(n);
        sum += val;
        sum_sq += val * val;
    }
    LyapunovEstimate est;
    est.n = n;
    est.trials = trials;
    est.value = sum / static_cast<double>(trials);
    if (trials > 1) {
        double var = (sum_sq - sum * sum / static_cast<double>(trials)) /
                     static_cast<double>(trials - 1);
        est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(trials));
    }
    return est;
}

Splitting splitting_periodic(const VerblunskyWord& word, const CirclePoint& z) {
    if (word.empty())
        throw DomainError("splitting_periodic: empty word");
    Mat2 m = product(word, z.value);
    // |det m| = 1 on the circle, so hyperbolicity is |trace| > 2
    Complex tr = m.trace();
    if (!(std::abs(tr) > 2.0))
        throw NotHyperbolicError("splitting_periodic: |normalized trace| <= 2");

    Complex disc = std::sqrt(tr * tr - 4.0 * m.det());
    Complex l1 = 0.5 * (tr + disc);
    Complex l2 = 0.5 * (tr - disc);
    if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);

    auto eigvec = [&](Complex lam, Complex out[2]) {
        // rows of (M - lam I) are proportional; pick the better-conditioned one
        Complex v1[2] = {m.b, lam - m.a};
        Complex v2[2] = {lam - m.d, m.c};
        Complex* v = (std::abs(v1[0]) + std::abs(v1[1]) >=
                      std::abs(v2[0]) + std::abs(v2[1]))
                         ? v1
                         : v2;
        double nrm = std::hypot(std::abs(v[0]), std::abs(v[1]));
        out[0] = v[0] / nrm;
        out[1] = v[1] / nrm;
    };

    Splitting sp;
    eigvec(l1, sp.unstable_dir);
    eigvec(l2, sp.stable_dir);
    sp.contraction_rate =
        std::pow(std::abs(l2), 1.0 / static_cast<double>(word.size()));

    // invariance check: M v must stay projectively on v
    for (Complex* dir : {sp.unstable_dir, sp.stable_dir}) {
        Complex x = dir[0], y = dir[1];
        apply(m, x, y);
        Complex cross = x * dir[1] - y * dir[0];
        double scale = std::hypot(std::abs(x), std::abs(y));
        if (std::abs(cross) / std::max(scale, 1.0) > 1e-9)
            throw NumericalFailureError(
                "splitting_periodic: eigendirection not invariant");
    }
    return sp;
}

} // namespace szego
