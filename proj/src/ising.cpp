#include "szego/ising.hpp"

#include <cmath>

#include "szego/roots.hpp"

namespace szego {

double energy(const SpinConfig& config, const IsingChain& chain, double H) {
    if (config.sigma.size() != chain.size())
        throw DomainError("energy: configuration and chain lengths differ");
    const std::size_t n = chain.size();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        int sj = config.sigma[j];
        int sj1 = config.sigma[(j + 1) % n];
        sum += chain.couplings[j] * sj * sj1 + H * sj;
    }
    return -chain.beta_inv() * sum;
}

Complex partition_bruteforce(const IsingChain& chain, Complex h) {
    const std::size_t n = chain.size();
    if (n > 24) throw SizeError("partition_bruteforce: N must be <= 24");
    if (h == Complex{0.0}) throw DomainError("partition_bruteforce: h must be nonzero");

    // exp(-E) = exp(binv * sum J_j s_j s_{j+1}) * (h^{1/2})^{sum s_j}
    const double binv = chain.beta_inv();
    const Complex sqrt_h = std::exp(0.5 * std::log(h)); // principal branch

    // powers of h^{1/2} for exponents -N..N
    std::vector<Complex> pow_pos(n + 1), pow_neg(n + 1);
    pow_pos[0] = pow_neg[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        pow_pos[k] = pow_pos[k - 1] * sqrt_h;
        pow_neg[k] = pow_neg[k - 1] / sqrt_h;
    }

    Complex z{0.0};
    const std::uint32_t count = 1u << n;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        double bond = 0.0;
        int mag = 0;
        for (std::size_t j = 0; j < n; ++j) {
            int sj = (mask >> j) & 1u ? 1 : -1;
            int sj1 = (mask >> ((j + 1) % n)) & 1u ? 1 : -1;
            bond += chain.couplings[j] * sj * sj1;
            mag += sj;
        }
        Complex field = (mag >= 0) ? pow_pos[static_cast<std::size_t>(mag)]
                                   : pow_neg[static_cast<std::size_t>(-mag)];
        z += std::exp(binv * bond) * field;
    }
    return z;
}

PartitionPoly partition_polynomial(const IsingChain& chain) {
    const std::size_t n = chain.size();
    const double binv = chain.beta_inv();

    // h^{N/2} Z(h) = sum_sigma exp(binv sum J_j s_j s_{j+1}) h^{#up(sigma)}.
    // Transfer recursion over sites, state = (current spin, up count),
    // with the first spin fixed to close the periodic bond at the end.
    PartitionPoly poly;
    poly.coefficients.assign(n + 1, 0.0);

    for (int s1 : {+1, -1}) {
        // weight[s][m]: partial sums with sigma_j = s and m up spins so far
        std::vector<double> up(n + 1, 0.0), down(n + 1, 0.0);
        if (s1 == 1)
            up[1] = 1.0;
        else
            down[0] = 1.0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const double w_same = std::exp(binv * chain.couplings[j]);
            const double w_flip = std::exp(-binv * chain.couplings[j]);
            std::vector<double> nup(n + 1, 0.0), ndown(n + 1, 0.0);
            for (std::size_t m = 0; m <= j + 1; ++m) {
                if (up[m] != 0.0) {
                    nup[m + 1] += up[m] * w_same;
                    ndown[m] += up[m] * w_flip;
                }
                if (down[m] != 0.0) {
                    nup[m + 1] += down[m] * w_flip;
                    ndown[m] += down[m] * w_same;
                }
            }
            up.swap(nup);
            down.swap(ndown);
        }
        // close the ring with bond J_N between sigma_N and sigma_1
        const double wn_same = std::exp(binv * chain.couplings[n - 1]);
        const double wn_flip = std::exp(-binv * chain.couplings[n - 1]);
        for (std::size_t m = 0; m <= n; ++m) {
            if (up[m] != 0.0)
                poly.coefficients[m] += up[m] * (s1 == 1 ? wn_same : wn_flip);
            if (down[m] != 0.0)
                poly.coefficients[m] += down[m] * (s1 == 1 ? wn_flip : wn_same);
        }
    }
    return poly;
}

ZeroSet leeyang_zeros(const IsingChain& chain) {
    const std::size_t n = chain.size();
    // the partition coefficients span e^{O(N)} orders of magnitude, so the
    // companion route is only trustworthy for short chains
    if (n <= 48) {
        PartitionPoly poly = partition_polynomial(chain);
        std::vector<Complex> coeffs(poly.coefficients.begin(), poly.coefficients.end());
        std::vector<Complex> roots = polynomial_roots(coeffs);
        std::vector<double> angles;
        angles.reserve(roots.size());
        for (Complex r : roots) {
            if (std::fabs(std::abs(r) - 1.0) > 1e-8)
                throw NumericalFailureError(
                    "leeyang_zeros: root off the unit circle beyond 1e-8");
            angles.push_back(std::arg(r));
        }
        return ZeroSet::from_angles(std::move(angles), 1e-9);
    }
    // long chains: the zeros coincide with the zeros of the discriminant of
    // the mapped word, computed by the grid pipeline
    return discriminant_zeros_grid(couplings_to_verblunsky(chain));
}

VerblunskyWord couplings_to_verblunsky(const IsingChain& chain) {
    std::vector<double> alphas;
    alphas.reserve(chain.size());
    for (double j : chain.couplings)
        alphas.push_back(std::exp(-2.0 * j * chain.beta_inv()));
    return VerblunskyWord::from_reals(alphas);
}

ArcSet zero_free_arc(double sup_coupling, double tau, double k_B) {
    if (!(sup_coupling > 0.0) || !(tau > 0.0) || !(k_B > 0.0))
        throw DomainError("zero_free_arc: parameters must be positive");
    double alpha_inf = std::exp(-2.0 * sup_coupling / (k_B * tau));
    return gap_arc(alpha_inf);
}

ArcSet zero_free_arc(const IsingChain& chain) {
    double sup = 0.0;
    for (double j : chain.couplings) sup = std::max(sup, j);
    return zero_free_arc(sup, chain.tau, chain.k_B);
}

CouplingMeasure CouplingMeasure::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("CouplingMeasure: atoms required");
    double total = 0.0;
    for (const auto& a : atoms) {
        if (!(a.value > 0.0))
            throw DomainError("CouplingMeasure: couplings must be positive");
        if (!(a.weight > 0.0))
            throw DomainError("CouplingMeasure: weights must be positive");
        total += a.weight;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw DomainError("CouplingMeasure: weights must sum to 1");
    CouplingMeasure m;
    m.atoms = std::move(atoms);
    return m;
}

CouplingMeasure CouplingMeasure::uniform(double a, double b) {
    if (!(0.0 < a && a < b))
        throw DomainError("CouplingMeasure: interval must satisfy 0 < a < b");
    CouplingMeasure m;
    m.a = a;
    m.b = b;
    return m;
}

double CouplingMeasure::draw(double u) const {
    if (atoms.empty()) return a + (b - a) * u;
    double acc = 0.0;
    for (const auto& at : atoms) {
        acc += at.weight;
        if (u < acc) return at.value;
    }
    return atoms.back().value;
}

double CouplingMeasure::sup_support() const {
    if (atoms.empty()) return b;
    double s = 0.0;
    for (const auto& at : atoms) s = std::max(s, at.value);
    return s;
}

SingleSiteMeasure induced_coefficient_measure(const CouplingMeasure& coupling_measure,
                                              double tau, double k_B) {
    const double scale = -2.0 / (k_B * tau);
    if (!coupling_measure.atoms.empty()) {
        std::vector<SingleSiteMeasure::Atom> atoms;
        for (const auto& a : coupling_measure.atoms)
            atoms.push_back({Complex{std::exp(scale * a.value), 0.0}, a.weight});
        return SingleSiteMeasure::atoms(std::move(atoms));
    }
    // J in [a, b) maps to alpha in (exp(scale b), exp(scale a)]
    return SingleSiteMeasure::uniform_interval(std::exp(scale * coupling_measure.b),
                                               std::exp(scale * coupling_measure.a));
}

std::vector<ThermoRecord> thermodynamic_scan(const CouplingMeasure& coupling_measure,
                                             double tau,
                                             const std::vector<std::size_t>& schedule,
                                             std::uint64_t seed, double k_B) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw DomainError("thermodynamic_scan: schedule must be increasing");

    ArcSet reference =
        almost_sure_spectrum_nonneg(induced_coefficient_measure(coupling_measure, tau, k_B));

    IndexedRng rng(seed);
    std::vector<ThermoRecord> out;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const std::size_t n = schedule[k];
        std::vector<double> couplings(n);
        for (std::size_t j = 0; j < n; ++j)
            couplings[j] = coupling_measure.draw(rng.uniform(0, j));
        IsingChain chain(couplings, tau, k_B);
        ThermoRecord rec;
        rec.k = k;
        rec.n = n;
        rec.zeros = leeyang_zeros(chain);
        rec.distance = hausdorff_distance(rec.zeros.as_arcset(), reference);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace szego
