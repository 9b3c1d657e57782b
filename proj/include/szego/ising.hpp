#ifndef SZEGO_ISING_HPP
#define SZEGO_ISING_HPP

#include <cstdint>
#include <vector>

#include "szego/discriminant.hpp"
#include "szego/random_ensemble.hpp"

namespace szego {

/// Ferromagnetic nearest-neighbor chain with periodic boundary conditions.
struct IsingChain {
    std::vector<double> couplings; // J_1 .. J_N, all > 0
    double tau = 1.0;
    double k_B = 1.0;

    IsingChain(std::vector<double> J, double tau_, double kB = 1.0)
        : couplings(std::move(J)), tau(tau_), k_B(kB) {
        if (couplings.empty())
            throw DomainError("IsingChain: at least one coupling required");
        for (double j : couplings)
            if (!(j > 0.0)) throw DomainError("IsingChain: couplings must be positive");
        if (!(tau > 0.0) || !(k_B > 0.0))
            throw DomainError("IsingChain: tau and k_B must be positive");
    }

    std::size_t size() const { return couplings.size(); }
    double beta_inv() const { return 1.0 / (k_B * tau); } // 1/(k_B tau)
};

/// Spin configuration, entries +/-1, periodic convention sigma_{N+1} = sigma_1.
struct SpinConfig {
    std::vector<int> sigma;

    explicit SpinConfig(std::vector<int> s) : sigma(std::move(s)) {
        for (int v : sigma)
            if (v != 1 && v != -1)
                throw DomainError("SpinConfig: entries must be +/-1");
    }
};

/// E = -(1/k_B tau) sum_j (J_j sigma_j sigma_{j+1} + H sigma_j).
double energy(const SpinConfig& config, const IsingChain& chain, double H);

/// Exact 2^N sum; H is recovered from h as (k_B tau / 2) log h (principal
/// branch). Capped at N = 24.
Complex partition_bruteforce(const IsingChain& chain, Complex h);

/// P(h) = h^{N/2} Z(h), a degree-N polynomial with strictly positive
/// coefficients, built by an O(N^2) spin-transfer recursion.
struct PartitionPoly {
    std::vector<double> coefficients; // c_0 .. c_N

    Complex eval(Complex h) const {
        Complex acc{0.0};
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            acc = acc * h + *it;
        return acc;
    }
};

PartitionPoly partition_polynomial(const IsingChain& chain);

/// The N Lee-Yang zeros (roots of the partition polynomial); all unimodular.
ZeroSet leeyang_zeros(const IsingChain& chain);

/// alpha_j = 1/beta_j = exp(-2 J_j / (k_B tau)), a real-positive word.
VerblunskyWord couplings_to_verblunsky(const IsingChain& chain);

/// Zero-free arc R_{alpha_inf} with alpha_inf = exp(-2 sup J / (k_B tau)).
ArcSet zero_free_arc(const IsingChain& chain);
ArcSet zero_free_arc(double sup_coupling, double tau, double k_B = 1.0);

/// Distribution of interaction couplings: atoms or a uniform half-open
/// interval [a, b), all on the positive axis.
struct CouplingMeasure {
    struct Atom {
        double value;
        double weight;
    };
    std::vector<Atom> atoms; // empty when an interval is used
    double a = 0.0, b = 0.0;

    static CouplingMeasure from_atoms(std::vector<Atom> atoms);
    static CouplingMeasure uniform(double a, double b);

    double draw(double u) const;
    double sup_support() const;
};

struct ThermoRecord {
    std::size_t k = 0;
    std::size_t n = 0; // lattice size
    double distance = 0.0;
    ZeroSet zeros;
};

/// Thermodynamic-limit experiment: draw couplings i.i.d., map to
/// Verblunsky coefficients, compute window zeros and their Hausdorff
/// distance to the almost-sure spectrum of the induced coefficient measure.
std::vector<ThermoRecord> thermodynamic_scan(const CouplingMeasure& coupling_measure,
                                             double tau,
                                             const std::vector<std::size_t>& schedule,
                                             std::uint64_t seed, double k_B = 1.0);

/// Coupling measure mapped through J -> exp(-2J/(k_B tau)). For interval
/// measures the returned interval carries the correct support endpoints
/// (which is all the spectrum formula consumes); the density within the
/// interval is not preserved by the map.
SingleSiteMeasure induced_coefficient_measure(const CouplingMeasure& coupling_measure,
                                              double tau, double k_B = 1.0);

} // namespace szego

#endif
