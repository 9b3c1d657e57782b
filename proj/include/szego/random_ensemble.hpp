#ifndef SZEGO_RANDOM_ENSEMBLE_HPP
#define SZEGO_RANDOM_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

#include "szego/discriminant.hpp"
#include "szego/rng.hpp"

namespace szego {

/// Single-site distribution of Verblunsky coefficients: finitely many atoms
/// in the open unit disk, or a uniform half-open interval [a, b) in (0,1).
class SingleSiteMeasure {
public:
    struct Atom {
        Complex value;
        double weight;
    };

    static SingleSiteMeasure atoms(std::vector<Atom> atoms);
    static SingleSiteMeasure uniform_interval(double a, double b);

    bool is_atomic() const { return !atoms_.empty(); }
    const std::vector<Atom>& atom_list() const { return atoms_; }
    std::pair<double, double> interval() const { return {a_, b_}; }

    /// Support contained in [0, 1) on the real axis.
    bool real_nonnegative() const;

    /// Left endpoint of a real-nonnegative support.
    double min_support() const;

    /// Map a uniform variate in [0,1) to a coefficient.
    Complex draw(double u) const;

private:
    SingleSiteMeasure() = default;

    std::vector<Atom> atoms_;
    double a_ = 0.0, b_ = 0.0; // uniform interval when atoms_ is empty
};

/// I.i.d. coefficients over the window [-l, r], index-addressed so the same
/// seed reproduces overlapping windows identically.
struct SampledSequence {
    std::uint64_t seed = 0;
    long l = 0, r = 0;
    std::vector<Complex> values; // index -l .. r

    Complex at(long n) const { return values[static_cast<std::size_t>(n + l)]; }
    VerblunskyWord word() const { return VerblunskyWord::from_complex(values); }
};

SampledSequence sample_window(const SingleSiteMeasure& measure, long l, long r,
                              std::uint64_t seed);

/// Closed-form almost-sure spectrum for real-nonnegative single-site measures:
/// the circle minus the open arc R_{min supp}.
ArcSet almost_sure_spectrum_nonneg(const SingleSiteMeasure& measure);

/// Discriminant zeros of the window word (the zeros of the periodic matrix
/// with the window as unit cell).
ZeroSet window_zero_set(const SampledSequence& sequence);

/// Union of band-structure spectra over all words of length <= max_period
/// drawn from an atomic measure. Inner approximation of the closure.
ArcSet periodic_union_spectrum(const SingleSiteMeasure& measure,
                               std::size_t max_period);

struct ConvergenceRecord {
    std::size_t k = 0;
    long l = 0, r = 0;
    double distance = 0.0;
    std::size_t zero_count = 0;
};

/// Hausdorff distance of window zero sets against a reference arc set, for
/// an increasing window schedule.
std::vector<ConvergenceRecord> convergence_experiment(
    const SingleSiteMeasure& measure, const std::vector<std::pair<long, long>>& schedule,
    const ArcSet& reference, std::uint64_t seed);

} // namespace szego

#endif
