#include "szego/random_ensemble.hpp"

#include <cmath>

namespace szego {

SingleSiteMeasure SingleSiteMeasure::atoms(std::vector<Atom> atoms) {
    if (atoms.empty())
        throw DomainError("SingleSiteMeasure: atom list must be nonempty");
    double total = 0.0;
    for (const auto& a : atoms) {
        if (std::abs(a.value) >= 1.0)
            throw InvalidCoefficientError("SingleSiteMeasure: atom outside the unit disk");
        if (!(a.weight > 0.0))
            throw DomainError("SingleSiteMeasure: atom weights must be positive");
        total += a.weight;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw DomainError("SingleSiteMeasure: weights must sum to 1");
    SingleSiteMeasure m;
    m.atoms_ = std::move(atoms);
    return m;
}

SingleSiteMeasure SingleSiteMeasure::uniform_interval(double a, double b) {
    if (!(0.0 < a && a < b && b < 1.0))
        throw DomainError("SingleSiteMeasure: interval must satisfy 0 < a < b < 1");
    SingleSiteMeasure m;
    m.a_ = a;
    m.b_ = b;
    return m;
}

bool SingleSiteMeasure::real_nonnegative() const {
    if (!is_atomic()) return true; // intervals are confined to (0,1)
    for (const auto& a : atoms_)
        if (a.value.imag() != 0.0 || a.value.real() < 0.0) return false;
    return true;
}

double SingleSiteMeasure::min_support() const {
    if (!real_nonnegative())
        throw UnsupportedMeasureError(
            "min_support: support is not contained in [0,1)");
    if (!is_atomic()) return a_; // half-open [a, b): the minimum is attained
    double m = 1.0;
    for (const auto& a : atoms_) m = std::min(m, a.value.real());
    return m;
}

Complex SingleSiteMeasure::draw(double u) const {
    if (!is_atomic()) return Complex{a_ + (b_ - a_) * u, 0.0};
    double acc = 0.0;
    for (const auto& a : atoms_) {
        acc += a.weight;
        if (u < acc) return a.value;
    }
    return atoms_.back().value;
}

SampledSequence sample_window(const SingleSiteMeasure& measure, long l, long r,
                              std::uint64_t seed) {
    if (l < 0 || r < 0)
        throw DomainError("sample_window: window bounds must be nonnegative");
    SampledSequence seq;
    seq.seed = seed;
    seq.l = l;
    seq.r = r;
    seq.values.reserve(static_cast<std::size_t>(l + r + 1));
    IndexedRng rng(seed);
    for (long n = -l; n <= r; ++n) {
        // fold the signed index into a stream-0 counter
        std::uint64_t idx = static_cast<std::uint64_t>(n >= 0 ? 2 * n : -2 * n - 1);
        seq.values.push_back(measure.draw(rng.uniform(0, idx)));
    }
    return seq;
}

ArcSet almost_sure_spectrum_nonneg(const SingleSiteMeasure& measure) {
    double min_supp = measure.min_support(); // throws for unsupported measures
    return gap_arc(min_supp).complement();
}

ZeroSet window_zero_set(const SampledSequence& sequence) {
    if (sequence.values.empty())
        throw DomainError("window_zero_set: empty window");
    return discriminant_zeros(sequence.word());
}

ArcSet periodic_union_spectrum(const SingleSiteMeasure& measure,
                               std::size_t max_period) {
    if (!measure.is_atomic())
        throw DomainError("periodic_union_spectrum: measure must be atomic");
    const std::size_t k = measure.atom_list().size();
    if (std::pow(static_cast<double>(k), static_cast<double>(max_period)) > 1e6)
        throw SizeError("periodic_union_spectrum: enumeration bound exceeded");

    ArcSet result;
    std::vector<std::size_t> index;
    for (std::size_t p = 1; p <= max_period; ++p) {
        index.assign(p, 0);
        while (true) {
            std::vector<Complex> vals(p);
            for (std::size_t i = 0; i < p; ++i)
                vals[i] = measure.atom_list()[index[i]].value;
            result = result.unite(
                band_structure(VerblunskyWord::from_complex(vals)).spectrum);
            // odometer increment
            std::size_t pos = 0;
            while (pos < p && ++index[pos] == k) index[pos++] = 0;
            if (pos == p) break;
        }
    }
    return result;
}

std::vector<ConvergenceRecord> convergence_experiment(
    const SingleSiteMeasure& measure, const std::vector<std::pair<long, long>>& schedule,
    const ArcSet& reference, std::uint64_t seed) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i].first + schedule[i].second <=
            schedule[i - 1].first + schedule[i - 1].second)
            throw DomainError("convergence_experiment: schedule must be increasing");

    std::vector<ConvergenceRecord> out;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        auto [l, r] = schedule[i];
        SampledSequence seq = sample_window(measure, l, r, seed);
        ZeroSet zeros = window_zero_set(seq);
        ConvergenceRecord rec;
        rec.k = i;
        rec.l = l;
        rec.r = r;
        rec.zero_count = zeros.total_count();
        rec.distance = hausdorff_distance(zeros.as_arcset(), reference);
        out.push_back(rec);
    }
    return out;
}

} // namespace szego
