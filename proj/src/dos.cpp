#include "szego/dos.hpp"

#include <cmath>

namespace szego {

namespace {

DensityOfStates counting_measure(const ZeroSet& zeros) {
    DensityOfStates dos;
    const double n = static_cast<double>(zeros.total_count());
    if (n == 0.0) throw DomainError("dos_from_zeros: empty zero set");
    for (const auto& z : zeros.zeros())
        dos.atoms.push_back({z.angle, static_cast<double>(z.multiplicity) / n});
    return dos;
}

} // namespace

DosResult dos_from_zeros(const std::vector<ZeroSet>& window_zero_sets) {
    if (window_zero_sets.empty())
        throw DomainError("dos_from_zeros: at least one window required");
    DosResult res;
    for (const auto& zs : window_zero_sets)
        res.window_history.push_back(counting_measure(zs));
    res.dos = res.window_history.back();
    return res;
}

double thouless_lyapunov(const DensityOfStates& dos, double R, Complex z) {
    double sum = R;
    for (const auto& a : dos.atoms) {
        Complex w = std::polar(1.0, a.angle.theta);
        double d = std::abs(z - w);
        if (d < 1e-12)
            throw SingularityError("thouless_lyapunov: z coincides with a dos atom");
        sum += a.weight * std::log(d);
    }
    return sum;
}

double fit_R(const DensityOfStates& dos, Complex z_ref, const LyapunovEstimate& direct) {
    return direct.value - thouless_lyapunov(dos, 0.0, z_ref);
}

GapLabelReport gap_labels(const BandStructure& bands, const DensityOfStates& dos) {
    if (bands.bands.empty())
        throw DomainError("gap_labels: band structure is empty");

    GapLabelReport report;
    ArcSet gaps = bands.spectrum.complement();
    if (gaps.empty()) {
        // spectrum covers the circle; only closed gaps may remain, and
        // there is no base gap to anchor labels to
        return report;
    }

    // base gap: the one containing theta = 0, else the widest one
    std::size_t base_idx = gaps.arcs().size();
    for (std::size_t i = 0; i < gaps.arcs().size(); ++i)
        if (gaps.contains(0.0) &&
            ArcSet::from_arcs({gaps.arcs()[i]}).contains(0.0)) {
            base_idx = i;
            break;
        }
    if (base_idx == gaps.arcs().size()) {
        report.base_relocated = true;
        double widest = -1.0;
        for (std::size_t i = 0; i < gaps.arcs().size(); ++i)
            if (gaps.arcs()[i].length > widest) {
                widest = gaps.arcs()[i].length;
                base_idx = i;
            }
    }
    const Arc base = gaps.arcs()[base_idx];
    report.base_gap = base;

    // cumulative dos mass of bands between the end of the base gap and each
    // gap, moving counterclockwise
    const double origin = canonical_angle(base.end());
    struct Entry {
        Arc gap;
        double offset; // ccw angle from origin to gap start
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < gaps.arcs().size(); ++i) {
        const Arc& g = gaps.arcs()[i];
        double off = g.start - origin;
        while (off < 0.0) off += kTwoPi;
        if (i == base_idx) off = kTwoPi; // base gap closes the cycle
        entries.push_back({g, off});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.offset < b.offset; });

    for (const auto& e : entries) {
        if (e.offset >= kTwoPi) continue; // skip the base gap itself
        ArcSet between = ArcSet::from_arcs({Arc{origin, e.offset}});
        GapLabel gl;
        gl.gap = e.gap;
        gl.label = dos.mass_in(between, 1e-9);
        report.gaps.push_back(gl);
    }

    // zero-length gaps where bands touch
    for (const auto& cg : bands.closed_gaps) {
        double off = cg.at.theta - origin;
        while (off < 0.0) off += kTwoPi;
        ArcSet between = ArcSet::from_arcs({Arc{origin, off}});
        GapLabel gl;
        gl.gap = {cg.at.theta, 0.0};
        gl.label = dos.mass_in(between, -1e-9);
        gl.closed = true;
        report.gaps.push_back(gl);
    }
    std::sort(report.gaps.begin(), report.gaps.end(), [&](const GapLabel& a,
                                                          const GapLabel& b) {
        double oa = a.gap.start - origin, ob = b.gap.start - origin;
        while (oa < 0.0) oa += kTwoPi;
        while (ob < 0.0) ob += kTwoPi;
        return oa < ob;
    });
    return report;
}

} // namespace szego
