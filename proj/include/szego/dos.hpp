#ifndef SZEGO_DOS_HPP
#define SZEGO_DOS_HPP

#include <optional>
#include <vector>

#include "szego/cocycle.hpp"
#include "szego/discriminant.hpp"

namespace szego {

/// Normalized zero counting measure (density-of-states approximant).
struct DensityOfStates {
    struct Atom {
        Angle angle;
        double weight;
    };
    std::vector<Atom> atoms; // weights sum to 1

    double mass_in(const ArcSet& region, double tol = 1e-12) const {
        double m = 0.0;
        for (const auto& a : atoms)
            if (region.contains(a.angle.theta, tol)) m += a.weight;
        return m;
    }
};

/// Counting measure of the largest window's zeros (weight 1/n each);
/// earlier windows are retained for weak-* convergence diagnostics.
struct DosResult {
    DensityOfStates dos;
    std::vector<DensityOfStates> window_history;
};

DosResult dos_from_zeros(const std::vector<ZeroSet>& window_zero_sets);

/// Thouless-type sum L(z) = R + sum w_k log|z - e^{i theta_k}|.
double thouless_lyapunov(const DensityOfStates& dos, double R, Complex z);

/// R = direct - integral term at a reference point outside the spectrum.
double fit_R(const DensityOfStates& dos, Complex z_ref, const LyapunovEstimate& direct);

struct GapLabel {
    Arc gap;
    double label = 0.0; // cumulative dos mass, in [0, 1)
    bool closed = false;
};

struct GapLabelReport {
    std::vector<GapLabel> gaps; // counterclockwise from the base gap
    std::optional<Arc> base_gap;
    bool base_relocated = false; // theta = 0 fell inside a band
    std::optional<double> rotation_offset; // fitted R, when available
};

/// Labels each spectral gap by the cumulative dos mass of the bands between
/// the base point theta = 0 and the gap, counterclockwise.
GapLabelReport gap_labels(const BandStructure& bands, const DensityOfStates& dos);

} // namespace szego

#endif
