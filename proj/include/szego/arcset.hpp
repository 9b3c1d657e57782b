#ifndef SZEGO_ARCSET_HPP
#define SZEGO_ARCSET_HPP

#include <algorithm>
#include <vector>

#include "szego/angle.hpp"
#include "szego/errors.hpp"

namespace szego {

/// Closed arc starting at `start` (canonical angle) and running
/// counterclockwise for `length` radians. length == 0 is a point,
/// length == 2pi the full circle.
struct Arc {
    double start = 0.0;
    double length = 0.0;

    double end() const { return start + length; } // may exceed pi
    double midpoint() const { return canonical_angle(start + 0.5 * length); }
};

/// Finite union of closed arcs, kept sorted, disjoint and merged.
class ArcSet {
public:
    ArcSet() = default;

    /// Build from (start, end) pairs, counterclockwise, wraparound allowed.
    static ArcSet from_endpoints(const std::vector<std::pair<double, double>>& arcs);
    static ArcSet from_arcs(std::vector<Arc> arcs);
    static ArcSet full_circle();
    static ArcSet point(double theta);

    bool empty() const { return arcs_.empty(); }
    bool full() const;
    const std::vector<Arc>& arcs() const { return arcs_; }

    double total_measure() const;

    /// Membership in the closed set, with slack `tol` toward inclusion.
    bool contains(double theta, double tol = 0.0) const;

    ArcSet complement() const;
    ArcSet unite(const ArcSet& other) const;

    /// Signed distance from a point to the set (0 when inside).
    double distance_to(double theta) const;

private:
    void normalize();

    std::vector<Arc> arcs_;
};

/// Hausdorff distance between two nonempty unions of closed arcs, in the
/// geodesic angle metric. Exact (endpoint / gap-midpoint analysis).
double hausdorff_distance(const ArcSet& x, const ArcSet& y);

} // namespace szego

#endif
