#ifndef SZEGO_ZEROSET_HPP
#define SZEGO_ZEROSET_HPP

#include <algorithm>
#include <vector>

#include "szego/angle.hpp"
#include "szego/arcset.hpp"

namespace szego {

/// Sorted multiset of angles (discriminant / Lee-Yang zeros).
class ZeroSet {
public:
    struct Zero {
        Angle angle;
        int multiplicity = 1;
    };

    ZeroSet() = default;

    /// Collapses angles closer than `cluster_tol` into one entry with
    /// summed multiplicity.
    static ZeroSet from_angles(std::vector<double> angles, double cluster_tol = 0.0) {
        for (auto& t : angles) t = canonical_angle(t);
        std::sort(angles.begin(), angles.end());
        ZeroSet zs;
        for (double t : angles) {
            if (!zs.zeros_.empty() &&
                t - zs.zeros_.back().angle.theta <= cluster_tol) {
                ++zs.zeros_.back().multiplicity;
            } else {
                zs.zeros_.push_back({Angle(t), 1});
            }
        }
        return zs;
    }

    bool empty() const { return zeros_.empty(); }
    std::size_t distinct_count() const { return zeros_.size(); }

    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& z : zeros_) n += static_cast<std::size_t>(z.multiplicity);
        return n;
    }

    const std::vector<Zero>& zeros() const { return zeros_; }

    double min_abs_angle() const {
        if (zeros_.empty()) throw DomainError("ZeroSet::min_abs_angle: empty");
        double m = kPi;
        for (const auto& z : zeros_) m = std::min(m, std::fabs(z.angle.theta));
        return m;
    }

    ArcSet as_arcset() const {
        std::vector<Arc> pts;
        pts.reserve(zeros_.size());
        for (const auto& z : zeros_) pts.push_back({z.angle.theta, 0.0});
        return ArcSet::from_arcs(std::move(pts));
    }

private:
    std::vector<Zero> zeros_;
};

} // namespace szego

#endif
