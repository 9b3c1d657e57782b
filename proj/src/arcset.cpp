#include "szego/arcset.hpp"

#include <cmath>

namespace szego {

ArcSet ArcSet::from_endpoints(const std::vector<std::pair<double, double>>& arcs) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (auto [s, e] : arcs) {
        double start = canonical_angle(s);
        double len = e - s;
        if (len < 0.0) len += kTwoPi; // wraparound pair
        if (len < 0.0)
            throw DomainError("ArcSet: arc end precedes start");
        out.push_back({start, std::min(len, kTwoPi)});
    }
    return from_arcs(std::move(out));
}

ArcSet ArcSet::from_arcs(std::vector<Arc> arcs) {
    ArcSet s;
    s.arcs_ = std::move(arcs);
    s.normalize();
    return s;
}

ArcSet ArcSet::full_circle() {
    ArcSet s;
    s.arcs_.push_back({-kPi, kTwoPi});
    return s;
}

ArcSet ArcSet::point(double theta) {
    ArcSet s;
    s.arcs_.push_back({canonical_angle(theta), 0.0});
    return s;
}

bool ArcSet::full() const {
    return arcs_.size() == 1 && arcs_[0].length >= kTwoPi;
}

double ArcSet::total_measure() const {
    double m = 0.0;
    for (const auto& a : arcs_) m += a.length;
    return std::min(m, kTwoPi);
}

void ArcSet::normalize() {
    for (auto& a : arcs_) {
        a.start = canonical_angle(a.start);
        if (a.length < 0.0) throw DomainError("ArcSet: negative arc length");
        if (a.length >= kTwoPi) {
            arcs_ = {{-kPi, kTwoPi}};
            return;
        }
    }
    if (arcs_.empty()) return;
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) { return a.start < b.start; });

    std::vector<Arc> merged;
    for (const auto& a : arcs_) {
        if (!merged.empty() && a.start <= merged.back().end()) {
            merged.back().length =
                std::max(merged.back().length, a.end() - merged.back().start);
        } else {
            merged.push_back(a);
        }
    }
    // wraparound merge: last arc may reach past pi into the first ones
    while (merged.size() > 1 && merged.back().end() >= merged.front().start + kTwoPi) {
        double reach = merged.back().end() - kTwoPi; // in canonical frame
        if (reach >= merged.front().end()) {
            merged.front() = merged.back();
            merged.pop_back();
        } else {
            merged.back().length = merged.front().end() + kTwoPi - merged.back().start;
            merged.erase(merged.begin());
        }
        if (merged.size() == 1 && merged[0].length >= kTwoPi) {
            arcs_ = {{-kPi, kTwoPi}};
            return;
        }
    }
    arcs_ = std::move(merged);
}

bool ArcSet::contains(double theta, double tol) const {
    if (full()) return true;
    double t = canonical_angle(theta);
    for (const auto& a : arcs_) {
        double off = t - a.start;
        if (off < 0.0) off += kTwoPi;
        if (off <= a.length + tol || off >= kTwoPi - tol) return true;
    }
    return false;
}

ArcSet ArcSet::complement() const {
    if (empty()) return full_circle();
    if (full()) return ArcSet{};
    std::vector<Arc> gaps;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& cur = arcs_[i];
        const Arc& nxt = arcs_[(i + 1) % arcs_.size()];
        double gstart = cur.end();
        double gend = (i + 1 == arcs_.size()) ? nxt.start + kTwoPi : nxt.start;
        double glen = gend - gstart;
        if (glen > 0.0) gaps.push_back({canonical_angle(gstart), glen});
    }
    return from_arcs(std::move(gaps));
}

ArcSet ArcSet::unite(const ArcSet& other) const {
    std::vector<Arc> all = arcs_;
    all.insert(all.end(), other.arcs_.begin(), other.arcs_.end());
    return from_arcs(std::move(all));
}

double ArcSet::distance_to(double theta) const {
    if (empty()) throw DomainError("ArcSet::distance_to: empty set");
    if (contains(theta)) return 0.0;
    double best = kPi;
    for (const auto& a : arcs_) {
        best = std::min(best, circle_distance(theta, a.start));
        best = std::min(best, circle_distance(theta, canonical_angle(a.end())));
    }
    return best;
}

namespace {

// gaps between consecutive arcs of y; unlike complement(), zero-length
// arcs of y keep separating the gaps (needed for distance computations)
std::vector<Arc> gaps_between(const ArcSet& y) {
    std::vector<Arc> gaps;
    const auto& arcs = y.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& cur = arcs[i];
        const Arc& nxt = arcs[(i + 1) % arcs.size()];
        double gstart = cur.end();
        double gend = (i + 1 == arcs.size()) ? nxt.start + kTwoPi : nxt.start;
        double glen = gend - gstart;
        if (glen > 0.0) gaps.push_back({canonical_angle(gstart), glen});
    }
    return gaps;
}

// sup_{x in X} dist(x, Y). The supremum is attained at an endpoint of X or
// at the midpoint of a gap of Y that X covers.
double directed_hausdorff(const ArcSet& x, const ArcSet& y) {
    if (y.full()) return 0.0;
    double h = 0.0;
    for (const auto& a : x.arcs()) {
        h = std::max(h, y.distance_to(a.start));
        h = std::max(h, y.distance_to(canonical_angle(a.end())));
    }
    // A point of X deepest inside a gap of Y is either the gap midpoint
    // (when X covers it) or an endpoint of X, handled above.
    const std::vector<Arc> gaps = gaps_between(y);
    for (const Arc& g : gaps) {
        if (x.contains(g.midpoint())) h = std::max(h, 0.5 * g.length);
    }
    return h;
}

} // namespace

double hausdorff_distance(const ArcSet& x, const ArcSet& y) {
    if (x.empty() || y.empty())
        throw DomainError("hausdorff_distance: empty input");
    return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

} // namespace szego
