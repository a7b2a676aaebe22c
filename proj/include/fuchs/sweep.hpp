#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "fuchs/geodesic.hpp"
#include "fuchs/parallel.hpp"
#include "fuchs/twist.hpp"

namespace fuchs {

struct GridSpec {
    double min = -30.0;
    double max = 30.0;
    double step = 0.25;

    std::vector<double> points() const {
        if (!(step > 0.0) || !(max >= min)) throw config_error("bad grid spec");
        std::vector<double> out;
        const int n = static_cast<int>(std::floor((max - min) / step + 1e-9));
        out.reserve(n + 2);
        for (int i = 0; i <= n; ++i) out.push_back(min + i * step);
        if (out.back() < max - step * 1e-9) out.push_back(max);
        return out;
    }
};

/// Chordal boundary gap between a point of g1 and a point of g2. The
/// cross-ratio bound on tan(theta/2) is controlled below by the gaps of
/// the opposite endpoint pairings and above by the circle diameter 2.
struct EndpointGaps {
    double opposite = 4.0;   // min over (att1,rep2), (rep1,att2)
    double all = 4.0;        // min over all four pairings
};

inline EndpointGaps endpoint_gaps(const Geodesic& g1, const Geodesic& g2) {
    EndpointGaps gaps;
    const double aa = chordal(g1.p_attracting, g2.p_attracting);
    const double ar = chordal(g1.p_attracting, g2.p_repelling);
    const double ra = chordal(g1.p_repelling, g2.p_attracting);
    const double rr = chordal(g1.p_repelling, g2.p_repelling);
    gaps.opposite = std::min(ar, ra);
    gaps.all = std::min({aa, ar, ra, rr});
    return gaps;
}

/// Record of one angle sweep along the twist orbit.
struct SweepReport {
    std::vector<double> grid;
    std::vector<double> angles;          // NaN where the lift crossing vanished
    std::vector<bool> crossed;
    double sup = 0.0;
    double inf = 0.0;
    int lost = 0;                        // grid points without a crossing
    double delta2 = 4.0;                 // min opposite endpoint gap over the sweep
    double delta4 = 4.0;                 // min endpoint gap over the sweep
    bool four_edge_type = false;         // endpoints stay uniformly apart
    double limit_gap_low = 4.0;          // endpoint distance to curve-lift endpoints
    double limit_gap_high = 4.0;         //   at the two grid extremes
};

/// Angle between the twisted axes of w1 and conj w2 conj^-1 across the
/// grid. The pair must cross at t = 0.
inline SweepReport angle_sweep(const TwistFamily& fam, const Word& w1, const Word& w2,
                               const Word& conj, const GridSpec& grid, int workers = 1,
                               int lift_depth = 3) {
    const Word w2c = word_concat(word_concat(conj, w2), word_inverse(conj));
    {
        const Representation base = twist_rep(fam, 0.0);
        if (word_kind(base, w1) != IsometryKind::hyperbolic ||
            word_kind(base, w2c) != IsometryKind::hyperbolic)
            throw no_crossing_at_base("sweep words must be hyperbolic at t = 0");
        const Geodesic a1 = word_axis(base, w1);
        const Geodesic a2 = word_axis(base, w2c);
        if (shares_endpoint(a1, a2) || !interleaved(a1, a2))
            throw no_crossing_at_base("sweep pair does not cross at t = 0");
    }

    SweepReport report;
    report.grid = grid.points();

    struct Sample {
        double angle = std::numeric_limits<double>::quiet_NaN();
        bool crossed = false;
        EndpointGaps gaps;
        Geodesic g1{BoundaryPoint(0.0), BoundaryPoint::infinity()};
        Geodesic g2{BoundaryPoint(0.0), BoundaryPoint::infinity()};
    };
    std::vector<Sample> samples =
        parallel_map<Sample>(report.grid.size(), workers, [&](size_t i) {
            Sample s;
            const Representation rep_t = twist_rep(fam, report.grid[i]);
            if (word_kind(rep_t, w1) != IsometryKind::hyperbolic ||
                word_kind(rep_t, w2c) != IsometryKind::hyperbolic)
                return s;
            s.g1 = word_axis(rep_t, w1);
            s.g2 = word_axis(rep_t, w2c);
            if (!interleaved(s.g1, s.g2)) return s;
            s.angle = detail::angle_cross_ratio_unchecked(s.g1, s.g2);
            s.crossed = true;
            s.gaps = endpoint_gaps(s.g1, s.g2);
            return s;
        });

    bool any = false;
    for (const Sample& s : samples) {
        report.angles.push_back(s.angle);
        report.crossed.push_back(s.crossed);
        if (!s.crossed) {
            report.lost += 1;
            continue;
        }
        if (!any) {
            report.sup = report.inf = s.angle;
            any = true;
        } else {
            report.sup = std::max(report.sup, s.angle);
            report.inf = std::min(report.inf, s.angle);
        }
        report.delta2 = std::min(report.delta2, s.gaps.opposite);
        report.delta4 = std::min(report.delta4, s.gaps.all);
    }
    report.four_edge_type = report.delta4 > 1e-3;

    const std::vector<BoundaryPoint> lifts = curve_lift_endpoints(fam, lift_depth);
    if (!samples.empty()) {
        const Sample& lo = samples.front();
        const Sample& hi = samples.back();
        if (lo.crossed)
            report.limit_gap_low = std::max(min_chordal_gap(lo.g2.p_repelling, lifts),
                                            min_chordal_gap(lo.g2.p_attracting, lifts));
        if (hi.crossed)
            report.limit_gap_high = std::max(min_chordal_gap(hi.g2.p_repelling, lifts),
                                             min_chordal_gap(hi.g2.p_attracting, lifts));
    }
    return report;
}

/// Distance between the twisted axes of two words whose base axes are
/// disjoint and separated by a lift of the twist curve.
inline std::vector<double> separation_sweep(const TwistFamily& fam, const Word& w1,
                                            const Word& w2, const GridSpec& grid,
                                            int workers = 1, int lift_depth = 4) {
    const Representation base = twist_rep(fam, 0.0);
    if (word_kind(base, w1) != IsometryKind::hyperbolic ||
        word_kind(base, w2) != IsometryKind::hyperbolic)
        throw not_separated("separation words must be hyperbolic at t = 0");
    const Geodesic a1 = word_axis(base, w1);
    const Geodesic a2 = word_axis(base, w2);
    if (interleaved(a1, a2) || shares_endpoint(a1, a2))
        throw not_separated("axes cross at t = 0");
    const Geodesic curve_axis = axis(fam.base.generator(fam.curve.generator));
    bool separated = false;
    for (const Word& k : enumerate_ball(lift_depth, fam.base.rank()).words) {
        const Geodesic lift = apply(evaluate(fam.base, k), curve_axis);
        if (shares_endpoint(lift, a1, kNormTol) || shares_endpoint(lift, a2, kNormTol)) continue;
        if (separates(lift, a1, a2)) {
            separated = true;
            break;
        }
    }
    if (!separated) throw not_separated("no curve lift separates the axes");

    const std::vector<double> points = grid.points();
    return parallel_map<double>(points.size(), workers, [&](size_t i) {
        const Representation rep_t = twist_rep(fam, points[i]);
        return disjoint_distance(word_axis(rep_t, w1), word_axis(rep_t, w2));
    });
}

} // namespace fuchs
