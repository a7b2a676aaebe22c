#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fuchs/ball.hpp"
#include "fuchs/conjclass.hpp"
#include "fuchs/dirichlet.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/parallel.hpp"
#include "fuchs/representation.hpp"
#include "fuchs/spectrum.hpp"

namespace fuchs {

/// One crossing configuration: an unordered pair of primitive classes and
/// the group-orbit representative of the crossing point.
struct AngleWitness {
    Word class1;          // canonical, class1 <= class2
    Word class2;
    double point_x = 0.0; // reduced crossing point
    double point_y = 0.0;
    double angle = 0.0;   // counter-clockwise from class1's axis, in (0,pi)
};

/// One clustered value of the truncated angle spectrum.
struct AngleEntry {
    double angle = 0.0;   // smallest member of the cluster
    int multiplicity = 0;
    std::vector<AngleWitness> witnesses;
};

struct AngleSpectrumOptions {
    double tol = kCmpTol;        // value clustering
    bool include_self = true;    // self-crossings via distinct conjugates
    int workers = 1;
    bool unsafe_depth = false;
};

namespace detail {

/// Crossing configurations of one class pair over conjugates of the second
/// class. Every group orbit of a crossing of lifts contains a
/// representative against the canonical axis of the first class, with the
/// conjugator determined exactly up to the double coset <w1> k <w2> (and
/// inversion when the classes coincide); deduplicating on that algebraic
/// key makes the multiplicities independent of the numerical frame. The
/// Dirichlet-reduced crossing point is recorded as the witness.
inline std::vector<AngleWitness> pair_configurations(
    const Word& w1, const Word& w2, bool same_class, const Geodesic& axis1,
    const Geodesic& axis2_base, const std::vector<Word>& conjugators,
    const std::vector<Isometry>& conjugator_images, const PointReducer& reducer) {
    std::vector<AngleWitness> out;
    std::set<Word> seen;
    for (size_t ki = 0; ki < conjugators.size(); ++ki) {
        const Geodesic axis2 =
            ki == 0 ? axis2_base : apply(conjugator_images[ki], axis2_base);
        if (!interleaved(axis1, axis2)) continue;
        Word key = double_coset_canonical(w1, conjugators[ki], w2);
        if (same_class) {
            if (key.empty()) continue;  // conjugator in <w1>: the same lift
            const Word swapped =
                double_coset_canonical(w1, word_inverse(conjugators[ki]), w2);
            if (word_less(swapped, key)) key = swapped;
        }
        if (!seen.insert(key).second) continue;
        const std::optional<HPoint> z = detail::crossing_point_unchecked(axis1, axis2);
        if (!z) continue;
        const HPoint zr = reducer.canonical(*z);
        double theta = detail::angle_cross_ratio_unchecked(axis1, axis2);
        if (same_class) theta = std::min(theta, M_PI - theta);
        out.push_back(AngleWitness{w1, w2, zr.x, zr.y, theta});
    }
    return out;
}

} // namespace detail

/// Crossing angles of unordered pairs of primitive classes to depth, one
/// entry per group orbit of (crossing point, pair), conjugates searched to
/// conj_depth, clustered within tol, ascending. Self-crossings of a single
/// class are configurations with a nontrivial conjugator; their angle is
/// recorded as the acute representative since the pair gives no preferred
/// order.
inline std::vector<AngleEntry> angle_spectrum(const Representation& rep, int depth,
                                              int conj_depth,
                                              const AngleSpectrumOptions& opt = {}) {
    if (!opt.unsafe_depth && conj_depth > kConjDepthCap)
        throw depth_cap_exceeded("conjugator depth exceeds cap");
    std::vector<ConjClass> classes =
        conjugacy_classes(depth, /*oriented=*/false, rep.rank(), opt.unsafe_depth);
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const ConjClass& c) { return !c.primitive(); }),
                  classes.end());

    std::vector<std::optional<Geodesic>> axes(classes.size());
    for (size_t i = 0; i < classes.size(); ++i)
        if (word_kind(rep, classes[i].canonical) == IsometryKind::hyperbolic)
            axes[i] = word_axis(rep, classes[i].canonical);

    const std::vector<Word> conjugators =
        enumerate_ball(conj_depth, rep.rank(), opt.unsafe_depth).words;
    std::vector<Isometry> conjugator_images;
    conjugator_images.reserve(conjugators.size());
    for (const Word& k : conjugators) conjugator_images.push_back(evaluate(rep, k));
    const detail::PointReducer reducer(rep);

    struct Task {
        size_t i, j;
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (!axes[i]) continue;
        for (size_t j = i; j < classes.size(); ++j) {
            if (!axes[j]) continue;
            if (i == j && !opt.include_self) continue;
            tasks.push_back({i, j});
        }
    }
    std::vector<std::vector<AngleWitness>> found =
        parallel_map<std::vector<AngleWitness>>(tasks.size(), opt.workers, [&](size_t t) {
            const auto [i, j] = tasks[t];
            return detail::pair_configurations(classes[i].canonical, classes[j].canonical,
                                               i == j, *axes[i], *axes[j], conjugators,
                                               conjugator_images, reducer);
        });

    std::vector<AngleWitness> all;
    for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
    std::stable_sort(all.begin(), all.end(), [](const AngleWitness& lhs, const AngleWitness& rhs) {
        if (lhs.angle != rhs.angle) return lhs.angle < rhs.angle;
        if (lhs.class1 != rhs.class1) return word_less(lhs.class1, rhs.class1);
        if (lhs.class2 != rhs.class2) return word_less(lhs.class2, rhs.class2);
        if (lhs.point_x != rhs.point_x) return lhs.point_x < rhs.point_x;
        return lhs.point_y < rhs.point_y;
    });

    std::vector<AngleEntry> spectrum;
    double last = 0.0;
    for (const AngleWitness& w : all) {
        if (spectrum.empty() || w.angle - last >= opt.tol)
            spectrum.push_back(AngleEntry{w.angle, 0, {}});
        spectrum.back().multiplicity += 1;
        spectrum.back().witnesses.push_back(w);
        last = w.angle;
    }
    return spectrum;
}

/// Histogram of entry multiplicities plus the headline numbers.
struct MultiplicityProfile {
    std::map<int, int> histogram;   // multiplicity -> count of entries
    int max_multiplicity = 0;
    int multiplicity_one = 0;
    int repeated_values = 0;        // entries with multiplicity >= 2
};

inline MultiplicityProfile multiplicity_profile(const std::vector<AngleEntry>& spectrum) {
    MultiplicityProfile profile;
    for (const AngleEntry& e : spectrum) {
        profile.histogram[e.multiplicity] += 1;
        profile.max_multiplicity = std::max(profile.max_multiplicity, e.multiplicity);
        if (e.multiplicity == 1) profile.multiplicity_one += 1;
        if (e.multiplicity >= 2) profile.repeated_values += 1;
    }
    return profile;
}

/// sinh(l1/2) sinh(l2/2) >= 1 over every crossing pair the angle machinery
/// finds at this depth.
struct CollarReport {
    int crossing_pairs = 0;
    double min_product = 0.0;
    Word min_class1, min_class2;
    bool all_hold = true;
};

inline CollarReport collar_check(const Representation& rep, int depth, int conj_depth = -1,
                                 int workers = 1) {
    if (conj_depth < 0) conj_depth = depth;
    AngleSpectrumOptions opt;
    opt.workers = workers;
    const std::vector<AngleEntry> spectrum = angle_spectrum(rep, depth, conj_depth, opt);
    CollarReport report;
    bool first = true;
    for (const AngleEntry& entry : spectrum) {
        for (const AngleWitness& w : entry.witnesses) {
            const double l1 = 2.0 * std::acosh(word_abs_trace(rep, w.class1) / 2.0);
            const double l2 = 2.0 * std::acosh(word_abs_trace(rep, w.class2) / 2.0);
            const double product = std::sinh(l1 / 2.0) * std::sinh(l2 / 2.0);
            report.crossing_pairs += 1;
            if (first || product < report.min_product) {
                report.min_product = product;
                report.min_class1 = w.class1;
                report.min_class2 = w.class2;
                first = false;
            }
            if (product < 1.0 - kCmpTol) report.all_hold = false;
        }
    }
    return report;
}

} // namespace fuchs
