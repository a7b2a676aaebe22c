#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fuchs/conjclass.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/parallel.hpp"
#include "fuchs/representation.hpp"

namespace fuchs {

/// Truncated set of axes: unoriented endpoint pairs (smaller endpoint
/// first, infinity greatest), deduplicated within endpoint tolerance and
/// sorted. Powers of a class share its axis and collapse.
struct AxesSet {
    int depth = 0;
    std::vector<Geodesic> axes;   // canonicalized: p_repelling <= p_attracting
};

namespace detail {

inline Geodesic unoriented(const Geodesic& geo) {
    if (geo.p_attracting < geo.p_repelling) return geo.reversed();
    return geo;
}

inline bool endpoints_less(const Geodesic& lhs, const Geodesic& rhs) {
    if (lhs.p_repelling < rhs.p_repelling) return true;
    if (rhs.p_repelling < lhs.p_repelling) return false;
    return lhs.p_attracting < rhs.p_attracting;
}

inline bool endpoints_close(const Geodesic& lhs, const Geodesic& rhs, double tol) {
    return boundary_close(lhs.p_repelling, rhs.p_repelling, tol) &&
           boundary_close(lhs.p_attracting, rhs.p_attracting, tol);
}

} // namespace detail

/// Axes of every hyperbolic element with word length <= depth. Words and
/// their inverses, powers, and cyclic rotations share an axis and collapse
/// in the dedup; one class still contributes many axes, one per conjugate.
inline AxesSet axes_set(const Representation& rep, int depth, double tol = kCmpTol,
                        int workers = 1, bool unsafe_depth = false) {
    const Ball ball = enumerate_ball(depth, rep.rank(), unsafe_depth);
    std::vector<std::optional<Geodesic>> raw =
        parallel_map<std::optional<Geodesic>>(ball.words.size(), workers, [&](size_t i) {
            std::optional<Geodesic> out;
            if (!ball.words[i].empty() &&
                word_kind(rep, ball.words[i]) == IsometryKind::hyperbolic)
                out = detail::unoriented(word_axis(rep, ball.words[i]));
            return out;
        });

    AxesSet set{depth, {}};
    for (const auto& geo : raw)
        if (geo) set.axes.push_back(*geo);
    std::sort(set.axes.begin(), set.axes.end(), detail::endpoints_less);
    std::vector<Geodesic> dedup;
    for (const Geodesic& geo : set.axes) {
        if (dedup.empty() || !detail::endpoints_close(dedup.back(), geo, tol))
            dedup.push_back(geo);
    }
    set.axes = std::move(dedup);
    return set;
}

inline bool contains_axis(const AxesSet& set, const Geodesic& q, double tol = kCmpTol) {
    const Geodesic probe = detail::unoriented(q);
    for (const Geodesic& geo : set.axes)
        if (detail::endpoints_close(geo, probe, tol)) return true;
    return false;
}

enum class IsoaxialVerdict { equal_on_truncation, contained, distinct };

struct IsoaxialReport {
    bool forward = false;    // axes(rep1, depth1) inside axes(rep2, depth2)
    bool backward = false;   // axes(rep2, depth2) inside axes(rep1, depth1)
    IsoaxialVerdict verdict = IsoaxialVerdict::distinct;
};

/// Compares truncated axes sets: each side's shallow truncation (depth1)
/// is matched inside the other's deeper one (depth2), so misses witness
/// genuine non-membership rather than truncation-boundary effects.
inline IsoaxialReport isoaxial_compare(const AxesSet& shallow1, const AxesSet& shallow2,
                                       const AxesSet& deep1, const AxesSet& deep2,
                                       double tol = kCmpTol) {
    IsoaxialReport report;
    report.forward = std::all_of(shallow1.axes.begin(), shallow1.axes.end(),
                                 [&](const Geodesic& geo) { return contains_axis(deep2, geo, tol); });
    report.backward = std::all_of(shallow2.axes.begin(), shallow2.axes.end(),
                                  [&](const Geodesic& geo) { return contains_axis(deep1, geo, tol); });
    if (report.forward && report.backward) report.verdict = IsoaxialVerdict::equal_on_truncation;
    else if (report.forward || report.backward) report.verdict = IsoaxialVerdict::contained;
    else report.verdict = IsoaxialVerdict::distinct;
    return report;
}

inline IsoaxialReport isoaxial_compare(const Representation& rep1, const Representation& rep2,
                                       int depth1, int depth2, double tol = kCmpTol,
                                       int workers = 1) {
    return isoaxial_compare(axes_set(rep1, depth1, tol, workers),
                            axes_set(rep2, depth1, tol, workers),
                            axes_set(rep1, depth2, tol, workers),
                            axes_set(rep2, depth2, tol, workers), tol);
}

inline const char* verdict_name(IsoaxialVerdict v) {
    switch (v) {
        case IsoaxialVerdict::equal_on_truncation: return "equal-on-truncation";
        case IsoaxialVerdict::contained: return "contained";
        default: return "distinct";
    }
}

/// Generators of rep evaluated at words; the index-two subgroup preset
/// (a^2, b, a b a^-1) and friends.
inline Representation word_subgroup(const Representation& rep, const std::vector<Word>& words,
                                    const std::string& label) {
    std::vector<Isometry> gens;
    gens.reserve(words.size());
    for (const Word& w : words) gens.push_back(evaluate(rep, w));
    return Representation(gens, label);
}

} // namespace fuchs
