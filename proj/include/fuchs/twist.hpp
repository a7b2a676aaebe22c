#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "fuchs/ball.hpp"
#include "fuchs/geodesic.hpp"
#include "fuchs/representation.hpp"
#include "fuchs/word.hpp"

namespace fuchs {

inline constexpr int kRecursionWordCap = 6;

/// The simple curve twisted along (the axis class of one generator) and
/// the signed crossing count of every other generator with it. Rank-2
/// default: b crosses a once, positively.
struct TwistCurve {
    int generator = 0;
    std::vector<int> crossings;  // per generator; entry for the curve itself is 0

    static TwistCurve default_rank2() { return TwistCurve{0, {0, 1}}; }
};

/// One-parameter shear family through a base representation.
struct TwistFamily {
    Representation base;
    TwistCurve curve;

    TwistFamily(Representation b, TwistCurve c = TwistCurve::default_rank2())
        : base(std::move(b)), curve(std::move(c)) {
        if (classify(base.generator(curve.generator)) != IsometryKind::hyperbolic)
            throw not_hyperbolic("twist curve generator must be hyperbolic");
    }

    double curve_length() const { return translation_length(base.generator(curve.generator)); }
};

/// Time-t twist: the curve generator is untouched; a generator crossing
/// the curve k times picks up the translation of length k*t along the
/// curve axis, ρ_t(x) = T^{kt} ρ(x). At t = l_a this is the Dehn twist
/// b -> ab.
inline Representation twist_rep(const TwistFamily& fam, double t) {
    const Isometry& curve_image = fam.base.generator(fam.curve.generator);
    std::vector<Isometry> gens;
    gens.reserve(fam.base.rank());
    for (int i = 0; i < fam.base.rank(); ++i) {
        const int k = (i < static_cast<int>(fam.curve.crossings.size())) ? fam.curve.crossings[i] : 0;
        if (i == fam.curve.generator || k == 0 || t == 0.0) {
            gens.push_back(fam.base.generator(i));
        } else {
            gens.push_back(compose(translation_along(curve_image, k * t), fam.base.generator(i)));
        }
    }
    return Representation(gens, fam.base.label() + "@twist", fam.base.perturbation());
}

/// Axis endpoints of the twisted image of w: the twisted homomorphism
/// realizes the boundary extension of the lifted twist on fixed points.
inline std::pair<BoundaryPoint, BoundaryPoint> boundary_extension(const TwistFamily& fam,
                                                                  const Word& w, double t) {
    const Representation rep_t = twist_rep(fam, t);
    if (word_kind(rep_t, w) != IsometryKind::hyperbolic)
        throw not_hyperbolic("word is not hyperbolic at the requested twist time");
    const Geodesic geo = word_axis(rep_t, w);
    return {geo.p_repelling, geo.p_attracting};
}

/// Twisted endpoints by walking the prefix chain of w tile by tile. Each
/// letter of the off-curve generator crosses exactly one curve lift; the
/// crossed edge pulled back to the base tile is the curve axis for a
/// positive crossing and its image under the crossing generator's inverse
/// for a negative one, where the inserted translation runs backwards.
/// Agrees with boundary_extension; the two routes assemble the same
/// isometry through different floating-point paths.
inline std::pair<BoundaryPoint, BoundaryPoint> tile_recursion_check(const TwistFamily& fam,
                                                                    const Word& w, double t) {
    if (static_cast<int>(w.size()) > kRecursionWordCap)
        throw depth_cap_exceeded("tile recursion is a cross-check for short words");
    const Geodesic curve_axis = axis(fam.base.generator(fam.curve.generator));

    Isometry twisted = Isometry::identity();
    for (char ch : w) {
        const int gen = letter_generator(ch);
        const int k = (gen < static_cast<int>(fam.curve.crossings.size()))
                          ? fam.curve.crossings[gen]
                          : 0;
        if (gen == fam.curve.generator || k == 0) {
            twisted = compose(twisted, fam.base.image(ch));
            continue;
        }
        if (!letter_is_inverse(ch)) {
            // crossing away from the base tile: insert the translation
            // along the shared edge, which pulls back to the curve axis
            const Isometry phi = translation_along(curve_axis, k * t);
            twisted = compose(compose(twisted, phi), fam.base.image(ch));
        } else {
            // crossing back: the shared edge pulls back through the
            // generator, and the translation runs in reverse
            const Isometry pulled = fam.base.image(letter_inverse(ch)).inverse();
            const Geodesic edge = apply(pulled, curve_axis);
            const Isometry phi = translation_along(edge, -k * t);
            twisted = compose(compose(twisted, phi), fam.base.image(ch));
        }
    }
    if (classify(twisted) != IsometryKind::hyperbolic)
        throw not_hyperbolic("word is not hyperbolic at the requested twist time");
    const Geodesic geo = axis(twisted);
    return {geo.p_repelling, geo.p_attracting};
}

/// Lift endpoints of the twist curve out to the given conjugator depth;
/// the boundary extension's t -> +-inf limits land on these.
inline std::vector<BoundaryPoint> curve_lift_endpoints(const TwistFamily& fam, int conj_depth) {
    const Geodesic curve_axis = axis(fam.base.generator(fam.curve.generator));
    std::vector<BoundaryPoint> out;
    for (const Word& k : enumerate_ball(conj_depth, fam.base.rank()).words) {
        const Isometry g = evaluate(fam.base, k);
        const Geodesic lift = apply(g, curve_axis);
        out.push_back(lift.p_repelling);
        out.push_back(lift.p_attracting);
    }
    return out;
}

inline double min_chordal_gap(const BoundaryPoint& p, const std::vector<BoundaryPoint>& set) {
    double best = 4.0;
    for (const BoundaryPoint& q : set) best = std::min(best, chordal(p, q));
    return best;
}

} // namespace fuchs
