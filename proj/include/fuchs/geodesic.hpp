#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "fuchs/halfplane.hpp"
#include "fuchs/isometry.hpp"

namespace fuchs {

/// Oriented complete geodesic, stored by its ordered ideal endpoints
/// (repelling first, attracting second when the geodesic is an axis).
struct Geodesic {
    BoundaryPoint p_repelling;
    BoundaryPoint p_attracting;

    Geodesic(BoundaryPoint rep, BoundaryPoint att) : p_repelling(rep), p_attracting(att) {
        if (rep == att) throw std::invalid_argument("geodesic endpoints must be distinct");
    }

    Geodesic reversed() const { return Geodesic(p_attracting, p_repelling); }
};

inline bool same_unoriented(const Geodesic& g1, const Geodesic& g2, double tol = kCmpTol) {
    const bool direct = boundary_close(g1.p_repelling, g2.p_repelling, tol) &&
                        boundary_close(g1.p_attracting, g2.p_attracting, tol);
    const bool flipped = boundary_close(g1.p_repelling, g2.p_attracting, tol) &&
                         boundary_close(g1.p_attracting, g2.p_repelling, tol);
    return direct || flipped;
}

/// Invariant geodesic of a hyperbolic isometry. The fixed points solve
/// c z^2 + (d-a) z - b = 0; when c = 0 one of them is infinity. The
/// attracting one has derivative modulus |cz+d|^-2 < 1.
inline Geodesic axis(const Isometry& g) {
    if (classify(g) != IsometryKind::hyperbolic)
        throw not_hyperbolic("axis requires a hyperbolic isometry");
    if (g.c() == 0.0) {
        const BoundaryPoint finite(g.b() / (g.d() - g.a()));
        // infinity attracts iff |a| > |d|
        if (std::abs(g.a()) > std::abs(g.d()))
            return Geodesic(finite, BoundaryPoint::infinity());
        return Geodesic(BoundaryPoint::infinity(), finite);
    }
    const double tr = g.trace();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0));
    // Quadratic roots via the numerically stable split.
    const double s = (g.a() - g.d() >= 0.0) ? 1.0 : -1.0;
    const double qn = (g.a() - g.d()) + s * disc;
    const double r1 = qn / (2.0 * g.c());
    const double r2 = -2.0 * g.b() / qn;  // product of roots = -b/c
    const double att_r1 = std::abs(g.c() * r1 + g.d());
    const double att_r2 = std::abs(g.c() * r2 + g.d());
    if (att_r1 > att_r2) return Geodesic(BoundaryPoint(r2), BoundaryPoint(r1));
    return Geodesic(BoundaryPoint(r1), BoundaryPoint(r2));
}

inline Geodesic apply(const Isometry& g, const Geodesic& geo) {
    return Geodesic(apply(g, geo.p_repelling), apply(g, geo.p_attracting));
}

namespace detail {

/// Trace of g h g^-1 h^-1 from raw entries. The stored signs of g and h
/// cancel in a commutator, so this is the honest SL(2,R) value, unlike the
/// trace of the sign-canonicalized composed Isometry.
inline double commutator_trace(const Isometry& g, const Isometry& h) {
    double m[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    const double fs[4][2][2] = {
        {{g.a(), g.b()}, {g.c(), g.d()}},
        {{h.a(), h.b()}, {h.c(), h.d()}},
        {{g.d(), -g.b()}, {-g.c(), g.a()}},
        {{h.d(), -h.b()}, {-h.c(), h.a()}},
    };
    for (const auto& f : fs) {
        const double r[2][2] = {
            {m[0][0] * f[0][0] + m[0][1] * f[1][0], m[0][0] * f[0][1] + m[0][1] * f[1][1]},
            {m[1][0] * f[0][0] + m[1][1] * f[1][0], m[1][0] * f[0][1] + m[1][1] * f[1][1]}};
        m[0][0] = r[0][0]; m[0][1] = r[0][1]; m[1][0] = r[1][0]; m[1][1] = r[1][1];
    }
    return m[0][0] + m[1][1];
}

/// The cross-ratio ((w-y)(x-z)) / ((w-z)(x-y)) with the two factors that
/// contain an infinite point cancelled symbolically.
inline double cross_ratio(const BoundaryPoint& w, const BoundaryPoint& x,
                          const BoundaryPoint& y, const BoundaryPoint& z) {
    auto diff = [](const BoundaryPoint& u, const BoundaryPoint& v) -> std::optional<double> {
        if (u.is_infinity() || v.is_infinity()) return std::nullopt;
        return u.value() - v.value();
    };
    double num = 1.0, den = 1.0;
    if (auto f = diff(w, y)) num *= *f;
    if (auto f = diff(x, z)) num *= *f;
    if (auto f = diff(w, z)) den *= *f;
    if (auto f = diff(x, y)) den *= *f;
    return num / den;
}

inline bool in_ccw_arc(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& x) {
    return ccw(a, x, b);
}

} // namespace detail

inline bool shares_endpoint(const Geodesic& g1, const Geodesic& g2, double tol = kNormTol) {
    for (const BoundaryPoint& e1 : {g1.p_repelling, g1.p_attracting})
        for (const BoundaryPoint& e2 : {g2.p_repelling, g2.p_attracting})
            if (boundary_close(e1, e2, tol)) return true;
    return false;
}

namespace detail {

/// Core of the cross-ratio angle for interleaved pairs, no degeneracy
/// guards. Sweeps toward the 0/pi limits need it: there the endpoints of
/// distinct geodesics come numerically closer than any shared-endpoint
/// tolerance while the angle is still perfectly conditioned.
inline double angle_cross_ratio_unchecked(const Geodesic& g1, const Geodesic& g2) {
    const double lambda = cross_ratio(g1.p_attracting, g1.p_repelling,
                                      g2.p_attracting, g2.p_repelling);
    // For interleaved endpoint pairs the cross-ratio is non-positive.
    const double theta_raw = 2.0 * std::atan(std::sqrt(std::max(0.0, -lambda)));
    const bool att_left = in_ccw_arc(g1.p_attracting, g1.p_repelling, g2.p_attracting);
    return att_left ? theta_raw : M_PI - theta_raw;
}

} // namespace detail

/// Endpoint pairs interleave in the circular order iff the geodesics cross.
inline bool interleaved(const Geodesic& g1, const Geodesic& g2) {
    const bool c1 = detail::in_ccw_arc(g1.p_repelling, g1.p_attracting, g2.p_repelling);
    const bool c2 = detail::in_ccw_arc(g1.p_repelling, g1.p_attracting, g2.p_attracting);
    return c1 != c2;
}

namespace detail {

/// Semicircle / vertical-line intersection for a pair already known to
/// interleave; nullopt when the circles are too close to resolve.
inline std::optional<HPoint> crossing_point_unchecked(const Geodesic& g1, const Geodesic& g2) {
    struct Arc { bool vertical; double c; double r; };
    auto arc_of = [](const Geodesic& g) -> Arc {
        if (g.p_repelling.is_infinity()) return {true, g.p_attracting.value(), 0.0};
        if (g.p_attracting.is_infinity()) return {true, g.p_repelling.value(), 0.0};
        const double u = g.p_repelling.value(), v = g.p_attracting.value();
        return {false, 0.5 * (u + v), 0.5 * std::abs(u - v)};
    };
    Arc a1 = arc_of(g1), a2 = arc_of(g2);
    if (a1.vertical && a2.vertical) return std::nullopt;
    if (a1.vertical) std::swap(a1, a2);
    double x;
    if (a2.vertical) {
        x = a2.c;
    } else {
        x = (a1.r * a1.r - a2.r * a2.r + a2.c * a2.c - a1.c * a1.c) / (2.0 * (a2.c - a1.c));
    }
    const double y2 = a1.r * a1.r - (x - a1.c) * (x - a1.c);
    if (!(y2 > 0.0)) return std::nullopt;
    return HPoint(x, std::sqrt(y2));
}

} // namespace detail

/// Intersection of the two Euclidean semicircles / vertical lines.
inline std::optional<HPoint> crossing(const Geodesic& g1, const Geodesic& g2) {
    if (shares_endpoint(g1, g2))
        throw shared_endpoint("geodesics share an ideal endpoint");
    if (!interleaved(g1, g2)) return std::nullopt;
    return detail::crossing_point_unchecked(g1, g2);
}

/// Crossing angle from g1 to g2, measured counter-clockwise from the line
/// of g1 to the line of g2 at the intersection; always in (0, pi) and
/// independent of the two orientations. tan^2(theta/2) is the absolute
/// value of the endpoint cross-ratio; the supplement is resolved by a side
/// test of g2's attracting endpoint against oriented g1.
inline double angle_cross_ratio(const Geodesic& g1, const Geodesic& g2) {
    if (shares_endpoint(g1, g2))
        throw shared_endpoint("geodesics share an ideal endpoint");
    if (!interleaved(g1, g2)) throw no_crossing("geodesics do not cross");
    return detail::angle_cross_ratio_unchecked(g1, g2);
}

/// sin^2 of the crossing angle of the axes straight from traces:
///   sin^2 theta = 4 (2 - tr[g,h]) / ((tr^2 g - 4)(tr^2 h - 4)).
/// Returns the acute representative; the sine cannot see the supplement.
inline double angle_trace(const Isometry& g, const Isometry& h) {
    if (classify(g) != IsometryKind::hyperbolic || classify(h) != IsometryKind::hyperbolic)
        throw not_hyperbolic("angle_trace requires hyperbolic isometries");
    const double tg2 = g.trace() * g.trace();
    const double th2 = h.trace() * h.trace();
    const double tc = detail::commutator_trace(g, h);
    const double rhs = 4.0 * (2.0 - tc) / ((tg2 - 4.0) * (th2 - 4.0));
    if (rhs < -kCmpTol || rhs > 1.0 + kCmpTol)
        throw axes_disjoint("trace relation outside [0,1]: axes do not cross");
    if (!interleaved(axis(g), axis(h)))
        throw axes_disjoint("axes do not interleave");
    return std::asin(std::sqrt(std::clamp(rhs, 0.0, 1.0)));
}

/// Length of the common perpendicular between disjoint geodesics:
/// tanh^2(d/2) equals the endpoint cross-ratio in the pairing that lies in
/// (0,1); crossing or asymptotic pairs give zero.
inline double disjoint_distance(const Geodesic& g1, const Geodesic& g2) {
    double chi = detail::cross_ratio(g1.p_repelling, g1.p_attracting,
                                     g2.p_repelling, g2.p_attracting);
    if (chi <= 0.0) return 0.0;
    if (chi > 1.0) chi = 1.0 / chi;
    return 2.0 * std::atanh(std::sqrt(chi));
}

/// Isometry carrying (0 -> inf) to the oriented geodesic, det +1.
inline Isometry axis_frame(const Geodesic& geo) {
    if (geo.p_attracting.is_infinity()) return Isometry(1.0, geo.p_repelling.value(), 0.0, 1.0);
    if (geo.p_repelling.is_infinity()) return Isometry(geo.p_attracting.value(), -1.0, 1.0, 0.0);
    const double p = geo.p_repelling.value(), q = geo.p_attracting.value();
    if (q > p) return Isometry(q, p, 1.0, 1.0);
    return Isometry(-q, p, -1.0, 1.0);
}

/// The hyperbolic translation of signed length t along the oriented
/// geodesic (t > 0 moves toward the attracting endpoint); t = 0 gives the
/// identity.
inline Isometry translation_along(const Geodesic& geo, double t) {
    if (t == 0.0) return Isometry::identity();
    const Isometry frame = axis_frame(geo);
    const Isometry diag(std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0));
    return compose(compose(frame, diag), frame.inverse());
}

/// Same-axis one-parameter subgroup through a hyperbolic isometry.
inline Isometry translation_along(const Isometry& g, double t) {
    if (classify(g) != IsometryKind::hyperbolic)
        throw not_hyperbolic("translation_along requires a hyperbolic isometry");
    return translation_along(axis(g), t);
}

/// True iff the endpoints of g1 and of g2 lie in different components of
/// the boundary minus the endpoints of sep.
inline bool separates(const Geodesic& sep, const Geodesic& g1, const Geodesic& g2) {
    auto side = [&](const BoundaryPoint& x) {
        return detail::in_ccw_arc(sep.p_repelling, sep.p_attracting, x);
    };
    const bool s1 = side(g1.p_repelling);
    if (side(g1.p_attracting) != s1) return false;
    const bool s2 = side(g2.p_repelling);
    if (side(g2.p_attracting) != s2) return false;
    return s1 != s2;
}

} // namespace fuchs
