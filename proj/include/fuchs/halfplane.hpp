#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fuchs/errors.hpp"

namespace fuchs {

inline constexpr double kNormTol = 1e-12;   // matrix/identity comparisons
inline constexpr double kCmpTol  = 1e-9;    // default value comparisons

/// A point of the ideal boundary R u {inf}. Finite points are totally
/// ordered; the point at infinity compares greatest, closing the circle.
class BoundaryPoint {
public:
    constexpr BoundaryPoint() : value_(0.0), infinite_(true) {}
    constexpr explicit BoundaryPoint(double x) : value_(x), infinite_(false) {}

    static constexpr BoundaryPoint infinity() { return BoundaryPoint(); }

    constexpr bool is_infinity() const { return infinite_; }
    double value() const {
        if (infinite_) throw std::logic_error("boundary point at infinity has no finite value");
        return value_;
    }

    friend constexpr bool operator<(const BoundaryPoint& lhs, const BoundaryPoint& rhs) {
        if (lhs.infinite_) return false;
        if (rhs.infinite_) return true;
        return lhs.value_ < rhs.value_;
    }
    friend constexpr bool operator==(const BoundaryPoint& lhs, const BoundaryPoint& rhs) {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ && rhs.infinite_;
        return lhs.value_ == rhs.value_;
    }

private:
    double value_;
    bool infinite_;
};

/// Distance in the chordal metric of the boundary circle (Cayley image on
/// the unit circle). Bounded by 2, symmetric, finite at infinity.
inline double chordal(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.is_infinity() && y.is_infinity()) return 0.0;
    if (x.is_infinity()) return 2.0 / std::sqrt(1.0 + y.value() * y.value());
    if (y.is_infinity()) return 2.0 / std::sqrt(1.0 + x.value() * x.value());
    return 2.0 * std::abs(x.value() - y.value()) /
           std::sqrt((1.0 + x.value() * x.value()) * (1.0 + y.value() * y.value()));
}

/// Mixed absolute/relative closeness of boundary points.
inline bool boundary_close(const BoundaryPoint& x, const BoundaryPoint& y, double tol) {
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
    const double scale = std::max({1.0, std::abs(x.value()), std::abs(y.value())});
    return std::abs(x.value() - y.value()) <= tol * scale;
}

/// True iff traversing the boundary circle counter-clockwise starting at a
/// meets b strictly before c. Counter-clockwise means increasing through
/// the reals and wrapping through infinity.
inline bool ccw(const BoundaryPoint& a, const BoundaryPoint& b, const BoundaryPoint& c) {
    if (a.is_infinity()) return b < c;
    if (b.is_infinity()) return c < a;
    if (c.is_infinity()) return a < b;
    const double x = a.value(), y = b.value(), z = c.value();
    return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

/// Point of the open upper half-plane, y strictly positive.
struct HPoint {
    double x;
    double y;

    HPoint(double px, double py) : x(px), y(py) {
        if (!(y > 0.0)) throw std::invalid_argument("HPoint requires y > 0");
    }

    static HPoint center() { return HPoint(0.0, 1.0); }
};

/// Hyperbolic distance, d = arccosh(1 + |p-q|^2 / (2 y_p y_q)).
inline double distance(const HPoint& p, const HPoint& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    return std::acosh(std::max(1.0, arg));
}

} // namespace fuchs
