#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "fuchs/halfplane.hpp"
#include "fuchs/errors.hpp"

namespace fuchs {

enum class IsometryKind { hyperbolic, parabolic, elliptic, identity };

inline constexpr double kClassifyTol = 1e-9;

/// Orientation-preserving isometry of the upper half-plane: a real matrix
/// [[a,b],[c,d]] with ad - bc = 1, stored modulo overall sign. The sign is
/// canonicalized so the first entry that is not negligible (row-major) is
/// positive; equality and traces of single elements are therefore only
/// meaningful up to sign, which every formula here respects.
class Isometry {
public:
    Isometry() : a_(1), b_(0), c_(0), d_(1) {}
    Isometry(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
        normalize();
    }

    static Isometry identity() { return Isometry(); }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double det() const { return a_ * d_ - b_ * c_; }
    double trace() const { return a_ + d_; }

    Isometry inverse() const { return Isometry(d_, -b_, -c_, a_); }

    bool is_identity(double tol = kNormTol) const {
        return std::abs(a_ - 1.0) <= tol && std::abs(b_) <= tol &&
               std::abs(c_) <= tol && std::abs(d_ - 1.0) <= tol;
    }

    /// Entrywise agreement modulo sign.
    bool close_to(const Isometry& other, double tol = kCmpTol) const {
        const double dp = std::max({std::abs(a_ - other.a_), std::abs(b_ - other.b_),
                                    std::abs(c_ - other.c_), std::abs(d_ - other.d_)});
        const double dm = std::max({std::abs(a_ + other.a_), std::abs(b_ + other.b_),
                                    std::abs(c_ + other.c_), std::abs(d_ + other.d_)});
        return std::min(dp, dm) <= tol;
    }

    friend std::ostream& operator<<(std::ostream& os, const Isometry& g) {
        return os << "[[" << g.a_ << "," << g.b_ << "],[" << g.c_ << "," << g.d_ << "]]";
    }

private:
    void normalize() {
        const double det = a_ * d_ - b_ * c_;
        // ad - bc is a cancellation; below this level the computed value
        // carries no information and repairing by it would inject noise
        const double noise = 16.0 * std::numeric_limits<double>::epsilon() *
                             (std::abs(a_ * d_) + std::abs(b_ * c_));
        if (det <= 0.0) {
            if (det < -noise)
                throw std::invalid_argument("isometry requires positive determinant");
        } else if (std::abs(det - 1.0) > kNormTol && std::abs(det - 1.0) > noise) {
            const double s = std::sqrt(det);
            a_ /= s; b_ /= s; c_ /= s; d_ /= s;
        }
        const double scale = std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
        const double eps = scale * kNormTol;
        for (double e : {a_, b_, c_, d_}) {
            if (std::abs(e) > eps) {
                if (e < 0.0) { a_ = -a_; b_ = -b_; c_ = -c_; d_ = -d_; }
                break;
            }
        }
    }

    double a_, b_, c_, d_;
};

inline Isometry compose(const Isometry& g, const Isometry& h) {
    return Isometry(g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
                    g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d());
}

inline Isometry conjugate(const Isometry& g, const Isometry& h) {
    return compose(compose(g, h), g.inverse());
}

inline IsometryKind classify(const Isometry& g) {
    if (g.is_identity()) return IsometryKind::identity;
    const double t = std::abs(g.trace());
    if (t > 2.0 + kClassifyTol) return IsometryKind::hyperbolic;
    if (t < 2.0 - kClassifyTol) return IsometryKind::elliptic;
    return IsometryKind::parabolic;
}

inline const char* kind_name(IsometryKind k) {
    switch (k) {
        case IsometryKind::hyperbolic: return "hyperbolic";
        case IsometryKind::parabolic: return "parabolic";
        case IsometryKind::elliptic: return "elliptic";
        default: return "identity";
    }
}

/// |tr g| = 2 cosh(l/2) inverted for hyperbolic g.
inline double translation_length(const Isometry& g) {
    if (classify(g) != IsometryKind::hyperbolic)
        throw not_hyperbolic("translation_length requires a hyperbolic isometry");
    return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

inline BoundaryPoint apply(const Isometry& g, const BoundaryPoint& p) {
    if (p.is_infinity()) {
        if (g.c() == 0.0) return BoundaryPoint::infinity();
        return BoundaryPoint(g.a() / g.c());
    }
    const double den = g.c() * p.value() + g.d();
    if (den == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint((g.a() * p.value() + g.b()) / den);
}

inline HPoint apply(const Isometry& g, const HPoint& p) {
    // (az+b)/(cz+d) expanded over z = x + iy; imaginary part is y/|cz+d|^2.
    const double cx = g.c() * p.x + g.d();
    const double cy = g.c() * p.y;
    const double n2 = cx * cx + cy * cy;
    const double ax = g.a() * p.x + g.b();
    const double ay = g.a() * p.y;
    return HPoint((ax * cx + ay * cy) / n2, p.y / n2);
}

} // namespace fuchs
