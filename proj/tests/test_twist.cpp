#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fuchs/twist.hpp"

using namespace fuchs;

namespace {

bool endpoint_pair_close(const std::pair<BoundaryPoint, BoundaryPoint>& lhs,
                         const std::pair<BoundaryPoint, BoundaryPoint>& rhs, double tol) {
    return boundary_close(lhs.first, rhs.first, tol) &&
           boundary_close(lhs.second, rhs.second, tol);
}

} // namespace

TEST_CASE("twist at time zero is the base representation") {
    const TwistFamily fam(preset_modular_torus());
    const Representation rep0 = twist_rep(fam, 0.0);
    CHECK(rep0.generator(0).close_to(fam.base.generator(0), 1e-15));
    CHECK(rep0.generator(1).close_to(fam.base.generator(1), 1e-15));
}

TEST_CASE("twist by the curve length is the Dehn twist b -> ab") {
    const TwistFamily fam(preset_modular_torus());
    const double la = fam.curve_length();
    const Representation rep = twist_rep(fam, la);
    const Isometry dehn_b = compose(fam.base.generator(0), fam.base.generator(1));
    CHECK(rep.generator(0).close_to(fam.base.generator(0), 1e-12));
    CHECK(rep.generator(1).close_to(dehn_b, 1e-9));

    // trace compatibility with the algebraic Dehn image for longer words
    for (const Word& w : enumerate_ball(4).words) {
        if (w.empty()) continue;
        Word image;
        for (char ch : w) {
            if (ch == 'b') image += "ab";
            else if (ch == 'B') image += "BA";
            else image.push_back(ch);
        }
        CHECK_THAT(word_abs_trace(rep, w),
                   Catch::Matchers::WithinAbs(word_abs_trace(fam.base, freely_reduce(image)), 1e-9));
    }
}

TEST_CASE("twist is a homomorphism family and a flow") {
    const TwistFamily fam(preset_modular_torus());
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> ut(-6.0, 6.0);
    const auto words = enumerate_ball(3).words;
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const double t = ut(rng);
        const Representation rep_t = twist_rep(fam, t);
        const Word w1 = words[pick(rng)], w2 = words[pick(rng)];
        const Isometry lhs = evaluate(rep_t, word_concat(w1, w2));
        const Isometry m1 = evaluate(rep_t, w1), m2 = evaluate(rep_t, w2);
        // identical in exact arithmetic; the float drift scales with the
        // magnitudes the factored route runs through
        auto norm_inf = [](const Isometry& g) {
            return std::max({std::abs(g.a()), std::abs(g.b()), std::abs(g.c()), std::abs(g.d())});
        };
        const double scale = std::max(1.0, norm_inf(m1) * norm_inf(m2));
        CHECK(lhs.close_to(compose(m1, m2), 1e-12 * scale));
    }
    // curve length is preserved along the flow
    for (double t : {-11.0, -3.0, 0.5, 7.0}) {
        CHECK_THAT(std::abs(evaluate(twist_rep(fam, t), Word("a")).trace()),
                   Catch::Matchers::WithinAbs(3.0, 1e-12));
    }
    // rebasing: twisting s after t equals twisting s + t
    for (int trial = 0; trial < 20; ++trial) {
        const double s = ut(rng), t = ut(rng);
        const TwistFamily rebased(twist_rep(fam, t), fam.curve);
        const Representation lhs = twist_rep(rebased, s);
        const Representation rhs = twist_rep(fam, s + t);
        for (const Word& w : {Word("a"), Word("b"), Word("ab"), Word("aBab")})
            CHECK_THAT(word_abs_trace(lhs, w),
                       Catch::Matchers::WithinAbs(word_abs_trace(rhs, w), 1e-9));
    }
}

TEST_CASE("twisted off-curve traces blow up") {
    const TwistFamily fam(preset_modular_torus());
    double prev = 0.0;
    for (double t : {10.0, 20.0, 30.0}) {
        const double tr_b = std::abs(evaluate(twist_rep(fam, t), Word("b")).trace());
        CHECK(tr_b > prev);
        prev = tr_b;
    }
    CHECK(prev > 1e5);
}

TEST_CASE("boundary extension: curve words are fixed") {
    const TwistFamily fam(preset_modular_torus());
    const auto base = boundary_extension(fam, Word("a"), 0.0);
    for (double t : {-9.0, 2.0, 17.0}) {
        CHECK(endpoint_pair_close(boundary_extension(fam, Word("a"), t), base, 1e-12));
        CHECK(endpoint_pair_close(boundary_extension(fam, Word("aa"), t),
                                  boundary_extension(fam, Word("aa"), 0.0), 1e-12));
    }
}

TEST_CASE("boundary extension: base-tile stabilizer words are fixed") {
    // the twisted homomorphism leaves <a, b^-1 a b> untouched, the
    // stabilizer of the tile the lift normalization fixes
    const TwistFamily fam(preset_modular_torus());
    for (const Word& w : {Word("Bab"), Word("aBab"), Word("Baab"), Word("aBAb")}) {
        if (word_kind(fam.base, w) != IsometryKind::hyperbolic) continue;
        const auto base = boundary_extension(fam, w, 0.0);
        for (double t : {-7.0, 3.0, 13.0})
            CHECK(endpoint_pair_close(boundary_extension(fam, w, t), base, 1e-7));
    }
}

TEST_CASE("words conjugate into the curve group ride its lifts") {
    const TwistFamily fam(preset_modular_torus());
    for (double t : {-5.0, 1.0, 9.0}) {
        const Representation rep_t = twist_rep(fam, t);
        const auto ends = boundary_extension(fam, Word("baB"), t);
        const Geodesic expected = apply(evaluate(rep_t, Word("b")), axis(rep_t.generator(0)));
        CHECK(boundary_close(ends.first, expected.p_repelling, 1e-9));
        CHECK(boundary_close(ends.second, expected.p_attracting, 1e-9));
    }
}

TEST_CASE("boundary extension of b converges to curve-lift endpoints") {
    const TwistFamily fam(preset_modular_torus());
    const auto lifts = curve_lift_endpoints(fam, 3);
    double prev_gap = 4.0;
    for (double t : {10.0, 20.0, 30.0}) {
        const auto ends = boundary_extension(fam, Word("b"), t);
        const double gap = std::max(min_chordal_gap(ends.first, lifts),
                                    min_chordal_gap(ends.second, lifts));
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-6);
}

TEST_CASE("tile recursion inserts one translation per crossing") {
    const TwistFamily fam(preset_modular_torus());
    for (double t : {-5.0, -1.0, 1.0, 5.0}) {
        // single crossing: endpoints of T^t rho(b)
        const auto rec = tile_recursion_check(fam, Word("b"), t);
        const Isometry expected =
            compose(translation_along(fam.base.generator(0), t), fam.base.generator(1));
        const Geodesic geo = axis(expected);
        CHECK(boundary_close(rec.first, geo.p_repelling, 1e-9));
        CHECK(boundary_close(rec.second, geo.p_attracting, 1e-9));

        // two crossings: (T^t rho(b))^2
        const auto rec2 = tile_recursion_check(fam, Word("bb"), t);
        const Geodesic geo2 = axis(compose(expected, expected));
        CHECK(boundary_close(rec2.first, geo2.p_repelling, 1e-9));
        CHECK(boundary_close(rec2.second, geo2.p_attracting, 1e-9));
    }
}

TEST_CASE("tile recursion agrees with the twisted homomorphism to length 6") {
    const TwistFamily fam(preset_modular_torus());
    int checked = 0, skipped = 0;
    for (double t : {1.0, -1.0, 5.0, -5.0}) {
        const Representation rep_t = twist_rep(fam, t);
        for (const Word& w : enumerate_ball(6).words) {
            if (w.empty()) continue;
            // skip words within numerical distance of parabolic at this t;
            // their endpoints are not resolvable in double precision
            const double tr = std::abs(evaluate(rep_t, cyclic_reduce(w)).trace());
            if (tr - 2.0 < 1e-6) {
                ++skipped;
                continue;
            }
            const auto lhs = boundary_extension(fam, w, t);
            const auto rhs = tile_recursion_check(fam, w, t);
            const bool ok = endpoint_pair_close(lhs, rhs, 1e-9);
            if (!ok) {
                CAPTURE(w, t, tr);
                CHECK(ok);
            }
            ++checked;
        }
    }
    CHECK(checked > 5000);
    CHECK(skipped < 200);
    CHECK_THROWS_AS(tile_recursion_check(fam, Word("aaaaaab"), 1.0), depth_cap_exceeded);
}
