#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fuchs/sweep.hpp"

using namespace fuchs;

TEST_CASE("grid spec enumerates inclusive endpoints") {
    const GridSpec grid{-1.0, 1.0, 0.5};
    const auto pts = grid.points();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == -1.0);
    CHECK(pts.back() == 1.0);
    CHECK_THROWS_AS((GridSpec{1.0, -1.0, 0.5}.points()), config_error);

    // a step that does not divide the range never overshoots
    const auto ragged = GridSpec{0.0, 1.8, 0.5}.points();
    REQUIRE(ragged.size() == 5);
    CHECK(ragged[3] == 1.5);
    CHECK(ragged.back() == 1.8);
    for (double t : ragged) CHECK(t <= 1.8 + 1e-12);
}

TEST_CASE("simple pair sweep runs the full range with monotone tails") {
    const TwistFamily fam(preset_modular_torus());
    const SweepReport report = angle_sweep(fam, Word("a"), Word("b"), Word(), GridSpec{-30, 30, 0.25});
    REQUIRE(report.lost == 0);
    CHECK(report.angles.front() < 0.1);
    CHECK(report.angles.back() > M_PI - 0.1);
    CHECK(report.inf < 0.01);
    CHECK(report.sup > M_PI - 0.01);
    // monotone over the last 10 units at both ends
    for (size_t i = 0; i + 1 < report.grid.size(); ++i) {
        if (report.grid[i] >= 20.0) CHECK(report.angles[i + 1] > report.angles[i]);
        if (report.grid[i + 1] <= -20.0) CHECK(report.angles[i + 1] > report.angles[i]);
    }
    // intermediate values are attained on the sampled grid
    for (double target : {0.5, 1.0, 1.5708, 2.2, 2.8}) {
        bool bracketed = false;
        for (size_t i = 0; i + 1 < report.grid.size() && !bracketed; ++i)
            if ((report.angles[i] - target) * (report.angles[i + 1] - target) <= 0.0)
                bracketed = true;
        CHECK(bracketed);
    }
}

TEST_CASE("generic pairs stay bounded away from pi") {
    const TwistFamily fam(preset_modular_torus());
    const GridSpec grid{-30, 30, 0.25};
    struct Case {
        Word w1, w2, conj;
    };
    for (const Case& c : {Case{"ab", "aab", ""}, Case{"b", "ab", ""}, Case{"aB", "aab", ""}}) {
        const SweepReport report = angle_sweep(fam, c.w1, c.w2, c.conj, grid);
        CAPTURE(c.w1, c.w2);
        CHECK(report.lost == 0);
        const double delta = M_PI - report.sup;
        CHECK(delta > 0.05);
        // endpoint-gap consistency: tan(sup/2) <= 2 * (2/delta2)
        CHECK(std::tan(report.sup / 2.0) <= 2.0 * (2.0 / std::max(report.delta2, 1e-12)));
    }
}

TEST_CASE("simple sweep dominates every generic sweep") {
    const TwistFamily fam(preset_modular_torus());
    const GridSpec grid{-30, 30, 0.5};
    const double simple_sup = angle_sweep(fam, Word("a"), Word("b"), Word(), grid).sup;
    CHECK(simple_sup > angle_sweep(fam, Word("ab"), Word("aab"), Word(), grid).sup + 0.1);
    CHECK(simple_sup > angle_sweep(fam, Word("b"), Word("ab"), Word(), grid).sup + 0.1);
}

TEST_CASE("tile-stabilizer pairs have constant angle") {
    const TwistFamily fam(preset_modular_torus());
    // both words fixed elementwise by the twist; found by searching small
    // products of a and b^-1 a b for a crossing pair
    const Word w1("aaBab"), w2("aBaba");
    const Representation base = fam.base;
    REQUIRE(word_kind(base, w1) == IsometryKind::hyperbolic);
    REQUIRE(word_kind(base, w2) == IsometryKind::hyperbolic);
    REQUIRE(interleaved(word_axis(base, w1), word_axis(base, w2)));
    const SweepReport report = angle_sweep(fam, w1, w2, Word(), GridSpec{-20, 20, 2.5});
    CHECK(report.lost == 0);
    CHECK(report.sup - report.inf < 1e-6);
    // endpoints never move, so all four stay uniformly apart and the
    // two-sided cross-ratio bound applies: delta4/2 <= tan(theta/2) <= 2/delta4
    CHECK(report.four_edge_type);
    CHECK(report.delta4 / 2.0 <= std::tan(report.sup / 2.0));
    CHECK(std::tan(report.sup / 2.0) <= 2.0 / report.delta4);
}

TEST_CASE("sweep rejects non-crossing base pairs") {
    const TwistFamily fam(preset_modular_torus());
    CHECK_THROWS_AS(angle_sweep(fam, Word("a"), Word("baB"), Word(), GridSpec{-1, 1, 0.5}),
                    no_crossing_at_base);
    const TwistFamily schottky(preset("schottky(2,2,9)"));
    CHECK_THROWS_AS(angle_sweep(schottky, Word("a"), Word("b"), Word(), GridSpec{-1, 1, 0.5}),
                    no_crossing_at_base);
}

TEST_CASE("separation sweep diverges along the twist") {
    const TwistFamily fam(preset_modular_torus());
    const GridSpec grid{0.0, 30.0, 10.0};
    const auto distances = separation_sweep(fam, Word("baB"), Word("Bab"), grid);
    REQUIRE(distances.size() == 4);
    CHECK(distances[0] > 0.0);
    for (size_t i = 0; i + 1 < distances.size(); ++i) CHECK(distances[i + 1] > distances[i]);
    CHECK(distances.back() > 2.0 * distances.front());
}

TEST_CASE("separation sweep validates its precondition") {
    const TwistFamily fam(preset_modular_torus());
    // crossing pair
    CHECK_THROWS_AS(separation_sweep(fam, Word("a"), Word("b"), GridSpec{0, 1, 1}),
                    not_separated);
    // disjoint but on the same side of every curve lift
    const TwistFamily schottky(preset("schottky(2,2,40)"));
    CHECK_THROWS_AS(separation_sweep(schottky, Word("b"), Word("ab"), GridSpec{0, 1, 1}),
                    not_separated);
}
