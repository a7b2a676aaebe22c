#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fuchs/axes.hpp"

using namespace fuchs;

TEST_CASE("modular torus depth-1 axes: the golden pair") {
    const AxesSet set = axes_set(preset_modular_torus(), 1);
    REQUIRE(set.axes.size() == 2);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK_THAT(set.axes[0].p_repelling.value(),
               Catch::Matchers::WithinAbs(-golden - 1.0, 1e-12));
    CHECK_THAT(set.axes[0].p_attracting.value(), Catch::Matchers::WithinAbs(golden, 1e-12));
    CHECK_THAT(set.axes[1].p_repelling.value(), Catch::Matchers::WithinAbs(-golden, 1e-12));
    CHECK_THAT(set.axes[1].p_attracting.value(),
               Catch::Matchers::WithinAbs(golden + 1.0, 1e-12));
}

TEST_CASE("powers and inverses collapse onto the same axis") {
    const Representation rep = preset_modular_torus();
    const AxesSet d1 = axes_set(rep, 1);
    const AxesSet d2 = axes_set(rep, 2);
    for (const Geodesic& geo : d1.axes) CHECK(contains_axis(d2, geo));
    // twelve hyperbolic words of length two, but aa/AA collapse onto the
    // a-axis, bb/BB onto the b-axis, and each mixed word onto its inverse:
    // six geodesics in all
    CHECK(d2.axes.size() == 6);
}

TEST_CASE("axes set is equivariant under conjugation of the representation") {
    const Representation rep = preset_modular_torus();
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 5; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (a * d - b * c <= 0.05) { --trial; continue; }
        const Isometry g(a, b, c, d);
        const AxesSet base = axes_set(rep, 3);
        const AxesSet moved = axes_set(conjugate_representation(rep, g), 3);
        REQUIRE(base.axes.size() == moved.axes.size());
        for (const Geodesic& geo : base.axes)
            CHECK(contains_axis(moved, apply(g, geo), 1e-9));
    }
}

TEST_CASE("isoaxial verdicts") {
    const Representation rep = preset_modular_torus();
    // self comparison at matched depths
    CHECK(isoaxial_compare(rep, rep, 3, 3).verdict == IsoaxialVerdict::equal_on_truncation);

    // group versus inner conjugate: the deep sets absorb the word-length
    // overhead of the conjugation
    const Representation conj = conjugate_representation(rep, evaluate(rep, Word("ab")));
    CHECK(isoaxial_compare(conj, rep, 2, 6).verdict == IsoaxialVerdict::equal_on_truncation);

    // the index-two subgroup a^2, b, a b a^-1 is isoaxial with the full
    // group: Schreier rewriting keeps subgroup word lengths within the
    // 3x dilation, in both directions
    const Representation sub =
        word_subgroup(rep, {Word("aa"), Word("b"), Word("abA")}, "index2");
    const IsoaxialReport finite_index = isoaxial_compare(sub, rep, 2, 6);
    CHECK(finite_index.forward);
    CHECK(finite_index.backward);
    CHECK(finite_index.verdict == IsoaxialVerdict::equal_on_truncation);

    // an infinite-index subgroup is contained, strictly: no power of ab
    // lands in <a^2, b^2>, so the ab-axis never shows up
    const Representation thin = word_subgroup(rep, {Word("aa"), Word("bb")}, "thin");
    const IsoaxialReport strict = isoaxial_compare(thin, rep, 2, 6);
    CHECK(strict.forward);
    CHECK_FALSE(strict.backward);
    CHECK(strict.verdict == IsoaxialVerdict::contained);

    // unrelated groups are distinct
    const Representation schottky = preset("schottky(2,2,6)");
    CHECK(isoaxial_compare(schottky, rep, 2, 4).verdict == IsoaxialVerdict::distinct);
}

TEST_CASE("axes set is independent of the worker count") {
    const Representation rep = preset("perturbed_torus(0.35)");
    const AxesSet one = axes_set(rep, 4, 1e-9, 1);
    const AxesSet four = axes_set(rep, 4, 1e-9, 4);
    REQUIRE(one.axes.size() == four.axes.size());
    for (size_t i = 0; i < one.axes.size(); ++i) {
        CHECK(one.axes[i].p_repelling == four.axes[i].p_repelling);
        CHECK(one.axes[i].p_attracting == four.axes[i].p_attracting);
    }
}

TEST_CASE("subgroup axes monotonicity: depth d inside depth 3d") {
    const Representation rep = preset_modular_torus();
    const Representation sub =
        word_subgroup(rep, {Word("aa"), Word("b"), Word("abA")}, "index2");
    for (int d : {1, 2}) {
        const AxesSet inner = axes_set(sub, d);
        const AxesSet outer = axes_set(rep, 3 * d);
        for (const Geodesic& geo : inner.axes) CHECK(contains_axis(outer, geo, 1e-9));
    }
}
