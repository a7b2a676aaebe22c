#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fuchs/ball.hpp"
#include "fuchs/representation.hpp"

using namespace fuchs;

TEST_CASE("evaluate walks generator images left to right") {
    const Representation rep = preset_modular_torus();
    CHECK(evaluate(rep, Word("")).is_identity());
    CHECK(evaluate(rep, Word("a")).close_to(Isometry(1, 1, 1, 2), 1e-15));
    // matrix product oracle: [[1,1],[1,2]] * [[1,-1],[-1,2]] = [[0,1],[-1,3]]
    CHECK(evaluate(rep, Word("ab")).close_to(Isometry(0, 1, -1, 3), 1e-15));
    CHECK(evaluate(rep, Word("aA")).is_identity());
}

TEST_CASE("modular torus preset anchors") {
    const Representation rep = preset("modular_torus");
    CHECK(rep.generator(0).trace() == 3.0);
    CHECK(rep.generator(1).trace() == 3.0);
    CHECK(rep.generators_hyperbolic());
    CHECK_THAT(detail::commutator_trace(rep.generator(0), rep.generator(1)),
               Catch::Matchers::WithinAbs(-2.0, 1e-15));
    CHECK(word_kind(rep, Word("abAB")) == IsometryKind::parabolic);
    CHECK(rep.jorgensen_spot_check());
}

TEST_CASE("modular torus words have integer entries") {
    const Representation rep = preset_modular_torus();
    for (const Word& w : enumerate_ball(6).words) {
        const Isometry m = evaluate(rep, w);
        for (double e : {m.a(), m.b(), m.c(), m.d()})
            CHECK(std::abs(e - std::round(e)) <= 1e-9);
    }
}

TEST_CASE("trace is constant over random conjugates") {
    const Representation rep = preset_modular_torus();
    std::mt19937_64 rng(59);
    const auto conjugators = enumerate_ball(4).words;
    std::uniform_int_distribution<size_t> pick(0, conjugators.size() - 1);
    const auto words = enumerate_ball(3).words;
    std::uniform_int_distribution<size_t> pick_w(1, words.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const Word w = words[pick_w(rng)];
        const double base = word_abs_trace(rep, w);
        const Word k = conjugators[pick(rng)];
        const Word conj = word_concat(word_concat(k, w), word_inverse(k));
        CHECK_THAT(word_abs_trace(rep, conj), Catch::Matchers::WithinAbs(base, 1e-9));
    }
}

TEST_CASE("perturbed torus splits the generator traces") {
    const Representation rep = preset("perturbed_torus(0.35)");
    CHECK(rep.perturbation().has_value());
    CHECK(rep.generators_hyperbolic());
    CHECK(std::abs(rep.generator(0).trace()) == 3.0);
    CHECK(std::abs(std::abs(rep.generator(1).trace()) - 3.0) > 0.05);
    // the shear fixes the cusp: commutator trace stays at -2 (mod sign)
    CHECK_THAT(std::abs(detail::commutator_trace(rep.generator(0), rep.generator(1))),
               Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK(word_kind(rep, Word("abAB")) == IsometryKind::parabolic);
    CHECK(rep.jorgensen_spot_check());
    // t = 0 reproduces the base exactly
    const Representation base = preset("perturbed_torus(0)");
    CHECK(base.generator(1).close_to(preset_modular_torus().generator(1), 1e-15));
}

TEST_CASE("schottky preset has disjoint axes") {
    const Representation rep = preset("schottky(2,2,6)");
    CHECK(rep.generators_hyperbolic());
    CHECK_THAT(translation_length(rep.generator(0)),
               Catch::Matchers::WithinAbs(std::log(2.0), 1e-12));
    const Geodesic a = axis(rep.generator(0));
    const Geodesic b = axis(rep.generator(1));
    CHECK_FALSE(interleaved(a, b));
    CHECK_FALSE(crossing(a, b).has_value());
    CHECK_THAT(a.p_repelling.value(), Catch::Matchers::WithinAbs(-1.0, 1e-12));
    CHECK_THAT(b.p_attracting.value(), Catch::Matchers::WithinAbs(7.0, 1e-12));
}

TEST_CASE("unknown presets are rejected") {
    CHECK_THROWS_AS(preset("flat_torus"), unknown_preset);
    CHECK_THROWS_AS(preset("schottky(2)"), unknown_preset);
    CHECK_THROWS_AS(preset("perturbed_torus(x)"), unknown_preset);
}

TEST_CASE("word_axis matches the axis of the evaluated matrix") {
    const Representation rep = preset_modular_torus();
    for (const Word& w : enumerate_ball(4).words) {
        if (word_kind(rep, w) != IsometryKind::hyperbolic) continue;
        const Geodesic stable = word_axis(rep, w);
        const Geodesic direct = axis(evaluate(rep, w));
        CHECK(boundary_close(stable.p_repelling, direct.p_repelling, 1e-9));
        CHECK(boundary_close(stable.p_attracting, direct.p_attracting, 1e-9));
    }
}
