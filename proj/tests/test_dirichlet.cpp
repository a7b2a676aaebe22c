#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fuchs/dirichlet.hpp"

using namespace fuchs;

TEST_CASE("reduce_point fixes the center") {
    const Representation rep = preset_modular_torus();
    const auto [reduced, word] = reduce_point(rep, HPoint::center());
    CHECK(word.empty());
    CHECK(reduced.x == 0.0);
    CHECK(reduced.y == 1.0);
}

TEST_CASE("reduce_point pulls 4i back to i along a diagonal generator") {
    const Representation rep({Isometry(2, 0, 0, 0.5), Isometry(1, -1, -1, 2)}, "diag");
    const auto [reduced, word] = reduce_point(rep, HPoint(0.0, 4.0));
    CHECK_THAT(reduced.x, Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(reduced.y, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(word == "A");
}

TEST_CASE("reduced points are generator-minimal and the word maps input to output") {
    const Representation rep = preset_modular_torus();
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    std::uniform_real_distribution<double> uy(0.05, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const HPoint p(ux(rng), uy(rng));
        const auto [reduced, word] = reduce_point(rep, p);
        const HPoint mapped = apply(evaluate(rep, word), p);
        CHECK_THAT(mapped.x, Catch::Matchers::WithinAbs(reduced.x, 1e-9));
        CHECK_THAT(mapped.y, Catch::Matchers::WithinAbs(reduced.y, 1e-9));
        const double d0 = distance(reduced, HPoint::center());
        for (char g : {'a', 'A', 'b', 'B'}) {
            const HPoint moved = apply(rep.image(g), reduced);
            CHECK(d0 <= distance(moved, HPoint::center()) + 1e-9);
        }
    }
}

TEST_CASE("canonical orbit point is stable across the orbit") {
    const Representation rep = preset("perturbed_torus(0.35)");
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    std::uniform_real_distribution<double> uy(0.2, 2.0);
    const auto movers = enumerate_ball(3).words;
    std::uniform_int_distribution<size_t> pick(0, movers.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const HPoint p(ux(rng), uy(rng));
        const HPoint canon = canonical_orbit_point(rep, p);
        const HPoint translated = apply(evaluate(rep, movers[pick(rng)]), p);
        const HPoint canon2 = canonical_orbit_point(rep, translated);
        CHECK_THAT(canon2.x, Catch::Matchers::WithinAbs(canon.x, 1e-7));
        CHECK_THAT(canon2.y, Catch::Matchers::WithinAbs(canon.y, 1e-7));
    }
}

TEST_CASE("dirichlet domain contains its center and reduced points") {
    const Representation rep = preset_modular_torus();
    const DirichletDomain dom = make_dirichlet(rep);
    CHECK(dom.contains(dom.center));
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_real_distribution<double> uy(0.1, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const HPoint p(ux(rng), uy(rng));
        CHECK(dom.contains(reduce_point(rep, p).first));
    }
}
