#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefcone/double_description.hpp"
#include "testutil.hpp"

using namespace prefcone;

TEST_CASE("strictly_feasible: contradictory strict pair is infeasible") {
    LinearSystem sys(2);
    sys.add_strict(testutil::vec({1, 0}));
    sys.add_strict(testutil::vec({-1, 0}));
    CHECK(!strictly_feasible(sys));
}

TEST_CASE("strictly_feasible: coordinate case") {
    LinearSystem sys(2);
    sys.add_eq(testutil::vec({1, 0}));
    sys.add_strict(testutil::vec({0, 1}));
    const auto x = strictly_feasible(sys);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 0);
    CHECK((*x)[1] > 0);
}

TEST_CASE("strictly_feasible: complete against rejection sampling on a rational grid") {
    testutil::Rng rng(31);
    int feasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        LinearSystem sys(n);
        const int strict = 1 + static_cast<int>(rng() % 3);
        const int weak = static_cast<int>(rng() % 2);
        const int eqs = static_cast<int>(rng() % 2);
        for (int i = 0; i < strict; ++i) sys.add_strict(testutil::rnd_vector(rng, n, 2, 1));
        for (int i = 0; i < weak; ++i) sys.add_weak(testutil::rnd_vector(rng, n, 2, 1));
        for (int i = 0; i < eqs; ++i) sys.add_eq(testutil::rnd_vector(rng, n, 2, 1));

        const auto solved = strictly_feasible(sys);
        if (solved) {
            ++feasible_seen;
            CHECK(sys.satisfied_by(*solved));
        }
        // Grid oracle: any sampled rational point satisfying the system forces
        // the solver to have succeeded.
        bool grid_hit = false;
        for (int s = 0; s < 150 && !grid_hit; ++s) {
            RatVector pt(static_cast<std::size_t>(n));
            for (Rational& x : pt) {
                const int num = static_cast<int>(rng() % 9) - 4;
                const int den = 1 + static_cast<int>(rng() % 8);
                x = Rational(num, den);
            }
            grid_hit = sys.satisfied_by(pt);
        }
        if (grid_hit) CHECK(solved.has_value());
    }
    CHECK(feasible_seen > 20); // the sweep must exercise both outcomes
}

TEST_CASE("simplex pivot count is finite and instrumented") {
    testutil::Rng rng(37);
    LpStats stats;
    for (int trial = 0; trial < 50; ++trial) {
        LinearSystem sys(3);
        for (int i = 0; i < 4; ++i) sys.add_strict(testutil::rnd_vector(rng, 3, 2, 1));
        (void)strictly_feasible(sys, &stats);
    }
    CHECK(stats.pivots > 0);
    CHECK(stats.pivots < 50 * 200); // Bland's rule: no cycling, small bases
}

TEST_CASE("dual_description: orthant and line") {
    GeneratorCone quad(2);
    quad.rays = {testutil::vec({1, 0}), testutil::vec({0, 1})};
    const LinearSystem h = dual_description(quad);
    CHECK(h.eq.row_count() == 0);
    REQUIRE(h.weak.row_count() == 2);
    CHECK(h.weak.rows[0] == testutil::vec({0, 1}));
    CHECK(h.weak.rows[1] == testutil::vec({1, 0}));

    GeneratorCone line(2);
    line.lines = {testutil::vec({1, 0})};
    const LinearSystem hl = dual_description(line);
    REQUIRE(hl.eq.row_count() == 1);
    CHECK(hl.eq.rows[0] == testutil::vec({0, 1}));
    CHECK(hl.weak.row_count() == 0);
}

TEST_CASE("primal_description: halfplane has one ray and one line") {
    LinearSystem sys(2);
    sys.add_weak(testutil::vec({1, 0}));
    const GeneratorCone g = primal_description(sys);
    REQUIRE(g.rays.size() == 1);
    CHECK(g.rays[0] == testutil::vec({1, 0}));
    REQUIRE(g.lines.size() == 1);
    CHECK(g.lines[0] == testutil::vec({0, 1}));
}

namespace {

GeneratorCone random_cone(testutil::Rng& rng) {
    const int n = 2 + static_cast<int>(rng() % 3);
    GeneratorCone g(n);
    const int rays = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < rays; ++i) {
        RatVector r = testutil::rnd_vector(rng, n, 2, 1);
        if (!is_zero(r)) g.rays.push_back(std::move(r));
    }
    if (rng() % 3 == 0) {
        RatVector l = testutil::rnd_vector(rng, n, 2, 1);
        if (!is_zero(l)) g.lines.push_back(std::move(l));
    }
    if (g.is_zero_cone()) g.rays.push_back(unit_vector(n, 0));
    return g;
}

} // namespace

TEST_CASE("double-description round-trip preserves the point set") {
    testutil::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const GeneratorCone g = random_cone(rng);
        const LinearSystem h = dual_description(g);
        const GeneratorCone back = primal_description(h);

        // Mutual containment via the membership LP.
        for (const RatVector& r : back.rays) CHECK(cone_contains(g, r));
        for (const RatVector& l : back.lines) {
            CHECK(cone_contains(g, l));
            CHECK(cone_contains(g, negate(l)));
        }
        for (const RatVector& r : g.rays) CHECK(cone_contains(back, r));
        for (const RatVector& l : g.lines) {
            CHECK(cone_contains(back, l));
            CHECK(cone_contains(back, negate(l)));
        }
    }
}

TEST_CASE("relative_interior_point: orthant midray and single ray") {
    GeneratorCone quad(2);
    quad.rays = {testutil::vec({1, 0}), testutil::vec({0, 1})};
    CHECK(relative_interior_point(quad) == testutil::vec({1, 1}));

    GeneratorCone ray(2);
    ray.rays = {testutil::vec({1, 0})};
    CHECK(relative_interior_point(ray) == testutil::vec({1, 0}));

    GeneratorCone zero(2);
    CHECK_THROWS_AS(relative_interior_point(zero), precondition_error);
}

TEST_CASE("relative_interior_point strictly satisfies every non-implicit facet") {
    testutil::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const GeneratorCone g = random_cone(rng);
        const RatVector p = relative_interior_point(g);
        const LinearSystem h = dual_description(g);
        for (const RatVector& a : h.eq.rows) CHECK(dot(a, p) == 0);
        for (const RatVector& a : h.weak.rows) {
            bool implicit = true;
            for (const RatVector& r : g.rays)
                if (dot(a, r) != 0) implicit = false;
            for (const RatVector& l : g.lines)
                if (dot(a, l) != 0) implicit = false;
            if (implicit)
                CHECK(dot(a, p) == 0);
            else
                CHECK(dot(a, p) > 0);
        }
    }
}

TEST_CASE("dimension cap is enforced") {
    LinearSystem sys(9);
    sys.add_weak(unit_vector(9, 0));
    CHECK_THROWS_AS(primal_description(sys), precondition_error);
}
