#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefcone/oracle.hpp"
#include "prefcone/weak.hpp"
#include "testutil.hpp"

using namespace prefcone;
using testutil::vec;

TEST_CASE("validate_cortege: accepted and rejected sequences") {
    CHECK_NOTHROW(validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3));
    CHECK_NOTHROW(validate_cortege({vec({1, 1}), vec({1, -1})}, 2));
    CHECK_THROWS_AS(validate_cortege({vec({1, 0}), vec({1, 0})}, 2), precondition_error);
    CHECK_THROWS_AS(validate_cortege({vec({0, 0})}, 2), precondition_error);
    CHECK_THROWS_AS(validate_cortege({}, 2), precondition_error);
    // Dependent third functional.
    CHECK_THROWS_AS(validate_cortege({vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2),
                    precondition_error);
}

TEST_CASE("eval: first nonvanishing functional wins") {
    const StepLinearFn u{validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3)};
    CHECK(eval(u, vec({2, -5, 1})) == Rational(2));
    CHECK(eval(u, vec({0, -3, 7})) == Rational(-3));
    CHECK(eval(u, vec({0, 0, 9})) == Rational(0));
    CHECK(eval(u, vec({0, 0, 0})) == Rational(0));
    CHECK_THROWS_AS(eval(u, vec({1, 2})), precondition_error);
}

TEST_CASE("eval matches the flat description of the running example on seeded points") {
    const StepLinearFn u{validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3)};
    testutil::Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        const RatVector y = testutil::rnd_vector(rng, 3, 6, 4);
        const Rational expected = y[0] != 0 ? y[0] : y[1];
        CHECK(eval(u, y) == expected);
    }
}

TEST_CASE("homogeneity: eval(q y) = q eval(y) including negative q") {
    const StepLinearFn u{validate_cortege({vec({1, 2, 0}), vec({0, 0, 3})}, 3)};
    testutil::Rng rng(78);
    for (int i = 0; i < 100; ++i) {
        const RatVector y = testutil::rnd_vector(rng, 3);
        const Rational q = testutil::rnd_rational(rng, 5, 4);
        CHECK(eval(u, scale(q, y)) == q * eval(u, y));
    }
}

TEST_CASE("zero-set additivity: eval(y + z) = eval(y) when eval(z) = 0") {
    const Cortege c = validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
    const StepLinearFn u{c};
    const Subspace ker = common_kernel(c);
    testutil::Rng rng(79);
    for (int i = 0; i < 80; ++i) {
        const RatVector y = testutil::rnd_vector(rng, 3);
        RatVector z = zero_vector(3);
        for (const RatVector& b : ker.basis()) z = add(z, scale(testutil::rnd_rational(rng, 4, 3), b));
        REQUIRE(eval(u, z) == 0);
        CHECK(eval(u, add(y, z)) == eval(u, y));
    }
}

TEST_CASE("positivity is additive: eval > 0 at y and z forces eval(y+z) > 0") {
    const Cortege c = validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
    const StepLinearFn u{c};
    // Branch-region representatives plus random samples.
    std::vector<RatVector> positives = {vec({1, -9, 4}), vec({0, 2, -5})};
    testutil::Rng rng(80);
    for (int i = 0; i < 120; ++i) {
        const RatVector y = testutil::rnd_vector(rng, 3);
        if (eval(u, y) > 0) positives.push_back(y);
    }
    for (const RatVector& y : positives)
        for (const RatVector& z : positives) CHECK(eval(u, add(y, z)) > 0);
}

TEST_CASE("check_represents: lex23 with its own cortege, and a reversed one") {
    SignCone cone = testutil::lex23();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);

    const StepLinearFn good{validate_cortege({vec({1, 0, 0}), vec({0, 1, 0})}, 3)};
    CHECK(check_represents(good, cone, lp));

    // Reversed order misclassifies (1,-5,0): positive in P, negative under u.
    const StepLinearFn reversed{validate_cortege({vec({0, 1, 0}), vec({1, 0, 0})}, 3)};
    CHECK(eval(reversed, vec({1, -5, 0})) < 0);
    CHECK(cone.contains(vec({1, -5, 0})));
    CHECK(!check_represents(reversed, cone, lp));

    // Scaling the functionals positively does not change the represented sets.
    const StepLinearFn scaled{validate_cortege({vec({3, 0, 0}), vec({0, 7, 0})}, 3)};
    CHECK(check_represents(scaled, cone, lp));
}

TEST_CASE("check_represents: open halfspace with its own row") {
    RatMatrix a(2);
    a.add_row(vec({1, 1}));
    SignCone cone = SignCone::load(2, std::move(a), {"+"});
    validate_partial_preference(cone);
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    CHECK(check_represents(StepLinearFn{validate_cortege({vec({1, 1})}, 2)}, cone, lp));
    CHECK(!check_represents(StepLinearFn{validate_cortege({vec({1, 0})}, 2)}, cone, lp));
}

TEST_CASE("round-trip: random corteges build lex cones that their extraction represents") {
    testutil::Rng rng(81);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, 3)));
        std::vector<RatVector> fns;
        RatMatrix probe(n);
        while (static_cast<int>(fns.size()) < k) {
            RatVector f = testutil::rnd_vector(rng, n, 2, 1);
            if (is_zero(f)) continue;
            RatMatrix next = probe;
            next.add_row(f);
            if (rank_of(next) != static_cast<int>(fns.size()) + 1) continue;
            probe.add_row(f);
            fns.push_back(std::move(f));
        }
        const Cortege original = validate_cortege(fns, n);

        SignCone cone = SignCone::lex_cone(original.functionals, n);
        CHECK(validate_partial_preference(cone).pass());
        const ComponentLattice l = components(cone);
        WeakAnalysis w = analyze_weak(cone, l);
        REQUIRE(w.is_weak);
        const Cortege extracted = extract_cortege(w, cone, l);
        CHECK(check_represents(StepLinearFn{extracted}, cone, w.rest_space));
        // The original cortege also represents its own cone.
        CHECK(check_represents(StepLinearFn{original}, cone, w.rest_space));
    }
}

TEST_CASE("relations defined by a cortege are compatible weak preferences") {
    // Forward direction of the representation theorem, as a constructor test.
    testutil::Rng rng(83);
    for (int trial = 0; trial < 6; ++trial) {
        const StepLinearFn u{validate_cortege({testutil::rnd_vector(rng, 3, 2, 1),
                                               vec({0, 0, 1})},
                                              3)};
        // Compatibility and asymmetry on samples.
        for (int i = 0; i < 40; ++i) {
            const RatVector y = testutil::rnd_vector(rng, 3);
            const RatVector z = testutil::rnd_vector(rng, 3);
            const Rational vy = eval(u, y);
            const Rational vz = eval(u, z);
            if (vy > 0 && vz > 0) CHECK(eval(u, add(y, z)) > 0);
            if (vy > 0) CHECK(eval(u, negate(y)) < 0);
        }
    }
}

TEST_CASE("linear representability: halfspace yes, lex23 no, quad2 not weak") {
    RatMatrix a(2);
    a.add_row(vec({1, 1}));
    SignCone half = SignCone::load(2, std::move(a), {"+"});
    validate_partial_preference(half);
    const ComponentLattice lh = components(half);
    const WeakAnalysis wh = analyze_weak(half, lh);
    const LinearVerdict vh = linear_representability(half, lh, wh);
    REQUIRE(vh.phi.has_value());
    CHECK(primitive(*vh.phi) == vec({1, 1}));
    CHECK(vh.reason == "linear");

    SignCone lex = testutil::lex23();
    const ComponentLattice ll = components(lex);
    const WeakAnalysis wl = analyze_weak(lex, ll);
    const LinearVerdict vl = linear_representability(lex, ll, wl);
    CHECK(!vl.phi.has_value());
    CHECK(vl.reason == "multiple_components");

    SignCone quad = testutil::quad2();
    const ComponentLattice lq = components(quad);
    const WeakAnalysis wq = analyze_weak(quad, lq);
    const LinearVerdict vq = linear_representability(quad, lq, wq);
    CHECK(!vq.phi.has_value());
    CHECK(vq.reason == "not_weak");
}
