#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prefcone/extension.hpp"
#include "prefcone/instance_io.hpp"
#include "prefcone/oracle.hpp"
#include "prefcone/weak.hpp"
#include "testutil.hpp"

using namespace prefcone;
using testutil::vec;

TEST_CASE("separate: quadrant against the origin gives the diagonal functional") {
    SignCone cone = testutil::quad2();
    const Cortege c = separate(OpenCellUnion::from_sign_cone(cone), Subspace::zero(2));
    REQUIRE(c.size() == 1);
    CHECK(primitive(c.functionals[0]) == vec({1, 1}));
}

TEST_CASE("separate: planar lexicographic cone needs the two-step recursion") {
    RatMatrix a(2);
    a.add_row(vec({1, 0}));
    a.add_row(vec({0, 1}));
    SignCone cone = SignCone::load(2, std::move(a), {"++", "+0", "+-", "0+"});
    validate_partial_preference(cone);
    const Cortege c = separate(OpenCellUnion::from_sign_cone(cone), Subspace::zero(2));
    REQUIRE(c.size() == 2);
    CHECK(primitive(c.functionals[0]) == vec({1, 0}));
    CHECK(primitive(c.functionals[1]) == vec({0, 1}));
}

TEST_CASE("separate: single ray against a line") {
    RatMatrix a(2);
    a.add_row(vec({1, 0}));
    a.add_row(vec({0, 1}));
    SignCone cone = SignCone::load(2, std::move(a), {"+0"});
    validate_partial_preference(cone);
    const Subspace l = span_of({vec({0, 1})}, 2);
    const Cortege c = separate(OpenCellUnion::from_sign_cone(cone), l);
    REQUIRE(c.size() == 1);
    CHECK(dot(c.functionals[0], vec({0, 1})) == 0);
    CHECK(dot(c.functionals[0], vec({1, 0})) > 0);
}

TEST_CASE("separate rejects a cone meeting the subspace") {
    SignCone cone = testutil::quad2();
    CHECK_THROWS_AS(separate(OpenCellUnion::from_sign_cone(cone), span_of({vec({1, 1})}, 2)),
                    precondition_error);
}

TEST_CASE("extend_regular: quad2 extends to the open diagonal halfspace") {
    SignCone cone = testutil::quad2();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    const ExtensionResult r = extend_regular(cone, l, lp);
    REQUIRE(r.cortege.size() == 1);
    CHECK(primitive(r.cortege.functionals[0]) == vec({1, 1}));

    // The extension is weak and regular.
    SignCone ext = r.extended_cone;
    CHECK(validate_partial_preference(ext).pass());
    const ComponentLattice le = components(ext);
    const WeakAnalysis we = analyze_weak(ext, le);
    CHECK(we.is_weak);
    CHECK(we.rest_space.contains(lp));
    // P inside P': spot check on representatives.
    for (const Cell* cell : cone.realizable_cells()) CHECK(ext.contains(*cell->representative));
}

TEST_CASE("extend_regular: lex23 is recovered by its own extension") {
    SignCone cone = testutil::lex23();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    const ExtensionResult r = extend_regular(cone, l, lp);
    REQUIRE(r.cortege.size() == 2);
    CHECK(primitive(r.cortege.functionals[0]) == vec({1, 0, 0}));
    CHECK(primitive(r.cortege.functionals[1]) == vec({0, 1, 0}));
    SignCone ext = r.extended_cone;
    validate_partial_preference(ext);
    const ComponentLattice le = components(ext);
    CHECK(analyze_weak(ext, le).is_weak);
}

TEST_CASE("extend_regular keeps the equipotency subspace (regularity)") {
    // The relation y < z iff y1 < z1 and y2 < z2 on three coordinates:
    // its lineality is the third axis and must survive into the extension.
    RatMatrix a(3);
    a.add_row(vec({1, 0, 0}));
    a.add_row(vec({0, 1, 0}));
    SignCone cone = SignCone::load(3, std::move(a), {"++"});
    validate_partial_preference(cone);
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    REQUIRE(lp.dim() == 1);
    CHECK(lp.basis()[0] == vec({0, 0, 1}));

    const ExtensionResult r = extend_regular(cone, l, lp);
    const Subspace lprime = common_kernel(r.cortege);
    CHECK(lprime.contains(lp));
    SignCone ext = r.extended_cone;
    validate_partial_preference(ext);
    const ComponentLattice le = components(ext);
    const WeakAnalysis we = analyze_weak(ext, le);
    REQUIRE(we.is_weak);
    CHECK(we.rest_space.contains(lp));
}

TEST_CASE("extend_regular: random non-weak instances are certified") {
    int nonweak_seen = 0;
    for (std::uint64_t seed = 900; nonweak_seen < 8; ++seed) {
        SignCone cone = random_instance(seed);
        const ComponentLattice l = components(cone);
        const Subspace lp = lineality(cone, l);
        if (analyze_weak(cone, l).is_weak) continue;
        ++nonweak_seen;
        const ExtensionResult r = extend_regular(cone, l, lp); // certification is in-op
        CHECK(common_kernel(r.cortege).contains(lp));
        for (const Cell* cell : cone.realizable_cells())
            CHECK(eval(StepLinearFn{r.cortege}, *cell->representative) > 0);
    }
}

TEST_CASE("witness: quad2 against the incomparable direction") {
    SignCone cone = testutil::quad2();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    WitnessFamily family;
    const Witness w = witness_non_preference(cone, l, lp, family, vec({0, 0}), vec({1, -1}));
    CHECK(w.value < 0);
    CHECK(eval(w.fn, vec({1, -1})) == w.value);
    // Certified positive on P.
    for (const Cell* cell : cone.realizable_cells())
        CHECK(eval(w.fn, *cell->representative) > 0);
    CHECK(family.members.size() == 1);
}

TEST_CASE("witness: reversed and equipotent pairs reuse the extension") {
    SignCone cone = testutil::quad2();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    WitnessFamily family;
    const Witness reversed = witness_non_preference(cone, l, lp, family, vec({1, 1}), vec({0, 0}));
    CHECK(reversed.value < 0);

    SignCone lex = testutil::lex23();
    const ComponentLattice ll = components(lex);
    const Subspace lpl = lineality(lex, ll);
    WitnessFamily fam2;
    const Witness equi = witness_non_preference(lex, ll, lpl, fam2, vec({1, 2, 3}), vec({1, 2, 8}));
    CHECK(equi.value == 0);

    CHECK_THROWS_AS(witness_non_preference(lex, ll, lpl, fam2, vec({0, 0, 0}), vec({1, 0, 0})),
                    precondition_error);
}

TEST_CASE("intersection representation: quad2 over seeded pairs") {
    SignCone cone = testutil::quad2();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    WitnessFamily family;
    const auto pairs = random_pairs(cone, lp, 100, 2024);
    const IntersectionReport report = check_intersection_representation(cone, l, lp, pairs, family);
    CHECK(report.pass());
    CHECK(report.pairs == 100);
    CHECK(report.preferred_pairs > 0);
}

TEST_CASE("intersection representation: lineality pairs give zero everywhere") {
    SignCone cone = testutil::lex23();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    WitnessFamily family;
    std::vector<std::pair<RatVector, RatVector>> pairs;
    for (const RatVector& h : lp.basis()) {
        pairs.emplace_back(zero_vector(3), h);
        pairs.emplace_back(h, scale(Rational(3), h));
    }
    const IntersectionReport report = check_intersection_representation(cone, l, lp, pairs, family);
    CHECK(report.pass());
    CHECK(report.equipotent_pairs == static_cast<int>(pairs.size()));
}

TEST_CASE("intersection representation: weak instance needs only its extraction") {
    SignCone cone = testutil::lex23();
    const ComponentLattice l = components(cone);
    const Subspace lp = lineality(cone, l);
    WitnessFamily family;
    const auto pairs = random_pairs(cone, lp, 60, 7);
    const IntersectionReport report = check_intersection_representation(cone, l, lp, pairs, family);
    CHECK(report.pass());
    CHECK(family.members.empty()); // no incomparable pairs exist for a weak preference
}

TEST_CASE("monotone linear functional for relatively open preferences") {
    RatMatrix a(2);
    a.add_row(vec({1, 1}));
    SignCone half = SignCone::load(2, std::move(a), {"+"});
    validate_partial_preference(half);
    const ComponentLattice lh = components(half);
    const auto phi_h = monotone_linear_for_open(half, lh, lineality(half, lh));
    REQUIRE(phi_h.has_value());
    CHECK(primitive(*phi_h) == vec({1, 1}));

    RatMatrix b(2);
    b.add_row(vec({1, 0}));
    b.add_row(vec({0, 1}));
    SignCone open_quad = SignCone::load(2, std::move(b), {"++"});
    validate_partial_preference(open_quad);
    const ComponentLattice lo = components(open_quad);
    const auto phi_o = monotone_linear_for_open(open_quad, lo, lineality(open_quad, lo));
    REQUIRE(phi_o.has_value());
    for (const Cell* cell : open_quad.realizable_cells())
        CHECK(dot(*phi_o, *cell->representative) > 0);

    SignCone quad = testutil::quad2();
    const ComponentLattice lq = components(quad);
    CHECK(!monotone_linear_for_open(quad, lq, lineality(quad, lq)).has_value());
}
