#pragma once

#include <cstdint>

#include "prefcone/structure.hpp"

namespace prefcone {

/// Reproducible sampled points tied to a cone: per-cell representatives,
/// sign-verified random points inside cells, and ambient randoms.
struct SampleSet {
    std::uint64_t seed = 0;

    enum class Provenance { cell_representative, random_in_cell, random_ambient };
    struct Point {
        RatVector value;
        Provenance provenance;
    };
    std::vector<Point> points;

    std::vector<RatVector> positives() const; // the in-cone points
    std::vector<RatVector> all() const;
};

std::string to_string(SampleSet::Provenance p);

/// Deterministic for a fixed seed. Every in-cell point is re-verified by the
/// exact sign check before it is admitted.
SampleSet sample(const SignCone& cone, int count, std::uint64_t seed);

struct AxiomCheck {
    bool pass = true;
    std::vector<RatVector> counterexample; // the offending points, in order
};

/// Brute-force replay of the relation axioms over sampled points. A failure
/// is a counterexample certificate against the cone machinery, not against
/// the input. Equipotency-based checks run when the lineality is supplied;
/// negative transitivity runs when the relation is declared weak.
struct AxiomReport {
    AxiomCheck asymmetry;
    AxiomCheck transitivity;
    AxiomCheck scaling;
    AxiomCheck translation;
    AxiomCheck mixed_transport;
    AxiomCheck negative_transitivity;
    bool pass() const {
        return asymmetry.pass && transitivity.pass && scaling.pass && translation.pass &&
               mixed_transport.pass && negative_transitivity.pass;
    }
};

AxiomReport replay_axioms(const SignCone& cone, const SampleSet& samples,
                          const Subspace* lineality = nullptr, bool expect_weak = false);

/// One-sided brute-force counterpart of majorization: search mu over the
/// rational grid {p/q : 1 <= p, q <= depth}. A hit forces majorizes() to
/// agree; a miss proves nothing.
bool grid_majorize(const SignCone& cone, const RatVector& y, const RatVector& z, int depth);

/// Reproducible catalog of validated random instances: lexicographic cones of
/// random corteges, strict intersection cones, orthant-style unions of
/// boundary cells, and padded variants with free coordinates, optionally
/// sheared by a unimodular change of coordinates. The returned cone has
/// already passed validate_partial_preference. A positive forced_dim pins the
/// ambient dimension; otherwise it ranges over 2..4.
SignCone random_instance(std::uint64_t seed, int forced_dim = 0);

/// Random points for pair checks: positives, negatives, lineality points and
/// ambient randoms, mixed deterministically.
std::vector<std::pair<RatVector, RatVector>> random_pairs(const SignCone& cone,
                                                          const Subspace& lineality, int count,
                                                          std::uint64_t seed);

} // namespace prefcone
