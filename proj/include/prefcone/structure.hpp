#pragma once

#include "prefcone/double_description.hpp"
#include "prefcone/sign_cone.hpp"

namespace prefcone {

/// y is majorized by z (both positive) iff z - mu*y stays in the cone for
/// some mu > 0. Decided exactly by intersecting the per-row mu-intervals of
/// every admitted cell; no LP is involved.
bool majorizes(const SignCone& cone, const RatVector& y, const RatVector& z);

/// A concrete mu > 0 with z - mu*y in P, when one exists.
std::optional<Rational> majorization_witness(const SignCone& cone, const RatVector& y,
                                             const RatVector& z);

/// One equivalence class of mutual majorization: a relatively open convex
/// cone, stored as its member cells plus cached hull data.
struct Component {
    std::vector<SignVector> cells; // sorted
    RatVector representative;      // sum of the member cells' representatives
    Subspace lin_hull;             // Lin(E): sum of the cells' linear hulls
    Subspace lineality;            // L_E: lineality space of cl(E)
    GeneratorCone closure;         // generators of cl(E)

    Component() : closure(0) {}
};

/// The family of open components ordered by majorization, with the join
/// structure and cover relation.
struct ComponentLattice {
    std::vector<Component> components; // canonical order (sorted by cell lists)
    std::vector<std::vector<bool>> order; // order[i][j]: component i below-or-equal j
    std::vector<std::pair<int, int>> hasse_edges; // (lower, upper) cover pairs
    bool laws_verified = false; // openness / join / partition checks ran (validated input)

    bool is_chain() const;
    int component_of_cell(const SignVector& s) const; // -1 when not found
    int component_of_point(const SignCone& cone, const RatVector& y) const;
};

/// Partitions the realizable cells into mutual-majorization classes and
/// builds the order. On validated cones this also verifies, exactly: the
/// partition properties, the relative-openness criterion of every class, and
/// the join law (least upper bound = class of summed representatives); any
/// failure is an internal error, not an input error. On unvalidated cones the
/// structure is still computed for diagnostics but the law checks are skipped
/// and flagged through laws_verified.
ComponentLattice components(const SignCone& cone);

/// Least upper bound from the order matrix alone; -1 when none exists.
int join_by_order(const ComponentLattice& l, int e1, int e2);

/// Least upper bound, cross-checked against the class of the summed
/// representatives.
int join(const SignCone& cone, const ComponentLattice& l, int e1, int e2);

/// F(E): the components at or below E. On verified lattices the result is
/// checked to be a face (segment test on representative pairs) with intrinsic
/// core exactly E (sign-perturbation openness test).
std::vector<int> face_below(const SignCone& cone, const ComponentLattice& l, int e);

/// The strict part of face_below.
std::vector<int> strict_face_below(const SignCone& cone, const ComponentLattice& l, int e);

/// Union of the cells of the given components, sorted.
std::vector<SignVector> cells_of_components(const ComponentLattice& l, const std::vector<int>& ids);

/// The greatest component when one exists: exactly the strongly positive
/// vectors. Each returned verdict is re-verified through explicit
/// majorization witnesses against every other component.
std::optional<int> strong_positives(const SignCone& cone, const ComponentLattice& l);

/// The associated subspace of the whole cone, computed as the intersection of
/// the per-component lineality spaces and cross-checked by the independent
/// translation-membership criterion (every cell translated along a basis
/// direction must stay inside the admitted cells). Disagreement is a hard
/// error.
Subspace lineality(const SignCone& cone, const ComponentLattice& l);

/// True iff the component family is a singleton.
bool is_relatively_open_preference(const SignCone& cone, const ComponentLattice& l);

/// Generators of the closure of one cell (its relaxed system, converted).
GeneratorCone cell_closure_generators(const SignCone& cone, const Cell& cell);

/// Generators of cl(conv P): union of the per-cell closure generators over
/// all realizable cells.
GeneratorCone closed_hull_generators(const SignCone& cone);

/// Sign vector reached from cell s by an infinitesimal step along d: strict
/// signs survive, zero rows pick up the sign of the step.
SignVector perturbed_sign(const SignCone& cone, const SignVector& s, const RatVector& d);

/// Exact relative-openness criterion for a union of sign cells: stepping from
/// s along +/- each basis direction of dirs stays inside the region.
bool region_open_at(const SignCone& cone, const std::vector<SignVector>& region_sorted,
                    const SignVector& s, const Subspace& dirs);

} // namespace prefcone
