#pragma once

#include "prefcone/step_linear.hpp"
#include "prefcone/structure.hpp"

namespace prefcone {

/// Result of the weakness analysis. When weak, the component family is a
/// chain (ascending: least component first), the rest of the space is exactly
/// the associated subspace, and functionals[i] is strictly monotone for
/// chain[i].
struct WeakAnalysis {
    bool is_weak = false;
    std::vector<int> chain;   // component ids, ascending
    Subspace rest_space;      // Y minus (P union -P) as a subspace; = L
    std::vector<RatVector> functionals; // aligned with chain; filled by extract_cortege
};

/// Weakness criterion: the span V of the linear hulls of every realizable
/// cell outside S and -S must miss P and -P (then the complement of the
/// cone pair is the subspace V itself). One LP per admitted cell decides the
/// emptiness. When weak, the lattice must be a chain and V must equal the
/// independently computed lineality; either failing is an internal error.
WeakAnalysis analyze_weak(const SignCone& cone, const ComponentLattice& l);

/// Extracts one strictly monotone functional per chain component: zero on the
/// component's closure lineality and on the fixed echelon complement of its
/// linear hull, one at its representative. Positivity over every member cell
/// is certified by LP; the hull/lineality dimensions must differ by exactly
/// one. The cortege is ordered top component first (evaluation order).
/// Fills analysis.functionals as a side effect (aligned with the chain).
Cortege extract_cortege(WeakAnalysis& analysis, const SignCone& cone, const ComponentLattice& l);

struct StructureEqualityReport {
    bool hull_decomposition = true;   // Lin(E) covered by -F(E), L, F(E) exactly
    bool hulls_strictly_nested = true;
    bool hulls_cover_space = true;
    bool component_lineality_by_kernels = true; // L_E = joint kernel of the functionals above E
    bool total_lineality_by_kernels = true;     // L = joint kernel of all functionals
    bool least_component_lineality = true;      // L_{E_least} = L
    bool pass() const {
        return hull_decomposition && hulls_strictly_nested && hulls_cover_space &&
               component_lineality_by_kernels && total_lineality_by_kernels &&
               least_component_lineality;
    }
};

/// The chain decomposition equalities, checked exactly. Any failure throws:
/// it falsifies the pipeline, not the input.
StructureEqualityReport verify_structure_equalities(const WeakAnalysis& analysis,
                                                    const SignCone& cone,
                                                    const ComponentLattice& l);

/// A single linear functional represents the preference iff there is exactly
/// one component and its hull is the whole space; the functional is then the
/// extracted one and is verified on the cone's cells.
LinearVerdict linear_representability(const SignCone& cone, const ComponentLattice& l,
                                      const WeakAnalysis& analysis);

} // namespace prefcone
