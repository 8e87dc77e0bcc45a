#pragma once

#include "prefcone/step_linear.hpp"
#include "prefcone/structure.hpp"

namespace prefcone {

/// A relatively open convex cone presented as finitely many relatively open
/// pieces, each a strict/equality system in lifted coordinates together with
/// the linear map back into the ambient space. Supports the two queries the
/// halfspace separation needs: emptiness within a subspace and generators of
/// the closure within a subspace.
struct OpenCellUnion {
    int ambient_dim = 0;

    struct Piece {
        LinearSystem sys;  // lifted coordinates
        RatMatrix map;     // ambient_dim x lifted_dim; point = map * lifted
    };
    std::vector<Piece> pieces;

    /// The positive cone itself: one identity-mapped piece per realizable cell.
    static OpenCellUnion from_sign_cone(const SignCone& cone);

    /// conv(P united with the ray through -p): the cells of P, the open ray
    /// -p, and one Minkowski piece cell + ray(-p) per cell.
    static OpenCellUnion hull_with_ray(const SignCone& cone, const RatVector& p);

    /// Whether the union meets the subspace w. One LP per piece.
    bool empty_in(const Subspace& w) const;

    /// Generators of cl(K within w): union of the closure generators of the
    /// pieces that actually meet w (the closure of an empty piece is not its
    /// relaxation).
    GeneratorCone closure_generators_in(const Subspace& w) const;
};

/// Builds a cortege positive on the union and vanishing on l. Each round
/// dualizes the closure of what remains inside the working subspace,
/// restricted to functionals vanishing on l, picks the relative interior
/// point of that dual cone, and descends into its kernel; the working
/// subspace loses a dimension every round. Positivity of every chosen
/// functional on that round's generators is certified by exact evaluation.
/// Preconditions (the union is asymmetric convex and misses l) are
/// re-checked where exact checks are affordable: the disjointness check is
/// exact.
Cortege separate(const OpenCellUnion& k1, const Subspace& l);

struct ExtensionResult {
    Cortege cortege;
    SignCone extended_cone; // rows = cortege, cells = lexicographic-positive
};

/// Regular weak extension: separates P from its lineality, builds the
/// lexicographic cone of the resulting cortege, and certifies both P inside
/// P' (cell-versus-nonpositive-branch infeasibility) and L inside L'.
ExtensionResult extend_regular(const SignCone& cone, const ComponentLattice& l,
                               const Subspace& lineality);

/// A step-linear certificate that a specific pair is not preferred.
struct Witness {
    RatVector y;
    RatVector z;
    StepLinearFn fn;
    Rational value; // eval(fn, z - y), certified <= 0
};

/// The growing family of certified step-linear functions for one cone.
struct WitnessFamily {
    std::optional<Cortege> extension;
    std::vector<Witness> members;
};

/// Certifies non-preference of (y, z). Reversed or equipotent pairs reuse the
/// regular-extension cortege; genuinely incomparable pairs separate
/// conv(P united with ray(-(z-y))) from L and certify the new function:
/// negative at z-y, positive on every cell of P, zero on L. The function is
/// memoized into the family.
Witness witness_non_preference(const SignCone& cone, const ComponentLattice& l,
                               const Subspace& lineality, WitnessFamily& family,
                               const RatVector& y, const RatVector& z);

struct IntersectionReport {
    int pairs = 0;
    int preferred_pairs = 0;
    int equipotent_pairs = 0;
    int witnesses_built = 0;
    int violations = 0;
    bool pass() const { return violations == 0; }
};

/// The intersection behavior of the certified family over the given pairs:
/// preferred pairs must be positive under every collected function,
/// equipotent pairs zero under every collected function, and every other pair
/// must admit a nonpositive witness.
IntersectionReport check_intersection_representation(
    const SignCone& cone, const ComponentLattice& l, const Subspace& lineality,
    const std::vector<std::pair<RatVector, RatVector>>& pairs, WitnessFamily& family);

/// For a one-component cone: a single linear functional positive on P
/// (per-cell LP certificates) and zero on L. Absent when the component family
/// is not a singleton.
std::optional<RatVector> monotone_linear_for_open(const SignCone& cone, const ComponentLattice& l,
                                                  const Subspace& lineality);

} // namespace prefcone
