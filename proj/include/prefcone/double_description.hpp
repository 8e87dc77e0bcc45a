#pragma once

#include "prefcone/linear_system.hpp"

namespace prefcone {

/// A closed convex cone given by generators: the set of nonnegative
/// combinations of the rays plus arbitrary combinations of the lines.
/// Empty generators describe the zero cone.
struct GeneratorCone {
    int dim = 0;
    std::vector<RatVector> rays;
    std::vector<RatVector> lines;

    explicit GeneratorCone(int n) : dim(n) {}

    bool is_zero_cone() const { return rays.empty() && lines.empty(); }
};

/// Generators of the closed cone {x : eq rows = 0, strict and weak rows >= 0}
/// (strict rows are relaxed: the conversion sees the closed cone). Rays are
/// extreme, lines span exactly the lineality space, and both are canonically
/// scaled and sorted. Throws when the ambient dimension exceeds the cap.
GeneratorCone primal_description(const LinearSystem& sys, int dimension_cap = kDimensionCap);

/// Facet description of the closed cone spanned by g: weak rows together with
/// the eq rows cut out exactly the generated cone. Obtained by running the
/// conversion on the polar side.
LinearSystem dual_description(const GeneratorCone& g, int dimension_cap = kDimensionCap);

/// A point in the relative interior of the closed cone spanned by g: the sum
/// of the canonical rays, verified against the facet rows from
/// dual_description; when verification fails, an exact LP maximizing the
/// minimum facet slack supplies the point. Throws on the zero cone.
RatVector relative_interior_point(const GeneratorCone& g, int dimension_cap = kDimensionCap);

/// Membership x in cone(g), decided by LP over the combination coefficients.
bool cone_contains(const GeneratorCone& g, const RatVector& x);

} // namespace prefcone
