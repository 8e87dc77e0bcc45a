#pragma once

#include <optional>

#include "prefcone/subspace.hpp"

namespace prefcone {

/// A homogeneous system of rational constraints: a.x = 0 over eq rows,
/// a.x > 0 over strict rows, a.x >= 0 over weak rows. Everything in this
/// library is conical, so right-hand sides are always zero.
struct LinearSystem {
    int ambient_dim = 0;
    RatMatrix eq;
    RatMatrix strict;
    RatMatrix weak;

    explicit LinearSystem(int dim) : ambient_dim(dim), eq(dim), strict(dim), weak(dim) {}

    void add_eq(RatVector a) { eq.add_row(std::move(a)); }
    void add_strict(RatVector a) { strict.add_row(std::move(a)); }
    void add_weak(RatVector a) { weak.add_row(std::move(a)); }

    /// Constrains x to the subspace v by adding one equality per basis vector
    /// of the orthogonal complement.
    void add_membership(const Subspace& v);

    bool satisfied_by(const RatVector& x) const;
};

struct LpStats {
    long pivots = 0;
};

/// Decides whether the system admits a point meeting every constraint, strict
/// rows strictly. Exact: introduces a scalar slack d, maximizes d subject to
/// strict rows >= d and d <= 1, and succeeds iff the optimum is positive.
/// Pivoting uses Bland's rule, so the simplex cannot cycle. The returned
/// point is re-checked against every constraint before being handed back.
std::optional<RatVector> strictly_feasible(const LinearSystem& sys, LpStats* stats = nullptr);

} // namespace prefcone
