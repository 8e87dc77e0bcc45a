#pragma once

#include <vector>

#include "prefcone/linalg.hpp"

namespace prefcone {

/// A linear subspace of Q^n held in canonical form: the basis is the reduced
/// row echelon form of any spanning set, so two subspaces are equal as point
/// sets exactly when their bases are identical sequences.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_spanning(std::vector<RatVector> vectors, int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.rows.size()); }
    const std::vector<RatVector>& basis() const { return basis_.rows; }
    const RatMatrix& basis_matrix() const { return basis_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.rows == b.basis_.rows;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_ = 0;
    RatMatrix basis_; // RREF rows, pivots strictly increasing
};

/// Null space {x : m*x = 0}. The column count of m fixes the ambient dimension.
Subspace kernel(const RatMatrix& m);

Subspace span_of(const std::vector<RatVector>& vectors, int ambient);

Subspace sum(const Subspace& a, const Subspace& b);

/// Computed through the coefficient construction: x in both spans iff
/// x = Bv^T a = Bw^T b for some coefficients, i.e. (a,b) in the kernel of
/// [Bv^T | -Bw^T]. The dual (orthogonal-complement) route serves as the
/// independent test oracle.
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : b.x = 0 for every basis vector b}. Over Q the pairing is definite, so
/// complement(complement(V)) == V.
Subspace orthogonal_complement(const Subspace& v);

} // namespace prefcone
