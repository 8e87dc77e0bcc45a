#pragma once

#include <vector>

#include "prefcone/rational.hpp"

namespace prefcone {

using RatVector = std::vector<Rational>;

RatVector zero_vector(int n);
RatVector unit_vector(int n, int i);
bool is_zero(const RatVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector negate(const RatVector& v);
RatVector scale(const Rational& c, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

/// Scales to integer entries with gcd 1, preserving direction. The canonical
/// representative of a ray.
RatVector primitive(const RatVector& v);

/// primitive() with the first nonzero entry forced positive. The canonical
/// representative of a line (direction-free).
RatVector primitive_line(const RatVector& v);

struct RatMatrix {
    int cols = 0;
    std::vector<RatVector> rows;

    RatMatrix() = default;
    explicit RatMatrix(int ncols) : cols(ncols) {}
    RatMatrix(int ncols, std::vector<RatVector> r) : cols(ncols), rows(std::move(r)) {}

    int row_count() const { return static_cast<int>(rows.size()); }
    void add_row(RatVector r);

    /// Componentwise products A*v (one entry per row).
    RatVector apply(const RatVector& v) const;

    RatMatrix transposed() const;
};

/// Stacks the rows of b under a. Column counts must agree.
RatMatrix stack(const RatMatrix& a, const RatMatrix& b);

/// In-place reduced row echelon form. Returns the pivot columns in order.
/// Zero rows are removed.
std::vector<int> rref_in_place(RatMatrix& m);

int rank_of(RatMatrix m);

/// Solves m*x = rhs exactly. Returns a particular solution, or nothing when
/// the system is inconsistent.
std::vector<Rational> solve_particular(const RatMatrix& m, const RatVector& rhs, bool* ok);

} // namespace prefcone
