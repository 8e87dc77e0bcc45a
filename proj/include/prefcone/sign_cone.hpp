#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prefcone/linear_system.hpp"
#include "prefcone/subspace.hpp"

namespace prefcone {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign sign_of_value(const Rational& x) { return static_cast<Sign>(sign_of(x)); }

/// One sign per constraint row; the combinatorial address of a cell.
using SignVector = std::vector<Sign>;

SignVector parse_sign_vector(const std::string& text); // over the alphabet "+0-"
std::string to_string(const SignVector& s);
SignVector negate(const SignVector& s);
bool is_all_zero(const SignVector& s);

/// One relatively open cell {y : sign(a_i.y) = s_i for every row}.
struct Cell {
    SignVector sign;
    bool realizable = false;
    std::optional<RatVector> representative; // verified by exact sign check
    Subspace lin; // kernel of the zero rows of A: the cell's linear hull

    /// The cell's defining constraints (zero rows as equalities, the rest strict).
    LinearSystem system(const RatMatrix& a) const;
};

struct ValidationReport {
    bool asymmetric = false;
    std::optional<RatVector> asymmetry_witness; // a point of P meeting -P
    bool convex = false;
    std::optional<std::pair<RatVector, RatVector>> convexity_witness; // y, z in P with y+z outside
    bool pass() const { return asymmetric && convex; }
};

enum class RelationVerdict { precedes, succeeds, equipotent, indifferent_only };

std::string to_string(RelationVerdict v);

/// A compatible relation's positive cone P = {y : sign(A.y) in S}, the
/// universal input representation. Immutable once loaded and validated.
class SignCone {
public:
    /// Parses and realizes every admitted cell (one strict-feasibility LP per
    /// cell). Throws on malformed or width-mismatched sign strings and on an
    /// empty cell list.
    static SignCone load(int dim, RatMatrix a, const std::vector<std::string>& cell_strings,
                         std::string name = {});

    static SignCone from_cells(int dim, RatMatrix a, std::vector<SignVector> cells,
                               std::string name = {});

    /// The lexicographic-positive cone of a sequence of linearly independent
    /// functionals. Cell representatives come from exact linear solves, no LP.
    static SignCone lex_cone(const std::vector<RatVector>& functionals, int dim,
                             std::string name = {});

    int dim() const { return dim_; }
    int row_count() const { return a_.row_count(); }
    const RatMatrix& matrix() const { return a_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::string& name() const { return name_; }

    std::vector<const Cell*> realizable_cells() const;

    SignVector signs_at(const RatVector& y) const;
    bool has_cell(const SignVector& s) const;
    const Cell* find_cell(const SignVector& s) const;

    /// Exact membership: sign(A.y) admitted.
    bool contains(const RatVector& y) const;

    /// True when every sign vector with the given prefix is an admitted cell.
    /// Lets convexity checks prune whole subtrees of candidate sums.
    bool prefix_complete(const SignVector& prefix) const;

    bool validated() const { return validation_.has_value() && validation_->pass(); }
    const std::optional<ValidationReport>& validation() const { return validation_; }

    friend ValidationReport validate_partial_preference(SignCone& cone);

private:
    SignVector signs_at_raw(const RatVector& y) const {
        const RatVector vals = a_.apply(y);
        SignVector s(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) s[i] = sign_of_value(vals[i]);
        return s;
    }

    int dim_ = 0;
    RatMatrix a_;
    std::vector<Cell> cells_; // sorted by sign vector
    std::string name_;
    std::optional<ValidationReport> validation_;
};

/// Checks asymmetry (no admitted cell together with its negation) and
/// convexity (no realizable pair of cells whose sum can land outside S).
/// Verdicts with witnesses, never exceptions. The result is cached on the
/// cone; after a pass the cone satisfies P ∩ (-P) = ∅ and P + P ⊆ P.
ValidationReport validate_partial_preference(SignCone& cone);

/// Relation semantics for the compatible relation with positive cone P:
/// y precedes z iff z - y lies in P; equipotent iff the difference lies in
/// the associated subspace (supplied by the structure analysis).
RelationVerdict relate(const SignCone& cone, const Subspace& lineality, const RatVector& y,
                       const RatVector& z);

/// True iff the cone is a semispace at the origin: every realizable nonzero
/// sign vector is admitted up to global negation and A has trivial kernel.
/// Enumerates all 3^m sign vectors, so m is capped.
bool is_perfect(const SignCone& cone);

/// Convexity of a sub-union of cells (same machinery as the validation
/// convexity check, restricted to the given cell set).
bool is_convex_cell_union(const SignCone& cone, const std::vector<SignVector>& member_cells,
                          std::optional<std::pair<RatVector, RatVector>>* witness = nullptr);

/// Shared 3^m enumeration guard.
void check_sign_enum_cap(int rows);

/// Depth-first walk over sign vectors assembled coordinate by coordinate from
/// choices(i), skipping every subtree whose completions all belong to the
/// sorted member list. leaf() runs on each assembled vector falling outside
/// the members; returning true stops the walk. Returns whether a leaf stopped
/// it.
bool walk_escaping_signs(int rows, const std::vector<SignVector>& sorted_members,
                         const std::function<std::vector<Sign>(int)>& choices,
                         const std::function<bool(const SignVector&)>& leaf);

} // namespace prefcone
