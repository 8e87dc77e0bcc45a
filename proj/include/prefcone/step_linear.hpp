#pragma once

#include "prefcone/sign_cone.hpp"

namespace prefcone {

/// A finite ordered family of linear functionals where each has a point
/// vanishing on every earlier one; equivalently (checked on construction) the
/// family is linearly independent. Position 0 is evaluated first.
struct Cortege {
    int ambient_dim = 0;
    std::vector<RatVector> functionals;

    int size() const { return static_cast<int>(functionals.size()); }
};

/// Checks every functional nonzero and the incremental-rank condition.
/// Throws precondition_error naming the offending index otherwise.
Cortege validate_cortege(std::vector<RatVector> seq, int ambient_dim);

/// Evaluates points by their first non-vanishing functional (0 when all
/// vanish).
struct StepLinearFn {
    Cortege cortege;
};

Rational eval(const StepLinearFn& u, const RatVector& y);

/// The kernel common to every functional: exactly {y : eval(u, y) = 0}.
Subspace common_kernel(const Cortege& c);

/// Exact set equalities {eval > 0} = P and {eval = 0} = L, decided by finite
/// LP certificates: each positive branch region of u must avoid every
/// unadmitted sign vector, each admitted cell must be infeasible against
/// every nonpositive branch, and the common kernel must equal L.
bool check_represents(const StepLinearFn& u, const SignCone& cone, const Subspace& lineality);

struct LinearVerdict {
    std::optional<RatVector> phi;
    std::string reason; // "linear", "not_weak", or "multiple_components"
};

/// The positive branch regions {first i-1 functionals zero, i-th positive}
/// as linear systems, in evaluation order.
std::vector<LinearSystem> positive_branches(const Cortege& c);

/// The complement branches: {prefix zero, i-th negative} for each i plus the
/// all-zero system, in evaluation order.
std::vector<LinearSystem> nonpositive_branches(const Cortege& c);

} // namespace prefcone
