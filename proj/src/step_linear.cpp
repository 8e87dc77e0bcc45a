#include "prefcone/step_linear.hpp"

#include <algorithm>

#include "prefcone/errors.hpp"

namespace prefcone {

Cortege validate_cortege(std::vector<RatVector> seq, int ambient_dim) {
    if (seq.empty()) throw precondition_error("cortege: empty functional sequence");
    RatMatrix prefix(ambient_dim);
    int rank = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (static_cast<int>(seq[i].size()) != ambient_dim)
            throw precondition_error("cortege: functional " + std::to_string(i + 1) +
                                     " has the wrong dimension");
        if (is_zero(seq[i]))
            throw precondition_error("cortege: functional " + std::to_string(i + 1) + " is zero");
        prefix.add_row(seq[i]);
        const int r = rank_of(prefix);
        if (r <= rank)
            throw precondition_error("cortege: no point separates functional " +
                                     std::to_string(i + 1) + " from its predecessors");
        rank = r;
    }
    Cortege c;
    c.ambient_dim = ambient_dim;
    c.functionals = std::move(seq);
    return c;
}

Rational eval(const StepLinearFn& u, const RatVector& y) {
    if (static_cast<int>(y.size()) != u.cortege.ambient_dim)
        throw precondition_error("eval: ambient dimension mismatch");
    for (const RatVector& phi : u.cortege.functionals) {
        const Rational v = dot(phi, y);
        if (v != 0) return v;
    }
    return 0;
}

Subspace common_kernel(const Cortege& c) {
    return kernel(RatMatrix(c.ambient_dim, c.functionals));
}

std::vector<LinearSystem> positive_branches(const Cortege& c) {
    std::vector<LinearSystem> out;
    for (int i = 0; i < c.size(); ++i) {
        LinearSystem sys(c.ambient_dim);
        for (int j = 0; j < i; ++j) sys.add_eq(c.functionals[static_cast<std::size_t>(j)]);
        sys.add_strict(c.functionals[static_cast<std::size_t>(i)]);
        out.push_back(std::move(sys));
    }
    return out;
}

std::vector<LinearSystem> nonpositive_branches(const Cortege& c) {
    std::vector<LinearSystem> out;
    for (int i = 0; i < c.size(); ++i) {
        LinearSystem sys(c.ambient_dim);
        for (int j = 0; j < i; ++j) sys.add_eq(c.functionals[static_cast<std::size_t>(j)]);
        sys.add_strict(negate(c.functionals[static_cast<std::size_t>(i)]));
        out.push_back(std::move(sys));
    }
    LinearSystem zero(c.ambient_dim);
    for (const RatVector& phi : c.functionals) zero.add_eq(phi);
    out.push_back(std::move(zero));
    return out;
}

bool check_represents(const StepLinearFn& u, const SignCone& cone, const Subspace& lineality) {
    if (!cone.validated())
        throw precondition_error("check_represents: cone is not a validated partial preference");
    if (u.cortege.ambient_dim != cone.dim())
        throw precondition_error("check_represents: ambient dimension mismatch");

    std::vector<SignVector> admitted;
    for (const Cell& c : cone.cells()) admitted.push_back(c.sign);
    std::sort(admitted.begin(), admitted.end());

    // Every positive branch stays inside P: no unadmitted sign vector is
    // reachable from within a branch.
    for (const LinearSystem& branch : positive_branches(u.cortege)) {
        const bool leak = walk_escaping_signs(
            cone.row_count(), admitted,
            [](int) { return std::vector<Sign>{Sign::minus, Sign::zero, Sign::plus}; },
            [&](const SignVector& s) -> bool {
                LinearSystem sys = branch;
                for (int r = 0; r < cone.row_count(); ++r) {
                    const RatVector& a = cone.matrix().rows[static_cast<std::size_t>(r)];
                    switch (s[static_cast<std::size_t>(r)]) {
                        case Sign::zero: sys.add_eq(a); break;
                        case Sign::plus: sys.add_strict(a); break;
                        case Sign::minus: sys.add_strict(negate(a)); break;
                    }
                }
                return strictly_feasible(sys).has_value();
            });
        if (leak) return false;
    }

    // P stays inside {eval > 0}: every admitted cell avoids every nonpositive
    // branch.
    const std::vector<LinearSystem> bad = nonpositive_branches(u.cortege);
    for (const Cell* cell : cone.realizable_cells()) {
        for (const LinearSystem& branch : bad) {
            LinearSystem sys = cell->system(cone.matrix());
            for (const RatVector& a : branch.eq.rows) sys.add_eq(a);
            for (const RatVector& a : branch.strict.rows) sys.add_strict(a);
            if (strictly_feasible(sys)) return false;
        }
    }

    return common_kernel(u.cortege) == lineality;
}

} // namespace prefcone
