#include "prefcone/weak.hpp"

#include <algorithm>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

// Realizable sign vectors outside S and -S span the rest of the space. The
// linear hull of such a cell depends only on its zero rows, so subtrees whose
// hull cannot grow the accumulated span are skipped before any LP runs.
Subspace rest_span(const SignCone& cone) {
    const int m = cone.row_count();
    check_sign_enum_cap(m);

    std::vector<SignVector> outside_skip; // S together with -S
    for (const Cell& c : cone.cells()) {
        outside_skip.push_back(c.sign);
        outside_skip.push_back(negate(c.sign));
    }
    std::sort(outside_skip.begin(), outside_skip.end());
    outside_skip.erase(std::unique(outside_skip.begin(), outside_skip.end()), outside_skip.end());

    Subspace v = kernel(cone.matrix()); // the all-zero cell, always part of the rest

    // Enumerate candidates with fewer zero rows first: their hulls are larger,
    // so the span settles quickly and the containment prune kicks in.
    std::vector<SignVector> candidates;
    SignVector s;
    auto gen = [&](auto&& self, int i) -> void {
        if (i == m) {
            candidates.push_back(s);
            return;
        }
        for (Sign x : {Sign::minus, Sign::zero, Sign::plus}) {
            s.push_back(x);
            self(self, i + 1);
            s.pop_back();
        }
    };
    gen(gen, 0);
    auto zeros = [](const SignVector& sv) {
        return std::count(sv.begin(), sv.end(), Sign::zero);
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const SignVector& a, const SignVector& b) { return zeros(a) < zeros(b); });

    for (const SignVector& cand : candidates) {
        if (is_all_zero(cand)) continue;
        if (std::binary_search(outside_skip.begin(), outside_skip.end(), cand)) continue;
        RatMatrix zero_rows(cone.dim());
        for (int i = 0; i < m; ++i)
            if (cand[static_cast<std::size_t>(i)] == Sign::zero)
                zero_rows.rows.push_back(cone.matrix().rows[static_cast<std::size_t>(i)]);
        const Subspace hull = kernel(zero_rows);
        if (v.contains(hull)) continue;
        LinearSystem sys(cone.dim());
        for (int i = 0; i < m; ++i) {
            const RatVector& a = cone.matrix().rows[static_cast<std::size_t>(i)];
            switch (cand[static_cast<std::size_t>(i)]) {
                case Sign::zero: sys.add_eq(a); break;
                case Sign::plus: sys.add_strict(a); break;
                case Sign::minus: sys.add_strict(negate(a)); break;
            }
        }
        if (strictly_feasible(sys)) v = sum(v, hull);
    }
    return v;
}

} // namespace

WeakAnalysis analyze_weak(const SignCone& cone, const ComponentLattice& l) {
    if (!cone.validated())
        throw precondition_error("analyze_weak: cone is not a validated partial preference");

    WeakAnalysis out;
    const Subspace v = rest_span(cone);

    // One strict-feasibility call per cell of S and -S, constrained to V.
    bool meets_cone = false;
    for (const Cell* cell : cone.realizable_cells()) {
        for (const bool mirrored : {false, true}) {
            LinearSystem sys(cone.dim());
            for (int i = 0; i < cone.row_count(); ++i) {
                const RatVector& a = cone.matrix().rows[static_cast<std::size_t>(i)];
                Sign s = cell->sign[static_cast<std::size_t>(i)];
                if (mirrored) s = static_cast<Sign>(-static_cast<int>(s));
                switch (s) {
                    case Sign::zero: sys.add_eq(a); break;
                    case Sign::plus: sys.add_strict(a); break;
                    case Sign::minus: sys.add_strict(negate(a)); break;
                }
            }
            sys.add_membership(v);
            if (strictly_feasible(sys)) {
                meets_cone = true;
                break;
            }
        }
        if (meets_cone) break;
    }
    out.is_weak = !meets_cone;
    if (!out.is_weak) return out;

    if (!l.is_chain())
        throw internal_error("analyze_weak: weak cone whose components are not a chain");
    out.chain.resize(l.components.size());
    for (std::size_t i = 0; i < l.components.size(); ++i) out.chain[i] = static_cast<int>(i);
    std::sort(out.chain.begin(), out.chain.end(), [&](int a, int b) {
        return a != b && l.order[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    });
    out.rest_space = v;
    if (v != lineality(cone, l))
        throw internal_error("analyze_weak: rest space differs from the lineality space");
    return out;
}

Cortege extract_cortege(WeakAnalysis& analysis, const SignCone& cone, const ComponentLattice& l) {
    if (!analysis.is_weak) throw precondition_error("extract_cortege: relation is not weak");
    const int n = cone.dim();

    analysis.functionals.clear();
    for (int id : analysis.chain) {
        const Component& comp = l.components[static_cast<std::size_t>(id)];
        if (comp.lin_hull.dim() != comp.lineality.dim() + 1)
            throw internal_error("extract_cortege: component hull is not one dimension above its lineality");

        // phi vanishes on the component lineality and on the echelon-pivot
        // complement of the hull, and takes value one at the representative.
        RatMatrix system(n);
        RatVector rhs;
        for (const RatVector& b : comp.lineality.basis()) {
            system.add_row(b);
            rhs.push_back(0);
        }
        std::vector<bool> pivot(static_cast<std::size_t>(n), false);
        {
            RatMatrix hull(n, comp.lin_hull.basis());
            for (int p : rref_in_place(hull)) pivot[static_cast<std::size_t>(p)] = true;
        }
        for (int j = 0; j < n; ++j) {
            if (!pivot[static_cast<std::size_t>(j)]) {
                system.add_row(unit_vector(n, j));
                rhs.push_back(0);
            }
        }
        system.add_row(comp.representative);
        rhs.push_back(1);

        bool ok = false;
        RatVector phi = solve_particular(system, rhs, &ok);
        if (!ok || rank_of(system) != n)
            throw internal_error("extract_cortege: functional system is not uniquely solvable");
        // The kernel constraints pin phi up to a positive scalar; the primitive
        // form is canonical independently of which representative the LP found.
        phi = primitive(phi);

        // Positivity certified on every member cell.
        for (const SignVector& s : comp.cells) {
            const Cell* cell = cone.find_cell(s);
            LinearSystem sys = cell->system(cone.matrix());
            sys.add_weak(negate(phi)); // phi.y <= 0 inside the cell?
            if (strictly_feasible(sys))
                throw internal_error("extract_cortege: functional not positive on its component");
        }
        analysis.functionals.push_back(std::move(phi));
    }

    // Cortege order: greatest component first.
    std::vector<RatVector> seq(analysis.functionals.rbegin(), analysis.functionals.rend());
    return validate_cortege(std::move(seq), n);
}

StructureEqualityReport verify_structure_equalities(const WeakAnalysis& analysis,
                                                    const SignCone& cone,
                                                    const ComponentLattice& l) {
    if (!analysis.is_weak || analysis.functionals.empty())
        throw precondition_error("verify_structure_equalities: needs a weak analysis with functionals");
    StructureEqualityReport report;
    const Subspace& lin = analysis.rest_space;
    const std::size_t len = analysis.chain.size();

    for (std::size_t pos = 0; pos < len; ++pos) {
        const int id = analysis.chain[pos];
        const Component& comp = l.components[static_cast<std::size_t>(id)];

        // Containment side of the hull decomposition: every component at or
        // below, and the rest space, lies inside Lin(E).
        if (!comp.lin_hull.contains(lin)) report.hull_decomposition = false;
        for (std::size_t q = 0; q <= pos; ++q) {
            const Component& lower = l.components[static_cast<std::size_t>(analysis.chain[q])];
            if (!comp.lin_hull.contains(lower.lin_hull)) report.hull_decomposition = false;
        }
        // Exhaustion side: no strictly higher cell meets Lin(E).
        for (std::size_t q = pos + 1; q < len; ++q) {
            const Component& higher = l.components[static_cast<std::size_t>(analysis.chain[q])];
            for (const SignVector& s : higher.cells) {
                LinearSystem sys = cone.find_cell(s)->system(cone.matrix());
                sys.add_membership(comp.lin_hull);
                if (strictly_feasible(sys)) report.hull_decomposition = false;
            }
        }
        if (pos + 1 < len) {
            const Component& next = l.components[static_cast<std::size_t>(analysis.chain[pos + 1])];
            if (!(next.lin_hull.contains(comp.lin_hull) && next.lin_hull != comp.lin_hull))
                report.hulls_strictly_nested = false;
        }

        // Component lineality as a joint kernel of the functionals at or
        // above this component.
        RatMatrix above(cone.dim());
        for (std::size_t q = pos; q < len; ++q)
            above.add_row(analysis.functionals[q]);
        if (kernel(above) != comp.lineality) report.component_lineality_by_kernels = false;
    }

    const Component& top = l.components[static_cast<std::size_t>(analysis.chain.back())];
    if (top.lin_hull != Subspace::full(cone.dim())) report.hulls_cover_space = false;

    RatMatrix all(cone.dim());
    for (const RatVector& phi : analysis.functionals) all.add_row(phi);
    if (kernel(all) != lin) report.total_lineality_by_kernels = false;

    const Component& least = l.components[static_cast<std::size_t>(analysis.chain.front())];
    if (least.lineality != lin) report.least_component_lineality = false;

    if (!report.pass())
        throw internal_error("verify_structure_equalities: a chain decomposition equality failed");
    return report;
}

LinearVerdict linear_representability(const SignCone& cone, const ComponentLattice& l,
                                      const WeakAnalysis& analysis) {
    LinearVerdict verdict;
    if (!analysis.is_weak) {
        verdict.reason = "not_weak";
        return verdict;
    }
    if (l.components.size() != 1 ||
        l.components.front().lin_hull != Subspace::full(cone.dim())) {
        verdict.reason = "multiple_components";
        return verdict;
    }
    WeakAnalysis copy = analysis;
    const Cortege c = extract_cortege(copy, cone, l);
    StepLinearFn u{c};
    if (!check_represents(u, cone, analysis.rest_space))
        throw internal_error("linear_representability: single functional fails to represent");
    verdict.phi = c.functionals.front();
    verdict.reason = "linear";
    return verdict;
}

} // namespace prefcone
