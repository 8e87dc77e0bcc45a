#include "prefcone/extension.hpp"

#include <algorithm>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

RatMatrix identity_map(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.add_row(unit_vector(n, i));
    return m;
}

// Membership of the mapped point in w, expressed on the lifted variables.
void add_mapped_membership(LinearSystem& sys, const RatMatrix& map, const Subspace& w) {
    const Subspace complement = orthogonal_complement(w);
    for (const RatVector& row : complement.basis()) {
        RatVector lifted(static_cast<std::size_t>(map.cols));
        for (int j = 0; j < map.cols; ++j) {
            Rational v = 0;
            for (int i = 0; i < map.row_count(); ++i)
                v += row[static_cast<std::size_t>(i)] * map.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            lifted[static_cast<std::size_t>(j)] = v;
        }
        sys.add_eq(std::move(lifted));
    }
}

void certify_positive_on_cells(const SignCone& cone, const Cortege& cortege, const char* who) {
    const std::vector<LinearSystem> bad = nonpositive_branches(cortege);
    for (const Cell* cell : cone.realizable_cells()) {
        for (const LinearSystem& branch : bad) {
            LinearSystem sys = cell->system(cone.matrix());
            for (const RatVector& a : branch.eq.rows) sys.add_eq(a);
            for (const RatVector& a : branch.strict.rows) sys.add_strict(a);
            if (strictly_feasible(sys))
                throw internal_error(std::string(who) + ": cortege not positive on a cell of P");
        }
    }
}

} // namespace

OpenCellUnion OpenCellUnion::from_sign_cone(const SignCone& cone) {
    OpenCellUnion u;
    u.ambient_dim = cone.dim();
    const RatMatrix id = identity_map(cone.dim());
    for (const Cell* cell : cone.realizable_cells())
        u.pieces.push_back({cell->system(cone.matrix()), id});
    return u;
}

OpenCellUnion OpenCellUnion::hull_with_ray(const SignCone& cone, const RatVector& p) {
    const int n = cone.dim();
    OpenCellUnion u = from_sign_cone(cone);

    // The open ray through -p: one lifted variable t > 0, point = -t*p.
    {
        LinearSystem ray(1);
        ray.add_strict({Rational(1)});
        RatMatrix map(1);
        for (int i = 0; i < n; ++i) map.add_row({-p[static_cast<std::size_t>(i)]});
        u.pieces.push_back({std::move(ray), std::move(map)});
    }

    // Minkowski pieces cell + ray(-p): variables (y, t) with y in the cell and
    // t > 0, point = y - t*p.
    for (const Cell* cell : cone.realizable_cells()) {
        LinearSystem lifted(n + 1);
        const LinearSystem base = cell->system(cone.matrix());
        auto extend = [](const RatVector& a) {
            RatVector row = a;
            row.push_back(0);
            return row;
        };
        for (const RatVector& a : base.eq.rows) lifted.add_eq(extend(a));
        for (const RatVector& a : base.strict.rows) lifted.add_strict(extend(a));
        lifted.add_strict(unit_vector(n + 1, n)); // t > 0
        RatMatrix map(n + 1);
        for (int i = 0; i < n; ++i) {
            RatVector row = unit_vector(n + 1, i);
            row[static_cast<std::size_t>(n)] = -p[static_cast<std::size_t>(i)];
            map.add_row(std::move(row));
        }
        u.pieces.push_back({std::move(lifted), std::move(map)});
    }
    return u;
}

bool OpenCellUnion::empty_in(const Subspace& w) const {
    for (const Piece& piece : pieces) {
        LinearSystem sys = piece.sys;
        add_mapped_membership(sys, piece.map, w);
        if (strictly_feasible(sys)) return false;
    }
    return true;
}

GeneratorCone OpenCellUnion::closure_generators_in(const Subspace& w) const {
    GeneratorCone out(ambient_dim);
    for (const Piece& piece : pieces) {
        LinearSystem sys = piece.sys;
        add_mapped_membership(sys, piece.map, w);
        if (!strictly_feasible(sys)) continue; // empty pieces contribute nothing
        const GeneratorCone lifted = primal_description(sys, std::max(kDimensionCap, sys.ambient_dim));
        auto push = [&](const RatVector& g, bool line) {
            RatVector mapped(static_cast<std::size_t>(ambient_dim));
            for (int i = 0; i < ambient_dim; ++i)
                mapped[static_cast<std::size_t>(i)] = dot(piece.map.rows[static_cast<std::size_t>(i)], g);
            if (is_zero(mapped)) return;
            if (line)
                out.lines.push_back(primitive_line(mapped));
            else
                out.rays.push_back(primitive(mapped));
        };
        for (const RatVector& r : lifted.rays) push(r, false);
        for (const RatVector& l : lifted.lines) push(l, true);
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    std::sort(out.lines.begin(), out.lines.end());
    out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
    return out;
}

Cortege separate(const OpenCellUnion& k1, const Subspace& l) {
    const int n = k1.ambient_dim;
    if (!k1.empty_in(l)) throw precondition_error("separate: the cone meets the subspace");

    std::vector<RatVector> functionals;
    Subspace w = Subspace::full(n);
    while (!k1.empty_in(w)) {
        const GeneratorCone gens = k1.closure_generators_in(w);
        LinearSystem dual_sys(n);
        for (const RatVector& r : gens.rays) dual_sys.add_weak(r);
        for (const RatVector& li : gens.lines) dual_sys.add_eq(li);
        for (const RatVector& b : l.basis()) dual_sys.add_eq(b);
        dual_sys.add_membership(w);
        const GeneratorCone dual = primal_description(dual_sys, std::max(kDimensionCap, n));
        if (dual.rays.empty())
            throw internal_error("separate: degenerate dual cone (asymmetry precondition violated)");
        RatVector phi = zero_vector(n);
        for (const RatVector& r : dual.rays) phi = add(phi, r);
        phi = primitive(phi);
        // Positivity on this round's generators, certified by evaluation.
        for (const RatVector& r : gens.rays)
            if (dot(phi, r) < 0) throw internal_error("separate: functional negative on a generator");
        for (const RatVector& li : gens.lines)
            if (dot(phi, li) != 0) throw internal_error("separate: functional nonzero on a line");
        for (const RatVector& b : l.basis())
            if (dot(phi, b) != 0) throw internal_error("separate: functional nonzero on the subspace");
        functionals.push_back(phi);
        RatMatrix row(n);
        row.add_row(phi);
        w = intersect(w, kernel(row));
    }
    if (functionals.empty())
        throw precondition_error("separate: empty cone needs no separation");
    return validate_cortege(std::move(functionals), n);
}

ExtensionResult extend_regular(const SignCone& cone, const ComponentLattice&,
                               const Subspace& lineality) {
    if (!cone.validated())
        throw precondition_error("extend_regular: cone is not a validated partial preference");
    if (cone.realizable_cells().empty())
        throw precondition_error("extend_regular: empty positive cone");

    Cortege cortege = separate(OpenCellUnion::from_sign_cone(cone), lineality);
    certify_positive_on_cells(cone, cortege, "extend_regular");
    if (!common_kernel(cortege).contains(lineality))
        throw internal_error("extend_regular: extension does not keep the equipotency classes");

    SignCone extended = SignCone::lex_cone(cortege.functionals, cone.dim(),
                                           cone.name().empty() ? "extension" : cone.name() + "_extension");
    return ExtensionResult{std::move(cortege), std::move(extended)};
}

namespace {

const Cortege& ensure_extension(const SignCone& cone, const ComponentLattice& l,
                                const Subspace& lineality, WitnessFamily& family) {
    if (!family.extension) family.extension = extend_regular(cone, l, lineality).cortege;
    return *family.extension;
}

} // namespace

Witness witness_non_preference(const SignCone& cone, const ComponentLattice& l,
                               const Subspace& lineality, WitnessFamily& family,
                               const RatVector& y, const RatVector& z) {
    const RelationVerdict verdict = relate(cone, lineality, y, z);
    if (verdict == RelationVerdict::precedes)
        throw precondition_error("witness_non_preference: the pair is preferred");

    Witness w;
    w.y = y;
    w.z = z;
    const RatVector p = sub(z, y);

    if (verdict == RelationVerdict::succeeds || verdict == RelationVerdict::equipotent) {
        w.fn = StepLinearFn{ensure_extension(cone, l, lineality, family)};
        w.value = eval(w.fn, p);
        if (verdict == RelationVerdict::succeeds ? w.value >= 0 : w.value != 0)
            throw internal_error("witness_non_preference: extension cortege gave the wrong sign");
        return w;
    }

    // Genuinely incomparable: separate conv(P united with ray(-p)) from L.
    Cortege cortege = separate(OpenCellUnion::hull_with_ray(cone, p), lineality);
    certify_positive_on_cells(cone, cortege, "witness_non_preference");
    if (!common_kernel(cortege).contains(lineality))
        throw internal_error("witness_non_preference: function does not vanish on the lineality");
    w.fn = StepLinearFn{std::move(cortege)};
    w.value = eval(w.fn, p);
    if (w.value >= 0)
        throw internal_error("witness_non_preference: certified function not negative at the pair");
    family.members.push_back(w);
    return w;
}

IntersectionReport check_intersection_representation(
    const SignCone& cone, const ComponentLattice& l, const Subspace& lineality,
    const std::vector<std::pair<RatVector, RatVector>>& pairs, WitnessFamily& family) {
    IntersectionReport report;
    ensure_extension(cone, l, lineality, family);

    auto collected = [&](const auto& fn) {
        fn(StepLinearFn{*family.extension});
        for (const Witness& w : family.members) fn(w.fn);
    };

    for (const auto& [y, z] : pairs) {
        ++report.pairs;
        const RatVector d = sub(z, y);
        switch (relate(cone, lineality, y, z)) {
            case RelationVerdict::precedes: {
                ++report.preferred_pairs;
                collected([&](const StepLinearFn& fn) {
                    if (eval(fn, d) <= 0) ++report.violations;
                });
                break;
            }
            case RelationVerdict::equipotent: {
                ++report.equipotent_pairs;
                collected([&](const StepLinearFn& fn) {
                    if (eval(fn, d) != 0) ++report.violations;
                });
                break;
            }
            default: {
                // A previously certified family member may already settle the
                // pair; only unsettled pairs construct a fresh witness.
                bool settled = eval(StepLinearFn{*family.extension}, d) <= 0;
                for (std::size_t i = 0; i < family.members.size() && !settled; ++i)
                    settled = eval(family.members[i].fn, d) <= 0;
                if (!settled) {
                    const Witness w = witness_non_preference(cone, l, lineality, family, y, z);
                    ++report.witnesses_built;
                    if (w.value > 0) ++report.violations;
                }
                break;
            }
        }
    }
    return report;
}

std::optional<RatVector> monotone_linear_for_open(const SignCone& cone, const ComponentLattice& l,
                                                  const Subspace& lineality) {
    if (!cone.validated())
        throw precondition_error("monotone_linear_for_open: cone is not validated");
    if (l.components.size() != 1) return std::nullopt;

    const GeneratorCone hull = closed_hull_generators(cone);
    LinearSystem dual_sys(cone.dim());
    for (const RatVector& r : hull.rays) dual_sys.add_weak(r);
    for (const RatVector& li : hull.lines) dual_sys.add_eq(li);
    for (const RatVector& b : lineality.basis()) dual_sys.add_eq(b);
    const GeneratorCone dual = primal_description(dual_sys, std::max(kDimensionCap, cone.dim()));
    if (dual.rays.empty())
        throw internal_error("monotone_linear_for_open: dual cone of an open preference is degenerate");
    RatVector phi = zero_vector(cone.dim());
    for (const RatVector& r : dual.rays) phi = add(phi, r);
    phi = primitive(phi);

    for (const Cell* cell : cone.realizable_cells()) {
        LinearSystem sys = cell->system(cone.matrix());
        sys.add_weak(negate(phi));
        if (strictly_feasible(sys))
            throw internal_error("monotone_linear_for_open: functional not positive on a cell");
    }
    for (const RatVector& b : lineality.basis())
        if (dot(phi, b) != 0)
            throw internal_error("monotone_linear_for_open: functional nonzero on the lineality");
    return phi;
}

} // namespace prefcone
