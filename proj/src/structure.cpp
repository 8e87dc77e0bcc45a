#include "prefcone/structure.hpp"

#include <algorithm>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

// A sub-interval of (0, inf), possibly degenerate. Endpoints absent mean
// unbounded on that side.
struct MuInterval {
    bool empty = false;
    std::optional<Rational> lo = Rational(0);
    bool lo_strict = true;
    std::optional<Rational> hi;
    bool hi_strict = true;

    void clip_lo(const Rational& v, bool strict) {
        if (!lo || v > *lo || (v == *lo && strict && !lo_strict)) {
            lo = v;
            lo_strict = strict;
        }
    }
    void clip_hi(const Rational& v, bool strict) {
        if (!hi || v < *hi || (v == *hi && strict && !hi_strict)) {
            hi = v;
            hi_strict = strict;
        }
    }
    void pin(const Rational& v) {
        clip_lo(v, false);
        clip_hi(v, false);
    }
    bool nonempty() const {
        if (empty) return false;
        if (lo && hi) {
            if (*lo > *hi) return false;
            if (*lo == *hi) return !lo_strict && !hi_strict;
        }
        return true;
    }
    Rational pick() const {
        if (lo && hi) {
            if (*lo == *hi) return *lo;
            return (*lo + *hi) / 2;
        }
        if (lo) return lo_strict ? *lo + 1 : *lo;
        return 1; // cannot happen here: lo starts at 0
    }
};

std::optional<Rational> mu_in_cell(const SignCone& cone, const Cell& cell, const RatVector& y,
                                   const RatVector& z) {
    MuInterval iv;
    const RatVector cz = cone.matrix().apply(z);
    const RatVector dy = cone.matrix().apply(y);
    for (int i = 0; i < cone.row_count() && !iv.empty; ++i) {
        const Rational& c = cz[static_cast<std::size_t>(i)];
        const Rational& d = dy[static_cast<std::size_t>(i)];
        switch (cell.sign[static_cast<std::size_t>(i)]) {
            case Sign::plus: // c - mu*d > 0
                if (d == 0) {
                    if (c <= 0) iv.empty = true;
                } else if (d > 0) {
                    iv.clip_hi(c / d, true);
                } else {
                    iv.clip_lo(c / d, true);
                }
                break;
            case Sign::minus: // c - mu*d < 0
                if (d == 0) {
                    if (c >= 0) iv.empty = true;
                } else if (d > 0) {
                    iv.clip_lo(c / d, true);
                } else {
                    iv.clip_hi(c / d, true);
                }
                break;
            case Sign::zero: // c - mu*d = 0
                if (d == 0) {
                    if (c != 0) iv.empty = true;
                } else {
                    iv.pin(c / d);
                }
                break;
        }
        if (!iv.nonempty()) iv.empty = true;
    }
    if (!iv.nonempty()) return std::nullopt;
    return iv.pick();
}

std::vector<SignVector> sorted_cells(const std::vector<const Cell*>& cells) {
    std::vector<SignVector> out;
    out.reserve(cells.size());
    for (const Cell* c : cells) out.push_back(c->sign);
    std::sort(out.begin(), out.end());
    return out;
}

void merge_generators(GeneratorCone& acc, const GeneratorCone& more) {
    acc.rays.insert(acc.rays.end(), more.rays.begin(), more.rays.end());
    acc.lines.insert(acc.lines.end(), more.lines.begin(), more.lines.end());
}

void canonicalize_generators(GeneratorCone& g) {
    for (RatVector& r : g.rays) r = primitive(r);
    for (RatVector& l : g.lines) l = primitive_line(l);
    std::sort(g.rays.begin(), g.rays.end());
    g.rays.erase(std::unique(g.rays.begin(), g.rays.end()), g.rays.end());
    std::sort(g.lines.begin(), g.lines.end());
    g.lines.erase(std::unique(g.lines.begin(), g.lines.end()), g.lines.end());
}

Subspace lineality_of_generators(const GeneratorCone& g) {
    const LinearSystem facets = dual_description(g, std::max(kDimensionCap, g.dim));
    return kernel(stack(facets.eq, facets.weak));
}

// The translation cross-check of the computed lineality: stepping any cell
// along h can only reach admitted sign vectors. Rows orthogonal to h keep
// their sign; the rest branch. Each escaping candidate costs one LP over
// (y, t) deciding whether some y in the cell and some step t*h realize it.
bool translation_stays_inside(const SignCone& cone, const RatVector& h) {
    const int m = cone.row_count();
    const int n = cone.dim();
    std::vector<SignVector> admitted;
    for (const Cell& c : cone.cells()) admitted.push_back(c.sign);
    std::sort(admitted.begin(), admitted.end());

    const RatVector ah = cone.matrix().apply(h);
    auto sign_row = [](LinearSystem& sys, RatVector row, Sign s) {
        switch (s) {
            case Sign::zero: sys.add_eq(std::move(row)); break;
            case Sign::plus: sys.add_strict(std::move(row)); break;
            case Sign::minus: sys.add_strict(negate(row)); break;
        }
    };
    for (const Cell* cell : cone.realizable_cells()) {
        const bool escaped = walk_escaping_signs(
            m, admitted,
            [&](int i) -> std::vector<Sign> {
                if (ah[static_cast<std::size_t>(i)] == 0) return {cell->sign[static_cast<std::size_t>(i)]};
                return {Sign::minus, Sign::zero, Sign::plus};
            },
            [&](const SignVector& u) -> bool {
                LinearSystem sys(n + 1);
                for (int r = 0; r < m; ++r) {
                    const RatVector& a = cone.matrix().rows[static_cast<std::size_t>(r)];
                    RatVector cell_row(a);
                    cell_row.push_back(0);
                    RatVector step_row(a);
                    step_row.push_back(ah[static_cast<std::size_t>(r)]);
                    sign_row(sys, std::move(cell_row), cell->sign[static_cast<std::size_t>(r)]);
                    sign_row(sys, std::move(step_row), u[static_cast<std::size_t>(r)]);
                }
                return strictly_feasible(sys).has_value();
            });
        if (escaped) return false;
    }
    return true;
}

} // namespace

bool majorizes(const SignCone& cone, const RatVector& y, const RatVector& z) {
    return majorization_witness(cone, y, z).has_value();
}

std::optional<Rational> majorization_witness(const SignCone& cone, const RatVector& y,
                                             const RatVector& z) {
    if (!cone.contains(y) || !cone.contains(z))
        throw precondition_error("majorization is defined on positive vectors only");
    for (const Cell* cell : cone.realizable_cells())
        if (const std::optional<Rational> mu = mu_in_cell(cone, *cell, y, z)) return mu;
    return std::nullopt;
}

bool ComponentLattice::is_chain() const {
    const std::size_t k = components.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!order[i][j] && !order[j][i]) return false;
    return true;
}

int ComponentLattice::component_of_cell(const SignVector& s) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (std::binary_search(components[i].cells.begin(), components[i].cells.end(), s))
            return static_cast<int>(i);
    return -1;
}

int ComponentLattice::component_of_point(const SignCone& cone, const RatVector& y) const {
    if (!cone.contains(y)) return -1;
    return component_of_cell(cone.signs_at(y));
}

SignVector perturbed_sign(const SignCone& cone, const SignVector& s, const RatVector& d) {
    const RatVector ad = cone.matrix().apply(d);
    SignVector u(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        u[i] = s[i] != Sign::zero ? s[i] : sign_of_value(ad[i]);
    return u;
}

bool region_open_at(const SignCone& cone, const std::vector<SignVector>& region_sorted,
                    const SignVector& s, const Subspace& dirs) {
    for (const RatVector& b : dirs.basis()) {
        for (const RatVector& d : {b, negate(b)}) {
            const SignVector u = perturbed_sign(cone, s, d);
            if (!std::binary_search(region_sorted.begin(), region_sorted.end(), u)) return false;
        }
    }
    return true;
}

GeneratorCone cell_closure_generators(const SignCone& cone, const Cell& cell) {
    LinearSystem sys = cell.system(cone.matrix());
    return primal_description(sys, std::max(kDimensionCap, cone.dim()));
}

GeneratorCone closed_hull_generators(const SignCone& cone) {
    GeneratorCone acc(cone.dim());
    for (const Cell* cell : cone.realizable_cells())
        merge_generators(acc, cell_closure_generators(cone, *cell));
    canonicalize_generators(acc);
    return acc;
}

ComponentLattice components(const SignCone& cone) {
    ComponentLattice lattice;
    const std::vector<const Cell*> cells = cone.realizable_cells();

    // Group cells by mutual majorization of their representatives; the
    // verdict is constant across a cell, so one representative decides.
    std::vector<std::vector<const Cell*>> classes;
    for (const Cell* cell : cells) {
        bool placed = false;
        for (auto& cls : classes) {
            const RatVector& r = *cls.front()->representative;
            const RatVector& c = *cell->representative;
            if (majorizes(cone, c, r) && majorizes(cone, r, c)) {
                cls.push_back(cell);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({cell});
    }

    for (const auto& cls : classes) {
        Component comp;
        comp.cells = sorted_cells(cls);
        comp.representative = zero_vector(cone.dim());
        std::vector<RatVector> hull_basis;
        comp.closure = GeneratorCone(cone.dim());
        for (const Cell* cell : cls) {
            comp.representative = add(comp.representative, *cell->representative);
            hull_basis.insert(hull_basis.end(), cell->lin.basis().begin(), cell->lin.basis().end());
            merge_generators(comp.closure, cell_closure_generators(cone, *cell));
        }
        canonicalize_generators(comp.closure);
        comp.lin_hull = Subspace::from_spanning(std::move(hull_basis), cone.dim());
        comp.lineality = lineality_of_generators(comp.closure);
        lattice.components.push_back(std::move(comp));
    }
    std::sort(lattice.components.begin(), lattice.components.end(),
              [](const Component& a, const Component& b) { return a.cells < b.cells; });

    const std::size_t k = lattice.components.size();
    lattice.order.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            lattice.order[i][j] =
                i == j || majorizes(cone, lattice.components[i].representative,
                                    lattice.components[j].representative);
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && lattice.order[i][j] && lattice.order[j][i])
                throw internal_error("component order is not antisymmetric");

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j || !lattice.order[i][j]) continue;
            bool cover = true;
            for (std::size_t t = 0; t < k && cover; ++t)
                if (t != i && t != j && lattice.order[i][t] && lattice.order[t][j]) cover = false;
            if (cover) lattice.hasse_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::sort(lattice.hasse_edges.begin(), lattice.hasse_edges.end());

    if (cone.validated()) {
        // Order transitivity.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < k; ++t)
                    if (lattice.order[i][j] && lattice.order[j][t] && !lattice.order[i][t])
                        throw internal_error("component order is not transitive");

        // Relative openness of every class (the exact criterion for sign cells).
        for (const Component& comp : lattice.components)
            for (const SignVector& s : comp.cells)
                if (!region_open_at(cone, comp.cells, s, comp.lin_hull))
                    throw internal_error("component fails the relative-openness criterion");

        // Join law: least upper bound exists and equals the class of the
        // summed representatives.
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const int by_order = join_by_order(lattice, static_cast<int>(i), static_cast<int>(j));
                if (by_order < 0) throw internal_error("component pair without least upper bound");
                const int by_sum = lattice.component_of_point(
                    cone, add(lattice.components[i].representative, lattice.components[j].representative));
                if (by_order != by_sum)
                    throw internal_error("join law violated: order join differs from representative sum");
            }
        }
        lattice.laws_verified = true;
    }
    return lattice;
}

int join_by_order(const ComponentLattice& l, int e1, int e2) {
    const std::size_t k = l.components.size();
    int least = -1;
    for (std::size_t u = 0; u < k; ++u) {
        if (!l.order[static_cast<std::size_t>(e1)][u] || !l.order[static_cast<std::size_t>(e2)][u]) continue;
        if (least < 0 || l.order[u][static_cast<std::size_t>(least)]) least = static_cast<int>(u);
    }
    if (least < 0) return -1;
    for (std::size_t u = 0; u < k; ++u)
        if (l.order[static_cast<std::size_t>(e1)][u] && l.order[static_cast<std::size_t>(e2)][u] &&
            !l.order[static_cast<std::size_t>(least)][u])
            return -1; // not actually below every upper bound
    return least;
}

int join(const SignCone& cone, const ComponentLattice& l, int e1, int e2) {
    const int least = join_by_order(l, e1, e2);
    if (least < 0) {
        if (l.laws_verified) throw internal_error("join: verified lattice lost its least upper bound");
        throw precondition_error("join: no least upper bound (cone failed validation)");
    }
    const RatVector s = add(l.components[static_cast<std::size_t>(e1)].representative,
                            l.components[static_cast<std::size_t>(e2)].representative);
    const int by_sum = l.component_of_point(cone, s);
    if (by_sum != least) throw internal_error("join: order join differs from representative-sum class");
    return least;
}

std::vector<SignVector> cells_of_components(const ComponentLattice& l, const std::vector<int>& ids) {
    std::vector<SignVector> out;
    for (int id : ids) {
        const Component& c = l.components[static_cast<std::size_t>(id)];
        out.insert(out.end(), c.cells.begin(), c.cells.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> face_below(const SignCone& cone, const ComponentLattice& l, int e) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < l.components.size(); ++i)
        if (l.order[i][static_cast<std::size_t>(e)]) ids.push_back(static_cast<int>(i));

    if (l.laws_verified) {
        const std::vector<SignVector> fcells = cells_of_components(l, ids);
        // Face axiom on representative segments: a sum of positives landing in
        // F(E) forces both addends into F(E).
        const std::vector<const Cell*> cells = cone.realizable_cells();
        for (const Cell* uc : cells) {
            for (const Cell* vc : cells) {
                const RatVector w = add(*uc->representative, *vc->representative);
                if (!std::binary_search(fcells.begin(), fcells.end(), cone.signs_at(w))) continue;
                if (!std::binary_search(fcells.begin(), fcells.end(), uc->sign) ||
                    !std::binary_search(fcells.begin(), fcells.end(), vc->sign))
                    throw internal_error("face_below: face axiom fails on a representative segment");
            }
        }
        // Intrinsic core check: open exactly at the cells of E.
        std::vector<RatVector> dirs;
        for (int id : ids) {
            const Subspace& h = l.components[static_cast<std::size_t>(id)].lin_hull;
            dirs.insert(dirs.end(), h.basis().begin(), h.basis().end());
        }
        const Subspace span_f = Subspace::from_spanning(std::move(dirs), cone.dim());
        for (int id : ids) {
            const bool inside = id == e;
            for (const SignVector& s : l.components[static_cast<std::size_t>(id)].cells) {
                if (region_open_at(cone, fcells, s, span_f) != inside)
                    throw internal_error("face_below: intrinsic core differs from the component");
            }
        }
    }
    return ids;
}

std::vector<int> strict_face_below(const SignCone& cone, const ComponentLattice& l, int e) {
    std::vector<int> ids = face_below(cone, l, e);
    std::erase(ids, e);
    return ids;
}

std::optional<int> strong_positives(const SignCone& cone, const ComponentLattice& l) {
    const std::size_t k = l.components.size();
    for (std::size_t g = 0; g < k; ++g) {
        bool greatest = true;
        for (std::size_t i = 0; i < k && greatest; ++i)
            if (!l.order[i][g]) greatest = false;
        if (!greatest) continue;
        // Strong positivity verified directly: an explicit mu for every class.
        const RatVector& r = l.components[g].representative;
        for (std::size_t i = 0; i < k; ++i) {
            const std::optional<Rational> mu = majorization_witness(cone, l.components[i].representative, r);
            if (!mu || !cone.contains(sub(r, scale(*mu, l.components[i].representative))))
                throw internal_error("strong_positives: greatest component fails the direct definition");
        }
        return static_cast<int>(g);
    }
    return std::nullopt;
}

Subspace lineality(const SignCone& cone, const ComponentLattice& l) {
    Subspace result = Subspace::full(cone.dim());
    for (const Component& comp : l.components) result = intersect(result, comp.lineality);
    for (const RatVector& h : result.basis())
        if (!translation_stays_inside(cone, h))
            throw internal_error("lineality: translation cross-check failed");
    return result;
}

bool is_relatively_open_preference(const SignCone&, const ComponentLattice& l) {
    return l.components.size() == 1;
}

} // namespace prefcone
