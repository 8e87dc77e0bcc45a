#include "prefcone/double_description.hpp"

#include <algorithm>
#include <cstdint>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

// Incremental double description over Q^k. Constraints are inserted one at a
// time into the pair (lines, rays); lines always span the exact lineality
// space of the cone cut out so far, and rays are extreme modulo that
// lineality. Zero sets are tracked as bitmasks over the processed rows, and
// adjacency is decided by the exact rank test in the quotient space.
struct DdState {
    int dim;
    std::vector<RatVector> lines;
    std::vector<RatVector> rays;
    std::vector<std::uint64_t> zero; // zero[i]: processed rows tight at rays[i]
    std::vector<RatVector> processed;

    explicit DdState(int k) : dim(k) {
        for (int i = 0; i < k; ++i) lines.push_back(unit_vector(k, i));
    }

    bool adjacent(std::size_t p, std::size_t q) const {
        const std::uint64_t common = zero[p] & zero[q];
        RatMatrix sub(dim);
        for (std::size_t i = 0; i < processed.size(); ++i)
            if (common & (std::uint64_t{1} << i)) sub.rows.push_back(processed[i]);
        const int pointed_dim = dim - static_cast<int>(lines.size());
        return rank_of(std::move(sub)) == pointed_dim - 2;
    }

    void insert(const RatVector& a) {
        if (processed.size() >= 64)
            throw precondition_error("double description: more than 64 constraint rows");
        const std::uint64_t bit = std::uint64_t{1} << processed.size();

        // A line not orthogonal to the new row resolves it: the lineality
        // shrinks by one and the resolving line turns into a ray.
        std::size_t resolver = lines.size();
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (dot(a, lines[i]) != 0) {
                resolver = i;
                break;
            }
        }
        if (resolver < lines.size()) {
            const RatVector l0 = lines[resolver];
            const Rational al0 = dot(a, l0);
            std::vector<RatVector> new_lines;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i == resolver) continue;
                const Rational v = dot(a, lines[i]);
                new_lines.push_back(v == 0 ? lines[i] : primitive_line(sub(lines[i], scale(v / al0, l0))));
            }
            lines = std::move(new_lines);
            for (std::size_t i = 0; i < rays.size(); ++i) {
                const Rational v = dot(a, rays[i]);
                if (v != 0) rays[i] = primitive(sub(rays[i], scale(v / al0, l0)));
                zero[i] |= bit; // adjusted rays are tight at the new row
            }
            rays.push_back(primitive(al0 > 0 ? l0 : negate(l0)));
            // Every processed row vanishes on what was until now a line, so
            // the fresh ray is tight at all of them and only the new row is
            // strictly positive.
            zero.push_back(bit - 1);
            processed.push_back(a);
            return;
        }

        std::vector<Rational> val(rays.size());
        bool any_negative = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            if (val[i] < 0) any_negative = true;
        }
        if (!any_negative) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) zero[i] |= bit;
            processed.push_back(a);
            return;
        }

        std::vector<RatVector> new_rays;
        std::vector<std::uint64_t> new_zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] >= 0) {
                new_rays.push_back(rays[i]);
                new_zero.push_back(val[i] == 0 ? (zero[i] | bit) : zero[i]);
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                if (!adjacent(p, q)) continue;
                // val[p]*rays[q] - val[q]*rays[p] lands on the hyperplane.
                const RatVector w = primitive(sub(scale(val[p], rays[q]), scale(val[q], rays[p])));
                if (is_zero(w)) throw internal_error("double description: opposite rays in a pointed quotient");
                new_rays.push_back(w);
                new_zero.push_back((zero[p] & zero[q]) | bit);
            }
        }
        rays = std::move(new_rays);
        zero = std::move(new_zero);
        processed.push_back(a);
    }
};

void sort_canonical(std::vector<RatVector>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

} // namespace

GeneratorCone primal_description(const LinearSystem& sys, int dimension_cap) {
    if (sys.ambient_dim > dimension_cap)
        throw precondition_error("primal_description: ambient dimension exceeds cap");
    const int n = sys.ambient_dim;

    const Subspace w = kernel(sys.eq);
    GeneratorCone out(n);
    const int k = w.dim();
    if (k == 0) return out;

    // Work in coordinates of the kernel: x = B^T t.
    RatMatrix reduced_rows(k);
    auto push_reduced = [&](const RatVector& a) {
        RatVector r(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) r[static_cast<std::size_t>(j)] = dot(a, w.basis()[static_cast<std::size_t>(j)]);
        if (!is_zero(r)) reduced_rows.rows.push_back(primitive(r));
    };
    for (const RatVector& a : sys.strict.rows) push_reduced(a);
    for (const RatVector& a : sys.weak.rows) push_reduced(a);

    DdState dd(k);
    for (const RatVector& a : reduced_rows.rows) dd.insert(a);

    auto lift = [&](const RatVector& t) {
        RatVector x = zero_vector(n);
        for (int j = 0; j < k; ++j)
            if (t[static_cast<std::size_t>(j)] != 0)
                x = add(x, scale(t[static_cast<std::size_t>(j)], w.basis()[static_cast<std::size_t>(j)]));
        return x;
    };
    for (const RatVector& r : dd.rays) out.rays.push_back(primitive(lift(r)));
    for (const RatVector& l : dd.lines) out.lines.push_back(primitive_line(lift(l)));
    sort_canonical(out.rays);
    sort_canonical(out.lines);
    return out;
}

LinearSystem dual_description(const GeneratorCone& g, int dimension_cap) {
    // The polar cone {a : a.ray >= 0, a.line = 0} has the generators as its
    // constraint rows; converting it and reading the output as constraints on
    // the primal side gives the facet description (biduality of closed cones).
    LinearSystem polar(g.dim);
    for (const RatVector& r : g.rays) polar.add_weak(r);
    for (const RatVector& l : g.lines) polar.add_eq(l);
    const GeneratorCone dual = primal_description(polar, dimension_cap);

    LinearSystem out(g.dim);
    for (const RatVector& l : dual.lines) out.add_eq(l);
    for (const RatVector& r : dual.rays) out.add_weak(r);
    return out;
}

RatVector relative_interior_point(const GeneratorCone& g, int dimension_cap) {
    if (g.is_zero_cone()) throw precondition_error("relative_interior_point: zero cone");

    RatVector p = zero_vector(g.dim);
    for (const RatVector& r : g.rays) p = add(p, primitive(r));
    if (g.rays.empty()) p = primitive_line(g.lines.front());

    const LinearSystem facets = dual_description(g, dimension_cap);
    if (is_zero(p)) {
        // User-supplied rays may cancel (a line split into two rays). The
        // canonical generators cannot: their rays are extreme.
        const GeneratorCone canonical = primal_description(facets, dimension_cap);
        p = zero_vector(g.dim);
        for (const RatVector& r : canonical.rays) p = add(p, r);
        if (canonical.rays.empty()) p = canonical.lines.front();
    }
    auto implicit = [&](const RatVector& a) {
        for (const RatVector& r : g.rays)
            if (dot(a, r) != 0) return false;
        for (const RatVector& l : g.lines)
            if (dot(a, l) != 0) return false;
        return true;
    };

    bool ok = true;
    for (const RatVector& a : facets.eq.rows)
        if (dot(a, p) != 0) ok = false;
    for (const RatVector& a : facets.weak.rows) {
        const Rational v = dot(a, p);
        if (implicit(a) ? v != 0 : v <= 0) ok = false;
    }
    if (ok) return p;

    LinearSystem ri(g.dim);
    for (const RatVector& a : facets.eq.rows) ri.add_eq(a);
    for (const RatVector& a : facets.weak.rows) {
        if (implicit(a))
            ri.add_eq(a);
        else
            ri.add_strict(a);
    }
    const std::optional<RatVector> x = strictly_feasible(ri);
    if (!x) throw internal_error("relative_interior_point: interior LP infeasible on a nonzero cone");
    return *x;
}

bool cone_contains(const GeneratorCone& g, const RatVector& x) {
    if (static_cast<int>(x.size()) != g.dim)
        throw precondition_error("cone_contains: ambient dimension mismatch");
    if (is_zero(x)) return true;
    if (g.is_zero_cone()) return false;
    // Coefficients (lambda, mu, t): sum lambda_i rays_i + sum mu_j lines_j = t*x
    // with lambda >= 0 and t > 0.
    const int nr = static_cast<int>(g.rays.size());
    const int nl = static_cast<int>(g.lines.size());
    const int vars = nr + nl + 1;
    LinearSystem sys(vars);
    for (int i = 0; i < g.dim; ++i) {
        RatVector row(static_cast<std::size_t>(vars));
        for (int j = 0; j < nr; ++j) row[static_cast<std::size_t>(j)] = g.rays[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (int j = 0; j < nl; ++j) row[static_cast<std::size_t>(nr + j)] = g.lines[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(nr + nl)] = -x[static_cast<std::size_t>(i)];
        sys.add_eq(std::move(row));
    }
    for (int j = 0; j < nr; ++j) sys.add_weak(unit_vector(vars, j));
    sys.add_strict(unit_vector(vars, nr + nl));
    return strictly_feasible(sys).has_value();
}

} // namespace prefcone
