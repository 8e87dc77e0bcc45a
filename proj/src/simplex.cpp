#include "prefcone/linear_system.hpp"

#include "prefcone/errors.hpp"

namespace prefcone {

void LinearSystem::add_membership(const Subspace& v) {
    if (v.ambient_dim() != ambient_dim)
        throw precondition_error("add_membership: ambient dimension mismatch");
    const Subspace complement = orthogonal_complement(v);
    for (const RatVector& row : complement.basis()) add_eq(row);
}

bool LinearSystem::satisfied_by(const RatVector& x) const {
    for (const RatVector& a : eq.rows)
        if (dot(a, x) != 0) return false;
    for (const RatVector& a : strict.rows)
        if (dot(a, x) <= 0) return false;
    for (const RatVector& a : weak.rows)
        if (dot(a, x) < 0) return false;
    return true;
}

namespace {

// Tableau simplex for: maximize c.w subject to M w <= b, w >= 0, with b >= 0
// so the slack basis is feasible from the start. Bland's rule on both the
// entering and leaving choices guarantees termination.
struct MaxResult {
    Rational objective;
    RatVector w;
};

MaxResult solve_max(const RatMatrix& m, const RatVector& b, const RatVector& c, LpStats* stats) {
    const int rows = m.row_count();
    const int nvars = m.cols;
    const int total = nvars + rows;

    // T holds the constraint rows [M | I | b]; z holds reduced costs and, in
    // its last entry, the running objective value.
    std::vector<RatVector> t(static_cast<std::size_t>(rows), RatVector(static_cast<std::size_t>(total + 1)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < nvars; ++j) t[i][static_cast<std::size_t>(j)] = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t[i][static_cast<std::size_t>(nvars + i)] = 1;
        t[i][static_cast<std::size_t>(total)] = b[static_cast<std::size_t>(i)];
    }
    RatVector z(static_cast<std::size_t>(total + 1));
    for (int j = 0; j < nvars; ++j) z[static_cast<std::size_t>(j)] = -c[static_cast<std::size_t>(j)];

    std::vector<int> basis(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = nvars + i;

    long pivots = 0;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < total; ++j) {
            if (z[static_cast<std::size_t>(j)] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break; // optimal

        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < rows; ++i) {
            const Rational& coef = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (coef <= 0) continue;
            const Rational ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(total)] / coef;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw internal_error("simplex: unbounded objective on a bounded program");

        RatVector& prow = t[static_cast<std::size_t>(leave)];
        const Rational inv = Rational(1) / prow[static_cast<std::size_t>(enter)];
        for (Rational& x : prow) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == leave) continue;
            RatVector& row = t[static_cast<std::size_t>(i)];
            const Rational f = row[static_cast<std::size_t>(enter)];
            if (f == 0) continue;
            for (int j = 0; j <= total; ++j)
                row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
        }
        const Rational zf = z[static_cast<std::size_t>(enter)];
        if (zf != 0)
            for (int j = 0; j <= total; ++j)
                z[static_cast<std::size_t>(j)] -= zf * prow[static_cast<std::size_t>(j)];
        basis[static_cast<std::size_t>(leave)] = enter;
        ++pivots;
    }
    if (stats) stats->pivots += pivots;

    MaxResult out;
    out.objective = z[static_cast<std::size_t>(total)];
    out.w = RatVector(static_cast<std::size_t>(nvars));
    for (int i = 0; i < rows; ++i)
        if (basis[static_cast<std::size_t>(i)] < nvars)
            out.w[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(total)];
    return out;
}

} // namespace

std::optional<RatVector> strictly_feasible(const LinearSystem& sys, LpStats* stats) {
    const int n = sys.ambient_dim;
    // Variables: x = u - v with u, v >= 0, plus the slack scalar d >= 0.
    const int nvars = 2 * n + 1;
    RatMatrix m(nvars);
    RatVector b;

    auto add_leq = [&](const RatVector& a, const Rational& d_coef, const Rational& rhs) {
        // a.u - a.v + d_coef*d <= rhs
        RatVector row(static_cast<std::size_t>(nvars));
        for (int j = 0; j < n; ++j) {
            row[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(n + j)] = -a[static_cast<std::size_t>(j)];
        }
        row[static_cast<std::size_t>(2 * n)] = d_coef;
        m.rows.push_back(std::move(row));
        b.push_back(rhs);
    };

    for (const RatVector& a : sys.strict.rows) add_leq(negate(a), 1, 0); // a.x >= d
    for (const RatVector& a : sys.eq.rows) {
        add_leq(a, 0, 0);
        add_leq(negate(a), 0, 0);
    }
    for (const RatVector& a : sys.weak.rows) add_leq(negate(a), 0, 0); // a.x >= 0
    {
        RatVector row(static_cast<std::size_t>(nvars));
        row[static_cast<std::size_t>(2 * n)] = 1; // d <= 1
        m.rows.push_back(std::move(row));
        b.push_back(1);
    }

    RatVector c(static_cast<std::size_t>(nvars));
    c[static_cast<std::size_t>(2 * n)] = 1; // maximize d

    const MaxResult res = solve_max(m, b, c, stats);
    if (res.objective <= 0) return std::nullopt;

    RatVector x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        x[static_cast<std::size_t>(j)] = res.w[static_cast<std::size_t>(j)] - res.w[static_cast<std::size_t>(n + j)];
    if (!sys.satisfied_by(x))
        throw internal_error("strictly_feasible: solver returned a point violating the system");
    return x;
}

} // namespace prefcone
