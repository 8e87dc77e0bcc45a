#include "prefcone/sign_cone.hpp"

#include <algorithm>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

void add_sign_row(LinearSystem& sys, const RatVector& row, Sign s) {
    switch (s) {
        case Sign::zero: sys.add_eq(row); break;
        case Sign::plus: sys.add_strict(row); break;
        case Sign::minus: sys.add_strict(negate(row)); break;
    }
}

// Sign of a row extended into a product space: [a | 0], [0 | a] or [a | a]
// over variables (y, z).
RatVector embed(const RatVector& a, int n, bool on_y, bool on_z) {
    RatVector row(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) {
        if (on_y) row[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)];
        if (on_z) row[static_cast<std::size_t>(n + j)] = a[static_cast<std::size_t>(j)];
    }
    return row;
}

long long pow3_capped(int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= 3;
        if (v > (1LL << 40)) return -1; // unreachable by any finite cell list
    }
    return v;
}

// True when every sign vector extending `prefix` belongs to the sorted list.
bool prefix_complete_in(const std::vector<SignVector>& sorted, const SignVector& prefix, int rows) {
    const std::size_t k = prefix.size();
    const long long need = pow3_capped(rows - static_cast<int>(k));
    if (need < 0) return false;
    auto cmp = [k](const SignVector& a, const SignVector& b) {
        const std::size_t la = std::min(k, a.size());
        const std::size_t lb = std::min(k, b.size());
        return std::lexicographical_compare(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(la),
                                            b.begin(), b.begin() + static_cast<std::ptrdiff_t>(lb));
    };
    const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), prefix, cmp);
    return hi - lo == need;
}


// Sign vectors a sum of points from cells s and t can land in: coordinates
// where at most one nonzero sign occurs are forced, opposing coordinates
// branch three ways. Each candidate outside the member list costs one LP.
std::optional<std::pair<RatVector, RatVector>> sum_escape(
    const SignCone& cone, const std::vector<SignVector>& members, const Cell& s, const Cell& t) {
    const int m = cone.row_count();
    const int n = cone.dim();
    std::optional<std::pair<RatVector, RatVector>> witness;
    walk_escaping_signs(
        m, members,
        [&](int i) -> std::vector<Sign> {
            const Sign si = s.sign[static_cast<std::size_t>(i)];
            const Sign ti = t.sign[static_cast<std::size_t>(i)];
            if (static_cast<int>(si) * static_cast<int>(ti) == -1)
                return {Sign::minus, Sign::zero, Sign::plus};
            return {si == Sign::zero ? ti : si};
        },
        [&](const SignVector& u) -> bool {
            LinearSystem sys(2 * n);
            for (int r = 0; r < m; ++r) {
                const RatVector& a = cone.matrix().rows[static_cast<std::size_t>(r)];
                add_sign_row(sys, embed(a, n, true, false), s.sign[static_cast<std::size_t>(r)]);
                add_sign_row(sys, embed(a, n, false, true), t.sign[static_cast<std::size_t>(r)]);
                add_sign_row(sys, embed(a, n, true, true), u[static_cast<std::size_t>(r)]);
            }
            if (const std::optional<RatVector> pt = strictly_feasible(sys)) {
                RatVector y(pt->begin(), pt->begin() + n);
                RatVector z(pt->begin() + n, pt->end());
                witness = std::make_pair(std::move(y), std::move(z));
                return true;
            }
            return false;
        });
    return witness;
}

std::optional<std::pair<RatVector, RatVector>> convexity_violation(
    const SignCone& cone, std::vector<SignVector> members) {
    std::sort(members.begin(), members.end());
    std::vector<const Cell*> realizable;
    for (const SignVector& s : members) {
        const Cell* c = cone.find_cell(s);
        if (c && c->realizable) realizable.push_back(c);
    }
    for (const Cell* s : realizable)
        for (const Cell* t : realizable)
            if (auto w = sum_escape(cone, members, *s, *t)) return w;
    return std::nullopt;
}

} // namespace

SignVector parse_sign_vector(const std::string& text) {
    SignVector s;
    s.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': s.push_back(Sign::plus); break;
            case '0': s.push_back(Sign::zero); break;
            case '-': s.push_back(Sign::minus); break;
            default: throw parse_error(std::string("invalid sign character '") + c + "'");
        }
    }
    return s;
}

std::string to_string(const SignVector& s) {
    std::string out;
    out.reserve(s.size());
    for (Sign x : s) out += x == Sign::plus ? '+' : (x == Sign::zero ? '0' : '-');
    return out;
}

SignVector negate(const SignVector& s) {
    SignVector out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<Sign>(-static_cast<int>(s[i]));
    return out;
}

bool is_all_zero(const SignVector& s) {
    return std::all_of(s.begin(), s.end(), [](Sign x) { return x == Sign::zero; });
}

std::string to_string(RelationVerdict v) {
    switch (v) {
        case RelationVerdict::precedes: return "precedes";
        case RelationVerdict::succeeds: return "succeeds";
        case RelationVerdict::equipotent: return "equipotent";
        case RelationVerdict::indifferent_only: return "indifferent_only";
    }
    return "?";
}

LinearSystem Cell::system(const RatMatrix& a) const {
    LinearSystem sys(a.cols);
    for (int i = 0; i < a.row_count(); ++i)
        add_sign_row(sys, a.rows[static_cast<std::size_t>(i)], sign[static_cast<std::size_t>(i)]);
    return sys;
}

void check_sign_enum_cap(int rows) {
    if (rows > sign_enum_cap())
        throw precondition_error("sign enumeration over " + std::to_string(rows) +
                                 " rows exceeds the cap of " + std::to_string(sign_enum_cap()));
}

bool walk_escaping_signs(int rows, const std::vector<SignVector>& sorted_members,
                         const std::function<std::vector<Sign>(int)>& choices,
                         const std::function<bool(const SignVector&)>& leaf) {
    SignVector u;
    u.reserve(static_cast<std::size_t>(rows));
    auto dfs = [&](auto&& self, int i) -> bool {
        if (prefix_complete_in(sorted_members, u, rows)) return false;
        if (i == rows) return leaf(u); // prefix completeness already rules out members
        for (Sign s : choices(i)) {
            u.push_back(s);
            const bool stop = self(self, i + 1);
            u.pop_back();
            if (stop) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

SignCone SignCone::from_cells(int dim, RatMatrix a, std::vector<SignVector> cells, std::string name) {
    if (a.cols != dim) throw precondition_error("constraint matrix width differs from dim");
    if (cells.empty()) throw parse_error("empty cell list");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    SignCone cone;
    cone.dim_ = dim;
    cone.a_ = std::move(a);
    cone.name_ = std::move(name);
    for (SignVector& s : cells) {
        if (static_cast<int>(s.size()) != cone.a_.row_count())
            throw parse_error("sign vector '" + to_string(s) + "' does not match the row count");
        Cell cell;
        cell.sign = std::move(s);
        RatMatrix zero_rows(dim);
        for (int i = 0; i < cone.a_.row_count(); ++i)
            if (cell.sign[static_cast<std::size_t>(i)] == Sign::zero)
                zero_rows.rows.push_back(cone.a_.rows[static_cast<std::size_t>(i)]);
        cell.lin = kernel(zero_rows);
        if (const std::optional<RatVector> rep = strictly_feasible(cell.system(cone.a_))) {
            cell.realizable = true;
            cell.representative = *rep;
            if (cone.signs_at_raw(*rep) != cell.sign)
                throw internal_error("cell representative fails its own sign check");
        }
        cone.cells_.push_back(std::move(cell));
    }
    return cone;
}

SignCone SignCone::load(int dim, RatMatrix a, const std::vector<std::string>& cell_strings,
                        std::string name) {
    std::vector<SignVector> cells;
    cells.reserve(cell_strings.size());
    for (const std::string& text : cell_strings) cells.push_back(parse_sign_vector(text));
    return from_cells(dim, std::move(a), std::move(cells), std::move(name));
}

SignCone SignCone::lex_cone(const std::vector<RatVector>& functionals, int dim, std::string name) {
    const int k = static_cast<int>(functionals.size());
    if (k == 0) throw precondition_error("lex_cone: empty functional list");
    check_sign_enum_cap(k);
    RatMatrix a(dim);
    for (const RatVector& f : functionals) a.add_row(f);
    if (rank_of(a) != k) throw precondition_error("lex_cone: functionals are linearly dependent");

    // All sign vectors whose first nonzero entry is +.
    std::vector<SignVector> cells;
    SignVector current;
    auto expand = [&](auto&& self, int i) -> void {
        if (i == k) {
            cells.push_back(current);
            return;
        }
        for (Sign s : {Sign::minus, Sign::zero, Sign::plus}) {
            current.push_back(s);
            self(self, i + 1);
            current.pop_back();
        }
    };
    for (int lead = 0; lead < k; ++lead) {
        current.assign(static_cast<std::size_t>(lead), Sign::zero);
        current.push_back(Sign::plus);
        expand(expand, lead + 1);
    }
    std::sort(cells.begin(), cells.end());

    SignCone cone;
    cone.dim_ = dim;
    cone.a_ = std::move(a);
    cone.name_ = std::move(name);
    for (SignVector& s : cells) {
        Cell cell;
        cell.sign = std::move(s);
        RatMatrix zero_rows(dim);
        RatVector targets;
        RatMatrix nonzero_rows(dim);
        for (int i = 0; i < k; ++i) {
            const RatVector& row = cone.a_.rows[static_cast<std::size_t>(i)];
            if (cell.sign[static_cast<std::size_t>(i)] == Sign::zero) {
                zero_rows.rows.push_back(row);
            } else {
                nonzero_rows.rows.push_back(row);
                targets.push_back(cell.sign[static_cast<std::size_t>(i)] == Sign::plus ? 1 : -1);
            }
        }
        cell.lin = kernel(zero_rows);
        RatMatrix full(dim);
        full.rows = nonzero_rows.rows;
        for (const RatVector& z : zero_rows.rows) full.rows.push_back(z);
        RatVector rhs = targets;
        rhs.resize(targets.size() + zero_rows.rows.size());
        bool ok = false;
        RatVector rep = solve_particular(full, rhs, &ok);
        if (!ok) throw internal_error("lex_cone: independent rows yielded an inconsistent solve");
        cell.realizable = true;
        cell.representative = std::move(rep);
        if (cone.signs_at_raw(*cell.representative) != cell.sign)
            throw internal_error("lex_cone representative fails its sign check");
        cone.cells_.push_back(std::move(cell));
    }
    return cone;
}

std::vector<const Cell*> SignCone::realizable_cells() const {
    std::vector<const Cell*> out;
    for (const Cell& c : cells_)
        if (c.realizable) out.push_back(&c);
    return out;
}

SignVector SignCone::signs_at(const RatVector& y) const {
    if (static_cast<int>(y.size()) != dim_)
        throw precondition_error("signs_at: ambient dimension mismatch");
    return signs_at_raw(y);
}

bool SignCone::has_cell(const SignVector& s) const { return find_cell(s) != nullptr; }

const Cell* SignCone::find_cell(const SignVector& s) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), s,
                                     [](const Cell& c, const SignVector& x) { return c.sign < x; });
    if (it != cells_.end() && it->sign == s) return &*it;
    return nullptr;
}

bool SignCone::contains(const RatVector& y) const { return has_cell(signs_at(y)); }

bool SignCone::prefix_complete(const SignVector& prefix) const {
    std::vector<SignVector> all;
    all.reserve(cells_.size());
    for (const Cell& c : cells_) all.push_back(c.sign);
    return prefix_complete_in(all, prefix, row_count());
}

ValidationReport validate_partial_preference(SignCone& cone) {
    ValidationReport report;
    report.asymmetric = true;
    for (const Cell& c : cone.cells_) {
        if (!c.realizable) continue;
        if (cone.has_cell(negate(c.sign))) {
            report.asymmetric = false;
            report.asymmetry_witness = c.representative;
            break;
        }
    }
    std::vector<SignVector> members;
    for (const Cell& c : cone.cells_) members.push_back(c.sign);
    if (auto w = convexity_violation(cone, std::move(members))) {
        report.convex = false;
        report.convexity_witness = std::move(w);
    } else {
        report.convex = true;
    }
    cone.validation_ = report;
    return report;
}

RelationVerdict relate(const SignCone& cone, const Subspace& lineality, const RatVector& y,
                       const RatVector& z) {
    if (static_cast<int>(y.size()) != cone.dim() || static_cast<int>(z.size()) != cone.dim())
        throw precondition_error("relate: ambient dimension mismatch");
    if (!cone.validated()) throw precondition_error("relate: cone is not a validated partial preference");
    const RatVector d = sub(z, y);
    if (cone.contains(d)) return RelationVerdict::precedes;
    if (cone.contains(negate(d))) return RelationVerdict::succeeds;
    if (lineality.contains(d)) return RelationVerdict::equipotent;
    return RelationVerdict::indifferent_only;
}

bool is_perfect(const SignCone& cone) {
    if (!cone.validated()) throw precondition_error("is_perfect: cone is not validated");
    const int m = cone.row_count();
    check_sign_enum_cap(m);
    if (kernel(cone.matrix()).dim() != 0) return false;

    SignVector s;
    auto walk = [&](auto&& self, int i) -> bool {
        if (i == m) {
            if (is_all_zero(s)) return true;
            if (cone.has_cell(s) || cone.has_cell(negate(s))) return true;
            return !strictly_feasible(Cell{s, false, std::nullopt, Subspace()}.system(cone.matrix()))
                        .has_value();
        }
        for (Sign x : {Sign::minus, Sign::zero, Sign::plus}) {
            s.push_back(x);
            const bool ok = self(self, i + 1);
            s.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return walk(walk, 0);
}

bool is_convex_cell_union(const SignCone& cone, const std::vector<SignVector>& member_cells,
                          std::optional<std::pair<RatVector, RatVector>>* witness) {
    auto w = convexity_violation(cone, member_cells);
    if (witness) *witness = w;
    return !w.has_value();
}

} // namespace prefcone
