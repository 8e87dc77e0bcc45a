#include "prefcone/subspace.hpp"

#include <algorithm>
#include <cstdlib>

#include "prefcone/errors.hpp"

namespace prefcone {

int sign_enum_cap() {
    static const int cap = [] {
        if (const char* text = std::getenv("PREFCONE_SIGN_ENUM_CAP")) {
            const int v = std::atoi(text);
            if (v > 0) return v;
        }
        return kSignEnumCap;
    }();
    return cap;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '-' || text[i] == '+') {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](Int& out) {
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
            throw parse_error("malformed rational '" + text + "'");
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };
    Int num;
    read_digits(num);
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        read_digits(den);
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    }
    if (i != text.size()) throw parse_error("trailing characters in rational '" + text + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& x) {
    const Int num = numerator_of(x);
    const Int den = denominator_of(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

RatVector zero_vector(int n) { return RatVector(static_cast<std::size_t>(n)); }

RatVector unit_vector(int n, int i) {
    RatVector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVector add(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVector negate(const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

RatVector scale(const Rational& c, const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVector primitive(const RatVector& v) {
    Int lcm_den = 1;
    for (const Rational& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(x));
    std::vector<Int> ints(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator_of(v[i]) * (lcm_den / denominator_of(v[i]));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    RatVector out(v.size());
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

RatVector primitive_line(const RatVector& v) {
    RatVector out = primitive(v);
    for (const Rational& x : out) {
        if (x > 0) return out;
        if (x < 0) return negate(out);
    }
    return out;
}

void RatMatrix::add_row(RatVector r) {
    if (static_cast<int>(r.size()) != cols)
        throw precondition_error("row length does not match matrix width");
    rows.push_back(std::move(r));
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw precondition_error("vector length does not match matrix width");
    RatVector out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = dot(rows[i], v);
    return out;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix out(row_count());
    out.rows.assign(static_cast<std::size_t>(cols), RatVector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) out.rows[static_cast<std::size_t>(j)][i] = rows[i][static_cast<std::size_t>(j)];
    return out;
}

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.cols) throw precondition_error("stack: column counts differ");
    RatMatrix out = a;
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    return out;
}

std::vector<int> rref_in_place(RatMatrix& m) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t p = r;
        while (p < m.rows.size() && m.rows[p][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[p]);
        const Rational inv = Rational(1) / m.rows[r][static_cast<std::size_t>(c)];
        for (int j = c; j < m.cols; ++j) m.rows[r][static_cast<std::size_t>(j)] *= inv;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = m.rows[i][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.rows[i][static_cast<std::size_t>(j)] -= f * m.rows[r][static_cast<std::size_t>(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows.resize(r);
    return pivots;
}

int rank_of(RatMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

std::vector<Rational> solve_particular(const RatMatrix& m, const RatVector& rhs, bool* ok) {
    RatMatrix aug(m.cols + 1);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        RatVector row = m.rows[i];
        row.push_back(rhs[i]);
        aug.rows.push_back(std::move(row));
    }
    const std::vector<int> pivots = rref_in_place(aug);
    for (int p : pivots) {
        if (p == m.cols) { // pivot in the rhs column: inconsistent
            *ok = false;
            return {};
        }
    }
    RatVector x(static_cast<std::size_t>(m.cols));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug.rows[r].back();
    *ok = true;
    return x;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    std::vector<RatVector> rows;
    rows.reserve(static_cast<std::size_t>(ambient));
    for (int i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
    return from_spanning(std::move(rows), ambient);
}

Subspace Subspace::from_spanning(std::vector<RatVector> vectors, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = RatMatrix(ambient, std::move(vectors));
    for (const RatVector& v : s.basis_.rows)
        if (static_cast<int>(v.size()) != ambient)
            throw precondition_error("spanning vector has wrong ambient dimension");
    rref_in_place(s.basis_);
    return s;
}

bool Subspace::contains(const RatVector& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw precondition_error("membership test: ambient dimension mismatch");
    RatVector r = v;
    std::size_t row = 0;
    for (int c = 0; c < ambient_ && row < basis_.rows.size(); ++c) {
        if (basis_.rows[row][static_cast<std::size_t>(c)] == 1) {
            // c is this row's pivot column
            const Rational f = r[static_cast<std::size_t>(c)];
            if (f != 0)
                for (int j = 0; j < ambient_; ++j)
                    r[static_cast<std::size_t>(j)] -= f * basis_.rows[row][static_cast<std::size_t>(j)];
            ++row;
        }
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    for (const RatVector& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

Subspace kernel(const RatMatrix& m) {
    RatMatrix r = m;
    const std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RatVector> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVector v = zero_vector(m.cols);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            v[static_cast<std::size_t>(pivots[row])] = -r.rows[row][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return Subspace::from_spanning(std::move(basis), m.cols);
}

Subspace span_of(const std::vector<RatVector>& vectors, int ambient) {
    return Subspace::from_spanning(vectors, ambient);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw precondition_error("sum: ambient dimensions differ");
    std::vector<RatVector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::from_spanning(std::move(rows), a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw precondition_error("intersect: ambient dimensions differ");
    const int n = a.ambient_dim();
    const int da = a.dim();
    const int db = b.dim();
    if (da == 0 || db == 0) return Subspace::zero(n);
    // Coefficient system: rows indexed by ambient coordinate, columns (u, w)
    // with sum_u a_u * Ba_u = sum_w b_w * Bb_w.
    RatMatrix coeff(da + db);
    for (int i = 0; i < n; ++i) {
        RatVector row(static_cast<std::size_t>(da + db));
        for (int u = 0; u < da; ++u) row[static_cast<std::size_t>(u)] = a.basis()[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
        for (int w = 0; w < db; ++w) row[static_cast<std::size_t>(da + w)] = -b.basis()[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)];
        coeff.rows.push_back(std::move(row));
    }
    std::vector<RatVector> spanning;
    const Subspace coeff_kernel = kernel(coeff);
    for (const RatVector& k : coeff_kernel.basis()) {
        RatVector x = zero_vector(n);
        for (int u = 0; u < da; ++u)
            if (k[static_cast<std::size_t>(u)] != 0)
                x = add(x, scale(k[static_cast<std::size_t>(u)], a.basis()[static_cast<std::size_t>(u)]));
        spanning.push_back(std::move(x));
    }
    return Subspace::from_spanning(std::move(spanning), n);
}

Subspace orthogonal_complement(const Subspace& v) {
    return kernel(RatMatrix(v.ambient_dim(), v.basis()));
}

} // namespace prefcone
