#pragma once

#include <random>

#include "prefcone/sign_cone.hpp"
#include "prefcone/subspace.hpp"

// Shared helpers for the test suites: independent re-implementations used as
// oracles, fixture builders, and small random generators. Everything here is
// deliberately naive; agreement with the library is the point.

namespace testutil {

using namespace prefcone;

using Rng = std::mt19937_64;

inline Rational rnd_rational(Rng& rng, int max_num = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline RatVector rnd_vector(Rng& rng, int n, int max_num = 3, int max_den = 3) {
    RatVector v(static_cast<std::size_t>(n));
    for (Rational& x : v) x = rnd_rational(rng, max_num, max_den);
    return v;
}

inline RatMatrix rnd_matrix(Rng& rng, int rows, int cols, int max_num = 3, int max_den = 3) {
    RatMatrix m(cols);
    for (int i = 0; i < rows; ++i) m.add_row(rnd_vector(rng, cols, max_num, max_den));
    return m;
}

// Naive Gaussian elimination, written independently of the library's rref,
// used as the kernel oracle.
inline std::vector<RatVector> naive_null_space(RatMatrix m) {
    const int rows = m.row_count();
    const int cols = m.cols;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(m.rows[static_cast<std::size_t>(r)], m.rows[static_cast<std::size_t>(p)]);
        const Rational piv = m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int j = 0; j < cols; ++j) m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Rational f = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<RatVector> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RatVector v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] =
                -m.rows[i][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline SignCone quad2() {
    RatMatrix a(2);
    a.add_row({Rational(1), Rational(0)});
    a.add_row({Rational(0), Rational(1)});
    SignCone cone = SignCone::load(2, std::move(a), {"++", "+0", "0+"}, "quad2");
    validate_partial_preference(cone);
    return cone;
}

inline SignCone lex23() {
    RatMatrix a(3);
    a.add_row({Rational(1), Rational(0), Rational(0)});
    a.add_row({Rational(0), Rational(1), Rational(0)});
    SignCone cone = SignCone::load(3, std::move(a), {"++", "+0", "+-", "0+"}, "lex23");
    validate_partial_preference(cone);
    return cone;
}

inline RatVector vec(std::initializer_list<int> xs) {
    RatVector v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

} // namespace testutil
