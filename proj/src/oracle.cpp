#include "prefcone/oracle.hpp"

#include <algorithm>
#include <random>

#include "prefcone/errors.hpp"

namespace prefcone {

namespace {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

Rational random_positive_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

RatVector random_vector(Rng& rng, int n, int max_num = 3, int max_den = 2) {
    RatVector v(static_cast<std::size_t>(n));
    for (Rational& x : v) x = random_rational(rng, max_num, max_den);
    return v;
}

} // namespace

std::vector<RatVector> SampleSet::positives() const {
    std::vector<RatVector> out;
    for (const Point& p : points)
        if (p.provenance != Provenance::random_ambient) out.push_back(p.value);
    return out;
}

std::vector<RatVector> SampleSet::all() const {
    std::vector<RatVector> out;
    out.reserve(points.size());
    for (const Point& p : points) out.push_back(p.value);
    return out;
}

std::string to_string(SampleSet::Provenance p) {
    switch (p) {
        case SampleSet::Provenance::cell_representative: return "cell_representative";
        case SampleSet::Provenance::random_in_cell: return "random_in_cell";
        case SampleSet::Provenance::random_ambient: return "random_ambient";
    }
    return "?";
}

SampleSet sample(const SignCone& cone, int count, std::uint64_t seed) {
    SampleSet set;
    set.seed = seed;
    Rng rng(seed);

    const std::vector<const Cell*> cells = cone.realizable_cells();
    if (!cells.empty()) {
        const int per_cell = std::max(1, count / static_cast<int>(cells.size()));
        for (const Cell* cell : cells) {
            set.points.push_back({*cell->representative, SampleSet::Provenance::cell_representative});
            for (int i = 1; i < per_cell; ++i) {
                RatVector candidate;
                bool found = false;
                for (int attempt = 0; attempt < 16 && !found; ++attempt) {
                    candidate = scale(random_positive_rational(rng, 4, 3), *cell->representative);
                    // Perturb within the cell's own hull; signs re-checked below.
                    for (const RatVector& d : cell->lin.basis())
                        candidate = add(candidate, scale(random_rational(rng, 1, 4), d));
                    found = cone.signs_at(candidate) == cell->sign;
                }
                if (!found) candidate = scale(random_positive_rational(rng, 4, 3), *cell->representative);
                set.points.push_back({std::move(candidate), SampleSet::Provenance::random_in_cell});
            }
        }
    }
    for (int i = 0; i < std::max(1, count / 3); ++i)
        set.points.push_back({random_vector(rng, cone.dim()), SampleSet::Provenance::random_ambient});

    for (const SampleSet::Point& p : set.points)
        if (p.provenance != SampleSet::Provenance::random_ambient && !cone.contains(p.value))
            throw internal_error("sample: an in-cell point fails the sign check");
    return set;
}

AxiomReport replay_axioms(const SignCone& cone, const SampleSet& samples,
                          const Subspace* lineality, bool expect_weak) {
    AxiomReport report;
    const std::vector<RatVector> pts = samples.all();
    auto prec = [&](const RatVector& a, const RatVector& b) { return cone.contains(sub(b, a)); };

    // Keep triple loops tractable.
    const std::size_t cap = std::min<std::size_t>(pts.size(), 24);

    for (std::size_t i = 0; i < cap && report.asymmetry.pass; ++i)
        for (std::size_t j = 0; j < cap && report.asymmetry.pass; ++j)
            if (prec(pts[i], pts[j]) && prec(pts[j], pts[i]))
                report.asymmetry = {false, {pts[i], pts[j]}};

    for (std::size_t i = 0; i < cap && report.transitivity.pass; ++i)
        for (std::size_t j = 0; j < cap && report.transitivity.pass; ++j)
            for (std::size_t k = 0; k < cap && report.transitivity.pass; ++k)
                if (prec(pts[i], pts[j]) && prec(pts[j], pts[k]) && !prec(pts[i], pts[k]))
                    report.transitivity = {false, {pts[i], pts[j], pts[k]}};

    // Constructed triples y, y+p, y+p+q over positive samples probe the
    // chains random points rarely line up into.
    const std::vector<RatVector> pos = samples.positives();
    const std::size_t pos_cap = std::min<std::size_t>(pos.size(), 16);
    for (std::size_t i = 0; i < pos_cap && report.transitivity.pass; ++i) {
        for (std::size_t j = 0; j < pos_cap && report.transitivity.pass; ++j) {
            for (std::size_t b = 0; b < cap && report.transitivity.pass; ++b) {
                const RatVector mid = add(pts[b], pos[i]);
                const RatVector top = add(mid, pos[j]);
                if (prec(pts[b], mid) && prec(mid, top) && !prec(pts[b], top))
                    report.transitivity = {false, {pts[b], mid, top}};
            }
        }
    }

    Rng rng(samples.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < cap; ++i) {
        for (std::size_t j = 0; j < cap; ++j) {
            if (!prec(pts[i], pts[j])) continue;
            const Rational lambda = random_positive_rational(rng, 5, 3);
            if (report.scaling.pass && !prec(scale(lambda, pts[i]), scale(lambda, pts[j])))
                report.scaling = {false, {pts[i], pts[j], {lambda}}};
            const RatVector w = random_vector(rng, cone.dim());
            if (report.translation.pass && !prec(add(pts[i], w), add(pts[j], w)))
                report.translation = {false, {pts[i], pts[j], w}};
        }
    }

    if (lineality && lineality->dim() > 0) {
        for (std::size_t i = 0; i < cap && report.mixed_transport.pass; ++i) {
            for (std::size_t j = 0; j < cap && report.mixed_transport.pass; ++j) {
                if (!prec(pts[i], pts[j])) continue;
                for (const RatVector& h : lineality->basis()) {
                    const RatVector u = add(pts[j], h); // equipotent to pts[j]
                    if (!prec(pts[i], u)) {
                        report.mixed_transport = {false, {pts[i], pts[j], u}};
                        break;
                    }
                }
            }
        }
    }

    if (expect_weak) {
        for (std::size_t i = 0; i < cap && report.negative_transitivity.pass; ++i)
            for (std::size_t j = 0; j < cap && report.negative_transitivity.pass; ++j)
                for (std::size_t k = 0; k < cap && report.negative_transitivity.pass; ++k)
                    if (!prec(pts[i], pts[j]) && !prec(pts[j], pts[k]) && prec(pts[i], pts[k]))
                        report.negative_transitivity = {false, {pts[i], pts[j], pts[k]}};
    }
    return report;
}

bool grid_majorize(const SignCone& cone, const RatVector& y, const RatVector& z, int depth) {
    if (!cone.contains(y) || !cone.contains(z))
        throw precondition_error("grid_majorize is defined on positive vectors only");
    for (int p = 1; p <= depth; ++p)
        for (int q = 1; q <= depth; ++q)
            if (cone.contains(sub(z, scale(Rational(p, q), y)))) return true;
    return false;
}

namespace {

RatMatrix random_unimodular(Rng& rng, int n) {
    RatMatrix u(n);
    for (int i = 0; i < n; ++i) u.add_row(unit_vector(n, i));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int step = 0; step < 2 * n; ++step) {
        const int i = pick(rng);
        int j = pick(rng);
        if (i == j) continue;
        const Rational c = coin(rng) ? 1 : -1;
        for (int t = 0; t < n; ++t)
            u.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] +=
                c * u.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
    }
    return u;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(b.cols);
    for (const RatVector& row : a.rows) {
        RatVector r(static_cast<std::size_t>(b.cols));
        for (int j = 0; j < b.cols; ++j) {
            Rational v = 0;
            for (int t = 0; t < a.cols; ++t)
                v += row[static_cast<std::size_t>(t)] * b.rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(j)] = v;
        }
        out.rows.push_back(std::move(r));
    }
    return out;
}

std::vector<RatVector> random_independent_rows(Rng& rng, int k, int n) {
    std::vector<RatVector> rows;
    RatMatrix m(n);
    while (static_cast<int>(rows.size()) < k) {
        RatVector cand = random_vector(rng, n, 2, 1);
        if (is_zero(cand)) continue;
        RatMatrix probe = m;
        probe.add_row(cand);
        if (rank_of(probe) == static_cast<int>(rows.size()) + 1) {
            m.add_row(cand);
            rows.push_back(std::move(cand));
        }
    }
    return rows;
}

} // namespace

SignCone random_instance(std::uint64_t seed, int forced_dim) {
    Rng rng(seed);
    std::uniform_int_distribution<int> kind_dist(0, 3);
    std::uniform_int_distribution<int> dim_dist(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int attempt = 0;; ++attempt) {
        const int kind = kind_dist(rng);
        const int n = forced_dim > 0 ? forced_dim : dim_dist(rng);
        SignCone cone;
        bool built = false;
        switch (kind) {
            case 0: { // lexicographic cone of a random cortege: always weak
                const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, 3)));
                cone = SignCone::lex_cone(random_independent_rows(rng, k, n), n,
                                          "random_lex_" + std::to_string(seed));
                built = true;
                break;
            }
            case 1: { // strict intersection cone: one all-plus cell
                const int m = 1 + static_cast<int>(rng() % 3u);
                RatMatrix a(n);
                for (int i = 0; i < m; ++i) {
                    RatVector row = random_vector(rng, n, 2, 1);
                    while (is_zero(row)) row = random_vector(rng, n, 2, 1);
                    a.add_row(std::move(row));
                }
                SignCone candidate = SignCone::from_cells(
                    n, std::move(a), {SignVector(static_cast<std::size_t>(m), Sign::plus)},
                    "random_strict_" + std::to_string(seed));
                if (candidate.realizable_cells().empty()) break;
                cone = std::move(candidate);
                built = true;
                break;
            }
            case 2:   // orthant-style union of the nonnegative nonzero patterns
            case 3: { // same, padded with free coordinates
                const int used = kind == 3 ? std::max(2, n - 1) : n;
                RatMatrix basis(used, random_independent_rows(rng, used, used));
                RatMatrix a(n);
                for (const RatVector& row : basis.rows) {
                    RatVector padded = row;
                    padded.resize(static_cast<std::size_t>(n));
                    a.add_row(std::move(padded));
                }
                std::vector<SignVector> cells;
                SignVector s;
                auto gen = [&](auto&& self, int i) -> void {
                    if (i == used) {
                        if (!is_all_zero(s)) cells.push_back(s);
                        return;
                    }
                    for (Sign x : {Sign::zero, Sign::plus}) {
                        s.push_back(x);
                        self(self, i + 1);
                        s.pop_back();
                    }
                };
                gen(gen, 0);
                cone = SignCone::from_cells(n, std::move(a), std::move(cells),
                                            "random_orthant_" + std::to_string(seed));
                built = true;
                break;
            }
        }
        if (!built) continue;

        if (coin(rng)) { // shear by a unimodular change of coordinates
            RatMatrix sheared = multiply(cone.matrix(), random_unimodular(rng, cone.dim()));
            std::vector<SignVector> cells;
            for (const Cell& c : cone.cells()) cells.push_back(c.sign);
            cone = SignCone::from_cells(cone.dim(), std::move(sheared), std::move(cells), cone.name());
        }
        if (cone.realizable_cells().empty()) continue;
        if (!validate_partial_preference(cone).pass())
            throw internal_error("random_instance: a catalog instance failed validation");
        return cone;
    }
}

std::vector<std::pair<RatVector, RatVector>> random_pairs(const SignCone& cone,
                                                          const Subspace& lineality, int count,
                                                          std::uint64_t seed) {
    Rng rng(seed);
    const SampleSet set = sample(cone, std::max(6, count / 4), seed ^ 0x5bf03635ULL);
    std::vector<RatVector> pool = set.all();
    for (const RatVector& h : lineality.basis()) pool.push_back(h);
    pool.push_back(zero_vector(cone.dim()));

    std::vector<std::pair<RatVector, RatVector>> pairs;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < count; ++i) {
        RatVector y = pool[pick(rng)];
        RatVector z = pool[pick(rng)];
        if (rng() % 4 == 0) z = add(z, random_vector(rng, cone.dim(), 2, 2));
        if (rng() % 4 == 1) z = negate(z);
        pairs.emplace_back(std::move(y), std::move(z));
    }
    return pairs;
}

} // namespace prefcone
