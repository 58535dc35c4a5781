#include "pgcover/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgcover {

namespace {

/// Canonical (n-2)-space: the span of the unit vectors e_2..e_n. Its
/// points are exactly the theta_{n-2} lexicographically smallest ones.
Subspace canonical_center(const Geometry& g) {
    std::vector<Vec> rows;
    for (int i = 2; i <= g.n(); ++i) {
        Vec v(g.n() + 1, 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return g.span_rows(std::move(rows));
}

/// The (n-3)-space of the center used by remark9; empty for n = 2.
Subspace canonical_sigma(const Geometry& g) {
    std::vector<Vec> rows;
    for (int i = 3; i <= g.n(); ++i) {
        Vec v(g.n() + 1, 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return g.span_rows(std::move(rows));
}

int pick(std::vector<int>& pool, SplitMix64& rng) {
    int i = (int)rng.below(pool.size());
    int v = pool[i];
    pool.erase(pool.begin() + i);
    return v;
}

} // namespace

Construction pencil(const Geometry& g, const Subspace& center) {
    if (center.dim() != g.n() - 2)
        throw std::invalid_argument("pencil center must have dimension n-2");
    std::vector<int> hyps = g.hyperplanes_through(center);
    Recipe r;
    r.kind = "pencil";
    r.n = g.n();
    r.center = center;
    return Construction{make_cover(g, std::move(hyps)), std::move(r)};
}

Construction remark9_construct(const Geometry& g, int a, uint64_t seed) {
    if (a < 0) throw std::invalid_argument("a must be nonnegative");
    int q = g.field().q();
    SplitMix64 rng = derived_stream(seed, 0);

    Subspace center = canonical_center(g);
    Subspace sigma = canonical_sigma(g);
    std::vector<int> full_pencil = g.hyperplanes_through(center);
    int dropped = full_pencil[rng.below(full_pencil.size())];

    // candidate (n-2)-spaces of H through sigma, other than the center;
    // for n = 2 these degenerate to the points of H other than R
    std::vector<Subspace> candidates;
    for (auto& tau : g.subspaces_through(sigma, g.n() - 2)) {
        if (tau == center) continue;
        if (!g.subspace_in_hyperplane(tau, dropped)) continue;
        candidates.push_back(std::move(tau));
    }
    if (a > (int)candidates.size() - 1)
        throw std::invalid_argument("a out of feasible range for remark9 construction");

    std::vector<int> hyps;
    for (int h : full_pencil)
        if (h != dropped) hyps.push_back(h);

    std::vector<int> extras;
    for (int i = 0; i < a; ++i) {
        std::vector<int> eligible;
        for (int h : g.hyperplanes_through(candidates[i])) {
            if (h == dropped) continue;
            if (g.subspace_in_hyperplane(center, h)) continue;
            if (std::find(extras.begin(), extras.end(), h) != extras.end()) continue;
            eligible.push_back(h);
        }
        if (eligible.empty())
            throw std::invalid_argument("a out of feasible range for remark9 construction");
        extras.push_back(eligible[rng.below(eligible.size())]);
    }
    hyps.insert(hyps.end(), extras.begin(), extras.end());

    Recipe r;
    r.kind = "remark9";
    r.n = g.n();
    r.a = a;
    r.seed = seed;
    r.center = center;
    r.dropped_hyperplane = dropped;
    r.extras = extras;
    Construction c{make_cover(g, std::move(hyps)), std::move(r)};
    if ((int)c.cover.hyps.size() != q + a)
        throw std::logic_error("remark9 construction produced wrong size");
    return c;
}

Construction generalized_example16(const Geometry& g, int a, uint64_t seed) {
    if (g.n() != 2)
        throw std::invalid_argument("example16 lives in a projective plane");
    int q = g.field().q();
    if (a < 0 || a > q - 2)
        throw std::invalid_argument("example16 needs 0 <= a <= q-2");
    SplitMix64 rng = derived_stream(seed, 0);

    int p_idx = 0; // lexicographically smallest point (0,...,0,1)
    Subspace p_sub = g.span_points({p_idx});
    std::vector<int> full_pencil = g.hyperplanes_through(p_sub);

    std::vector<int> pool = full_pencil;
    int m1 = pick(pool, rng);
    int m2 = pick(pool, rng);
    std::vector<int> omitted{m1, m2};
    std::sort(omitted.begin(), omitted.end());

    std::vector<int> lines = pool; // the q-1 lines L_i, sorted order of the pencil
    std::sort(lines.begin(), lines.end());
    int l1 = lines.front();

    int fixed_q = -1;
    for (int pt : g.hyperplane_points(l1))
        if (pt != p_idx) { fixed_q = pt; break; }

    // lines through Q other than L_1 = QP; none of them can meet P, so
    // they are automatically distinct from the L_i and from M_1, M_2
    std::vector<int> eligible;
    for (int h : g.hyperplane_points(fixed_q)) // hyperplanes through Q
        if (h != l1) eligible.push_back(h);
    std::vector<int> extras;
    for (int i = 0; i < a + 1; ++i) extras.push_back(pick(eligible, rng));
    std::sort(extras.begin(), extras.end());

    std::vector<int> hyps = lines;
    hyps.insert(hyps.end(), extras.begin(), extras.end());

    Recipe r;
    r.kind = "generalized_example16";
    r.n = 2;
    r.a = a;
    r.seed = seed;
    r.center = p_sub;
    r.omitted = omitted;
    r.fixed_point = fixed_q;
    r.extras = extras;
    Construction c{make_cover(g, std::move(hyps)), std::move(r)};
    if ((int)c.cover.hyps.size() != q + a)
        throw std::logic_error("example16 construction produced wrong size");
    return c;
}

Construction example16_construct(const Geometry& g, uint64_t seed) {
    int q = g.field().q();
    if (q % 3 != 2 || q < 5)
        throw std::invalid_argument("example16 needs q = 2 (mod 3), q >= 5");
    Construction c = generalized_example16(g, (q - 2) / 3, seed);
    c.recipe.kind = "example16";
    return c;
}

PointSet dual_construction(const Geometry& g, const PartialCover& cover) {
    PointSet h = holes(g, cover);
    if (h.pts.empty())
        throw std::invalid_argument("dual_construction: input has no holes");
    std::optional<int> mu = holes_in_common_hyperplane(g, h);
    if (!mu)
        throw std::invalid_argument("dual_construction: holes span the whole space");
    std::vector<int> pts = cover.hyps;
    if (!std::binary_search(pts.begin(), pts.end(), *mu)) pts.push_back(*mu);
    return make_point_set(g, dualize_cover(PartialCover{std::move(pts)}).pts);
}

} // namespace pgcover
