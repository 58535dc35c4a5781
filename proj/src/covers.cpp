#include "pgcover/covers.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgcover {

namespace {

void check_indices(const Geometry& g, const std::vector<int>& idx) {
    for (int i : idx)
        if (i < 0 || i >= g.num_points())
            throw std::invalid_argument("index out of range for this PG(n,q)");
}

std::vector<int> sorted_unique(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("duplicate elements");
    return idx;
}

} // namespace

PartialCover make_cover(const Geometry& g, std::vector<int> hyps) {
    check_indices(g, hyps);
    return PartialCover{sorted_unique(std::move(hyps))};
}

PointSet make_point_set(const Geometry& g, std::vector<int> pts) {
    check_indices(g, pts);
    return PointSet{sorted_unique(std::move(pts))};
}

int covering_multiplicity(const Geometry& g, const PartialCover& s, int point) {
    int m = 0;
    for (int h : s.hyps)
        if (g.incident(point, h)) ++m;
    return m;
}

DynBitset covered_mask(const Geometry& g, const PartialCover& s) {
    DynBitset mask(g.num_points());
    for (int h : s.hyps) mask |= g.hyperplane_mask(h);
    return mask;
}

PointSet holes(const Geometry& g, const PartialCover& s) {
    return PointSet{covered_mask(g, s).zero_indices()};
}

bool is_cover(const Geometry& g, const PartialCover& s) {
    return covered_mask(g, s).count() == g.num_points();
}

bool is_partial_cover(const Geometry& g, const PartialCover& s) {
    return !is_cover(g, s);
}

std::vector<int> essential_hyperplanes(const Geometry& g, const PartialCover& s) {
    std::vector<int> mult(g.num_points(), 0);
    for (int h : s.hyps)
        for (int p : g.hyperplane_points(h)) ++mult[p];
    std::vector<int> out;
    for (int h : s.hyps) {
        for (int p : g.hyperplane_points(h)) {
            if (mult[p] == 1) {
                out.push_back(h);
                break;
            }
        }
    }
    return out;
}

namespace {

Reduction reduce_impl(const Geometry& g, PartialCover c, SplitMix64* rng) {
    if (!is_cover(g, c)) throw std::invalid_argument("minimal_reduce: input is not a cover");
    int q = g.field().q();
    bool unique = g.n() == 2 ? (int)c.hyps.size() <= 2 * q
                             : (int)c.hyps.size() < 2 * q;
    for (;;) {
        std::vector<int> ess = essential_hyperplanes(g, c);
        if (ess.size() == c.hyps.size()) break;
        std::vector<int> removable;
        std::set_difference(c.hyps.begin(), c.hyps.end(), ess.begin(), ess.end(),
                            std::back_inserter(removable));
        int victim = rng ? removable[rng->below(removable.size())] : removable.front();
        c.hyps.erase(std::find(c.hyps.begin(), c.hyps.end(), victim));
    }
    return Reduction{std::move(c), unique};
}

} // namespace

Reduction minimal_reduce(const Geometry& g, const PartialCover& c) {
    return reduce_impl(g, c, nullptr);
}

Reduction minimal_reduce(const Geometry& g, const PartialCover& c, SplitMix64& rng) {
    return reduce_impl(g, c, &rng);
}

std::optional<Subspace> is_trivial(const Geometry& g, const PartialCover& c) {
    int q = g.field().q();
    for (size_t i = 0; i < c.hyps.size(); ++i) {
        for (size_t j = i + 1; j < c.hyps.size(); ++j) {
            Subspace center = g.intersect(
                Subspace{g.kernel({g.coords(c.hyps[i])})},
                Subspace{g.kernel({g.coords(c.hyps[j])})});
            if (center.dim() != g.n() - 2) continue;
            int through = 0;
            for (int h : c.hyps)
                if (g.subspace_in_hyperplane(center, h)) ++through;
            if (through == q + 1) return center;
        }
    }
    return std::nullopt;
}

PointSet dualize_cover(const PartialCover& s) { return PointSet{s.hyps}; }
PartialCover dualize_points(const PointSet& b) { return PartialCover{b.pts}; }

bool is_blocking_set(const Geometry& g, const PointSet& b) {
    DynBitset mask(g.num_points());
    for (int p : b.pts) mask.set(p);
    for (int h = 0; h < g.num_points(); ++h)
        if (!g.hyperplane_mask(h).intersects(mask)) return false;
    return true;
}

std::vector<int> tangent_hyperplanes(const Geometry& g, const PointSet& b, int point) {
    if (!std::binary_search(b.pts.begin(), b.pts.end(), point))
        throw std::invalid_argument("tangent query point is not in the set");
    DynBitset mask(g.num_points());
    for (int p : b.pts) mask.set(p);
    std::vector<int> out;
    // hyperplanes through `point` carry the same index set as the points
    // on hyperplane `point`
    for (int h : g.hyperplane_points(point))
        if (DynBitset::and_count(g.hyperplane_mask(h), mask) == 1) out.push_back(h);
    return out;
}

bool is_essential_point(const Geometry& g, const PointSet& b, int point) {
    return !tangent_hyperplanes(g, b, point).empty();
}

std::optional<int> holes_in_common_hyperplane(const Geometry& g, const PointSet& h) {
    if (h.pts.empty())
        throw std::invalid_argument("empty point set has no meaningful common hyperplane");
    std::vector<Vec> rows;
    rows.reserve(h.pts.size());
    for (int p : h.pts) rows.push_back(g.coords(p));
    std::vector<Vec> perp = g.kernel(rows);
    if (perp.empty()) return std::nullopt;
    // all normalized vectors of the perp space are containing hyperplanes
    Subspace dual{g.rref(perp)};
    std::vector<int> candidates = g.subspace_points(dual);
    return candidates.front();
}

bool holes_collinear(const Geometry& g, const PointSet& h) {
    if (h.pts.empty())
        throw std::invalid_argument("empty point set has no collinearity status");
    std::vector<Vec> rows;
    for (int p : h.pts) rows.push_back(g.coords(p));
    return g.rank(std::move(rows)) <= 2;
}

} // namespace pgcover
