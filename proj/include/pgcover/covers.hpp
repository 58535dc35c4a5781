#pragma once

#include "pgcover/geometry.hpp"
#include "pgcover/rng.hpp"

#include <optional>
#include <vector>

namespace pgcover {

/// A set of distinct hyperplanes of PG(n,q), stored as a sorted index list.
struct PartialCover {
    std::vector<int> hyps;
    bool operator==(const PartialCover&) const = default;
};

/// A set of distinct points, stored as a sorted index list.
struct PointSet {
    std::vector<int> pts;
    bool operator==(const PointSet&) const = default;
};

PartialCover make_cover(const Geometry& g, std::vector<int> hyps);
PointSet make_point_set(const Geometry& g, std::vector<int> pts);

/// |{pi in S : P on pi}|
int covering_multiplicity(const Geometry& g, const PartialCover& s, int point);

/// OR of the member incidence masks.
DynBitset covered_mask(const Geometry& g, const PartialCover& s);

PointSet holes(const Geometry& g, const PartialCover& s);
bool is_cover(const Geometry& g, const PartialCover& s);
bool is_partial_cover(const Geometry& g, const PartialCover& s);

/// Members owning at least one point covered by them alone.
std::vector<int> essential_hyperplanes(const Geometry& g, const PartialCover& s);

struct Reduction {
    PartialCover cover;
    /// true when the input size was inside the unique-reducibility bound
    /// (n = 2: |C| <= 2q; n >= 3: |C| < 2q), so any removal order would
    /// have produced the same minimal cover.
    bool uniqueness_guaranteed;
};

/// Remove non-essential hyperplanes until all remaining are essential.
/// Default policy removes the smallest-index non-essential at each step;
/// the rng overload picks uniformly among them (for order-independence
/// testing).
Reduction minimal_reduce(const Geometry& g, const PartialCover& c);
Reduction minimal_reduce(const Geometry& g, const PartialCover& c, SplitMix64& rng);

/// If some (n-2)-space lies in q+1 members, the cover is trivial; returns
/// that space.
std::optional<Subspace> is_trivial(const Geometry& g, const PartialCover& c);

/// Coordinate-identity duality: hyperplane index <-> point index.
PointSet dualize_cover(const PartialCover& s);
PartialCover dualize_points(const PointSet& b);

bool is_blocking_set(const Geometry& g, const PointSet& b);
/// Hyperplanes meeting b exactly in {point}; requires point in b.
std::vector<int> tangent_hyperplanes(const Geometry& g, const PointSet& b, int point);
bool is_essential_point(const Geometry& g, const PointSet& b, int point);

/// Lexicographically smallest hyperplane containing every point of h, if
/// one exists. Rejects the empty set.
std::optional<int> holes_in_common_hyperplane(const Geometry& g, const PointSet& h);
bool holes_collinear(const Geometry& g, const PointSet& h);

} // namespace pgcover
