#pragma once

#include "pgcover/covers.hpp"

#include <cstdint>
#include <string>

namespace pgcover {

/// Everything needed to replay a construction bit-identically: the kind,
/// parameters, and the concrete choices that were made.
struct Recipe {
    std::string kind; // pencil | pencil_minus_one | remark9 | example16 | generalized_example16
    int n = 0;
    int a = 0;
    uint64_t seed = 0;
    Subspace center;                 // the pencil's (n-2)-space / the point P
    int dropped_hyperplane = -1;     // H, when one pencil member is left out
    std::vector<int> omitted;        // example16: the two omitted pencil lines
    int fixed_point = -1;            // example16: the point Q
    std::vector<int> extras;         // the a (or a+1) added hyperplanes
};

struct Construction {
    PartialCover cover;
    Recipe recipe;
};

/// The q+1 hyperplanes through an (n-2)-space: the trivial cover.
Construction pencil(const Geometry& g, const Subspace& center);

/// q pencil hyperplanes through the canonical (n-2)-space, one member H
/// dropped, plus a hyperplanes meeting H in distinct (n-2)-spaces through
/// a common (n-3)-space of the pencil center. Leaves exactly
/// q^{n-1} - a q^{n-2} holes, all inside H.
Construction remark9_construct(const Geometry& g, int a, uint64_t seed);

/// Planar boundary configuration at a = (q-2)/3: q-1 lines through P (two
/// pencil lines omitted) plus a+1 lines through a fixed point Q on one of
/// them. Leaves q+a holes split across the two omitted lines, and the
/// holes are not collinear.
Construction example16_construct(const Geometry& g, uint64_t seed);

/// Same construction with arbitrary 0 <= a <= q-2; 2(q-a-1) holes.
Construction generalized_example16(const Geometry& g, int a, uint64_t seed);

/// Dual blocking set of size |cover|+1: dualize(cover plus the hyperplane
/// containing all holes). Requires the holes to lie in one hyperplane.
PointSet dual_construction(const Geometry& g, const PartialCover& cover);

} // namespace pgcover
