#pragma once

#include "pgcover/bitset.hpp"
#include "pgcover/galois.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace pgcover {

using Vec = std::vector<int>; // FieldElement reps, length n+1

/// theta_n = (q^{n+1} - 1) / (q - 1), the number of points of PG(n,q).
long long theta(int n, long long q);

/// A k-dimensional subspace as its reduced row echelon basis over GF(q),
/// pivot columns leftmost. Empty basis encodes the empty subspace (dim -1).
struct Subspace {
    std::vector<Vec> basis;
    int dim() const { return (int)basis.size() - 1; }
    std::string key() const;
    bool operator==(const Subspace&) const = default;
};

/// PG(n,q): canonical point/hyperplane enumeration plus the precomputed
/// incidence table. Points and hyperplanes share one index space, since
/// both are normalized coordinate vectors enumerated identically and the
/// incidence relation is symmetric in the two coordinate vectors.
/// Immutable after construction.
class Geometry {
public:
    static constexpr long long kMaxPoints = 1LL << 24;

    Geometry(int n, FieldSpec spec);

    int n() const { return n_; }
    const FieldSpec& field() const { return spec_; }
    int num_points() const { return (int)pts_.size(); }

    const Vec& coords(int index) const { return pts_[index]; }
    Vec normalize(Vec raw) const;
    int index_of(const Vec& raw) const;

    int dot(const Vec& a, const Vec& b) const;
    bool incident(int point, int hyperplane) const;

    /// theta_n-bit mask of the points on hyperplane i (equally: of the
    /// hyperplanes through point i).
    const DynBitset& hyperplane_mask(int i) const { return masks_[i]; }
    const std::vector<int>& hyperplane_points(int i) const { return on_[i]; }

    /// The q+1 points of the line PQ, as sorted indices.
    std::vector<int> line_through(int p, int q) const;

    // Linear algebra over GF(q).
    std::vector<Vec> rref(std::vector<Vec> rows) const;
    int rank(std::vector<Vec> rows) const;
    std::vector<Vec> kernel(const std::vector<Vec>& rows) const;

    Subspace span_rows(std::vector<Vec> rows) const;
    Subspace span_points(const std::vector<int>& pts) const;
    Subspace intersect(const Subspace& a, const Subspace& b) const;
    bool in_subspace(const Subspace& s, int point) const;
    bool subspace_in_hyperplane(const Subspace& s, int hyperplane) const;
    std::vector<int> subspace_points(const Subspace& s) const;

    /// All k-dimensional subspaces containing s, canonical echelon forms in
    /// deterministic (key-sorted) order.
    std::vector<Subspace> subspaces_through(const Subspace& s, int k) const;

    /// Sorted indices of the hyperplanes containing s; for dim(s) = n-2
    /// this is the pencil of q+1 hyperplanes.
    std::vector<int> hyperplanes_through(const Subspace& s) const;

private:
    long long encode(const Vec& v) const;

    int n_;
    FieldSpec spec_;
    std::vector<Vec> pts_;
    std::unordered_map<long long, int> index_;
    std::vector<DynBitset> masks_;
    std::vector<std::vector<int>> on_;
};

} // namespace pgcover
