#include "pgcover/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pgcover {

long long theta(int n, long long q) {
    if (q < 2 || n < 0) throw std::invalid_argument("theta requires q >= 2, n >= 0");
    long long t = 0, pw = 1;
    for (int i = 0; i <= n; ++i) {
        t += pw;
        pw *= q;
    }
    return t;
}

std::string Subspace::key() const {
    std::string k;
    for (const auto& row : basis) {
        for (int c : row) {
            k += std::to_string(c);
            k += ',';
        }
        k += ';';
    }
    return k;
}

Geometry::Geometry(int n, FieldSpec spec) : n_(n), spec_(std::move(spec)) {
    if (n < 1) throw std::invalid_argument("projective dimension must be >= 1");
    long long count = theta(n_, spec_.q());
    if (count > kMaxPoints)
        throw std::invalid_argument("theta_n exceeds the supported maximum (2^24 points)");

    int q = spec_.q();
    // one representative per point: first nonzero coordinate fixed to 1
    for (int first = n_; first >= 0; --first) {
        int free = n_ - first;
        long long combos = 1;
        for (int i = 0; i < free; ++i) combos *= q;
        for (long long code = 0; code < combos; ++code) {
            Vec v(n_ + 1, 0);
            v[first] = 1;
            long long c = code;
            for (int i = first + 1; i <= n_; ++i) { v[i] = (int)(c % q); c /= q; }
            pts_.push_back(std::move(v));
        }
    }
    std::sort(pts_.begin(), pts_.end());

    index_.reserve(pts_.size() * 2);
    for (int i = 0; i < (int)pts_.size(); ++i) index_[encode(pts_[i])] = i;

    masks_.assign(pts_.size(), DynBitset((long long)pts_.size()));
    on_.resize(pts_.size());
    for (int i = 0; i < (int)pts_.size(); ++i) {
        for (int j = 0; j < (int)pts_.size(); ++j) {
            if (dot(pts_[i], pts_[j]) == 0) {
                masks_[i].set(j);
                on_[i].push_back(j);
            }
        }
    }
}

long long Geometry::encode(const Vec& v) const {
    long long code = 0;
    for (int c : v) code = code * spec_.q() + c;
    return code;
}

Vec Geometry::normalize(Vec raw) const {
    if ((int)raw.size() != n_ + 1)
        throw std::invalid_argument("coordinate vector has wrong length");
    int first = -1;
    for (int i = 0; i <= n_; ++i)
        if (raw[i] != 0) { first = i; break; }
    if (first < 0) throw std::invalid_argument("zero vector has no projective point");
    int scale = spec_.inv(raw[first]);
    for (int i = first; i <= n_; ++i) raw[i] = spec_.mul(raw[i], scale);
    return raw;
}

int Geometry::index_of(const Vec& raw) const {
    auto it = index_.find(encode(normalize(raw)));
    if (it == index_.end()) throw std::invalid_argument("coordinates out of range");
    return it->second;
}

int Geometry::dot(const Vec& a, const Vec& b) const {
    int s = 0;
    for (int i = 0; i <= n_; ++i) s = spec_.add(s, spec_.mul(a[i], b[i]));
    return s;
}

bool Geometry::incident(int point, int hyperplane) const {
    return masks_[hyperplane].test(point);
}

std::vector<int> Geometry::line_through(int p, int r) const {
    if (p == r) throw std::invalid_argument("line_through needs two distinct points");
    const Vec& P = pts_[p];
    const Vec& R = pts_[r];
    std::vector<int> line;
    line.push_back(r);
    for (int t = 0; t < spec_.q(); ++t) {
        Vec v(n_ + 1);
        for (int i = 0; i <= n_; ++i) v[i] = spec_.add(P[i], spec_.mul(t, R[i]));
        line.push_back(index_of(v));
    }
    std::sort(line.begin(), line.end());
    return line;
}

std::vector<Vec> Geometry::rref(std::vector<Vec> rows) const {
    int cols = n_ + 1;
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < (int)rows.size(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        int scale = spec_.inv(rows[pivot_row][col]);
        for (int c = 0; c < cols; ++c)
            rows[pivot_row][c] = spec_.mul(rows[pivot_row][c], scale);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (int c = 0; c < cols; ++c)
                rows[r][c] = spec_.sub(rows[r][c], spec_.mul(f, rows[pivot_row][c]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

int Geometry::rank(std::vector<Vec> rows) const {
    return (int)rref(std::move(rows)).size();
}

std::vector<Vec> Geometry::kernel(const std::vector<Vec>& rows) const {
    int cols = n_ + 1;
    std::vector<Vec> R = rref(rows);
    std::vector<int> pivot_col(R.size());
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < R.size(); ++r) {
        int pc = 0;
        while (R[r][pc] == 0) ++pc;
        pivot_col[r] = pc;
        is_pivot[pc] = true;
    }
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols, 0);
        x[f] = 1;
        for (size_t r = 0; r < R.size(); ++r)
            x[pivot_col[r]] = spec_.neg(R[r][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

Subspace Geometry::span_rows(std::vector<Vec> rows) const {
    return Subspace{rref(std::move(rows))};
}

Subspace Geometry::span_points(const std::vector<int>& pts) const {
    std::vector<Vec> rows;
    rows.reserve(pts.size());
    for (int i : pts) rows.push_back(pts_[i]);
    return span_rows(std::move(rows));
}

Subspace Geometry::intersect(const Subspace& a, const Subspace& b) const {
    std::vector<Vec> constraints = kernel(a.basis);
    for (auto& v : kernel(b.basis)) constraints.push_back(v);
    return Subspace{rref(kernel(rref(std::move(constraints))))};
}

bool Geometry::in_subspace(const Subspace& s, int point) const {
    Vec v = pts_[point];
    for (const auto& row : s.basis) {
        int pc = 0;
        while (row[pc] == 0) ++pc;
        if (v[pc] != 0) {
            int f = v[pc];
            for (int c = 0; c <= n_; ++c) v[c] = spec_.sub(v[c], spec_.mul(f, row[c]));
        }
    }
    for (int c : v)
        if (c != 0) return false;
    return true;
}

bool Geometry::subspace_in_hyperplane(const Subspace& s, int hyperplane) const {
    for (const auto& row : s.basis)
        if (dot(row, pts_[hyperplane]) != 0) return false;
    return true;
}

std::vector<int> Geometry::subspace_points(const Subspace& s) const {
    int q = spec_.q();
    long long combos = 1;
    for (size_t i = 0; i < s.basis.size(); ++i) combos *= q;
    std::vector<int> out;
    for (long long code = 1; code < combos; ++code) {
        Vec v(n_ + 1, 0);
        long long c = code;
        for (const auto& row : s.basis) {
            int coef = (int)(c % q);
            c /= q;
            if (coef)
                for (int i = 0; i <= n_; ++i)
                    v[i] = spec_.add(v[i], spec_.mul(coef, row[i]));
        }
        out.push_back(index_of(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Subspace> Geometry::subspaces_through(const Subspace& s, int k) const {
    if (k <= s.dim() || k > n_)
        throw std::invalid_argument("subspaces_through: k out of range");
    std::map<std::string, Subspace> level;
    level[s.key()] = s;
    for (int d = s.dim() + 1; d <= k; ++d) {
        std::map<std::string, Subspace> next;
        for (const auto& [key, sub] : level) {
            for (int p = 0; p < num_points(); ++p) {
                if (in_subspace(sub, p)) continue;
                std::vector<Vec> rows = sub.basis;
                rows.push_back(pts_[p]);
                Subspace bigger{rref(std::move(rows))};
                next.emplace(bigger.key(), std::move(bigger));
            }
        }
        level = std::move(next);
    }
    std::vector<Subspace> out;
    out.reserve(level.size());
    for (auto& [key, sub] : level) out.push_back(std::move(sub));
    return out;
}

std::vector<int> Geometry::hyperplanes_through(const Subspace& s) const {
    std::vector<int> out;
    for (int i = 0; i < num_points(); ++i)
        if (subspace_in_hyperplane(s, i)) out.push_back(i);
    return out;
}

} // namespace pgcover
