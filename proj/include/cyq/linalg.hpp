#pragma once
// Exact sparse linear algebra over Q: echelon forms, rank, kernels, homology.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace cyq {

// Sparse vector: sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec sparse_from_map(const std::map<int, Rational>& m) {
    SparseVec v;
    v.reserve(m.size());
    for (auto& [i, c] : m)
        if (c != 0) v.emplace_back(i, c);
    return v;
}

// a + s*b
inline SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, s * b[j].second);
            ++j;
        } else {
            Rational c = a[i].second + s * b[j].second;
            if (c != 0) r.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

inline Rational sparse_get(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int k) { return p.first < k; });
    return (it != v.end() && it->first == idx) ? it->second : Rational(0);
}

// Incremental row echelon form. Rows are kept with leading coefficient 1;
// insertion reduces against every stored pivot (full reduction of the new row),
// and optionally back-substitutes so that the stored rows stay reduced.
class Echelon {
public:
    explicit Echelon(bool keep_reduced = false) : reduced_(keep_reduced) {}

    // Reduce v against stored pivots.
    SparseVec reduce(SparseVec v) const {
        std::size_t pos = 0;
        while (pos < v.size()) {
            auto it = pivots_.find(v[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            Rational c = v[pos].second;
            v = axpy(v, -c, rows_[it->second]);
            // entries before pos are unaffected: pivot rows start at their pivot
        }
        return v;
    }

    // Returns true if v was independent of the current span.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Rational lead = v.front().second;
        if (lead != 1) {
            Rational inv = 1 / lead;
            for (auto& e : v) e.second *= inv;
        }
        int col = v.front().first;
        if (reduced_) {
            for (auto& row : rows_) {
                Rational c = sparse_get(row, col);
                if (c != 0) row = axpy(row, -c, v);
            }
        }
        pivots_[col] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::map<int, int>& pivots() const { return pivots_; }

    // Rows in fully reduced form sorted by pivot column.
    std::vector<SparseVec> rref() const {
        Echelon e(true);
        std::vector<std::pair<int, int>> order;
        for (auto& [c, r] : pivots_) order.emplace_back(c, r);
        for (auto it = order.rbegin(); it != order.rend(); ++it) e.insert(rows_[it->second]);
        std::vector<SparseVec> out;
        for (auto& [c, r] : e.pivots_) out.push_back(e.rows_[r]);
        return out;
    }

private:
    bool reduced_;
    std::vector<SparseVec> rows_;
    std::map<int, int> pivots_;
};

// Matrix stored by rows; ncols columns.
struct SparseMatrix {
    int nrows = 0, ncols = 0;
    std::vector<SparseVec> rows;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : nrows(r), ncols(c), rows(r) {}

    void add(int r, int c, const Rational& v) {
        if (v == 0) return;
        rows[r] = axpy(rows[r], 1, SparseVec{{c, v}});
    }
    SparseMatrix transpose() const {
        SparseMatrix t(ncols, nrows);
        for (int r = 0; r < nrows; ++r)
            for (auto& [c, v] : rows[r]) t.rows[c].emplace_back(r, v);
        return t;
    }
    bool is_zero() const {
        for (auto& r : rows)
            if (!r.empty()) return false;
        return true;
    }
};

// Build a matrix whose column j is cols[j] (vectors indexed by row).
inline SparseMatrix matrix_from_columns(int nrows, const std::vector<SparseVec>& cols) {
    SparseMatrix m(nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (auto& [i, v] : cols[j]) m.rows[i].emplace_back(j, v);
    return m;
}

inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.nrows, b.ncols);
    for (int i = 0; i < a.nrows; ++i) {
        std::map<int, Rational> acc;
        for (auto& [k, v] : a.rows[i])
            for (auto& [j, w] : b.rows[k]) acc[j] += v * w;
        c.rows[i] = sparse_from_map(acc);
    }
    return c;
}

// Rows are inserted shortest-first; this is the deterministic pivot order
// and keeps fill-in small on the very sparse boundary matrices we meet.
inline int rank(const SparseMatrix& m) {
    std::vector<int> order(m.nrows);
    for (int i = 0; i < m.nrows; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return m.rows[x].size() < m.rows[y].size(); });
    Echelon e;
    for (int i : order)
        if (!m.rows[i].empty()) e.insert(m.rows[i]);
    return e.rank();
}

// Basis of {x : m x = 0}, each vector normalized to leading coefficient 1.
inline std::vector<SparseVec> kernel(const SparseMatrix& m) {
    Echelon e;
    for (auto& r : m.rows)
        if (!r.empty()) e.insert(r);
    auto rr = e.rref();
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(m.ncols, 0);
    for (auto& r : rr) {
        pivot_col.push_back(r.front().first);
        is_pivot[r.front().first] = 1;
    }
    // column view of the rref
    std::vector<std::vector<std::pair<int, Rational>>> colv(m.ncols);
    for (std::size_t k = 0; k < rr.size(); ++k)
        for (auto& [c, v] : rr[k])
            if (c != pivot_col[k]) colv[c].emplace_back(pivot_col[k], v);
    std::vector<SparseVec> out;
    for (int f = 0; f < m.ncols; ++f) {
        if (is_pivot[f]) continue;
        std::map<int, Rational> x;
        x[f] = 1;
        for (auto& [p, v] : colv[f]) x[p] = -v;
        SparseVec v = sparse_from_map(x);
        Rational lead = v.front().second;
        if (lead != 1) {
            Rational inv = 1 / lead;
            for (auto& e2 : v) e2.second *= inv;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Subspace with an RREF basis; coordinates of members are read off pivots.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(const std::vector<SparseVec>& spanning) {
        Echelon e;
        for (auto& v : spanning)
            if (!v.empty()) e.insert(v);
        basis_ = e.rref();
        for (std::size_t k = 0; k < basis_.size(); ++k) pivot_index_[basis_[k].front().first] = static_cast<int>(k);
    }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }

    // Coordinates of v in the basis; nullopt if v is not in the subspace.
    std::optional<SparseVec> coords(const SparseVec& v) const {
        std::map<int, Rational> c;
        for (auto& [i, x] : v) {
            auto it = pivot_index_.find(i);
            if (it != pivot_index_.end()) c[it->second] = x;
        }
        SparseVec cv = sparse_from_map(c);
        SparseVec recon;
        for (auto& [k, x] : cv) recon = axpy(recon, x, basis_[k]);
        if (axpy(recon, -1, v).empty()) return cv;
        return std::nullopt;
    }

private:
    std::vector<SparseVec> basis_;
    std::map<int, int> pivot_index_;
};

// A finite chain complex. dims[k] = dim C_k for k in [lo, lo+dims.size());
// diff[k] : C_k -> C_{k+step} with step = -1 (homological) or +1.
struct HomologyResult {
    std::map<int, int> betti;
    std::map<int, std::vector<SparseVec>> cycles;  // representatives
};

// Homology of C at degree k given incoming d_in : C_prev -> C_k and outgoing
// d_out : C_k -> C_next (both may be empty matrices).
inline int homology_dim(int dim_k, const SparseMatrix* d_in, const SparseMatrix* d_out) {
    int r_out = d_out ? rank(*d_out) : 0;
    int r_in = d_in ? rank(*d_in) : 0;
    return dim_k - r_out - r_in;
}

// Representative cycles: ker(d_out) modulo im(d_in). Deterministic in basis order.
inline std::vector<SparseVec> homology_representatives(int dim_k, const SparseMatrix* d_in,
                                                       const SparseMatrix* d_out) {
    std::vector<SparseVec> z;
    if (d_out) {
        z = kernel(*d_out);
    } else {
        for (int i = 0; i < dim_k; ++i) z.push_back(SparseVec{{i, Rational(1)}});
    }
    Echelon e;
    if (d_in) {
        SparseMatrix t = d_in->transpose();
        for (auto& col : t.rows)
            if (!col.empty()) e.insert(col);
    }
    std::vector<SparseVec> reps;
    for (auto& v : z)
        if (e.insert(v)) reps.push_back(v);
    return reps;
}

}  // namespace cyq
