#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dualext/rational.hpp"

namespace dualext {

/// Sparse vector: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

inline SparseRow sparse_from_dense(const std::vector<Rat>& v) {
    SparseRow r;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) r.emplace_back(i, v[i]);
    return r;
}

inline std::vector<Rat> dense_from_sparse(const SparseRow& r, int n) {
    std::vector<Rat> v(n);
    for (const auto& [c, x] : r) v[c] = x;
    return v;
}

/// r += k * s, merging sorted sparse rows.
inline SparseRow sparse_axpy(const SparseRow& r, const Rat& k, const SparseRow& s) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j >= s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i >= r.size() || s[j].first < r[i].first) {
            Rat v = k * s[j].second;
            if (v != 0) out.emplace_back(s[j].first, v);
            ++j;
        } else {
            Rat v = r[i].second + k * s[j].second;
            if (v != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Incrementally maintained reduced row echelon basis of a row space.
/// Pivots are chosen at the smallest column index, so downstream free-column
/// enumerations follow the canonical basis order.
class RowEchelon {
public:
    explicit RowEchelon(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::map<int, int>& pivots() const { return pivot_row_; }

    bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }

    /// Reduce a row against the current basis (rows are kept fully reduced).
    SparseRow reduce(SparseRow r) const {
        for (std::size_t i = 0; i < r.size();) {
            auto it = pivot_row_.find(r[i].first);
            if (it == pivot_row_.end()) {
                ++i;
                continue;
            }
            Rat k = -r[i].second;
            r = sparse_axpy(r, k, rows_[it->second]);
            // the pivot entry is gone; entries before position i are untouched
        }
        return r;
    }

    /// Insert a row; returns true if the rank grew.
    bool insert(SparseRow r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        int piv = r.front().first;
        Rat inv = Rat(1) / r.front().second;
        for (auto& [c, v] : r) v *= inv;
        // eliminate the new pivot column from existing rows
        for (auto& row : rows_) {
            for (const auto& [c, v] : row) {
                if (c == piv) {
                    row = sparse_axpy(row, Rat(-v), r);
                    break;
                }
                if (c > piv) break;
            }
        }
        pivot_row_[piv] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    /// Nullspace basis of the homogeneous system whose equations are the
    /// inserted rows: one vector per free column, in column order.
    std::vector<std::vector<Rat>> nullspace() const {
        std::vector<std::vector<Rat>> basis;
        for (int f = 0; f < ncols_; ++f) {
            if (is_pivot(f)) continue;
            std::vector<Rat> v(ncols_);
            v[f] = 1;
            for (const auto& [piv, ri] : pivot_row_) {
                for (const auto& [c, val] : rows_[ri])
                    if (c == f) v[piv] = -val;
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int ncols_;
    std::vector<SparseRow> rows_;
    std::map<int, int> pivot_row_;  // pivot column -> row index
};

/// Solve a linear system given as sparse rows over ncols unknowns plus a
/// right-hand side. Returns the canonical particular solution (free unknowns
/// zero) or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(
    const std::vector<std::pair<SparseRow, Rat>>& equations, int ncols) {
    RowEchelon ech(ncols + 1);
    for (const auto& [lhs, rhs] : equations) {
        SparseRow r = lhs;
        if (rhs != 0) r.emplace_back(ncols, rhs);
        ech.insert(std::move(r));
    }
    if (ech.is_pivot(ncols)) return std::nullopt;  // 0 = 1 row present
    std::vector<Rat> x(ncols);
    for (const auto& [piv, ri] : ech.pivots()) {
        for (const auto& [c, val] : ech.rows()[ri])
            if (c == ncols) x[piv] = val;
    }
    return x;
}

/// A subspace of Q^n stored as a reduced row echelon basis.
class Subspace {
public:
    explicit Subspace(int ambient) : ech_(ambient) {}

    static Subspace span(int ambient, const std::vector<std::vector<Rat>>& vectors) {
        Subspace s(ambient);
        for (const auto& v : vectors) s.add(v);
        return s;
    }

    int ambient_dim() const { return ech_.ncols(); }
    int dim() const { return ech_.rank(); }

    bool add(const std::vector<Rat>& v) { return ech_.insert(sparse_from_dense(v)); }

    bool contains(const std::vector<Rat>& v) const {
        return ech_.reduce(sparse_from_dense(v)).empty();
    }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.ech_.rows())
            if (!ech_.reduce(r).empty()) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return contains(o) && o.contains(*this); }

    /// Echelon basis vectors, in pivot order.
    std::vector<std::vector<Rat>> basis() const {
        std::vector<std::vector<Rat>> out;
        for (const auto& [piv, ri] : ech_.pivots()) {
            (void)piv;
            out.push_back(dense_from_sparse(ech_.rows()[ri], ech_.ncols()));
        }
        return out;
    }

    /// Coordinates of v over the echelon basis (pivot order), or nullopt
    /// when v is outside the subspace. With RREF rows the coordinate of the
    /// i-th basis vector is just v at its pivot column.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat>& v) const {
        if (!contains(v)) return std::nullopt;
        std::vector<Rat> coords;
        for (const auto& [piv, ri] : ech_.pivots()) {
            (void)ri;
            coords.push_back(v[piv]);
        }
        return coords;
    }

    static int sum_dim(const Subspace& a, const Subspace& b) {
        Subspace s = a;
        for (const auto& v : b.basis()) s.add(v);
        return s.dim();
    }

    static int intersection_dim(const Subspace& a, const Subspace& b) {
        return a.dim() + b.dim() - sum_dim(a, b);
    }

private:
    RowEchelon ech_;
};

}  // namespace dualext
