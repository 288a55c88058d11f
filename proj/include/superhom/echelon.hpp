#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superhom/super_space.hpp"

namespace superhom {

/// Incremental exact row reduction over Q(i) with sparse rows.
///
/// Rows are kept in echelon form (each stored row leads with coefficient 1
/// at a column no other stored row leads with). make_reduced() turns the
/// collection into the canonical reduced row-echelon basis: pivots strictly
/// increasing, pivot columns cleared everywhere else.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols), pivot_row_(cols, -1) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces the row against the current basis; keeps it if independent.
    /// Returns true when the rank grew.
    bool insert(SparseEntries row) {
        reduce_in_place(row);
        if (row.empty())
            return false;
        GaussianRational inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivot_row_[row.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }

    /// Reduces a copy of `row` against the basis (no insertion).
    SparseEntries residue(SparseEntries row) const {
        reduce_in_place(row);
        return row;
    }

    bool contains(SparseEntries row) const { return residue(std::move(row)).empty(); }

    /// Full back-substitution; afterwards rows() is the canonical RREF
    /// basis sorted by pivot column.
    void make_reduced() {
        if (reduced_)
            return;
        std::sort(rows_.begin(), rows_.end(),
                  [](const SparseEntries& a, const SparseEntries& b) {
                      return a.front().first < b.front().first;
                  });
        for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
            pivot_row_[rows_[i].front().first] = i;
        for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
            for (int j = 0; j < i; ++j) {
                // clear pivot of row i from row j
                int p = rows_[i].front().first;
                auto it = std::lower_bound(rows_[j].begin(), rows_[j].end(), p,
                                           [](const auto& e, int col) { return e.first < col; });
                if (it != rows_[j].end() && it->first == p) {
                    GaussianRational c = -it->second;
                    sparse_axpy(rows_[j], c, rows_[i]);
                }
            }
        }
        reduced_ = true;
    }

    const std::vector<SparseEntries>& rows() const { return rows_; }

    std::vector<int> pivot_columns() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_) p.push_back(r.front().first);
        std::sort(p.begin(), p.end());
        return p;
    }

    /// Canonical kernel basis (one vector per free column, ascending).
    std::vector<SparseEntries> kernel_basis() {
        make_reduced();
        std::vector<bool> is_pivot(cols_, false);
        for (const auto& r : rows_) is_pivot[r.front().first] = true;
        std::vector<SparseEntries> kernel;
        for (int f = 0; f < cols_; ++f) {
            if (is_pivot[f])
                continue;
            SparseEntries v;
            for (const auto& r : rows_) {
                auto it = std::lower_bound(r.begin(), r.end(), f,
                                           [](const auto& e, int col) { return e.first < col; });
                if (it != r.end() && it->first == f)
                    v.emplace_back(r.front().first, -it->second);
            }
            v.emplace_back(f, GaussianRational(1));
            std::sort(v.begin(), v.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            kernel.push_back(std::move(v));
        }
        return kernel;
    }

private:
    // Clears every entry sitting at a pivot column, not just the leading
    // one, so residues are fully reduced representatives.
    void reduce_in_place(SparseEntries& row) const {
        size_t scan = 0;
        while (scan < row.size()) {
            int col = row[scan].first;
            int pr = pivot_row_[col];
            if (pr < 0) {
                ++scan;
                continue;
            }
            GaussianRational c = -row[scan].second;
            sparse_axpy(row, c, rows_[pr]);
            // eliminated column was at position `scan`; earlier positions
            // are untouched (pivot rows lead at their pivot column)
        }
    }

    int cols_;
    std::vector<SparseEntries> rows_;
    std::vector<int> pivot_row_;
    bool reduced_ = false;
};

/// Reduced row-echelon basis of the span of the given vectors.
/// All vectors must share one space and have constant entries (they do by
/// construction here; the Poly overload below guards the symbolic case).
inline std::vector<Vector> echelonize(const std::vector<Vector>& vectors) {
    if (vectors.empty())
        return {};
    SpacePtr space = vectors.front().space;
    RowReducer red(space->dim);
    for (const auto& v : vectors) {
        v.require_same_space(vectors.front());
        red.insert(v.entries);
    }
    red.make_reduced();
    std::vector<Vector> out;
    out.reserve(red.rows().size());
    for (const auto& r : red.rows()) out.emplace_back(space, r);
    return out;
}

/// Guard overload: echelonizing rows with genuinely symbolic entries is
/// out of scope for this layer.
std::vector<std::vector<Poly>> echelonize_symbolic(const std::vector<std::vector<Poly>>& rows);

struct LinearSolution {
    bool consistent = false;
    SparseEntries particular;              // empty when inconsistent
    std::vector<SparseEntries> kernel;     // basis of the homogeneous solutions
};

/// Solves the system { row_i . x = rhs_i } exactly.
LinearSolution solve_linear(const std::vector<std::pair<SparseEntries, GaussianRational>>& rows,
                            int cols);

inline LinearSolution solve_linear(const std::vector<std::pair<Vector, GaussianRational>>& rows) {
    std::vector<std::pair<SparseEntries, GaussianRational>> raw;
    raw.reserve(rows.size());
    int cols = rows.empty() ? 0 : rows.front().first.space->dim;
    for (const auto& [v, b] : rows) {
        v.require_same_space(rows.front().first);
        raw.emplace_back(v.entries, b);
    }
    return solve_linear(raw, cols);
}

inline int exact_rank(const MatG& m) {
    RowReducer red(static_cast<int>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        SparseEntries row;
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero())
                row.emplace_back(static_cast<int>(c), m(r, c));
        red.insert(std::move(row));
    }
    return red.rank();
}

/// Expresses vectors in the span of a fixed constant basis: coordinates on
/// the ORIGINAL basis rows, with an exact in-span check. Works for constant
/// and polynomial coordinate vectors (pivots are constant).
class BasisExpresser {
public:
    explicit BasisExpresser(const std::vector<SparseEntries>& basis_rows, int cols);

    int basis_size() const { return n_; }

    /// Coordinates c with sum_i c_i basis_i = v, or nullopt if v is outside
    /// the span.
    std::optional<std::vector<GaussianRational>> express(const SparseEntries& v) const;
    std::optional<std::vector<Poly>> express(const std::vector<Poly>& dense) const;

private:
    int n_;
    int cols_;
    std::vector<int> pivot_row_;
    std::vector<SparseEntries> rref_;              // reduced rows
    std::vector<std::vector<GaussianRational>> transform_; // rref_[i] = sum_j T[i][j] basis_j
};

} // namespace superhom
