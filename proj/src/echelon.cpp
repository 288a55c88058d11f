#include "superhom/echelon.hpp"

namespace superhom {

std::vector<std::vector<Poly>> echelonize_symbolic(const std::vector<std::vector<Poly>>& rows) {
    for (const auto& r : rows)
        for (const auto& p : r)
            if (!p.is_constant())
                throw SymbolicRankError(
                    "echelonize requires constant entries; symbolic rank is unsupported");
    std::vector<std::vector<Poly>> out;
    if (rows.empty())
        return out;
    int cols = static_cast<int>(rows.front().size());
    RowReducer red(cols);
    for (const auto& r : rows) {
        SparseEntries e;
        for (int i = 0; i < cols; ++i) {
            GaussianRational c = r[i].constant_value();
            if (!c.is_zero())
                e.emplace_back(i, c);
        }
        red.insert(std::move(e));
    }
    red.make_reduced();
    for (const auto& r : red.rows()) {
        std::vector<Poly> row(cols, Poly());
        for (const auto& [i, c] : r) row[i] = Poly::constant(c);
        out.push_back(std::move(row));
    }
    return out;
}

LinearSolution solve_linear(const std::vector<std::pair<SparseEntries, GaussianRational>>& rows,
                            int cols) {
    // Augmented column sits at index `cols`; a pivot there means 0 = 1.
    RowReducer red(cols + 1);
    for (const auto& [lhs, rhs] : rows) {
        SparseEntries row = lhs;
        if (!rhs.is_zero())
            row.emplace_back(cols, -rhs);
        red.insert(std::move(row));
    }
    red.make_reduced();

    LinearSolution sol;
    for (const auto& r : red.rows())
        if (r.front().first == cols)
            return sol; // inconsistent
    sol.consistent = true;

    // Particular solution: free variables = 0, so x_pivot = -(augmented entry).
    for (const auto& r : red.rows()) {
        auto it = std::lower_bound(r.begin(), r.end(), cols,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != r.end() && it->first == cols)
            sol.particular.emplace_back(r.front().first, -it->second);
    }
    std::sort(sol.particular.begin(), sol.particular.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // Kernel of the left-hand side only.
    RowReducer hom(cols);
    for (const auto& [lhs, rhs] : rows) hom.insert(lhs);
    sol.kernel = hom.kernel_basis();
    return sol;
}

BasisExpresser::BasisExpresser(const std::vector<SparseEntries>& basis_rows, int cols)
    : n_(static_cast<int>(basis_rows.size())), cols_(cols), pivot_row_(cols, -1) {
    for (int i = 0; i < n_; ++i) {
        SparseEntries row = basis_rows[i];
        std::vector<GaussianRational> t(n_, GaussianRational(0));
        t[i] = GaussianRational(1);
        size_t scan = 0;
        while (scan < row.size()) {
            int pr = pivot_row_[row[scan].first];
            if (pr < 0) {
                ++scan;
                continue;
            }
            GaussianRational c = -row[scan].second;
            sparse_axpy(row, c, rref_[pr]);
            for (int j = 0; j < n_; ++j)
                if (!transform_[pr][j].is_zero())
                    t[j] += c * transform_[pr][j];
        }
        if (row.empty())
            throw Error("basis rows are linearly dependent");
        GaussianRational inv = row.front().second.inverse();
        for (auto& [c, v] : row) v *= inv;
        for (auto& v : t) v *= inv;
        pivot_row_[row.front().first] = static_cast<int>(rref_.size());
        rref_.push_back(std::move(row));
        transform_.push_back(std::move(t));
    }
}

std::optional<std::vector<GaussianRational>> BasisExpresser::express(
    const SparseEntries& v) const {
    SparseEntries row = v;
    std::vector<GaussianRational> coeffs(n_, GaussianRational(0));
    size_t scan = 0;
    while (scan < row.size()) {
        int pr = pivot_row_[row[scan].first];
        if (pr < 0)
            return std::nullopt; // entry outside the span's pivot structure
        GaussianRational c = row[scan].second;
        sparse_axpy(row, -c, rref_[pr]);
        for (int j = 0; j < n_; ++j)
            if (!transform_[pr][j].is_zero())
                coeffs[j] += c * transform_[pr][j];
    }
    return coeffs;
}

std::optional<std::vector<Poly>> BasisExpresser::express(const std::vector<Poly>& dense) const {
    std::vector<Poly> work = dense;
    std::vector<Poly> coeffs(n_, Poly());
    for (int k = 0; k < static_cast<int>(rref_.size()); ++k) {
        int p = rref_[k].front().first;
        Poly c = work[p];
        if (c.is_zero())
            continue;
        for (const auto& [i, val] : rref_[k]) work[i] -= c * Poly::constant(val);
        for (int j = 0; j < n_; ++j)
            if (!transform_[k][j].is_zero())
                coeffs[j] += c * Poly::constant(transform_[k][j]);
    }
    for (const auto& p : work)
        if (!p.is_zero())
            return std::nullopt;
    return coeffs;
}

} // namespace superhom
