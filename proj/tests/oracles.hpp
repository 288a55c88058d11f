#pragma once

// Test-side oracles, kept independent of the implementation paths they
// check: plain dense matrix arithmetic for supercommutators, and a
// separate full-enumeration eliminator for the hom-Jacobi space.

#include <map>
#include <random>
#include <vector>

#include "superhom/matrix_families.hpp"
#include "superhom/superalgebra.hpp"

namespace oracles {

using namespace superhom;

/// Dense square matrix over Q(i), indexed 0-based; deliberately naive.
struct Dense {
    int n = 0;
    std::vector<GaussianRational> a;
    explicit Dense(int n_) : n(n_), a(size_t(n_) * n_, GaussianRational(0)) {}
    GaussianRational& at(int i, int j) { return a[size_t(i) * n + j]; }
    const GaussianRational& at(int i, int j) const { return a[size_t(i) * n + j]; }
};

inline Dense dense_mul(const Dense& x, const Dense& y) {
    Dense out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (x.at(i, k).is_zero())
                continue;
            for (int j = 0; j < x.n; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return out;
}

/// Supercommutator oracle on gl(m|n): xy - (-1)^{|x||y|} yx with the parity
/// read off the block pattern; inputs must be block-homogeneous.
inline Dense supercommutator_oracle(int m, const Dense& x, int px, const Dense& y, int py) {
    Dense xy = dense_mul(x, y);
    Dense yx = dense_mul(y, x);
    int sign = (px == 1 && py == 1) ? 1 : -1; // -(-1)^{|x||y|}
    (void)m;
    Dense out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            out.at(i, j) = xy.at(i, j) + GaussianRational(sign) * yx.at(i, j);
    return out;
}

inline Dense unit_matrix(int n, int i, int j) {
    Dense d(n);
    d.at(i - 1, j - 1) = GaussianRational(1);
    return d;
}

/// Independent eliminator: rows held as column->coefficient maps, textbook
/// forward elimination, no ordering tricks, no early exit.
class MapEliminator {
public:
    explicit MapEliminator(int cols) : cols_(cols) {}
    void insert(std::map<int, GaussianRational> row) {
        for (;;) {
            while (!row.empty() && row.begin()->second.is_zero()) row.erase(row.begin());
            if (row.empty())
                return;
            int lead = row.begin()->first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                GaussianRational inv = row.begin()->second.inverse();
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            GaussianRational f = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto r = row.find(c);
                if (r == row.end())
                    row.emplace(c, -(f * v));
                else {
                    r->second -= f * v;
                    if (r->second.is_zero())
                        row.erase(r);
                }
            }
        }
    }
    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }

private:
    int cols_;
    std::map<int, std::map<int, GaussianRational>> pivots_;
};

/// Brute-force hom-Jacobi space dimension: ALL d^3 ordered triples, every
/// output coordinate, fresh sign handling, independent elimination.
inline int brute_hom_space_dim(const SuperAlgebra& g) {
    const auto& sp = g.space();
    const int d = sp->dim;
    std::vector<int> unknown(size_t(d) * d, -1);
    int nu = 0;
    for (int p = 0; p < d; ++p)
        for (int i = 0; i < d; ++i)
            if (sp->parity[p] == sp->parity[i])
                unknown[size_t(p) * d + i] = nu++;

    MapEliminator elim(nu);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                // rows[m]: coefficient of sigma_{p,a} in residual coord m
                std::map<int, std::map<int, GaussianRational>> rows;
                auto add = [&](int a, int b, int c) {
                    int sgn = koszul_sign(sp->parity[a], sp->parity[c]);
                    SparseEntries w = g.bracket_basis(b, c);
                    for (int p = 0; p < d; ++p) {
                        if (sp->parity[p] != sp->parity[a])
                            continue;
                        for (const auto& [q, wq] : w)
                            for (const auto& [mm, bv] : g.bracket_basis(p, q)) {
                                GaussianRational cv = wq * bv;
                                if (sgn < 0)
                                    cv = -cv;
                                auto& row = rows[mm];
                                auto it = row.find(unknown[size_t(p) * d + a]);
                                if (it == row.end())
                                    row.emplace(unknown[size_t(p) * d + a], cv);
                                else
                                    it->second += cv;
                            }
                    }
                };
                add(x, y, z);
                add(y, z, x);
                add(z, x, y);
                for (auto& [mm, row] : rows) elim.insert(std::move(row));
            }
    return nu - elim.rank();
}

/// Deterministic random vectors/scalars for property tests.
inline GaussianRational random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), imc(-2, 2);
    return GaussianRational(Rational(BigInt(num(rng)), BigInt(den(rng))),
                            Rational(BigInt(imc(rng)), BigInt(den(rng))));
}

inline Vector random_vector(const SpacePtr& sp, std::mt19937_64& rng, int nnz = 3) {
    std::uniform_int_distribution<int> idx(0, sp->dim - 1);
    SparseEntries e;
    for (int t = 0; t < nnz; ++t) {
        int i = idx(rng);
        GaussianRational c = random_scalar(rng);
        if (!c.is_zero())
            e.emplace_back(i, c);
    }
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseEntries merged;
    for (auto& [i, c] : e) {
        if (!merged.empty() && merged.back().first == i)
            merged.back().second += c;
        else
            merged.emplace_back(i, c);
    }
    SparseEntries clean;
    for (auto& [i, c] : merged)
        if (!c.is_zero())
            clean.emplace_back(i, c);
    return Vector(sp, std::move(clean));
}

/// Random even map (parity-preserving entries only).
inline LinearMap random_even_map(const SpacePtr& sp, std::mt19937_64& rng) {
    MatG m = MatG::Constant(sp->dim, sp->dim, GaussianRational(0));
    std::uniform_int_distribution<int> val(-3, 3);
    for (int j = 0; j < sp->dim; ++j)
        for (int i = 0; i < sp->dim; ++i)
            if (sp->parity[i] == sp->parity[j])
                m(i, j) = GaussianRational(val(rng));
    return LinearMap(sp, sp, std::move(m));
}

} // namespace oracles
