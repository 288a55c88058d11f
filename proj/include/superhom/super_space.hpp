#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superhom/eigen_support.hpp"
#include "superhom/errors.hpp"

namespace superhom {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return (a == b) ? Parity::Even : Parity::Odd;
}
inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

/// Sign (-1)^{|x||y|} for homogeneous parities.
inline int koszul_sign(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// A finite-dimensional Z2-graded space with labeled basis and an optional
/// Z-degree per basis index.
struct SuperSpace {
    int dim = 0;
    std::vector<Parity> parity;
    std::optional<std::vector<int>> degree;
    std::vector<std::string> labels;

    SuperSpace() = default;
    SuperSpace(std::vector<Parity> p, std::vector<std::string> l,
               std::optional<std::vector<int>> deg = std::nullopt)
        : dim(static_cast<int>(p.size())),
          parity(std::move(p)),
          degree(std::move(deg)),
          labels(std::move(l)) {
        if (static_cast<int>(labels.size()) != dim)
            throw Error("label count does not match dimension");
        if (degree && static_cast<int>(degree->size()) != dim)
            throw Error("degree count does not match dimension");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != dim)
            throw Error("basis labels must be unique");
    }

    int even_dim() const {
        int k = 0;
        for (Parity p : parity) k += (p == Parity::Even);
        return k;
    }
    int odd_dim() const { return dim - even_dim(); }
};

using SpacePtr = std::shared_ptr<const SuperSpace>;

inline SpacePtr make_space(std::vector<Parity> p, std::vector<std::string> l,
                           std::optional<std::vector<int>> deg = std::nullopt) {
    return std::make_shared<const SuperSpace>(std::move(p), std::move(l), std::move(deg));
}

/// Sorted sparse coordinate list; no zero entries stored.
using SparseEntries = std::vector<std::pair<int, GaussianRational>>;

inline void sparse_axpy(SparseEntries& dst, const GaussianRational& coeff,
                        const SparseEntries& src) {
    if (coeff.is_zero() || src.empty())
        return;
    SparseEntries out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, coeff * src[j].second);
            if (out.back().second.is_zero())
                out.pop_back();
            ++j;
        } else {
            GaussianRational v = dst[i].second + coeff * src[j].second;
            if (!v.is_zero())
                out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

/// A vector tied to its SuperSpace.
struct Vector {
    SpacePtr space;
    SparseEntries entries;

    Vector() = default;
    Vector(SpacePtr s, SparseEntries e) : space(std::move(s)), entries(std::move(e)) {
        for (auto& [i, c] : entries)
            if (i < 0 || i >= space->dim)
                throw SpaceMismatchError("vector index out of range");
    }

    static Vector basis(const SpacePtr& s, int i) {
        return Vector(s, {{i, GaussianRational(1)}});
    }
    static Vector zero(const SpacePtr& s) { return Vector(s, {}); }

    bool is_zero() const { return entries.empty(); }

    /// Parity when homogeneous; nullopt for mixed or zero vectors.
    std::optional<Parity> homogeneous_parity() const {
        if (entries.empty())
            return std::nullopt;
        Parity p = space->parity[entries.front().first];
        for (const auto& [i, c] : entries)
            if (space->parity[i] != p)
                return std::nullopt;
        return p;
    }

    ColG dense() const {
        ColG v = ColG::Constant(space->dim, GaussianRational(0));
        for (const auto& [i, c] : entries) v(i) = c;
        return v;
    }

    static Vector from_dense(const SpacePtr& s, const ColG& v) {
        SparseEntries e;
        for (int i = 0; i < s->dim; ++i)
            if (!v(i).is_zero())
                e.emplace_back(i, v(i));
        return Vector(s, std::move(e));
    }

    Vector& operator+=(const Vector& o) {
        require_same_space(o);
        sparse_axpy(entries, GaussianRational(1), o.entries);
        return *this;
    }
    Vector& axpy(const GaussianRational& c, const Vector& o) {
        require_same_space(o);
        sparse_axpy(entries, c, o.entries);
        return *this;
    }
    Vector& operator*=(const GaussianRational& c) {
        if (c.is_zero()) {
            entries.clear();
            return *this;
        }
        for (auto& [i, v] : entries) v *= c;
        return *this;
    }
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator*(const GaussianRational& c, Vector a) { return a *= c; }
    friend bool operator==(const Vector& a, const Vector& b) {
        return a.space == b.space && a.entries == b.entries;
    }

    void require_same_space(const Vector& o) const {
        if (space != o.space)
            throw SpaceMismatchError("vectors live in different spaces");
    }

    std::string str() const;
};

/// Dense linear map between graded spaces (column j = image of basis j).
struct LinearMap {
    SpacePtr source;
    SpacePtr target;
    MatG matrix;

    LinearMap() = default;
    LinearMap(SpacePtr src, SpacePtr tgt, MatG m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != target->dim || matrix.cols() != source->dim)
            throw SpaceMismatchError("linear map shape mismatch");
    }

    static LinearMap identity(const SpacePtr& s) {
        return LinearMap(s, s, identity_matrix(s->dim));
    }

    /// Even maps connect equal parities only.
    bool is_even() const {
        for (int j = 0; j < source->dim; ++j)
            for (int i = 0; i < target->dim; ++i)
                if (!matrix(i, j).is_zero() && target->parity[i] != source->parity[j])
                    return false;
        return true;
    }

    Vector apply(const Vector& x) const {
        if (x.space != source)
            throw SpaceMismatchError("vector not in the map's source space");
        ColG out = ColG::Constant(target->dim, GaussianRational(0));
        for (const auto& [j, c] : x.entries)
            for (int i = 0; i < target->dim; ++i) {
                if (!matrix(i, j).is_zero())
                    out(i) += c * matrix(i, j);
            }
        return Vector::from_dense(target, out);
    }

    friend LinearMap operator*(const LinearMap& f, const LinearMap& g) {
        if (g.target != f.source)
            throw SpaceMismatchError("composition shape mismatch");
        return LinearMap(g.source, f.target, MatG(f.matrix * g.matrix));
    }
};

inline std::string Vector::str() const {
    if (entries.empty())
        return "0";
    std::string out;
    for (const auto& [i, c] : entries) {
        std::string coeff = c.str();
        bool plain_minus = c.is_real() && c.re() == Rational(-1);
        if (c.is_one())
            coeff.clear();
        if (!out.empty() && !(coeff.size() && coeff[0] == '-'))
            out += '+';
        if (plain_minus)
            out += '-';
        else if (!coeff.empty()) {
            bool needs_parens = coeff.find('+') != std::string::npos ||
                                coeff.find('-', 1) != std::string::npos;
            out += needs_parens ? "(" + coeff + ")*" : coeff + "*";
        }
        out += space->labels[i];
    }
    return out;
}

} // namespace superhom
