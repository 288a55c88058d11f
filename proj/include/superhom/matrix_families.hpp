#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superhom/quotient.hpp"
#include "superhom/superalgebra.hpp"

namespace superhom {

/// Sparse matrix over the (m+n) x (m+n) grid of gl(m|n). Entry (i, j) is
/// odd iff exactly one of i, j lies in the odd stripe (> m). Rows/cols are
/// 1-based to match the usual e_{i,j} notation.
struct MatrixElement {
    int m = 0, n = 0;
    std::map<std::pair<int, int>, GaussianRational> entries;

    MatrixElement() = default;
    MatrixElement(int m_, int n_) : m(m_), n(n_) {}

    int size() const { return m + n; }

    static MatrixElement unit(int m, int n, int i, int j, GaussianRational c = GaussianRational(1)) {
        MatrixElement x(m, n);
        x.set(i, j, std::move(c));
        return x;
    }

    void set(int i, int j, GaussianRational c) {
        if (i < 1 || j < 1 || i > size() || j > size())
            throw Error("matrix index out of range");
        if (c.is_zero())
            entries.erase({i, j});
        else
            entries[{i, j}] = std::move(c);
    }
    GaussianRational get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? GaussianRational(0) : it->second;
    }

    bool entry_is_odd(int i, int j) const { return (i > m) != (j > m); }

    /// Parity when homogeneous, nullopt otherwise.
    std::optional<Parity> homogeneous_parity() const {
        if (entries.empty())
            return std::nullopt;
        bool odd = entry_is_odd(entries.begin()->first.first, entries.begin()->first.second);
        for (const auto& [ij, c] : entries)
            if (entry_is_odd(ij.first, ij.second) != odd)
                return std::nullopt;
        return odd ? Parity::Odd : Parity::Even;
    }

    MatrixElement& operator+=(const MatrixElement& o);
    friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);
    friend MatrixElement operator*(const GaussianRational& c, MatrixElement a) {
        for (auto& [ij, v] : a.entries) v *= c;
        if (c.is_zero())
            a.entries.clear();
        return a;
    }
    friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
        return a.m == b.m && a.n == b.n && a.entries == b.entries;
    }

    std::string str() const;
};

/// Supercommutator x y - (-1)^{|x||y|} y x (arguments homogeneous).
MatrixElement supercommutator(const MatrixElement& x, const MatrixElement& y);

/// tr A - tr D.
GaussianRational supertrace(const MatrixElement& x);

/// Specification of one built-in family instance, e.g. gl(2|1) or W(3).
struct FamilySpec {
    enum class Family { GL, SL, PSL, P, Q, QT, OSP, W, S, ST, H };
    Family family = Family::GL;
    int a = 0; // m, or the rank for P/Q/Qt/W/S/St/H
    int b = 0; // n (gl/sl/psl/osp only)

    bool is_cartan() const {
        return family == Family::W || family == Family::S || family == Family::ST ||
               family == Family::H;
    }

    /// Parses CLI syntax: "gl:2|1", "psl:2|2", "P:2", "Q:2", "Qt:2",
    /// "osp:3|2", "W:3", "S:3", "St:4", "H:4".
    static FamilySpec parse(const std::string& s);
    std::string cli() const;
    std::string display() const; // e.g. "gl(2|1)", "P(2)", "W(3)"
};

/// Data tying a classical family to its ambient gl(m|n): the cover algebra
/// realized by echelonized rows of gl coordinates, plus quotient data when
/// the family itself is a quotient (psl, Q).
struct ClassicalRealization {
    int m = 0, n = 0;
    SpacePtr gl_space;                       // full gl(m|n) coordinate space
    AlgebraPtr cover;                        // subalgebra of gl before any quotient
    std::vector<SparseEntries> cover_rows;   // cover basis in gl coordinates (RREF)
    std::shared_ptr<BasisExpresser> express; // over cover_rows
    std::optional<Quotient> quotient;        // psl / Q only

    /// gl coordinates of a cover basis vector as a matrix.
    MatrixElement cover_matrix(int idx) const;
    /// Expresses a gl matrix in cover coordinates (nullopt if outside).
    std::optional<Vector> to_cover(const MatrixElement& x) const;
    /// Image of an algebra element in the cover (identity when no quotient).
    Vector lift(const Vector& v) const;
    /// Projection back to the algebra (identity when no quotient).
    Vector push(const Vector& v) const;
};

struct CartanRealization; // cartan_families.hpp

/// One built family: the algebra plus whichever realization applies.
struct BuiltAlgebra {
    FamilySpec spec;
    AlgebraPtr algebra;
    std::shared_ptr<const ClassicalRealization> classical;
    std::shared_ptr<const CartanRealization> cartan;
};

/// Builds gl/sl/psl/P/Q/Qt/osp with closure and axiom verification.
/// Throws AdmissibilityError for inadmissible specs.
BuiltAlgebra build_classical(const FamilySpec& spec);

/// Flat index of e_{i,j} in the gl(m|n) coordinate order (A row-major,
/// then B, then C, then D).
int gl_index(int m, int n, int i, int j);
SpacePtr make_gl_space(int m, int n);
Vector matrix_to_gl_vector(const SpacePtr& gl_space, const MatrixElement& x);
MatrixElement gl_vector_to_matrix(int m, int n, const Vector& v);

} // namespace superhom
