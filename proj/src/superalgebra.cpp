#include "superhom/superalgebra.hpp"

#include <sstream>

namespace superhom {

void StructureConstants::set(int i, int j, SparseEntries value) {
    if (i > j)
        throw Error("structure constants are stored for i <= j only");
    if (i == j && space_->parity[i] == Parity::Even && !value.empty())
        throw Error("[x,x] must vanish for even basis vectors");
    if (value.empty())
        table_.erase({i, j});
    else
        table_[{i, j}] = std::move(value);
}

SparseEntries StructureConstants::bracket_basis(int i, int j) const {
    if (i <= j) {
        auto it = table_.find({i, j});
        return it == table_.end() ? SparseEntries{} : it->second;
    }
    auto it = table_.find({j, i});
    if (it == table_.end())
        return {};
    // [b_i, b_j] = -(-1)^{|b_i||b_j|} [b_j, b_i]
    int sign = -koszul_sign(space_->parity[i], space_->parity[j]);
    SparseEntries out = it->second;
    if (sign < 0)
        for (auto& [k, c] : out) c = -c;
    return out;
}

Vector SuperAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.space != space() || y.space != space())
        throw SpaceMismatchError("bracket arguments must live in the algebra's space");
    SparseEntries acc;
    for (const auto& [i, a] : x.entries)
        for (const auto& [j, b] : y.entries) {
            SparseEntries t = bracket_basis(i, j);
            if (!t.empty())
                sparse_axpy(acc, a * b, t);
        }
    return Vector(space(), std::move(acc));
}

namespace {

std::string triple_label(const SuperAlgebra& g, int i, int j, int k) {
    const auto& L = g.space()->labels;
    return "(" + L[i] + ", " + L[j] + ", " + L[k] + ")";
}

} // namespace

AxiomReport verify_axioms(const SuperAlgebra& g, size_t max_violations) {
    AxiomReport rep;
    const SpacePtr& sp = g.space();
    const int n = sp->dim;

    for (const auto& [ij, val] : g.sc().table()) {
        Parity expect = sp->parity[ij.first] + sp->parity[ij.second];
        for (const auto& [k, c] : val) {
            if (sp->parity[k] != expect) {
                rep.ok = false;
                if (rep.violations.size() < max_violations)
                    rep.violations.push_back(
                        {"homogeneity", ij.first, ij.second, -1,
                         "[" + sp->labels[ij.first] + "," + sp->labels[ij.second] +
                             "] has a component of wrong parity at " + sp->labels[k]});
            }
        }
    }

    LinearMap id = LinearMap::identity(sp);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                ++rep.triples_checked;
                Vector r = hom_jacobi_residual_basis(g, id, i, j, k);
                if (!r.is_zero()) {
                    rep.ok = false;
                    if (rep.violations.size() < max_violations)
                        rep.violations.push_back({"jacobi", i, j, k,
                                                  "residual " + r.str() + " on triple " +
                                                      triple_label(g, i, j, k)});
                }
            }
    g.mark_jacobi_verified(rep.ok);
    return rep;
}

std::string AxiomReport::str() const {
    std::ostringstream os;
    os << (ok ? "axioms: PASS" : "axioms: FAIL") << " (" << triples_checked
       << " ordered triples)";
    for (const auto& v : violations) os << "\n  " << v.kind << ": " << v.detail;
    return os.str();
}

GradingReport verify_grading(const SuperAlgebra& g, size_t max_issues) {
    GradingReport rep;
    const SpacePtr& sp = g.space();
    if (!sp->degree)
        return rep;
    rep.has_degrees = true;
    rep.ok = true;
    const auto& deg = *sp->degree;

    for (int i = 0; i < sp->dim; ++i) {
        rep.degree_dims[deg[i]]++;
        if (((deg[i] % 2) + 2) % 2 != parity_bit(sp->parity[i])) {
            rep.ok = false;
            if (rep.issues.size() < max_issues)
                rep.issues.push_back(
                    {i, -1, "parity of " + sp->labels[i] + " does not match degree mod 2"});
        }
    }

    for (int i = 0; i < sp->dim; ++i)
        for (int j = i; j < sp->dim; ++j) {
            SparseEntries v = g.bracket_basis(i, j);
            for (const auto& [k, c] : v) {
                if (deg[k] != deg[i] + deg[j]) {
                    rep.ok = false;
                    if (rep.issues.size() < max_issues)
                        rep.issues.push_back(
                            {i, j,
                             "[" + sp->labels[i] + "," + sp->labels[j] + "] (degrees " +
                                 std::to_string(deg[i]) + "+" + std::to_string(deg[j]) +
                                 ") has a component in degree " + std::to_string(deg[k])});
                }
            }
        }
    return rep;
}

std::string GradingReport::str() const {
    std::ostringstream os;
    if (!has_degrees)
        return "grading: no degree assignment";
    os << (ok ? "grading: PASS" : "grading: FAIL") << "; degree dims:";
    for (const auto& [d, n] : degree_dims) os << " " << d << ":" << n;
    for (const auto& issue : issues) os << "\n  " << issue.detail;
    return os.str();
}

LinearMap adjoint_matrix(const SuperAlgebra& g, const Vector& x) {
    if (x.space != g.space())
        throw SpaceMismatchError("adjoint argument must live in the algebra's space");
    const int n = g.dim();
    MatG m = MatG::Constant(n, n, GaussianRational(0));
    for (int j = 0; j < n; ++j) {
        SparseEntries col;
        for (const auto& [i, a] : x.entries) sparse_axpy(col, a, g.bracket_basis(i, j));
        for (const auto& [i, c] : col) m(i, j) = c;
    }
    return LinearMap(g.space(), g.space(), std::move(m));
}

bool Subspace::contains(const Vector& v) const {
    if (basis.empty())
        return v.is_zero();
    RowReducer red(v.space->dim);
    for (const auto& b : basis) red.insert(b.entries);
    return red.contains(v.entries);
}

Subspace submodule_generated(const SuperAlgebra& g, const std::vector<Vector>& seeds,
                             const std::vector<Vector>& actors) {
    RowReducer red(g.dim());
    std::vector<Vector> frontier;
    for (const auto& s : seeds) {
        if (s.space != g.space())
            throw SpaceMismatchError("seed not in the algebra's space");
        if (red.insert(s.entries))
            frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& v : frontier)
            for (const auto& a : actors) {
                Vector w = g.bracket(a, v);
                if (!w.is_zero() && red.insert(w.entries))
                    next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    red.make_reduced();
    Subspace out;
    for (const auto& r : red.rows()) out.basis.emplace_back(g.space(), r);
    return out;
}

Subspace ideal_generated(const SuperAlgebra& g, const std::vector<Vector>& seeds) {
    std::vector<Vector> actors;
    actors.reserve(g.dim());
    for (int i = 0; i < g.dim(); ++i) actors.push_back(Vector::basis(g.space(), i));
    return submodule_generated(g, seeds, actors);
}

Vector hom_jacobi_residual_basis(const SuperAlgebra& g, const LinearMap& sigma, int i, int j,
                                 int k) {
    const SpacePtr& sp = g.space();
    if (sigma.source != sp || sigma.target != sp)
        throw SpaceMismatchError("sigma must be an endomorphism of the algebra's space");
    auto term = [&](int a, int b, int c) {
        // (-1)^{|a||c|} [sigma(b_a), [b_b, b_c]]
        SparseEntries inner = g.bracket_basis(b, c);
        SparseEntries acc;
        for (int p = 0; p < sp->dim; ++p) {
            const GaussianRational& s = sigma.matrix(p, a);
            if (s.is_zero())
                continue;
            for (const auto& [q, w] : inner) sparse_axpy(acc, s * w, g.bracket_basis(p, q));
        }
        if (koszul_sign(sp->parity[a], sp->parity[c]) < 0)
            for (auto& [idx, v] : acc) v = -v;
        return acc;
    };
    SparseEntries acc = term(i, j, k);
    SparseEntries t2 = term(j, k, i);
    SparseEntries t3 = term(k, i, j);
    sparse_axpy(acc, GaussianRational(1), t2);
    sparse_axpy(acc, GaussianRational(1), t3);
    return Vector(sp, std::move(acc));
}

} // namespace superhom
