#include "superhom/endo_family.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace superhom {

namespace {

/// gl matrix with polynomial entries, 1-based like MatrixElement.
using PolyMatrixElement = std::map<std::pair<int, int>, Poly>;

PolyMatrixElement to_poly_elem(const MatrixElement& x) {
    PolyMatrixElement out;
    for (const auto& [ij, c] : x.entries) out[ij] = Poly::constant(c);
    return out;
}

/// Builds an EndoFamily on a classical BuiltAlgebra from a block formula on
/// gl matrices. The formula is applied to each cover basis matrix; failures
/// to land back in the cover are construction errors.
EndoFamily from_gl_map(const BuiltAlgebra& built,
                       const std::function<PolyMatrixElement(const MatrixElement&)>& fn,
                       std::vector<std::string> params, std::vector<Poly> side_relations,
                       std::string label) {
    if (!built.classical)
        throw Error("generator '" + label + "' needs a classical matrix family");
    const auto& real = *built.classical;
    const int cover_dim = real.cover->dim();
    const int gl_dim = real.gl_space->dim;

    MatP cover_mat = MatP::Constant(cover_dim, cover_dim, Poly());
    for (int k = 0; k < cover_dim; ++k) {
        PolyMatrixElement img = fn(real.cover_matrix(k));
        std::vector<Poly> dense(gl_dim, Poly());
        for (const auto& [ij, p] : img)
            dense[gl_index(real.m, real.n, ij.first, ij.second)] += p;
        auto coords = real.express->express(dense);
        if (!coords)
            throw Error("generator '" + label + "' does not preserve " + real.cover->name());
        for (int i = 0; i < cover_dim; ++i) cover_mat(i, k) = std::move((*coords)[i]);
    }

    EndoFamily fam;
    fam.algebra = real.cover;
    fam.parameters = std::move(params);
    fam.side_relations = std::move(side_relations);
    fam.matrix = std::move(cover_mat);
    fam.label = std::move(label);
    if (!fam.is_even())
        throw Error("generator '" + fam.label + "' is not even");
    if (real.quotient)
        fam = descend_to_quotient(fam, *real.quotient, built.algebra);
    return fam;
}

MatP constant_mat(const MatG& m) {
    MatP out = MatP::Constant(m.rows(), m.cols(), Poly());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                out(i, j) = Poly::constant(m(i, j));
    return out;
}

enum class Block { A, B, C, D };

Block block_of(int m, int i, int j) {
    bool ri = i > m, cj = j > m;
    if (!ri && !cj)
        return Block::A;
    if (!ri && cj)
        return Block::B;
    if (ri && !cj)
        return Block::C;
    return Block::D;
}

/// Psi(F) = J F^t J with J = [[0,1],[-1,0]] on 2x2 blocks.
/// For F = E_{rc}: J E_{cr} J = sign * E_{r'c'} with r' = 3-c, c' = 3-r and
/// sign = -(-1)^{r+c} ... computed directly instead of by a closed form.
std::map<std::pair<int, int>, GaussianRational> psi_of_unit(int r, int c) {
    // J has entries J_{12} = 1, J_{21} = -1.
    std::map<std::pair<int, int>, GaussianRational> out;
    auto jval = [](int i, int j) -> int { return (i == 1 && j == 2) ? 1 : (i == 2 && j == 1) ? -1 : 0; };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            // (J F^t J)_{ij} = sum_{k,l} J_{ik} (F^t)_{kl} J_{lj} = J_{ic} J_{rj}
            int v = jval(i, c) * jval(r, j);
            if (v != 0)
                out[{i, j}] = GaussianRational(v);
        }
    return out;
}

} // namespace

void EndoFamily::check_assignment(const Assignment& a) const {
    for (const auto& rel : side_relations) {
        if (!rel.evaluate(a).is_zero())
            throw InvalidAssignmentError("assignment violates side relation " + rel.str() +
                                         " = 0");
    }
}

LinearMap EndoFamily::at(const Assignment& a) const {
    check_assignment(a);
    const int d = algebra->dim();
    MatG m = MatG::Constant(d, d, GaussianRational(0));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            if (!matrix(i, j).is_zero())
                m(i, j) = matrix(i, j).evaluate(a);
    return LinearMap(algebra->space(), algebra->space(), std::move(m));
}

LinearMap EndoFamily::as_linear_map() const {
    if (!is_constant())
        throw Error("family '" + label + "' has free parameters");
    return at({});
}

EndoFamily EndoFamily::from_linear_map(const AlgebraPtr& g, const LinearMap& f,
                                       std::string label) {
    if (f.source != g->space() || f.target != g->space())
        throw SpaceMismatchError("map is not an endomorphism of the algebra");
    EndoFamily fam;
    fam.algebra = g;
    fam.matrix = constant_mat(f.matrix);
    fam.label = std::move(label);
    return fam;
}

EndoFamily EndoFamily::identity(const AlgebraPtr& g) {
    return from_linear_map(g, LinearMap::identity(g->space()), "id");
}

EndoFamily compose(const EndoFamily& f, const EndoFamily& g) {
    if (f.algebra != g.algebra)
        throw SpaceMismatchError("composition of families over different algebras");
    // shared names must denote the same parameter: their side relations match
    for (const auto& p : f.parameters)
        for (const auto& q : g.parameters)
            if (p == q) {
                auto mentions = [&p](const std::vector<Poly>& rels) {
                    std::vector<std::string> out;
                    for (const auto& r : rels)
                        for (const auto& v : r.vars())
                            if (v == p)
                                out.push_back(r.str());
                    return out;
                };
                if (mentions(f.side_relations) != mentions(g.side_relations))
                    throw Error("parameter '" + p + "' is shared with conflicting roles");
            }
    EndoFamily out;
    out.algebra = f.algebra;
    out.parameters = f.parameters;
    for (const auto& p : g.parameters)
        if (std::find(out.parameters.begin(), out.parameters.end(), p) == out.parameters.end())
            out.parameters.push_back(p);
    out.side_relations = f.side_relations;
    for (const auto& r : g.side_relations) {
        bool dup = false;
        for (const auto& s : out.side_relations) dup = dup || s == r;
        if (!dup)
            out.side_relations.push_back(r);
    }
    out.matrix = f.matrix * g.matrix;
    out.label = f.label + "*" + g.label;
    return out;
}

EndoFamily power(const EndoFamily& f, int k) {
    if (k < 1)
        throw Error("power expects k >= 1");
    EndoFamily out = f;
    for (int i = 1; i < k; ++i) out = compose(out, f);
    out.label = f.label + "^" + std::to_string(k);
    return out;
}

bool endo_equal(const EndoFamily& f, const EndoFamily& g) {
    if (f.algebra != g.algebra)
        return false;
    return mat_equal(f.matrix, g.matrix);
}

HomomorphismReport is_homomorphism(const EndoFamily& f, const Assignment& a) {
    LinearMap s = f.at(a);
    const auto& g = *f.algebra;
    HomomorphismReport rep;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i; j < g.dim(); ++j) {
            Vector br(g.space(), g.bracket_basis(i, j));
            Vector lhs = s.apply(br);
            Vector rhs = g.bracket(s.apply(Vector::basis(g.space(), i)),
                                   s.apply(Vector::basis(g.space(), j)));
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.i = i;
                rep.j = j;
                rep.lhs = lhs.str();
                rep.rhs = rhs.str();
                return rep;
            }
        }
    return rep;
}

std::string HomomorphismReport::str() const {
    if (ok)
        return "homomorphism: PASS";
    std::ostringstream os;
    os << "homomorphism: FAIL at pair (" << i << "," << j << "): sigma[x,y] = " << lhs
       << " but [sigma x, sigma y] = " << rhs;
    return os.str();
}

EndoFamily generator_ad(const BuiltAlgebra& built, const MatG& X, const MatG& Y,
                        bool require_unimodular) {
    if (!built.classical)
        throw Error("Ad needs a classical matrix family");
    const auto& real = *built.classical;
    if (X.rows() != real.m || X.cols() != real.m || Y.rows() != real.n || Y.cols() != real.n)
        throw Error("Ad block sizes do not match the family");
    if (require_unimodular) {
        if (determinant(X) != GaussianRational(1) || determinant(Y) != GaussianRational(1))
            throw Error("Ad requires unimodular (det 1) blocks");
    }
    const int mn = real.m + real.n;
    MatG Z = MatG::Constant(mn, mn, GaussianRational(0));
    Z.block(0, 0, real.m, real.m) = X;
    Z.block(real.m, real.m, real.n, real.n) = Y;
    MatG Zi = inverse(Z);

    auto fn = [Z, Zi, mn, &real](const MatrixElement& x) {
        MatG xm = MatG::Constant(mn, mn, GaussianRational(0));
        for (const auto& [ij, c] : x.entries) xm(ij.first - 1, ij.second - 1) = c;
        MatG y = Z * xm * Zi;
        MatrixElement out(real.m, real.n);
        for (int i = 0; i < mn; ++i)
            for (int j = 0; j < mn; ++j)
                if (!y(i, j).is_zero())
                    out.set(i + 1, j + 1, y(i, j));
        return to_poly_elem(out);
    };
    return from_gl_map(built, fn, {}, {}, "Ad");
}

EndoFamily generator_j(const BuiltAlgebra& built, const std::string& lambda_name) {
    std::string mu_name = lambda_name == "lambda" ? "mu" : lambda_name + "_inv";
    Poly lambda = Poly::variable(lambda_name);
    Poly mu = Poly::variable(mu_name);
    auto fn = [&built, lambda, mu](const MatrixElement& x) {
        PolyMatrixElement out;
        int m = built.classical->m;
        for (const auto& [ij, c] : x.entries) {
            switch (block_of(m, ij.first, ij.second)) {
                case Block::A:
                case Block::D: out[ij] += Poly::constant(c); break;
                case Block::B: out[ij] += Poly::constant(c) * lambda; break;
                case Block::C: out[ij] += Poly::constant(c) * mu; break;
            }
        }
        return out;
    };
    return from_gl_map(built, fn, {lambda_name, mu_name},
                       {lambda * mu - Poly(1)},
                       "j(" + lambda_name + ")");
}

EndoFamily generator_j_const(const BuiltAlgebra& built, const GaussianRational& value) {
    if (value.is_zero())
        throw Error("j(lambda) needs lambda != 0");
    GaussianRational inv = value.inverse();
    auto fn = [&built, value, inv](const MatrixElement& x) {
        PolyMatrixElement out;
        int m = built.classical->m;
        for (const auto& [ij, c] : x.entries) {
            switch (block_of(m, ij.first, ij.second)) {
                case Block::A:
                case Block::D: out[ij] += Poly::constant(c); break;
                case Block::B: out[ij] += Poly::constant(c * value); break;
                case Block::C: out[ij] += Poly::constant(c * inv); break;
            }
        }
        return out;
    };
    return from_gl_map(built, fn, {}, {}, "j(" + value.str() + ")");
}

EndoFamily generator_tau(const BuiltAlgebra& built) {
    // (A,B,C,D) -> (-A^t, C^t, -B^t, -D^t): e_ij -> -e_ji except C -> +e_ji
    auto fn = [&built](const MatrixElement& x) {
        PolyMatrixElement out;
        int m = built.classical->m;
        for (const auto& [ij, c] : x.entries) {
            int sign = (block_of(m, ij.first, ij.second) == Block::C) ? 1 : -1;
            out[{ij.second, ij.first}] += Poly::constant(GaussianRational(sign) * c);
        }
        return out;
    };
    return from_gl_map(built, fn, {}, {}, "tau");
}

EndoFamily generator_pi(const BuiltAlgebra& built) {
    if (!built.classical || built.classical->m != built.classical->n)
        throw Error("pi needs equal blocks (gl(n|n) type)");
    int n = built.classical->n;
    auto fn = [n](const MatrixElement& x) {
        PolyMatrixElement out;
        auto flip = [n](int i) { return i > n ? i - n : i + n; };
        for (const auto& [ij, c] : x.entries)
            out[{flip(ij.first), flip(ij.second)}] += Poly::constant(c);
        return out;
    };
    return from_gl_map(built, fn, {}, {}, "pi");
}

namespace {

EndoFamily rho_impl(const BuiltAlgebra& built, const Poly& a, const Poly& b, const Poly& c,
                    const Poly& d, std::vector<std::string> params,
                    std::vector<Poly> side_relations, std::string label) {
    if (!built.classical || built.classical->m != 2 || built.classical->n != 2)
        throw Error("rho needs gl(2|2)-type blocks");
    auto fn = [a, b, c, d](const MatrixElement& x) {
        PolyMatrixElement out;
        for (const auto& [ij, coeff] : x.entries) {
            Poly pc = Poly::constant(coeff);
            switch (block_of(2, ij.first, ij.second)) {
                case Block::A:
                case Block::D: out[ij] += pc; break;
                case Block::B: {
                    int r = ij.first, col = ij.second - 2;
                    out[ij] += a * pc;
                    for (const auto& [rc, v] : psi_of_unit(r, col))
                        out[{rc.first + 2, rc.second}] += c * pc * Poly::constant(v);
                    break;
                }
                case Block::C: {
                    int r = ij.first - 2, col = ij.second;
                    out[ij] += d * pc;
                    for (const auto& [rc, v] : psi_of_unit(r, col))
                        out[{rc.first, rc.second + 2}] += b * pc * Poly::constant(v);
                    break;
                }
            }
        }
        return out;
    };
    return from_gl_map(built, fn, std::move(params), std::move(side_relations), std::move(label));
}

} // namespace

EndoFamily generator_rho(const BuiltAlgebra& built) {
    Poly a = Poly::variable("a"), b = Poly::variable("b"), c = Poly::variable("c"),
         d = Poly::variable("d");
    return rho_impl(built, a, b, c, d, {"a", "b", "c", "d"},
                    {a * d - b * c - Poly(1)}, "rho(a,b,c,d)");
}

EndoFamily generator_rho_const(const BuiltAlgebra& built, const MatG& sl2) {
    if (sl2.rows() != 2 || sl2.cols() != 2 || determinant(sl2) != GaussianRational(1))
        throw Error("rho needs an SL_2 matrix");
    return rho_impl(built, Poly::constant(sl2(0, 0)), Poly::constant(sl2(0, 1)),
                    Poly::constant(sl2(1, 0)), Poly::constant(sl2(1, 1)), {}, {}, "rho(concrete)");
}

EndoFamily generator_sigma_q(const BuiltAlgebra& built) {
    using F = FamilySpec::Family;
    if (!built.classical ||
        !(built.spec.family == F::Q || built.spec.family == F::QT))
        throw Error("sigma_q needs Qt(n-1) or Q(n-1)");
    GaussianRational zeta = GaussianRational::zeta();
    int n = built.classical->m;
    auto fn = [n, zeta](const MatrixElement& x) {
        // (A,B;B,A) -> (-A^t, zeta B^t; zeta B^t, -A^t). The diagonal-block
        // sign follows the supertransposition pattern of tau: plain A^t is
        // anti-multiplicative on the even part, -A^t is the automorphism.
        // sigma_q^2 = j(-1) and sigma_q^4 = 1 hold either way.
        PolyMatrixElement out;
        for (const auto& [ij, c] : x.entries) {
            switch (block_of(n, ij.first, ij.second)) {
                case Block::A:
                case Block::D:
                    out[{ij.second, ij.first}] += Poly::constant(-c);
                    break;
                case Block::B:
                    out[{ij.second - n, ij.first + n}] += Poly::constant(zeta * c);
                    break;
                case Block::C:
                    out[{ij.second + n, ij.first - n}] += Poly::constant(zeta * c);
                    break;
            }
        }
        return out;
    };
    return from_gl_map(built, fn, {}, {}, "sigma_q");
}

EndoFamily generator_gminus1_ansatz(const BuiltAlgebra& built) {
    const auto& g = built.algebra;
    if (!g->space()->degree)
        throw Error("the g_{-1} scaling ansatz needs a graded family");
    const auto& deg = *g->space()->degree;
    std::vector<int> minus1;
    for (int i = 0; i < g->dim(); ++i)
        if (deg[i] == -1)
            minus1.push_back(i);
    if (minus1.empty())
        throw Error("no degree -1 block");

    EndoFamily fam;
    fam.algebra = g;
    fam.matrix = constant_mat(identity_matrix(g->dim()));
    for (size_t col = 0; col < minus1.size(); ++col) {
        for (size_t row = 0; row < minus1.size(); ++row) {
            std::string name =
                "a" + std::to_string(row + 1) + std::to_string(col + 1); // a_{ki}
            fam.parameters.push_back(name);
            fam.matrix(minus1[row], minus1[col]) = Poly::variable(name);
        }
    }
    fam.label = "diag(a_ki)";
    return fam;
}

MatG osp_gamma(int m) {
    MatG g = identity_matrix(m);
    g(0, 0) = GaussianRational(-1);
    return g;
}

EndoFamily descend_to_quotient(const EndoFamily& f, const Quotient& q, const AlgebraPtr& target) {
    if (f.algebra->space() != q.ambient)
        throw SpaceMismatchError("family does not act on the quotient's ambient space");
    if (target->space() != q.quotient_space)
        throw SpaceMismatchError("target algebra does not match the quotient space");

    // well-definedness: f(ideal) must stay in the ideal span
    for (const auto& v : q.ideal_basis) {
        std::vector<Poly> img(q.ambient->dim, Poly());
        for (const auto& [j, c] : v.entries)
            for (int i = 0; i < q.ambient->dim; ++i)
                if (!f.matrix(i, j).is_zero())
                    img[i] += f.matrix(i, j) * Poly::constant(c);
        // eliminate ideal pivots, then everything must vanish
        for (const auto& row : q.ideal_basis) {
            int p = row.entries.front().first;
            Poly coeff = img[p];
            if (coeff.is_zero())
                continue;
            for (const auto& [i, c] : row.entries) img[i] -= coeff * Poly::constant(c);
        }
        for (const auto& p : img)
            if (!p.is_zero())
                throw DescentError("family '" + f.label + "' does not preserve the ideal");
    }

    EndoFamily out;
    out.algebra = target;
    out.parameters = f.parameters;
    out.side_relations = f.side_relations;
    out.matrix = constant_mat(q.projection.matrix) * f.matrix * constant_mat(q.section.matrix);
    out.label = f.label;
    return out;
}

EndoFamily generator_from_cli(const BuiltAlgebra& built, const std::string& text) {
    if (text == "tau")
        return generator_tau(built);
    if (text == "pi")
        return generator_pi(built);
    if (text == "sigma_q")
        return generator_sigma_q(built);
    if (text == "diag")
        return generator_gminus1_ansatz(built);
    if (text.rfind("j:", 0) == 0) {
        std::string arg = text.substr(2);
        // numeric -> concrete, otherwise a parameter name
        if (!arg.empty() && (std::isdigit(arg[0]) || arg[0] == '-'))
            return generator_j_const(built, GaussianRational::parse(arg));
        return generator_j(built, arg.empty() ? "lambda" : arg);
    }
    if (text.rfind("rho:", 0) == 0)
        return generator_rho(built); // parameter names are fixed as a,b,c,d
    if (text == "rho")
        return generator_rho(built);
    if (text.rfind("Ad:", 0) == 0) {
        std::string path = text.substr(3);
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open Ad matrix file '" + path + "'");
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw ParseError("bad Ad matrix file: " + std::string(e.what()));
        }
        auto read_mat = [&doc](const std::string& key, int size) {
            auto rows = doc.at(key);
            MatG m = MatG::Constant(size, size, GaussianRational(0));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    m(i, j) = GaussianRational::parse(rows.at(i).at(j).get<std::string>());
            return m;
        };
        if (!built.classical)
            throw Error("Ad needs a classical matrix family");
        MatG X = read_mat("X", built.classical->m);
        MatG Y = read_mat("Y", built.classical->n);
        return generator_ad(built, X, Y);
    }
    throw ParseError("unknown generator '" + text + "'");
}

} // namespace superhom
