#include "superhom/cartan_families.hpp"

#include <sstream>

namespace superhom {

std::optional<Parity> SuperDerivation::homogeneous_parity() const {
    std::optional<Parity> p;
    for (const auto& f : coefficients) {
        if (f.is_zero())
            continue;
        auto fp = f.degree_parity();
        if (!fp)
            return std::nullopt;
        if (p && *p != *fp)
            return std::nullopt;
        p = fp;
    }
    if (!p)
        return std::nullopt; // zero derivation
    return (*p == Parity::Even) ? Parity::Odd : Parity::Even; // deg d_j = -1
}

std::optional<int> SuperDerivation::principal_degree() const {
    std::optional<int> d;
    for (const auto& f : coefficients) {
        if (f.is_zero())
            continue;
        auto fd = f.homogeneous_degree();
        if (!fd)
            return std::nullopt;
        if (d && *d != *fd)
            return std::nullopt;
        d = fd;
    }
    if (!d)
        return std::nullopt;
    return *d - 1;
}

ExteriorElement SuperDerivation::apply(const ExteriorElement& g) const {
    if (g.n != n)
        throw SpaceMismatchError("derivation and argument over different ranks");
    ExteriorElement out(n);
    for (int j = 1; j <= n; ++j) {
        if (coefficients[j - 1].is_zero())
            continue;
        out += wedge(coefficients[j - 1], partial(g, j));
    }
    return out;
}

SuperDerivation& SuperDerivation::operator+=(const SuperDerivation& o) {
    if (n != o.n)
        throw SpaceMismatchError("derivations over different ranks");
    for (int j = 0; j < n; ++j) coefficients[j] += o.coefficients[j];
    return *this;
}

std::string SuperDerivation::str() const {
    std::string out;
    for (int j = 1; j <= n; ++j) {
        const auto& f = coefficients[j - 1];
        if (f.is_zero())
            continue;
        for (const auto& [m, c] : f.terms) {
            std::string coeff = c.str();
            bool minus = c.is_real() && c.re() == Rational(-1);
            if (c.is_one())
                coeff.clear();
            if (!out.empty() && !(coeff.size() && coeff[0] == '-'))
                out += '+';
            if (minus)
                out += '-';
            else if (!coeff.empty()) {
                bool parens = coeff.find('+') != std::string::npos ||
                              coeff.find('-', 1) != std::string::npos;
                out += parens ? "(" + coeff + ")*" : coeff + "*";
            }
            if (m != 0)
                out += monomial_str(m) + "*";
            out += "d" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

SuperDerivation derivation_bracket(const SuperDerivation& d1, const SuperDerivation& d2) {
    if (d1.n != d2.n)
        throw SpaceMismatchError("derivations over different ranks");
    auto p1 = d1.homogeneous_parity();
    auto p2 = d2.homogeneous_parity();
    if (d1.is_zero() || d2.is_zero())
        return SuperDerivation(d1.n);
    if (!p1 || !p2)
        throw GradingError("derivation bracket needs parity-homogeneous arguments");
    int sign = -koszul_sign(*p1, *p2);
    SuperDerivation out(d1.n);
    for (int k = 0; k < d1.n; ++k) {
        // [D1,D2](xi_k) = D1(f2_k) - (-1)^{|D1||D2|} D2(f1_k)
        ExteriorElement v = d1.apply(d2.coefficients[k]);
        v += GaussianRational(sign) * d2.apply(d1.coefficients[k]);
        out.coefficients[k] = std::move(v);
    }
    return out;
}

ExteriorElement divergence(const SuperDerivation& d) {
    ExteriorElement out(d.n);
    for (int j = 1; j <= d.n; ++j) out += partial(d.coefficients[j - 1], j);
    return out;
}

SparseEntries CartanRealization::to_w_row(const SuperDerivation& d) const {
    SparseEntries row;
    for (int idx = 0; idx < static_cast<int>(wcoords.size()); ++idx) {
        auto [mask, j] = wcoords[idx];
        auto it = d.coefficients[j - 1].terms.find(mask);
        if (it != d.coefficients[j - 1].terms.end())
            row.emplace_back(idx, it->second);
    }
    return row;
}

namespace {

std::vector<std::pair<uint32_t, int>> w_coordinate_order(int n) {
    std::vector<std::pair<uint32_t, int>> coords;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        for (int j = 1; j <= n; ++j) coords.emplace_back(mask, j);
    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
        int da = std::popcount(a.first), db = std::popcount(b.first);
        if (da != db)
            return da < db;
        if (a.first != b.first)
            return a.first < b.first;
        return a.second < b.second;
    });
    return coords;
}

} // namespace

BuiltAlgebra build_cartan(const FamilySpec& spec) {
    using F = FamilySpec::Family;
    const int n = spec.a;
    switch (spec.family) {
        case F::W:
        case F::S:
            if (n < 3)
                throw AdmissibilityError(spec.display() + " needs n >= 3");
            break;
        case F::ST:
            if (n < 4 || n % 2 != 0)
                throw AdmissibilityError("St(n) needs n >= 4 even");
            break;
        case F::H:
            if (n < 4)
                throw AdmissibilityError("H(n) needs n >= 4");
            break;
        default:
            throw AdmissibilityError("build_cartan handles W, S, St, H only");
    }
    if (n > 8)
        throw AdmissibilityError(spec.display() + " exceeds the desk-scale rank bound (n <= 8)");

    auto realization = std::make_shared<CartanRealization>();
    realization->n = n;
    realization->family = spec.family;
    realization->wcoords = w_coordinate_order(n);
    const auto& coords = realization->wcoords;
    const int wdim = static_cast<int>(coords.size());

    // Assemble the basis as derivations.
    std::vector<SuperDerivation> basis;
    if (spec.family == F::W) {
        for (const auto& [mask, j] : coords)
            basis.push_back(SuperDerivation::single(n, ExteriorElement::monomial(n, mask), j));
    } else if (spec.family == F::S || spec.family == F::ST) {
        // Divergence-free fields, canonical per-degree echelon basis.
        // Degree block d: monomial coefficients of exterior degree d+1.
        for (int d = -1; d <= n - 1; ++d) {
            // collect W(n)_d coordinates and the divergence matrix on them
            std::vector<int> block;
            for (int idx = 0; idx < wdim; ++idx)
                if (std::popcount(coords[idx].first) == d + 1)
                    block.push_back(idx);
            if (block.empty())
                continue;
            std::vector<std::pair<SparseEntries, GaussianRational>> rows;
            // Equations: for each monomial mask of degree d, sum of signed
            // block coefficients vanishes.
            std::map<uint32_t, SparseEntries> eq;
            for (size_t bi = 0; bi < block.size(); ++bi) {
                auto [mask, j] = coords[block[bi]];
                ExteriorElement der = partial(ExteriorElement::monomial(n, mask), j);
                for (const auto& [mm, c] : der.terms) eq[mm].emplace_back(static_cast<int>(bi), c);
            }
            RowReducer red(static_cast<int>(block.size()));
            for (auto& [mm, row] : eq) {
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                red.insert(row);
            }
            for (auto& kv : red.kernel_basis()) {
                SuperDerivation dfield(n);
                for (const auto& [bi, c] : kv) {
                    auto [mask, j] = coords[block[bi]];
                    dfield += c * SuperDerivation::single(n, ExteriorElement::monomial(n, mask), j);
                }
                basis.push_back(std::move(dfield));
            }
        }
        if (spec.family == F::ST) {
            // (1 - xi_1..xi_n) only changes the degree -1 block.
            ExteriorElement a_factor = ExteriorElement::one(n);
            a_factor.add_term((1u << n) - 1, GaussianRational(-1));
            std::vector<SuperDerivation> st;
            for (int j = 1; j <= n; ++j)
                st.push_back(SuperDerivation::single(n, a_factor, j));
            for (const auto& d : basis)
                if (d.principal_degree() && *d.principal_degree() >= 0)
                    st.push_back(d);
            basis = std::move(st);
        }
    } else { // H
        for (int k = 1; k <= n - 1; ++k)
            for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != k)
                    continue;
                ExteriorElement f = ExteriorElement::monomial(n, mask);
                SuperDerivation d(n);
                for (int j = 1; j <= n; ++j)
                    d += GaussianRational(1) * SuperDerivation::single(n, partial(f, j), j);
                basis.push_back(std::move(d));
            }
    }

    // Basis rows over W coordinates; expresser doubles as the closure check.
    realization->basis = basis;
    std::vector<SparseEntries> rows;
    rows.reserve(basis.size());
    for (const auto& d : basis) rows.push_back(realization->to_w_row(d));
    realization->express = std::make_shared<BasisExpresser>(rows, wdim);

    const int dim = static_cast<int>(basis.size());
    std::vector<Parity> parity(dim);
    std::vector<int> degree(dim);
    std::vector<std::string> labels(dim);
    bool z_graded = spec.family != F::ST;
    for (int i = 0; i < dim; ++i) {
        auto p = basis[i].homogeneous_parity();
        if (!p)
            throw GradingError(spec.display() + ": basis derivation of mixed parity");
        parity[i] = *p;
        labels[i] = basis[i].str();
        auto d = basis[i].principal_degree();
        if (d) {
            degree[i] = *d;
        } else if (spec.family == F::ST) {
            degree[i] = -1; // the (1 - top)d_i fields of the decomposition
        } else {
            throw GradingError(spec.display() + ": basis derivation of mixed degree");
        }
    }
    SpacePtr space = make_space(std::move(parity), std::move(labels), std::move(degree));

    StructureConstants sc(space);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            if (i == j && space->parity[i] == Parity::Even)
                continue;
            SuperDerivation br = derivation_bracket(basis[i], basis[j]);
            SparseEntries wrow = realization->to_w_row(br);
            auto coeffs = realization->express->express(wrow);
            if (!coeffs)
                throw Error(spec.display() + ": bracket of basis pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ") leaves the family");
            SparseEntries e;
            for (int k = 0; k < dim; ++k)
                if (!(*coeffs)[k].is_zero())
                    e.emplace_back(k, (*coeffs)[k]);
            sc.set(i, j, std::move(e));
        }

    BuiltAlgebra out;
    out.spec = spec;
    out.algebra = std::make_shared<const SuperAlgebra>(spec.display(), std::move(sc), z_graded);
    out.cartan = realization;

    AxiomReport rep = verify_axioms(*out.algebra);
    if (!rep.ok)
        throw Error(spec.display() + " failed axiom verification:\n" + rep.str());
    if (z_graded) {
        GradingReport gr = verify_grading(*out.algebra);
        if (!gr.ok)
            throw Error(spec.display() + " failed grading verification:\n" + gr.str());
    }
    return out;
}

TransitivityReport check_transitivity(const SuperAlgebra& g) {
    if (!g.space()->degree)
        throw GradingError("transitivity check needs a grading");
    if (!g.z_graded())
        throw GradingError("transitivity check applies to Z-graded families (W, S, H)");
    const auto& deg = *g.space()->degree;
    const int d = g.dim();

    std::vector<int> minus1;
    for (int i = 0; i < d; ++i)
        if (deg[i] == -1)
            minus1.push_back(i);

    // kernel of a -> ([a, b] for b in g_{-1}) over the unknown coefficients of a
    RowReducer red(d);
    for (int b : minus1)
        for (int out = 0; out < d; ++out) {
            SparseEntries row;
            for (int i = 0; i < d; ++i) {
                SparseEntries br = g.bracket_basis(i, b);
                for (const auto& [k, c] : br)
                    if (k == out)
                        row.emplace_back(i, c);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b2) { return a.first < b2.first; });
            red.insert(row);
        }
    auto kernel = red.kernel_basis();

    TransitivityReport rep;
    rep.kernel_dim = static_cast<int>(kernel.size());
    rep.g_minus1_dim = static_cast<int>(minus1.size());
    RowReducer span(d);
    for (int b : minus1) span.insert({{b, GaussianRational(1)}});
    bool equal = rep.kernel_dim == rep.g_minus1_dim;
    for (const auto& kv : kernel)
        if (!span.contains(kv))
            equal = false;
    rep.ok = equal;
    return rep;
}

std::string TransitivityReport::str() const {
    std::ostringstream os;
    os << "transitivity: " << (ok ? "PASS" : "FAIL") << " (kernel dim " << kernel_dim
       << ", g_-1 dim " << g_minus1_dim << ")";
    return os.str();
}

} // namespace superhom
