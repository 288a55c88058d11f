#include "superhom/matrix_families.hpp"

#include <sstream>

namespace superhom {

MatrixElement& MatrixElement::operator+=(const MatrixElement& o) {
    if (m != o.m || n != o.n)
        throw SpaceMismatchError("matrix block sizes differ");
    for (const auto& [ij, c] : o.entries) {
        auto it = entries.find(ij);
        if (it == entries.end()) {
            entries.emplace(ij, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                entries.erase(it);
        }
    }
    return *this;
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
    if (a.m != b.m || a.n != b.n)
        throw SpaceMismatchError("matrix block sizes differ");
    MatrixElement out(a.m, a.n);
    for (const auto& [ij, x] : a.entries)
        for (const auto& [kl, y] : b.entries) {
            if (ij.second != kl.first)
                continue;
            auto key = std::make_pair(ij.first, kl.second);
            auto it = out.entries.find(key);
            if (it == out.entries.end()) {
                GaussianRational v = x * y;
                if (!v.is_zero())
                    out.entries.emplace(key, std::move(v));
            } else {
                it->second += x * y;
                if (it->second.is_zero())
                    out.entries.erase(it);
            }
        }
    return out;
}

MatrixElement supercommutator(const MatrixElement& x, const MatrixElement& y) {
    auto px = x.homogeneous_parity();
    auto py = y.homogeneous_parity();
    if (!px || !py)
        throw GradingError("supercommutator needs parity-homogeneous arguments");
    MatrixElement out = x * y;
    int sign = -koszul_sign(*px, *py);
    out += GaussianRational(sign) * (y * x);
    return out;
}

GaussianRational supertrace(const MatrixElement& x) {
    GaussianRational s(0);
    for (const auto& [ij, c] : x.entries) {
        if (ij.first != ij.second)
            continue;
        if (ij.first <= x.m)
            s += c;
        else
            s -= c;
    }
    return s;
}

std::string MatrixElement::str() const {
    if (entries.empty())
        return "0";
    std::string out;
    for (const auto& [ij, c] : entries) {
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
        out += "e" + std::to_string(ij.first) + "," + std::to_string(ij.second);
    }
    return out;
}

int gl_index(int m, int n, int i, int j) {
    // A row-major, then B, then C, then D
    bool ri = i > m, cj = j > m;
    if (!ri && !cj)
        return (i - 1) * m + (j - 1);
    if (!ri && cj)
        return m * m + (i - 1) * n + (j - m - 1);
    if (ri && !cj)
        return m * m + m * n + (i - m - 1) * m + (j - 1);
    return m * m + 2 * m * n + (i - m - 1) * n + (j - m - 1);
}

SpacePtr make_gl_space(int m, int n) {
    int d = (m + n) * (m + n);
    std::vector<Parity> parity(d);
    std::vector<std::string> labels(d);
    for (int i = 1; i <= m + n; ++i)
        for (int j = 1; j <= m + n; ++j) {
            int idx = gl_index(m, n, i, j);
            parity[idx] = ((i > m) != (j > m)) ? Parity::Odd : Parity::Even;
            labels[idx] = "e" + std::to_string(i) + "," + std::to_string(j);
        }
    return make_space(std::move(parity), std::move(labels));
}

Vector matrix_to_gl_vector(const SpacePtr& gl_space, const MatrixElement& x) {
    int mn = x.size();
    SparseEntries e;
    for (const auto& [ij, c] : x.entries) e.emplace_back(gl_index(x.m, x.n, ij.first, ij.second), c);
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (gl_space->dim != mn * mn)
        throw SpaceMismatchError("gl space dimension mismatch");
    return Vector(gl_space, std::move(e));
}

MatrixElement gl_vector_to_matrix(int m, int n, const Vector& v) {
    MatrixElement x(m, n);
    for (int i = 1; i <= m + n; ++i)
        for (int j = 1; j <= m + n; ++j) {
            int idx = gl_index(m, n, i, j);
            for (const auto& [k, c] : v.entries)
                if (k == idx)
                    x.set(i, j, c);
        }
    return x;
}

FamilySpec FamilySpec::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw ParseError("family spec '" + s + "' lacks ':'");
    std::string head = s.substr(0, colon);
    std::string tail = s.substr(colon + 1);
    FamilySpec spec;
    static const std::map<std::string, Family> names = {
        {"gl", Family::GL}, {"sl", Family::SL}, {"psl", Family::PSL}, {"P", Family::P},
        {"Q", Family::Q},   {"Qt", Family::QT}, {"osp", Family::OSP}, {"W", Family::W},
        {"S", Family::S},   {"St", Family::ST}, {"H", Family::H}};
    auto it = names.find(head);
    if (it == names.end())
        throw ParseError("unknown family '" + head + "'");
    spec.family = it->second;
    try {
        auto bar = tail.find('|');
        if (bar == std::string::npos) {
            spec.a = std::stoi(tail);
        } else {
            spec.a = std::stoi(tail.substr(0, bar));
            spec.b = std::stoi(tail.substr(bar + 1));
        }
    } catch (const std::exception&) {
        throw ParseError("bad family parameters in '" + s + "'");
    }
    bool two_block = spec.family == Family::GL || spec.family == Family::SL ||
                     spec.family == Family::PSL || spec.family == Family::OSP;
    if (two_block && spec.b == 0)
        throw ParseError("family '" + head + "' needs m|n parameters");
    if (!two_block && tail.find('|') != std::string::npos)
        throw ParseError("family '" + head + "' takes a single rank");
    return spec;
}

std::string FamilySpec::cli() const {
    static const std::map<Family, std::string> names = {
        {Family::GL, "gl"}, {Family::SL, "sl"}, {Family::PSL, "psl"}, {Family::P, "P"},
        {Family::Q, "Q"},   {Family::QT, "Qt"}, {Family::OSP, "osp"}, {Family::W, "W"},
        {Family::S, "S"},   {Family::ST, "St"}, {Family::H, "H"}};
    std::string out = names.at(family) + ":" + std::to_string(a);
    bool two_block =
        family == Family::GL || family == Family::SL || family == Family::PSL || family == Family::OSP;
    if (two_block)
        out += "|" + std::to_string(b);
    return out;
}

std::string FamilySpec::display() const {
    switch (family) {
        case Family::GL: return "gl(" + std::to_string(a) + "|" + std::to_string(b) + ")";
        case Family::SL: return "sl(" + std::to_string(a) + "|" + std::to_string(b) + ")";
        case Family::PSL: return "psl(" + std::to_string(a) + "|" + std::to_string(b) + ")";
        case Family::P: return "P(" + std::to_string(a) + ")";
        case Family::Q: return "Q(" + std::to_string(a) + ")";
        case Family::QT: return "Qt(" + std::to_string(a) + ")";
        case Family::OSP: return "osp(" + std::to_string(a) + "|" + std::to_string(b) + ")";
        case Family::W: return "W(" + std::to_string(a) + ")";
        case Family::S: return "S(" + std::to_string(a) + ")";
        case Family::ST: return "St(" + std::to_string(a) + ")";
        case Family::H: return "H(" + std::to_string(a) + ")";
    }
    return "?";
}

MatrixElement ClassicalRealization::cover_matrix(int idx) const {
    Vector v(gl_space, cover_rows[idx]);
    return gl_vector_to_matrix(m, n, v);
}

std::optional<Vector> ClassicalRealization::to_cover(const MatrixElement& x) const {
    Vector v = matrix_to_gl_vector(gl_space, x);
    auto coords = express->express(v.entries);
    if (!coords)
        return std::nullopt;
    SparseEntries e;
    for (int i = 0; i < static_cast<int>(coords->size()); ++i)
        if (!(*coords)[i].is_zero())
            e.emplace_back(i, (*coords)[i]);
    return Vector(cover->space(), std::move(e));
}

Vector ClassicalRealization::lift(const Vector& v) const {
    if (!quotient)
        return v;
    return quotient->section.apply(v);
}

Vector ClassicalRealization::push(const Vector& v) const {
    if (!quotient)
        return v;
    return quotient->projection.apply(v);
}

namespace {

std::string row_label(const SpacePtr& gl_space, const SparseEntries& row) {
    return Vector(gl_space, row).str();
}

/// Assembles a SuperAlgebra from echelonized gl rows: brackets computed by
/// the matrix supercommutator and re-expressed in the row basis (which
/// doubles as a closure proof).
std::pair<AlgebraPtr, std::shared_ptr<BasisExpresser>> algebra_from_rows(
    const std::string& name, int m, int n, const SpacePtr& gl_space,
    const std::vector<SparseEntries>& rows) {
    auto express = std::make_shared<BasisExpresser>(rows, gl_space->dim);
    int d = static_cast<int>(rows.size());
    std::vector<Parity> parity(d);
    std::vector<std::string> labels(d);
    std::vector<MatrixElement> mats(d);
    for (int i = 0; i < d; ++i) {
        Vector v(gl_space, rows[i]);
        mats[i] = gl_vector_to_matrix(m, n, v);
        auto p = mats[i].homogeneous_parity();
        if (!p)
            throw GradingError("basis row is not parity-homogeneous");
        parity[i] = *p;
        labels[i] = row_label(gl_space, rows[i]);
    }
    SpacePtr space = make_space(std::move(parity), std::move(labels));

    StructureConstants sc(space);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            if (i == j && space->parity[i] == Parity::Even)
                continue;
            MatrixElement br = supercommutator(mats[i], mats[j]);
            Vector glv = matrix_to_gl_vector(gl_space, br);
            auto coords = express->express(glv.entries);
            if (!coords)
                throw Error(name + ": bracket of basis pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ") leaves the subalgebra");
            SparseEntries e;
            for (int k = 0; k < d; ++k)
                if (!(*coords)[k].is_zero())
                    e.emplace_back(k, (*coords)[k]);
            sc.set(i, j, std::move(e));
        }
    auto alg = std::make_shared<const SuperAlgebra>(name, std::move(sc), false);
    return {alg, express};
}

std::vector<SparseEntries> echelon_rows(const SpacePtr& gl_space,
                                        const std::vector<MatrixElement>& spanning) {
    RowReducer red(gl_space->dim);
    for (const auto& x : spanning) red.insert(matrix_to_gl_vector(gl_space, x).entries);
    red.make_reduced();
    return red.rows();
}

AlgebraPtr quotient_algebra(const std::string& name, const AlgebraPtr& cover, const Quotient& q) {
    StructureConstants sc(q.quotient_space);
    int d = q.quotient_space->dim;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            if (i == j && q.quotient_space->parity[i] == Parity::Even)
                continue;
            Vector bi = q.section.apply(Vector::basis(q.quotient_space, i));
            Vector bj = q.section.apply(Vector::basis(q.quotient_space, j));
            Vector br = q.projection.apply(cover->bracket(bi, bj));
            if (!br.is_zero())
                sc.set(i, j, br.entries);
        }
    return std::make_shared<const SuperAlgebra>(name, std::move(sc), false);
}

MatrixElement identity_matrix_element(int m, int n) {
    MatrixElement x(m, n);
    for (int i = 1; i <= m + n; ++i) x.set(i, i, GaussianRational(1));
    return x;
}

} // namespace

BuiltAlgebra build_classical(const FamilySpec& spec) {
    using F = FamilySpec::Family;
    BuiltAlgebra out;
    out.spec = spec;
    auto realization = std::make_shared<ClassicalRealization>();

    int m = 0, n = 0;
    std::vector<MatrixElement> spanning;
    std::string name = spec.display();

    auto add_sl_diagonal = [&spanning](int m_, int n_) {
        // kernel of the supertrace on the diagonal: e_{ii} -+ e_{11}
        for (int i = 2; i <= m_ + n_; ++i) {
            MatrixElement x(m_, n_);
            x.set(i, i, GaussianRational(1));
            x.set(1, 1, GaussianRational(i <= m_ ? -1 : 1));
            spanning.push_back(std::move(x));
        }
    };

    switch (spec.family) {
        case F::GL: {
            m = spec.a;
            n = spec.b;
            if (m < 1 || n < 1)
                throw AdmissibilityError("gl(m|n) needs m, n >= 1");
            for (int i = 1; i <= m + n; ++i)
                for (int j = 1; j <= m + n; ++j) spanning.push_back(MatrixElement::unit(m, n, i, j));
            break;
        }
        case F::SL: {
            m = spec.a;
            n = spec.b;
            if (m < 1 || n < 1)
                throw AdmissibilityError("sl(m|n) needs m, n >= 1");
            if (m == n)
                throw AdmissibilityError(
                    "sl(m|n) is simple only for m != n; use psl:" + std::to_string(m) + "|" +
                    std::to_string(n) + " for the quotient");
            for (int i = 1; i <= m + n; ++i)
                for (int j = 1; j <= m + n; ++j)
                    if (i != j)
                        spanning.push_back(MatrixElement::unit(m, n, i, j));
            add_sl_diagonal(m, n);
            break;
        }
        case F::PSL: {
            m = spec.a;
            n = spec.b;
            if (m != n || n < 2)
                throw AdmissibilityError("psl(n|n) needs equal blocks with n >= 2");
            for (int i = 1; i <= 2 * n; ++i)
                for (int j = 1; j <= 2 * n; ++j)
                    if (i != j)
                        spanning.push_back(MatrixElement::unit(n, n, i, j));
            add_sl_diagonal(n, n);
            break;
        }
        case F::P: {
            int r = spec.a; // P(r) with r = n-1
            if (r < 2)
                throw AdmissibilityError("P(n-1) needs n >= 3");
            int nn = r + 1;
            m = n = nn;
            // A in sl_n with D = -A^t
            auto add_A = [&](const MatrixElement& a) {
                MatrixElement x(nn, nn);
                for (const auto& [ij, c] : a.entries) {
                    x.set(ij.first, ij.second, c);
                    x.set(nn + ij.second, nn + ij.first, -c);
                }
                spanning.push_back(std::move(x));
            };
            for (int i = 1; i <= nn; ++i)
                for (int j = 1; j <= nn; ++j)
                    if (i != j)
                        add_A(MatrixElement::unit(nn, nn, i, j));
            for (int i = 2; i <= nn; ++i) {
                MatrixElement a(nn, nn);
                a.set(i, i, GaussianRational(1));
                a.set(1, 1, GaussianRational(-1));
                add_A(a);
            }
            // B symmetric
            for (int i = 1; i <= nn; ++i)
                for (int j = i; j <= nn; ++j) {
                    MatrixElement x(nn, nn);
                    x.set(i, nn + j, GaussianRational(1));
                    if (i != j)
                        x.set(j, nn + i, GaussianRational(1));
                    spanning.push_back(std::move(x));
                }
            // C antisymmetric
            for (int i = 1; i < nn; ++i)
                for (int j = i + 1; j <= nn; ++j) {
                    MatrixElement x(nn, nn);
                    x.set(nn + i, j, GaussianRational(1));
                    x.set(nn + j, i, GaussianRational(-1));
                    spanning.push_back(std::move(x));
                }
            break;
        }
        case F::Q:
        case F::QT: {
            int r = spec.a; // Q(r) with r = n-1
            if (r < 2)
                throw AdmissibilityError("Q(n-1) needs n >= 3");
            int nn = r + 1;
            m = n = nn;
            for (int i = 1; i <= nn; ++i)
                for (int j = 1; j <= nn; ++j) {
                    MatrixElement x(nn, nn); // A part: (E_ij, E_ij)
                    x.set(i, j, GaussianRational(1));
                    x.set(nn + i, nn + j, GaussianRational(1));
                    spanning.push_back(std::move(x));
                }
            auto add_B = [&](int i, int j, int i2, int j2, int sign2) {
                MatrixElement x(nn, nn);
                x.set(i, nn + j, GaussianRational(1));
                x.set(nn + i, j, GaussianRational(1));
                if (i2 > 0) {
                    x.set(i2, nn + j2, GaussianRational(sign2));
                    x.set(nn + i2, j2, GaussianRational(sign2));
                }
                spanning.push_back(std::move(x));
            };
            for (int i = 1; i <= nn; ++i)
                for (int j = 1; j <= nn; ++j)
                    if (i != j)
                        add_B(i, j, 0, 0, 0);
            for (int i = 1; i < nn; ++i) add_B(i, i, nn, nn, -1); // tr B = 0
            break;
        }
        case F::OSP: {
            m = spec.a;
            if (spec.b % 2 != 0)
                throw AdmissibilityError("osp(m|2n) needs an even odd-block size");
            int n2 = spec.b;
            n = n2;
            int half = n2 / 2;
            if (m < 1 || half < 1)
                throw AdmissibilityError("osp(m|2n) needs m >= 1 and n >= 1");
            // A in so_m (antisymmetric)
            for (int i = 1; i < m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    MatrixElement x(m, n2);
                    x.set(i, j, GaussianRational(1));
                    x.set(j, i, GaussianRational(-1));
                    spanning.push_back(std::move(x));
                }
            // D in sp_{2n}: D = [[P, Q], [R, -P^t]] with Q, R symmetric
            auto dset = [&](MatrixElement& x, int i, int j, GaussianRational c) {
                x.set(m + i, m + j, std::move(c));
            };
            for (int i = 1; i <= half; ++i)
                for (int j = 1; j <= half; ++j) {
                    MatrixElement x(m, n2);
                    dset(x, i, j, GaussianRational(1));
                    dset(x, half + j, half + i, GaussianRational(-1));
                    spanning.push_back(std::move(x));
                }
            for (int i = 1; i <= half; ++i)
                for (int j = i; j <= half; ++j) {
                    MatrixElement q(m, n2);
                    dset(q, i, half + j, GaussianRational(1));
                    if (i != j)
                        dset(q, j, half + i, GaussianRational(1));
                    spanning.push_back(std::move(q));
                    MatrixElement rr(m, n2);
                    dset(rr, half + i, j, GaussianRational(1));
                    if (i != j)
                        dset(rr, half + j, i, GaussianRational(1));
                    spanning.push_back(std::move(rr));
                }
            // B arbitrary with C = J_n B^t
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n2; ++j) {
                    MatrixElement x(m, n2);
                    x.set(i, m + j, GaussianRational(1));
                    // C = J B^t: (J B^t)_{kj'} with J = [[0,I],[-I,0]]
                    // B = E_{ij} (m x 2n): B^t = E_{ji} (2n x m); J E_{ji}:
                    //   row k of J picks +row(k+half) for k<=half, -row(k-half) else
                    int k = (j > half) ? (j - half) : (j + half);
                    int sign = (j > half) ? 1 : -1;
                    x.set(m + k, i, GaussianRational(sign));
                    spanning.push_back(std::move(x));
                }
            break;
        }
        default:
            throw AdmissibilityError("build_classical cannot build Cartan-type families");
    }

    realization->m = m;
    realization->n = n;
    realization->gl_space = make_gl_space(m, n);
    std::vector<SparseEntries> rows = echelon_rows(realization->gl_space, spanning);

    bool is_quotient = spec.family == F::PSL || spec.family == F::Q;
    std::string cover_name = name;
    if (spec.family == F::PSL)
        cover_name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    if (spec.family == F::Q)
        cover_name = "Qt(" + std::to_string(spec.a) + ")";

    auto [cover, express] = algebra_from_rows(cover_name, m, n, realization->gl_space, rows);
    realization->cover = cover;
    realization->cover_rows = std::move(rows);
    realization->express = express;

    if (is_quotient) {
        MatrixElement eye = identity_matrix_element(m, n);
        auto ideal_vec = realization->to_cover(eye);
        if (!ideal_vec)
            throw Error(name + ": scalar matrix missing from the cover");
        Quotient q = quotient_construct(cover->space(), {*ideal_vec});
        out.algebra = quotient_algebra(name, cover, q);
        realization->quotient = std::move(q);
    } else {
        out.algebra = cover;
    }
    out.classical = realization;

    AxiomReport rep = verify_axioms(*out.algebra);
    if (!rep.ok)
        throw Error(name + " failed axiom verification:\n" + rep.str());
    if (is_quotient)
        verify_axioms(*realization->cover);
    return out;
}

} // namespace superhom
