#include "superhom/constraint_set.hpp"

#include <algorithm>
#include <sstream>

namespace superhom {

namespace {

// ---- Z[i] arithmetic on component pairs --------------------------------

struct GInt {
    BigInt re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    BigInt norm() const { return re * re + im * im; }
};

GInt gmul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GInt gconj(const GInt& a) { return {a.re, -a.im}; }
GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0)))
        --q;
    return q;
}

BigInt round_div(BigInt a, BigInt b) {
    if (b < 0) {
        a = -a;
        b = -b;
    }
    return floor_div(2 * a + b, 2 * b);
}

/// Euclidean division in Z[i]: q nearest to a/b, |a - qb| < |b|.
GInt gdiv_round(const GInt& a, const GInt& b) {
    GInt num = gmul(a, gconj(b));
    BigInt n = b.norm();
    return {round_div(num.re, n), round_div(num.im, n)};
}

GInt ggcd(GInt a, GInt b) {
    while (!b.is_zero()) {
        GInt q = gdiv_round(a, b);
        GInt r = gsub(a, gmul(q, b));
        a = b;
        b = r;
    }
    return a;
}

/// Exact division a / b when b | a; nullopt otherwise.
std::optional<GInt> gdiv_exact(const GInt& a, const GInt& b) {
    BigInt n = b.norm();
    if (n == 0)
        return std::nullopt;
    GInt num = gmul(a, gconj(b));
    if (num.re % n != 0 || num.im % n != 0)
        return std::nullopt;
    return GInt{num.re / n, num.im / n};
}

GaussianRational to_gaussian(const GInt& a) {
    return GaussianRational(Rational(a.re), Rational(a.im));
}

/// All divisors of z up to order (both associates included), norm-bounded.
std::optional<std::vector<GInt>> gaussian_divisors(const GInt& z, const BigInt& norm_guard) {
    BigInt n = z.norm();
    if (n == 0 || n > norm_guard)
        return std::nullopt;
    std::vector<GInt> out;
    long bound = 1;
    while (BigInt(bound) * bound < n) ++bound;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            GInt d{BigInt(a), BigInt(b)};
            if (d.is_zero())
                continue;
            if (n % d.norm() != 0)
                continue;
            if (gdiv_exact(z, d))
                out.push_back(d);
        }
    return out;
}

// ---- univariate helpers over Q(i) ---------------------------------------

using Coeffs = std::vector<GaussianRational>; // c[0] + c[1] x + ...

Coeffs poly_to_coeffs(const Poly& p) {
    Coeffs c(p.is_zero() ? 1 : p.total_degree() + 1, GaussianRational(0));
    for (const auto& [e, v] : p.terms()) c[e.empty() ? 0 : e[0]] = v;
    return c;
}

void trim(Coeffs& c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

bool is_zero(const Coeffs& c) { return c.size() == 1 && c[0].is_zero(); }

Coeffs derivative(const Coeffs& c) {
    if (c.size() <= 1)
        return {GaussianRational(0)};
    Coeffs d(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d[k - 1] = GaussianRational(long(k)) * c[k];
    trim(d);
    return d;
}

void make_monic(Coeffs& c) {
    trim(c);
    if (is_zero(c))
        return;
    GaussianRational inv = c.back().inverse();
    for (auto& v : c) v *= inv;
}

/// Remainder of a mod b (b nonzero), over the field Q(i).
Coeffs poly_mod(Coeffs a, const Coeffs& b) {
    trim(a);
    while (!is_zero(a) && degree(a) >= degree(b)) {
        GaussianRational f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (int k = 0; k <= degree(b); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Coeffs r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

Coeffs poly_div_exact(const Coeffs& a, const Coeffs& b) {
    Coeffs rem = a;
    trim(rem);
    Coeffs q(std::max<size_t>(1, a.size() - b.size() + 1), GaussianRational(0));
    while (!is_zero(rem) && degree(rem) >= degree(b)) {
        GaussianRational f = rem.back() / b.back();
        int shift = degree(rem) - degree(b);
        q[shift] = f;
        for (int k = 0; k <= degree(b); ++k) rem[k + shift] -= f * b[k];
        rem.pop_back();
        trim(rem);
    }
    if (!is_zero(rem))
        throw Error("polynomial division was not exact");
    trim(q);
    return q;
}

GaussianRational eval(const Coeffs& c, const GaussianRational& x) {
    GaussianRational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

Poly normalize_constraint(const Poly& p) {
    if (p.is_zero())
        return p;
    // clear denominators
    BigInt L = 1;
    for (const auto& [e, c] : p.terms()) {
        L = boost::multiprecision::lcm(L, c.re().den());
        L = boost::multiprecision::lcm(L, c.im().den());
    }
    Poly q = p * GaussianRational(Rational(L));
    // Z[i] content
    GInt g{0, 0};
    for (const auto& [e, c] : q.terms()) g = ggcd(g, GInt{c.re().num(), c.im().num()});
    if (!g.is_zero() && !(g.re == 1 && g.im == 0))
        q = q * to_gaussian(g).inverse();
    // unit normalization: u in {1,-1,i,-i} so that re(u*lead) > 0, or
    // re = 0 and im > 0, for the graded-lex-leading coefficient
    const GaussianRational lead = q.leading_coefficient();
    const GaussianRational units[4] = {GaussianRational(1), GaussianRational(-1),
                                       GaussianRational::zeta(),
                                       GaussianRational(0) - GaussianRational::zeta()};
    for (const auto& u : units) {
        GaussianRational v = u * lead;
        if (v.re().sign() > 0 || (v.re().sign() == 0 && v.im().sign() > 0))
            return q * u;
    }
    return q; // unreachable for nonzero lead
}

void ConstraintSet::add_equation(const Poly& p) {
    Poly q = normalize_constraint(p);
    if (q.is_zero())
        return;
    for (const auto& e : equations)
        if (e == q)
            return;
    equations.push_back(std::move(q));
}

void ConstraintSet::add_side_relation(const Poly& p) {
    Poly q = normalize_constraint(p);
    if (q.is_zero())
        return;
    for (const auto& e : side_relations)
        if (e == q)
            return;
    side_relations.push_back(std::move(q));
}

std::vector<std::string> ConstraintSet::equation_strings() const {
    std::vector<std::string> out;
    out.reserve(equations.size());
    for (const auto& e : equations) out.push_back(e.str());
    return out;
}

std::optional<std::vector<GaussianRational>> univariate_roots(const Poly& p) {
    if (!p.is_univariate())
        throw Error("univariate_roots needs a univariate polynomial");
    Coeffs c = poly_to_coeffs(p);
    trim(c);
    if (degree(c) == 0)
        return std::vector<GaussianRational>{};
    // square-free part is enough for the root SET
    Coeffs sf = c;
    Coeffs d = derivative(c);
    if (!is_zero(d)) {
        Coeffs g = poly_gcd(c, d);
        if (degree(g) > 0)
            sf = poly_div_exact(c, g);
    }

    std::vector<GaussianRational> roots;
    // root 0
    while (degree(sf) > 0 && sf[0].is_zero()) {
        roots.push_back(GaussianRational(0));
        sf.erase(sf.begin());
        trim(sf);
    }
    // dedupe (squarefree should prevent repeats, but stay safe)
    auto push_root = [&roots](const GaussianRational& r) {
        for (const auto& x : roots)
            if (x == r)
                return;
        roots.push_back(r);
    };

    while (degree(sf) > 0) {
        // scale to Z[i]
        BigInt L = 1;
        for (const auto& v : sf) {
            L = boost::multiprecision::lcm(L, v.re().den());
            L = boost::multiprecision::lcm(L, v.im().den());
        }
        std::vector<GInt> ic;
        ic.reserve(sf.size());
        for (const auto& v : sf) {
            Rational re = v.re() * Rational(L), im = v.im() * Rational(L);
            ic.push_back({re.num(), im.num()});
        }
        const BigInt norm_guard = 400000;
        auto d0 = gaussian_divisors(ic.front(), norm_guard);
        auto dl = gaussian_divisors(ic.back(), norm_guard);
        if (!d0 || !dl)
            return std::nullopt; // beyond the desk-scale search bound
        bool found = false;
        for (const auto& num : *d0) {
            for (const auto& den : *dl) {
                GaussianRational r = to_gaussian(num) / to_gaussian(den);
                if (eval(sf, r).is_zero()) {
                    push_root(r);
                    // divide out (x - r)
                    Coeffs lin = {GaussianRational(0) - r, GaussianRational(1)};
                    sf = poly_div_exact(sf, lin);
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        if (!found)
            return std::nullopt; // irreducible (over our search) factor remains
    }
    return roots;
}

namespace {

/// Exact square root in Q(i) for the discriminant test: nonnegative
/// rationals with perfect-square numerator and denominator only (all the
/// systems here need); nullopt otherwise.
std::optional<GaussianRational> sqrt_constant(const GaussianRational& c) {
    if (!c.is_real() || c.re().sign() < 0)
        return std::nullopt;
    BigInt n = c.re().num(), d = c.re().den();
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d)
        return std::nullopt;
    return GaussianRational(Rational(sn, sd));
}

/// Polynomial square root by guess-and-verify: constants, or an affine
/// candidate for quadratics. The exact S*S == D check makes this safe.
std::optional<Poly> sqrt_poly(const Poly& D) {
    if (D.is_zero())
        return Poly();
    if (D.is_constant()) {
        auto s = sqrt_constant(D.constant_value());
        if (!s)
            return std::nullopt;
        return Poly::constant(*s);
    }
    if (D.total_degree() != 2)
        return std::nullopt;
    // candidate S = s0 + sum_i s_i v_i anchored on the first variable with
    // a square term
    const auto& vars = D.vars();
    auto coeff_of = [&](const Poly::Exponents& e) {
        auto it = D.terms().find(e);
        return it == D.terms().end() ? GaussianRational(0) : it->second;
    };
    size_t anchor = vars.size();
    GaussianRational s_anchor(0);
    for (size_t i = 0; i < vars.size(); ++i) {
        Poly::Exponents e(vars.size(), 0);
        e[i] = 2;
        auto s = sqrt_constant(coeff_of(e));
        if (s && !s->is_zero()) {
            anchor = i;
            s_anchor = *s;
            break;
        }
    }
    if (anchor == vars.size())
        return std::nullopt;
    GaussianRational half_inv = GaussianRational(Rational(BigInt(1), BigInt(2))) *
                                s_anchor.inverse();
    Poly S = Poly::constant(s_anchor) * Poly::variable(vars[anchor]);
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i == anchor)
            continue;
        Poly::Exponents e(vars.size(), 0);
        e[anchor] = 1;
        e[i] = 1;
        GaussianRational c = coeff_of(e) * half_inv;
        if (!c.is_zero())
            S += Poly::constant(c) * Poly::variable(vars[i]);
    }
    {
        Poly::Exponents e(vars.size(), 0);
        e[anchor] = 1;
        GaussianRational c = coeff_of(e) * half_inv;
        if (!c.is_zero())
            S += Poly::constant(c);
    }
    if (S * S == D)
        return S;
    return std::nullopt;
}

struct Branch {
    std::vector<Poly> eqs;
    std::map<std::string, Poly> assignment;
};

void substitute_everywhere(Branch& b, const std::string& var, const Poly& value) {
    for (auto& e : b.eqs) e = normalize_constraint(e.substitute(var, value));
    for (auto& [k, v] : b.assignment) v = v.substitute(var, value);
    b.assignment[var] = value;
}

bool cleanup(Branch& b) {
    // drop zeros, dedupe, detect contradictions
    std::vector<Poly> keep;
    for (auto& e : b.eqs) {
        if (e.is_zero())
            continue;
        if (e.is_constant())
            return false; // nonzero constant: dead branch
        bool dup = false;
        for (const auto& k : keep) dup = dup || k == e;
        if (!dup)
            keep.push_back(e);
    }
    b.eqs = std::move(keep);
    return true;
}

/// Deterministic pick order: lowest total degree first, then serialized form.
void sort_eqs(std::vector<Poly>& eqs) {
    std::stable_sort(eqs.begin(), eqs.end(), [](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.str() < b.str();
    });
}

} // namespace

SolveResult solve_constraints(const ConstraintSet& cs) {
    SolveResult result;
    Branch root;
    root.eqs = cs.equations;
    for (const auto& r : cs.side_relations) root.eqs.push_back(r);

    std::vector<Branch> work{std::move(root)};
    std::vector<Branch> done;
    bool undecided = false;
    int guard = 0;

    while (!work.empty()) {
        if (++guard > 4096) {
            undecided = true;
            for (auto& b : work)
                for (auto& e : b.eqs) result.residual_generators.push_back(e);
            break;
        }
        Branch b = std::move(work.back());
        work.pop_back();
        bool alive = true;
        for (;;) {
            if (!cleanup(b)) {
                alive = false;
                break;
            }
            if (b.eqs.empty())
                break;
            sort_eqs(b.eqs);

            // (i) linear elimination
            const Poly* linear = nullptr;
            for (const auto& e : b.eqs)
                if (e.total_degree() == 1) {
                    linear = &e;
                    break;
                }
            if (linear) {
                const Poly eq = *linear;
                const std::string var = eq.vars().front(); // lexicographically least
                // eq = c*var + rest; var = -rest / c
                Poly rest;
                GaussianRational c(0);
                size_t vidx = 0; // var is front of sorted vars
                for (const auto& [e, coeff] : eq.terms()) {
                    if (!e.empty() && e[vidx] == 1) {
                        c = coeff;
                    } else {
                        Poly term = Poly::constant(coeff);
                        for (size_t i = 0; i < e.size(); ++i)
                            if (e[i] > 0)
                                term *= Poly::variable(eq.vars()[i], e[i]);
                        rest += term;
                    }
                }
                Poly value = rest * (GaussianRational(0) - c.inverse());
                substitute_everywhere(b, var, value);
                continue;
            }

            // (ii) univariate factorization
            const Poly* uni = nullptr;
            for (const auto& e : b.eqs)
                if (e.is_univariate()) {
                    uni = &e;
                    break;
                }
            if (uni) {
                const Poly eq = *uni;
                auto roots = univariate_roots(eq);
                if (!roots) {
                    undecided = true;
                    for (const auto& e : b.eqs) result.residual_generators.push_back(e);
                    alive = false;
                    break;
                }
                const std::string var = eq.vars().front();
                // the full solution set must come from these roots; if the
                // polynomial has no roots at all the branch is dead
                for (const auto& r : *roots) {
                    Branch child = b;
                    substitute_everywhere(child, var, Poly::constant(r));
                    work.push_back(std::move(child));
                }
                alive = false; // replaced by children (none, if no roots)
                break;
            }

            // (iii) quadratic in one variable with constant leading
            // coefficient and perfect-square discriminant: split exactly
            {
                bool split = false;
                for (const auto& e : b.eqs) {
                    if (e.total_degree() != 2 || split)
                        continue;
                    for (const auto& var : e.vars()) {
                        // decompose e = A*var^2 + B*var + C
                        Poly A, B, C;
                        size_t vidx =
                            std::find(e.vars().begin(), e.vars().end(), var) - e.vars().begin();
                        for (const auto& [exp, coeff] : e.terms()) {
                            Poly term = Poly::constant(coeff);
                            for (size_t t = 0; t < exp.size(); ++t)
                                if (t != vidx && exp[t] > 0)
                                    term *= Poly::variable(e.vars()[t], exp[t]);
                            unsigned xe = exp[vidx];
                            if (xe == 0)
                                C += term;
                            else if (xe == 1)
                                B += term;
                            else
                                A += term;
                        }
                        if (!A.is_constant() || A.is_zero())
                            continue;
                        Poly D = B * B - Poly(4) * A * C;
                        auto S = sqrt_poly(D);
                        if (!S)
                            continue;
                        GaussianRational inv2a =
                            (GaussianRational(2) * A.constant_value()).inverse();
                        Poly rplus = (*S - B) * inv2a;
                        Poly rminus = (Poly() - *S - B) * inv2a;
                        Branch child1 = b, child2 = b;
                        substitute_everywhere(child1, var, rplus);
                        work.push_back(std::move(child1));
                        if (!(rplus == rminus)) {
                            substitute_everywhere(child2, var, rminus);
                            work.push_back(std::move(child2));
                        }
                        split = true;
                        break;
                    }
                }
                if (split) {
                    alive = false;
                    break;
                }
            }

            // (iv) nothing applies
            undecided = true;
            for (const auto& e : b.eqs) result.residual_generators.push_back(e);
            alive = false;
            break;
        }
        if (alive && b.eqs.empty()) {
            done.push_back(std::move(b));
        }
    }

    // assemble solutions
    std::set<std::string> seen;
    for (auto& b : done) {
        SolutionBranch sol;
        std::set<std::string> frees;
        for (const auto& p : cs.parameters)
            if (!b.assignment.count(p))
                frees.insert(p);
        sol.free_vars.assign(frees.begin(), frees.end());
        for (const auto& p : cs.parameters) {
            auto it = b.assignment.find(p);
            if (it != b.assignment.end())
                sol.assignment[p] = it->second;
        }
        std::string key = sol.str();
        if (seen.insert(key).second)
            result.solutions.push_back(std::move(sol));
    }

    if (undecided && result.solutions.empty()) {
        result.status = SolveResult::Status::Undecided;
        return result;
    }
    if (undecided)
        result.status = SolveResult::Status::Undecided; // partial knowledge still undecided
    else if (result.solutions.empty())
        result.status = SolveResult::Status::NoSolution;
    else {
        bool parametrized = false;
        for (const auto& s : result.solutions) parametrized = parametrized || !s.free_vars.empty();
        result.status =
            parametrized ? SolveResult::Status::Parametrized : SolveResult::Status::Finite;
    }
    return result;
}

bool SolutionBranch::is_identity_like(
    const std::map<std::string, GaussianRational>& identity_values) const {
    if (!free_vars.empty())
        return false;
    for (const auto& [k, v] : identity_values) {
        auto it = assignment.find(k);
        if (it == assignment.end())
            return false;
        if (!it->second.is_constant() || it->second.constant_value() != v)
            return false;
    }
    return true;
}

std::string SolutionBranch::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : assignment) {
        if (!first)
            os << ", ";
        first = false;
        os << k << " = " << v.str();
    }
    for (const auto& f : free_vars) {
        if (!first)
            os << ", ";
        first = false;
        os << f << " free";
    }
    os << "}";
    return os.str();
}

std::string SolveResult::str() const {
    std::ostringstream os;
    switch (status) {
        case Status::NoSolution: os << "no solutions"; break;
        case Status::Finite: os << "finite solution list"; break;
        case Status::Parametrized: os << "parametrized solutions"; break;
        case Status::Undecided: os << "UNDECIDED"; break;
    }
    for (const auto& s : solutions) os << "\n  " << s.str();
    for (const auto& g : residual_generators) os << "\n  residual: " << g.str();
    return os.str();
}

} // namespace superhom
