#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "superhom/report.hpp"

using namespace superhom;

namespace {

Vector unit_vec(const BuiltAlgebra& b, int i, int j) {
    auto v = b.classical->to_cover(MatrixElement::unit(b.classical->m, b.classical->n, i, j));
    REQUIRE(v.has_value());
    if (b.classical->quotient)
        return b.classical->push(*v);
    return *v;
}

std::vector<Poly> residual_of_map(const SuperAlgebra& g, const LinearMap& s, const Vector& x,
                                  const Vector& y, const Vector& z) {
    MatP m = MatP::Constant(g.dim(), g.dim(), Poly());
    for (int j = 0; j < g.dim(); ++j)
        for (int i = 0; i < g.dim(); ++i)
            if (!s.matrix(i, j).is_zero())
                m(i, j) = Poly::constant(s.matrix(i, j));
    return hom_jacobi_residual(g, m, x, y, z);
}

bool zero_residual_all_ordered_triples(const SuperAlgebra& g, const LinearMap& s) {
    const auto& sp = g.space();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                auto r = residual_of_map(g, s, Vector::basis(sp, i), Vector::basis(sp, j),
                                         Vector::basis(sp, k));
                for (const auto& p : r)
                    if (!p.is_zero())
                        return false;
            }
    return true;
}

bool in_span(const std::vector<LinearMap>& basis, const LinearMap& s) {
    if (basis.empty())
        return mat_is_zero(s.matrix);
    int d = static_cast<int>(s.matrix.rows());
    RowReducer red(d * d);
    auto flat = [d](const MatG& m) {
        SparseEntries e;
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i)
                if (!m(i, j).is_zero())
                    e.emplace_back(j * d + i, m(i, j));
        return e;
    };
    for (const auto& b : basis) red.insert(flat(b.matrix));
    return red.contains(flat(s.matrix));
}

} // namespace

TEST_CASE("sigma = id has zero residual on every triple of every family") {
    for (const char* spec : {"gl:1|1", "sl:2|1", "psl:2|2", "Q:2", "osp:3|2", "W:3", "H:4"}) {
        auto b = build_family(spec);
        const auto& g = *b.algebra;
        LinearMap id = LinearMap::identity(g.space());
        for (int i = 0; i < g.dim(); ++i)
            for (int j = i; j < g.dim(); ++j)
                for (int k = j; k < g.dim(); ++k)
                    CHECK(hom_jacobi_residual_basis(g, id, i, j, k).is_zero());
    }
}

TEST_CASE("sec 3.2 residual: j(lambda) on sl(2|1) at (e13, e12, e21)") {
    auto sl21 = build_classical(FamilySpec::parse("sl:2|1"));
    EndoFamily j = generator_j(sl21);
    auto res = hom_jacobi_residual(j, unit_vec(sl21, 1, 3), unit_vec(sl21, 1, 2),
                                   unit_vec(sl21, 2, 1));
    // residual = (lambda - 1) * v with v = [x,[y,z]] != 0
    Vector v = sl21.algebra->bracket(
        unit_vec(sl21, 1, 3),
        sl21.algebra->bracket(unit_vec(sl21, 1, 2), unit_vec(sl21, 2, 1)));
    REQUIRE(!v.is_zero());
    Poly lam_minus_1 = Poly::variable("lambda") - Poly(1);
    for (int m = 0; m < sl21.algebra->dim(); ++m) {
        GaussianRational vm(0);
        for (const auto& [i, c] : v.entries)
            if (i == m)
                vm = c;
        CHECK(res[m] == lam_minus_1 * Poly::constant(vm));
    }
    auto named = named_triple_constraints(*sl21.algebra, j, unit_vec(sl21, 1, 3),
                                          unit_vec(sl21, 1, 2), unit_vec(sl21, 2, 1));
    CHECK(named == std::vector<std::string>{"lambda-1"});
}

TEST_CASE("residual is linear in sigma and proportional under permutations") {
    auto b = build_classical(FamilySpec::parse("sl:2|1"));
    const auto& g = *b.algebra;
    std::mt19937_64 rng(61);
    for (int t = 0; t < 15; ++t) {
        LinearMap s1 = oracles::random_even_map(g.space(), rng);
        LinearMap s2 = oracles::random_even_map(g.space(), rng);
        LinearMap sum(g.space(), g.space(), MatG(s1.matrix + s2.matrix));
        int i = int(rng() % g.dim()), j = int(rng() % g.dim()), k = int(rng() % g.dim());
        Vector x = Vector::basis(g.space(), i), y = Vector::basis(g.space(), j),
               z = Vector::basis(g.space(), k);
        auto r1 = residual_of_map(g, s1, x, y, z);
        auto r2 = residual_of_map(g, s2, x, y, z);
        auto rs = residual_of_map(g, sum, x, y, z);
        for (int m = 0; m < g.dim(); ++m) CHECK(rs[m] == r1[m] + r2[m]);

        // permutation proportionality: R(y,x,z) = -(-1)^{...} R(x,y,z)
        auto rp = residual_of_map(g, s1, y, x, z);
        const auto& par = g.space()->parity;
        int sign = -(koszul_sign(par[i], par[j]) * koszul_sign(par[j], par[k]) *
                     koszul_sign(par[k], par[i]));
        for (int m = 0; m < g.dim(); ++m)
            CHECK(rp[m] == r1[m] * GaussianRational(sign));
        // cyclic invariance: R(y,z,x) = R(x,y,z)
        auto rc = residual_of_map(g, s1, y, z, x);
        for (int m = 0; m < g.dim(); ++m) CHECK(rc[m] == r1[m]);
    }
}

TEST_CASE("hom space of the abelian algebra is every even map") {
    SpacePtr sp = make_space({Parity::Even, Parity::Even, Parity::Odd},
                             {"a", "b", "c"});
    SuperAlgebra abelian("abelian3", StructureConstants(sp), false);
    verify_axioms(abelian);
    HomSpaceResult hs = hom_jacobi_space(abelian);
    CHECK(hs.unknowns == 5); // 2x2 even block + 1x1 odd block
    CHECK(hs.dim() == 5);
}

TEST_CASE("hom space dimensions against the independent full-enumeration oracle") {
    // the oracle enumerates ALL d^3 ordered triples and eliminates with a
    // separate map-based reducer; no symmetry reduction, no early exit
    struct Case {
        const char* spec;
        int expect;
    };
    // expected values confirmed by the oracle before freezing; gl(1|1) has
    // a 4-dimensional space (center-valued maps interact with I_2 = [e12,e21])
    const Case cases[] = {{"gl:1|1", 4},  {"gl:2|1", 6}, {"sl:2|1", 1}, {"sl:3|1", 1},
                          {"psl:2|2", 1}, {"P:2", 1},    {"Q:2", 1},    {"Qt:2", 10},
                          {"osp:3|2", 1}, {"W:3", 1},    {"S:3", 1},    {"St:4", 1},
                          {"H:4", 1}};
    for (const auto& c : cases) {
        auto b = build_family(c.spec);
        int brute = oracles::brute_hom_space_dim(*b.algebra);
        HomSpaceResult hs = hom_jacobi_space(*b.algebra);
        CHECK_MESSAGE(hs.dim() == brute, c.spec, ": production vs oracle");
        CHECK_MESSAGE(brute == c.expect, c.spec, ": frozen golden value");
    }
}

TEST_CASE("hom space basis maps are genuine solutions (full enumeration)") {
    for (const char* spec : {"sl:2|1", "psl:2|2", "Q:2", "gl:2|1"}) {
        auto b = build_family(spec);
        HomSpaceResult hs = hom_jacobi_space(*b.algebra);
        for (const auto& s : hs.basis) {
            CHECK(s.is_even());
            CHECK(zero_residual_all_ordered_triples(*b.algebra, s));
        }
        // id is in the span
        CHECK(in_span(hs.basis, LinearMap::identity(b.algebra->space())));
    }
}

TEST_CASE("random even maps outside the hom space violate some triple") {
    std::mt19937_64 rng(67);
    for (const char* spec : {"sl:2|1", "psl:2|2", "W:3"}) {
        auto b = build_family(spec);
        const auto& g = *b.algebra;
        HomSpaceResult hs = hom_jacobi_space(g);
        for (int t = 0; t < 10; ++t) {
            LinearMap s = oracles::random_even_map(g.space(), rng);
            bool zero = true;
            for (int i = 0; i < g.dim() && zero; ++i)
                for (int j = i; j < g.dim() && zero; ++j)
                    for (int k = j; k < g.dim() && zero; ++k) {
                        auto r = residual_of_map(g, s, Vector::basis(g.space(), i),
                                                 Vector::basis(g.space(), j),
                                                 Vector::basis(g.space(), k));
                        for (const auto& p : r) zero = zero && p.is_zero();
                    }
            CHECK(zero == in_span(hs.basis, s));
        }
    }
}

TEST_CASE("scalar multiples of id: multiplicative iff c in {0, 1}") {
    auto b = build_classical(FamilySpec::parse("sl:2|1"));
    for (long c : {0L, 1L, 2L}) {
        MatG m = identity_matrix(b.algebra->dim());
        for (int i = 0; i < b.algebra->dim(); ++i) m(i, i) = GaussianRational(c);
        EndoFamily f = EndoFamily::from_linear_map(
            b.algebra, LinearMap(b.algebra->space(), b.algebra->space(), m), "c*id");
        CHECK(is_homomorphism(f).ok == (c == 0 || c == 1));
    }
}

TEST_CASE("quotient soundness: residuals independent of the section") {
    auto b = build_classical(FamilySpec::parse("psl:2|2"));
    const auto& q = *b.classical->quotient;
    const auto& cover = *b.classical->cover;
    const auto& g = *b.algebra;
    std::mt19937_64 rng(71);
    EndoFamily j_psl = generator_j(b);
    for (int t = 0; t < 10; ++t) {
        int i = int(rng() % g.dim()), jdx = int(rng() % g.dim()), k = int(rng() % g.dim());
        // perturb representatives by central elements; the projected cover
        // bracket (= quotient bracket) must not notice
        Vector xi = q.section.apply(Vector::basis(g.space(), i));
        Vector xp = xi;
        xp.axpy(oracles::random_scalar(rng), q.ideal_basis.front());
        Vector lhs = q.projection.apply(cover.bracket(xi, q.section.apply(Vector::basis(g.space(), jdx))));
        Vector rhs = q.projection.apply(cover.bracket(xp, q.section.apply(Vector::basis(g.space(), jdx))));
        CHECK(lhs == rhs);
        (void)k;
    }
    // and the family residual on psl matches what the named triples gave
    CHECK(!j_psl.parameters.empty());
}

TEST_CASE("solver solutions evaluate to homomorphisms with zero residual") {
    // consistency invariant: every assignment returned by solve_constraints
    // passes is_homomorphism and kills the residual on all triples
    struct Case {
        const char* spec;
        const char* gen;
    };
    const Case cases[] = {{"sl:2|1", "j"}, {"psl:2|2", "rho"}, {"W:3", "diag"}};
    for (const auto& c : cases) {
        auto b = build_family(c.spec);
        EndoFamily fam = std::string(c.gen) == "j"     ? generator_j(b)
                          : std::string(c.gen) == "rho" ? generator_rho(b)
                                                        : generator_gminus1_ansatz(b);
        ConstraintSet cs = family_constraints(*b.algebra, fam);
        SolveResult sr = solve_constraints(cs);
        REQUIRE(sr.status == SolveResult::Status::Finite);
        for (const auto& sol : sr.solutions) {
            Assignment a;
            for (const auto& [k, v] : sol.assignment) a[k] = v.constant_value();
            CHECK(is_homomorphism(fam, a).ok);
            LinearMap s = fam.at(a);
            CHECK(zero_residual_all_ordered_triples(*b.algebra, s));
        }
    }
}

TEST_CASE("early exit changes nothing observable") {
    // gl(1|1) has hom dimension > 1, so the full enumeration runs; sl(2|1)
    // exits early; both must match the oracle (checked above) and be stable
    // under the thread count
    auto b = build_classical(FamilySpec::parse("sl:2|1"));
    HomSpaceOptions seq, par;
    seq.threads = 1;
    par.threads = 3;
    HomSpaceResult a = hom_jacobi_space(*b.algebra, seq);
    HomSpaceResult c = hom_jacobi_space(*b.algebra, par);
    REQUIRE(a.dim() == c.dim());
    for (size_t t = 0; t < a.basis.size(); ++t)
        CHECK(mat_equal(a.basis[t].matrix, c.basis[t].matrix));
}

TEST_CASE("W(3) ansatz: the sec 4.1 named triple and the full solve") {
    auto w3 = build_cartan(FamilySpec::parse("W:3"));
    EndoFamily ansatz = generator_gminus1_ansatz(w3);
    CHECK(ansatz.parameters.size() == 9);

    ConstraintSet cs = family_constraints(*w3.algebra, ansatz);
    SolveResult sr = solve_constraints(cs);
    REQUIRE(sr.status == SolveResult::Status::Finite);
    REQUIRE(sr.solutions.size() == 1);
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i) {
            Poly v = sr.solutions[0].assignment.at("a" + std::to_string(k) + std::to_string(i));
            CHECK(v == (k == i ? Poly(1) : Poly()));
        }
}

TEST_CASE("report verdicts and the fallback path") {
    // simple algebras: scalar-only hom space, verdict TRIVIAL
    for (const char* spec : {"sl:2|1", "psl:2|2", "Q:2", "S:3"}) {
        auto rep = reproduce_main_theorem(build_family(spec), {});
        CHECK(rep.verdict == Verdict::Trivial);
        CHECK(rep.hom_space_dim == 1);
        CHECK(rep.hom_space_scalar_only);
        CHECK(rep.exit_code() == 0);
    }
    // gl(2|1): dim 6 hom space, fallback finds the center-scaling witness
    {
        auto rep = reproduce_main_theorem(build_family("gl:2|1"), {});
        CHECK(rep.hom_space_dim == 6);
        CHECK(!rep.hom_space_scalar_only);
        CHECK(rep.verdict == Verdict::Nontrivial);
        CHECK(rep.exit_code() == 1);
        bool logged = false;
        for (const auto& f : rep.findings)
            logged = logged || f.find("exceeds the scalar line") != std::string::npos;
        CHECK(logged);
    }
    // resource guard
    {
        ReportOptions opts;
        opts.max_dim = 10;
        auto rep = reproduce_main_theorem(build_family("St:4"), opts);
        CHECK(rep.verdict == Verdict::Undecided);
        CHECK(rep.exit_code() == 3);
    }
    // a non-Lie table: loaded, flagged, UNDECIDED
    {
        SpacePtr sp = make_space({Parity::Even, Parity::Even}, {"a", "b"});
        StructureConstants sc(sp);
        sc.set(0, 1, {{0, GaussianRational(1)}});
        // [a,b] = a is a Lie algebra actually (affine); corrupt homogeneity
        // instead: make an odd-odd bracket land on an odd vector
        SpacePtr sp2 = make_space({Parity::Odd, Parity::Odd}, {"x", "y"});
        StructureConstants sc2(sp2);
        sc2.set(0, 0, {{1, GaussianRational(1)}}); // [x,x] = y: wrong parity
        SuperAlgebra bad("bad", std::move(sc2), false);
        auto rep = reproduce_for_algebra(std::make_shared<const SuperAlgebra>(std::move(bad)), {});
        CHECK(rep.verdict == Verdict::Undecided);
    }
}

TEST_CASE("report JSON is byte-stable and carries the schema keys") {
    auto rep1 = reproduce_main_theorem(build_family("sl:2|1"), {});
    auto rep2 = reproduce_main_theorem(build_family("sl:2|1"), {});
    CHECK(report_to_json(rep1) == report_to_json(rep2));
    std::string j = report_to_json(rep1);
    for (const char* key : {"\"algebra\"", "\"dim\"", "\"hom_space_dim\"", "\"families\"",
                            "\"verdict\"", "\"tool_version\"", "\"seed\"", "\"constraints\"",
                            "\"solutions\"", "\"name\""})
        CHECK_MESSAGE(j.find(key) != std::string::npos, key);
}
