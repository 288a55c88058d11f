#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superhom/constraint_set.hpp"

using namespace superhom;

namespace {
Poly var(const char* n) { return Poly::variable(n); }
} // namespace

TEST_CASE("constraint normalization") {
    // content removal: 2x - 2 -> x - 1
    Poly p = Poly(2) * var("x") - Poly(2);
    CHECK(normalize_constraint(p).str() == "x-1");
    // denominators cleared: x/2 - 1/3 -> 3x - 2
    Poly q = Poly::constant(GaussianRational(Rational(BigInt(1), BigInt(2)))) * var("x") -
             Poly::constant(GaussianRational(Rational(BigInt(1), BigInt(3))));
    CHECK(normalize_constraint(q).str() == "3*x-2");
    // unit normalization: -x + 1 -> x - 1
    CHECK(normalize_constraint(Poly(1) - var("x")).str() == "x-1");
    // pure imaginary lead rotates onto the real axis: i*x -> x
    Poly z = Poly::constant(GaussianRational::zeta()) * var("x");
    CHECK(normalize_constraint(z).str() == "x");
    // Gaussian content: (1+i)x - (1+i) -> x - 1
    Poly g = Poly::constant(GaussianRational(Rational(1), Rational(1))) * (var("x") - Poly(1));
    CHECK(normalize_constraint(g).str() == "x-1");
    CHECK(normalize_constraint(Poly()).is_zero());

    ConstraintSet cs;
    cs.add_equation(p);
    cs.add_equation(q * Poly(0)); // zero dropped
    cs.add_equation(Poly(3) * var("x") - Poly(3)); // duplicate after normalization
    CHECK(cs.equations.size() == 1);
}

TEST_CASE("univariate roots over Q(i)") {
    Poly x = var("x");
    auto r1 = univariate_roots(x - Poly(1));
    REQUIRE(r1.has_value());
    CHECK(*r1 == std::vector<GaussianRational>{GaussianRational(1)});

    // x^2 - x: roots 0, 1
    auto r2 = univariate_roots(x * x - x);
    REQUIRE(r2.has_value());
    CHECK(r2->size() == 2);

    // x^4 - 1: all four Gaussian units
    Poly x4 = x * x * x * x - Poly(1);
    auto r4 = univariate_roots(x4);
    REQUIRE(r4.has_value());
    CHECK(r4->size() == 4);
    bool has_i = false;
    for (const auto& r : *r4) has_i = has_i || r == GaussianRational::zeta();
    CHECK(has_i);

    // x^2 + 1 splits over Q(i)
    auto ri = univariate_roots(x * x + Poly(1));
    REQUIRE(ri.has_value());
    CHECK(ri->size() == 2);

    // x^2 - 2 does not split over Q(i)
    CHECK(!univariate_roots(x * x - Poly(2)).has_value());

    // squarefree handling: (x-1)^2
    auto rs = univariate_roots((x - Poly(1)) * (x - Poly(1)));
    REQUIRE(rs.has_value());
    CHECK(*rs == std::vector<GaussianRational>{GaussianRational(1)});

    // rational root with denominator: 2x - 1
    auto rh = univariate_roots(Poly(2) * x - Poly(1));
    REQUIRE(rh.has_value());
    CHECK((*rh)[0] == GaussianRational(Rational(BigInt(1), BigInt(2))));
}

TEST_CASE("solve_constraints spec examples") {
    // {lambda - 1} -> {lambda = 1}
    {
        ConstraintSet cs;
        cs.parameters = {"lambda"};
        cs.add_equation(var("lambda") - Poly(1));
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Finite);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0].assignment.at("lambda") == Poly(1));
    }
    // {lambda*mu - 1, lambda^2 - lambda} with side relation lambda*mu - 1:
    // lambda = 0 excluded by invertibility, so {lambda = 1, mu = 1}
    {
        ConstraintSet cs;
        cs.parameters = {"lambda", "mu"};
        cs.add_equation(var("lambda") * var("lambda") - var("lambda"));
        cs.add_side_relation(var("lambda") * var("mu") - Poly(1));
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Finite);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0].assignment.at("lambda") == Poly(1));
        CHECK(r.solutions[0].assignment.at("mu") == Poly(1));
    }
    // inconsistent: {x - 1, x - 2}
    {
        ConstraintSet cs;
        cs.parameters = {"x"};
        cs.add_equation(var("x") - Poly(1));
        cs.add_equation(var("x") - Poly(2));
        CHECK(solve_constraints(cs).status == SolveResult::Status::NoSolution);
    }
    // nonzero constant equation: excluded outright
    {
        ConstraintSet cs;
        cs.parameters = {"x"};
        cs.add_equation(Poly(1));
        CHECK(solve_constraints(cs).status == SolveResult::Status::NoSolution);
    }
    // parametrized: single equation in two unknowns
    {
        ConstraintSet cs;
        cs.parameters = {"x", "y"};
        cs.add_equation(var("x") - var("y"));
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Parametrized);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0].free_vars == std::vector<std::string>{"y"});
    }
    // quadratic split with polynomial discriminant: (x - y)(x - y + 1) = 0
    {
        ConstraintSet cs;
        cs.parameters = {"x", "y"};
        Poly d = var("x") - var("y");
        cs.add_equation(d * d + d);
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Parametrized);
        CHECK(r.solutions.size() == 2);
    }
    // undecided: x^2 - 2 has no Q(i) roots
    {
        ConstraintSet cs;
        cs.parameters = {"x"};
        cs.add_equation(var("x") * var("x") - Poly(2));
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Undecided);
        CHECK(!r.residual_generators.empty());
    }
    // branch pruning: {x^2 - x, x*y - 1, y - 1} forces x = 1 (x = 0 dies)
    {
        ConstraintSet cs;
        cs.parameters = {"x", "y"};
        cs.add_equation(var("x") * var("x") - var("x"));
        cs.add_equation(var("y") - Poly(1));
        cs.add_side_relation(var("x") * var("y") - Poly(1));
        SolveResult r = solve_constraints(cs);
        CHECK(r.status == SolveResult::Status::Finite);
        REQUIRE(r.solutions.size() == 1);
        CHECK(r.solutions[0].assignment.at("x") == Poly(1));
    }
}

TEST_CASE("solution rendering and identity detection") {
    ConstraintSet cs;
    cs.parameters = {"a", "b"};
    cs.add_equation(var("a") - Poly(1));
    cs.add_equation(var("b"));
    SolveResult r = solve_constraints(cs);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].str() == "{a = 1, b = 0}");
    CHECK(r.solutions[0].is_identity_like(
        {{"a", GaussianRational(1)}, {"b", GaussianRational(0)}}));
    CHECK(!r.solutions[0].is_identity_like(
        {{"a", GaussianRational(1)}, {"b", GaussianRational(1)}}));
}
