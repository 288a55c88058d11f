#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superhom/poly.hpp"

using namespace superhom;

namespace {
Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }
GaussianRational gr(long re_n, long re_d, long im_n, long im_d) {
    return GaussianRational(rat(re_n, re_d), rat(im_n, im_d));
}
} // namespace

TEST_CASE("rational canonical form") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).num() == 1);
    CHECK(rat(2, 4).den() == 2);
    // sign normalization: (0, -3/-6) -> (0, 1/2)
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(-3, -6).den() == 2);
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(Rational(0).str() == "0");
    CHECK(rat(-1, 2).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), MalformedScalarError);
    CHECK(Rational::parse("-3/6") == rat(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("gaussian rational arithmetic and normalization") {
    GaussianRational a = gr(2, 4, 0, 1); // (1/2, 0)
    CHECK(normalize(a) == gr(1, 2, 0, 1));
    CHECK(normalize(normalize(a)) == normalize(a)); // idempotent

    // (1/2 + zeta)(1/2 - zeta) = 1/4 + 1 = 5/4
    GaussianRational x = gr(1, 2, 1, 1), y = gr(1, 2, -1, 1);
    CHECK(x * y == gr(5, 4, 0, 1));

    CHECK(GaussianRational::zeta() * GaussianRational::zeta() == GaussianRational(-1));
    CHECK(gr(1, 1, 1, 1) / gr(1, 1, 1, 1) == GaussianRational(1));
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), MalformedScalarError);

    CHECK(gr(1, 2, 0, 1).str() == "1/2");
    CHECK(gr(0, 1, 1, 1).str() == "1*i");
    CHECK(gr(1, 2, -1, 3).str() == "1/2-1/3*i");
    CHECK(GaussianRational(0).str() == "0");
    CHECK(GaussianRational::parse("1/2-1/3*i") == gr(1, 2, -1, 3));
    CHECK(GaussianRational::parse("-5") == GaussianRational(-5));
    CHECK(GaussianRational::parse("1*i") == GaussianRational::zeta());
}

TEST_CASE("gaussian ring axioms on randomized inputs") {
    std::mt19937_64 rng(12345);
    auto rnd = [&rng]() {
        std::uniform_int_distribution<int> d(-8, 8), den(1, 5);
        return GaussianRational(Rational(BigInt(d(rng)), BigInt(den(rng))),
                                Rational(BigInt(d(rng)), BigInt(den(rng))));
    };
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * GaussianRational(1) == a);
        CHECK(a + GaussianRational(0) == a);
        // normalize compatible with arithmetic (canonical forms throughout)
        CHECK(normalize(a * b) == normalize(normalize(a) * normalize(b)));
        if (!b.is_zero())
            CHECK(a / b * b == a);
    }
}

TEST_CASE("poly construction and evaluation") {
    Poly lam = Poly::variable("lambda");
    Poly mu = Poly::variable("mu");

    Poly p = lam * mu - Poly(1);
    CHECK(p.evaluate({{"lambda", GaussianRational(2)},
                      {"mu", gr(1, 2, 0, 1)}}) == GaussianRational(0));

    Poly a = Poly::variable("a"), b = Poly::variable("b"), c = Poly::variable("c"),
         d = Poly::variable("d");
    Poly q = a * d - b * c - Poly(1);
    CHECK(q.evaluate({{"a", GaussianRational(1)},
                      {"d", GaussianRational(1)},
                      {"b", GaussianRational(5)},
                      {"c", GaussianRational(0)}}) == GaussianRational(0));

    CHECK((lam - Poly(1)).evaluate({{"lambda", GaussianRational(-1)}}) == GaussianRational(-2));
    CHECK_THROWS_AS(p.evaluate({{"lambda", GaussianRational(1)}}), UnboundParameterError);

    // evaluate(lambda - 1, lambda -> 1) = 0
    CHECK((lam - Poly(1)).evaluate({{"lambda", GaussianRational(1)}}) == GaussianRational(0));
}

TEST_CASE("poly ring axioms and evaluate is a homomorphism") {
    std::mt19937_64 rng(99);
    auto rnd_poly = [&rng]() {
        static const char* names[3] = {"x", "y", "z"};
        std::uniform_int_distribution<int> coeff(-4, 4), var(0, 2), deg(0, 2), terms(1, 4);
        Poly p;
        int k = terms(rng);
        for (int t = 0; t < k; ++t) {
            Poly term = Poly::constant(GaussianRational(coeff(rng)));
            int reps = deg(rng);
            for (int r = 0; r < reps; ++r) term *= Poly::variable(names[var(rng)]);
            p += term;
        }
        return p;
    };
    std::map<std::string, GaussianRational> at = {{"x", GaussianRational(2)},
                                                  {"y", gr(1, 3, 0, 1)},
                                                  {"z", gr(0, 1, 1, 1)}};
    auto ev = [&at](const Poly& p) {
        std::map<std::string, GaussianRational> a;
        for (const auto& v : p.vars()) a[v] = at.at(v);
        return p.evaluate(a);
    };
    for (int t = 0; t < 120; ++t) {
        Poly p = rnd_poly(), q = rnd_poly(), r = rnd_poly();
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * Poly(1) == p);
        CHECK(ev(p * q) == ev(p) * ev(q));
        CHECK(ev(p + q) == ev(p) + ev(q));
    }
}

TEST_CASE("poly serialization in graded-lex order") {
    Poly lam = Poly::variable("lambda"), mu = Poly::variable("mu");
    CHECK((lam - Poly(1)).str() == "lambda-1");
    CHECK((lam * mu - Poly(1)).str() == "lambda*mu-1");
    Poly a = Poly::variable("a"), b = Poly::variable("b"), c = Poly::variable("c"),
         d = Poly::variable("d");
    CHECK((a * d - b * c - Poly(1)).str() == "a*d-b*c-1");
    CHECK(Poly().str() == "0");
    CHECK((lam * lam - lam).str() == "lambda^2-lambda");
    Poly zl = Poly::constant(GaussianRational::zeta()) * lam;
    CHECK(zl.str() == "1*i*lambda");
    // substitution
    CHECK((lam * mu).substitute("mu", lam).str() == "lambda^2");
    // variable list stays minimal after cancellation
    Poly cancel = lam * mu - lam * mu + lam;
    CHECK(cancel.vars().size() == 1);
}
