#include "ybx/scalar_io.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ybx;

TEST_CASE("gauss rational field arithmetic", "[scalar]") {
    GaussRat a(1, 2);  // 1 + 2i
    GaussRat b(3, -1);
    CHECK(a * b == GaussRat(5, 5));

    CHECK(GaussRat(Rational(1, 2)) + GaussRat(Rational(1, 3)) == GaussRat(Rational(5, 6)));
    CHECK(GaussRat(1) / GaussRat::i() == -GaussRat::i());

    CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), Error);
    CHECK(GaussRat(Rational(-4, 6)) == GaussRat(Rational(-2, 3)));
}

TEST_CASE("gauss rational ring axioms on random triples", "[scalar][property]") {
    ybxtest::Rng rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        GaussRat a = ybxtest::random_gauss(rng);
        GaussRat b = ybxtest::random_gauss(rng);
        GaussRat c = ybxtest::random_gauss(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero())
            CHECK(a / b * b == a);
    }
}

TEST_CASE("polynomial arithmetic in canonical sparse form", "[scalar]") {
    auto ring = make_ring({{"lambda"}, {"theta"}});
    Poly lambda = Poly::param(ring, "lambda");
    Poly theta = Poly::param(ring, "theta");

    CHECK((lambda + theta) * (lambda - theta) == lambda * lambda - theta * theta);
    CHECK(lambda + Poly() == lambda);

    auto ring2 = make_ring({{"alpha2"}});
    Poly a2 = Poly::param(ring2, "alpha2");
    Poly p = a2 * GaussRat(2) + Poly(1);
    Poly sq = p * p;
    CHECK(sq == a2 * a2 * GaussRat(4) + a2 * GaussRat(4) + Poly(1));
    CHECK(sq.terms().size() == 3);

    SECTION("mismatched parameter sets are rejected") {
        CHECK_THROWS_WITH(lambda + a2, Catch::Matchers::ContainsSubstring("mismatched"));
    }

    SECTION("ring-less constants unify with any ring") {
        CHECK(Poly(GaussRat(3)) + lambda == lambda + Poly::constant(ring, GaussRat(3)));
        CHECK(Poly(GaussRat(2)).is_constant());
        CHECK(Poly(GaussRat(2)).constant_value() == GaussRat(2));
    }
}

TEST_CASE("ring declarations", "[scalar]") {
    CHECK_THROWS_WITH(make_ring({{"x"}, {"x"}}),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(make_ring({{"i"}}),
                      Catch::Matchers::ContainsSubstring("reserved"));
    auto ring = make_ring({{"theta", true}, {"lambda"}});
    CHECK(ring->decl(0).nonzero);
    CHECK_FALSE(ring->decl(1).nonzero);
    CHECK(ring->index("lambda") == std::size_t{1});
    CHECK_FALSE(ring->index("mu"));
}

TEST_CASE("polynomial evaluation", "[scalar]") {
    auto ring = make_ring({{"lambda"}, {"theta"}});
    Poly lambda = Poly::param(ring, "lambda");
    Poly theta = Poly::param(ring, "theta");
    Poly p = lambda * lambda - theta * theta;

    CHECK(p.eval({{"lambda", GaussRat(2)}, {"theta", GaussRat(1)}}) == GaussRat(3));
    CHECK(Poly(GaussRat(7)).eval({}) == GaussRat(7));

    auto ring2 = make_ring({{"alpha2"}});
    Poly q = Poly::param(ring2, "alpha2") * GaussRat(2) + Poly(1);
    CHECK(q.eval({{"alpha2", GaussRat(Rational(-1, 2))}}) == GaussRat(0));

    CHECK_THROWS_WITH(p.eval({{"lambda", GaussRat(2)}}),
                      Catch::Matchers::ContainsSubstring("theta"));
}

TEST_CASE("zero test is the canonical-form test", "[scalar]") {
    auto ring = make_ring({{"lambda"}, {"theta"}});
    Poly lambda = Poly::param(ring, "lambda");
    Poly theta = Poly::param(ring, "theta");
    Poly p = lambda * theta + Poly(5);

    CHECK((p - p).is_zero());
    CHECK(!(Poly::param(ring, "theta") * GaussRat(2) + Poly(1)).is_zero());
    CHECK(((lambda + theta) * (lambda - theta) - lambda * lambda + theta * theta).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism", "[scalar][property]") {
    ybxtest::Rng rng(7151);
    auto ring = make_ring({{"lambda"}, {"theta"}});
    auto random_poly = [&]() {
        Poly p = Poly::constant(ring, GaussRat(0));
        std::uniform_int_distribution<int> expo(0, 2);
        for (int t = 0; t < 4; ++t) {
            Poly term = Poly::constant(ring, ybxtest::random_gauss(rng));
            for (int e = expo(rng); e > 0; --e)
                term *= Poly::param(ring, "lambda");
            for (int e = expo(rng); e > 0; --e)
                term *= Poly::param(ring, "theta");
            p += term;
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly();
        Poly q = random_poly();
        for (int pt = 0; pt < 10; ++pt) {
            std::map<std::string, GaussRat> sigma = {
                {"lambda", ybxtest::random_gauss(rng)},
                {"theta", ybxtest::random_gauss(rng)}};
            CHECK((p * q).eval(sigma) == p.eval(sigma) * q.eval(sigma));
            CHECK((p + q).eval(sigma) == p.eval(sigma) + q.eval(sigma));
        }
        if ((p - p).is_zero()) {
            std::map<std::string, GaussRat> sigma = {
                {"lambda", ybxtest::random_gauss(rng)},
                {"theta", ybxtest::random_gauss(rng)}};
            CHECK((p - p).eval(sigma) == GaussRat(0));
        }
    }
}

TEST_CASE("substitution of polynomials for parameters", "[scalar]") {
    auto src = make_ring({{"lambda"}, {"alpha1"}});
    auto dst = make_ring({{"lambda"}, {"theta", true}});
    Poly p = Poly::param(src, "lambda") + Poly::param(src, "alpha1") * GaussRat(2);
    Poly q = p.subst(dst, {{"alpha1", -Poly::param(dst, "theta")}});
    CHECK(q == Poly::param(dst, "lambda") - Poly::param(dst, "theta") * GaussRat(2));

    CHECK_THROWS_WITH(p.subst(make_ring({{"theta"}}), {}),
                      Catch::Matchers::ContainsSubstring("has no substitute"));
}

TEST_CASE("scalar grammar round trips", "[scalar][io]") {
    auto ring = make_ring({{"lambda"}, {"theta"}, {"alpha2"}});

    for (const std::string text : {"1/2", "-3+2i", "2*alpha2+1", "lambda*theta^2"}) {
        Poly p = parse_scalar(text, ring);
        CHECK(scalar_str(p) == text);
        CHECK(parse_scalar(scalar_str(p), ring) == p);
    }

    CHECK(parse_gauss("2i") == GaussRat(0, 2));
    CHECK(parse_gauss("-1/2i") == GaussRat(Rational(0), Rational(-1, 2)));
    CHECK(parse_gauss("3+2*i") == GaussRat(3, 2));
    CHECK(parse_scalar("i*lambda", ring) ==
          Poly::param(ring, "lambda") * GaussRat::i());
    CHECK(scalar_str(Poly(GaussRat(0))) == "0");
    CHECK(parse_scalar("0", ring).is_zero());

    SECTION("undeclared parameters and malformed input are rejected") {
        CHECK_THROWS_WITH(parse_scalar("2*beta", ring),
                          Catch::Matchers::ContainsSubstring("beta"));
        CHECK_THROWS_AS(parse_gauss("lambda"), Error);
        CHECK_THROWS_AS(parse_scalar("1/0", ring), Error);
        CHECK_THROWS_AS(parse_scalar("2+", ring), Error);
        CHECK_THROWS_AS(parse_scalar("", ring), Error);
    }

    SECTION("printing splits complex coefficients into grammar terms") {
        Poly p = Poly::param(ring, "lambda") * GaussRat(1, -2) + Poly(GaussRat(0, 1));
        std::string s = scalar_str(p);
        CHECK(parse_scalar(s, ring) == p);
        CHECK(s == "lambda-2i*lambda+i");
    }
}

TEST_CASE("printed polynomials parse back to equal values", "[scalar][io][property]") {
    ybxtest::Rng rng(90913);
    auto ring = make_ring({{"lambda"}, {"theta"}});
    std::uniform_int_distribution<int> expo(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = Poly::constant(ring, GaussRat(0));
        for (int t = 0; t < 3; ++t) {
            Poly term = Poly::constant(ring, ybxtest::random_gauss(rng));
            for (int e = expo(rng); e > 0; --e)
                term *= Poly::param(ring, "lambda");
            for (int e = expo(rng); e > 0; --e)
                term *= Poly::param(ring, "theta");
            p += term;
        }
        CHECK(parse_scalar(scalar_str(p), ring) == p);
    }
}
