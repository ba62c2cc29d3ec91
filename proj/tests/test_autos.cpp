#include "ybx/automorphism.hpp"

#include "ybx/builders.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ybx;

namespace {

Element<GaussRat> basis_elt(const AlgebraPtr& alg, const std::string& label) {
    return Element<GaussRat>::basis(alg, alg->index_of(label));
}

Tensor2<GaussRat> simple(const AlgebraPtr& alg, const std::string& a,
                         const std::string& b, GaussRat c = GaussRat(1)) {
    return Tensor2<GaussRat>::simple(alg, alg->index_of(a), alg->index_of(b), c);
}

InnerAuto diag2(GaussRat a, GaussRat d) {
    Matrix<GaussRat> m = {{a, GaussRat(0)}, {GaussRat(0), d}};
    return InnerAuto(m);
}

}  // namespace

TEST_CASE("inner automorphisms on the gl2 basis", "[autos]") {
    auto gl2 = make_gl(2);

    CHECK(make_inner(gl2, diag2(GaussRat(1), GaussRat(1))) ==
          AutoMap<GaussRat>::identity(gl2));

    SECTION("conjugation by diag(3, 1)") {
        auto phi = make_inner(gl2, diag2(GaussRat(3), GaussRat(1)));
        CHECK(apply(phi, basis_elt(gl2, "E")) == basis_elt(gl2, "E"));
        CHECK(apply(phi, basis_elt(gl2, "h")) == basis_elt(gl2, "h"));
        CHECK(apply(phi, basis_elt(gl2, "e12")) == basis_elt(gl2, "e12") * GaussRat(3));
        CHECK(apply(phi, basis_elt(gl2, "e21")) ==
              basis_elt(gl2, "e21") * GaussRat(Rational(1, 3)));
    }

    SECTION("conjugation by the swap matrix") {
        Matrix<GaussRat> m = {{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}};
        auto phi = make_inner(gl2, InnerAuto(m));
        CHECK(apply(phi, basis_elt(gl2, "h")) == -basis_elt(gl2, "h"));
        CHECK(apply(phi, basis_elt(gl2, "e12")) == basis_elt(gl2, "e21"));
        CHECK(apply(phi, basis_elt(gl2, "e21")) == basis_elt(gl2, "e12"));
    }

    SECTION("singular matrices are rejected") {
        CHECK_THROWS_WITH(make_inner(gl2, diag2(GaussRat(0), GaussRat(1))),
                          Catch::Matchers::ContainsSubstring("singular"));
    }

    SECTION("bracket preservation on random invertible matrices") {
        ybxtest::Rng rng(8080);
        for (int trial = 0; trial < 50; ++trial) {
            auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
            CHECK(validate_automorphism(phi).empty());
        }
    }
}

TEST_CASE("center scaling automorphism", "[autos]") {
    auto gl2 = make_gl(2);

    auto psi3 = make_psi(gl2, GaussRat(3));
    CHECK(apply(psi3, basis_elt(gl2, "E")) == basis_elt(gl2, "E") * GaussRat(3));
    CHECK(apply(psi3, basis_elt(gl2, "h")) == basis_elt(gl2, "h"));
    CHECK(validate_automorphism(psi3).empty());

    auto psi_third = make_psi(gl2, GaussRat(Rational(1, 3)));
    CHECK(compose(psi3, psi_third) == AutoMap<GaussRat>::identity(gl2));
    CHECK(inverse(psi3) == psi_third);

    CHECK_THROWS_AS(make_psi(gl2, GaussRat(0)), Error);
    CHECK_THROWS_WITH(make_psi(make_sl2(), GaussRat(2)),
                      Catch::Matchers::ContainsSubstring("central"));

    SECTION("symbolic scale needs a nonzero-declared parameter") {
        auto ring = make_ring({{"theta", true}, {"alpha"}});
        CHECK_NOTHROW(make_psi(gl2, Poly::param(ring, "theta")));
        CHECK_THROWS_AS(make_psi(gl2, Poly::param(ring, "alpha")), Error);
    }
}

TEST_CASE("orthogonality with respect to the trace form", "[autos]") {
    auto gl2 = make_gl(2);
    CHECK(is_orthogonal(AutoMap<GaussRat>::identity(gl2)));
    CHECK_FALSE(is_orthogonal(make_psi(gl2, GaussRat(2))));

    ybxtest::Rng rng(9090);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(is_orthogonal(make_inner(gl2, ybxtest::random_invertible_2x2(rng))));
}

TEST_CASE("psi commutes with every inner automorphism", "[autos][property]") {
    auto gl2 = make_gl(2);
    ybxtest::Rng rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
        auto psi = make_psi(gl2, ybxtest::random_gauss(rng, /*nonzero=*/true));
        CHECK(compose(psi, phi) == compose(phi, psi));
    }
}

TEST_CASE("tensor action", "[autos]") {
    auto gl2 = make_gl(2);
    ybxtest::Rng rng(1121);

    SECTION("identity acts trivially") {
        auto r = ybxtest::random_tensor(rng, gl2);
        CHECK(act_on_tensor(AutoMap<GaussRat>::identity(gl2), r) == r);
    }

    SECTION("orthogonal maps fix the casimir tensor") {
        for (int trial = 0; trial < 20; ++trial) {
            auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
            CHECK(act_on_tensor(phi, casimir(gl2)) == casimir(gl2));
        }
    }

    SECTION("center scaling by beta = 2 renormalizes the proof tensor") {
        // (psi_2 (x) psi_2) applied to the operator-side tensor at lambda = 1/2
        // gives the normalized tensor with lambda = 1 and the same theta.
        auto ring = make_ring({{"theta", true}});
        auto proof = tensor_from_strings(gl2, ring,
                                         {{"E", "E", "1/4"},
                                          {"E", "h", "1/2*theta"},
                                          {"h", "E", "-1/2*theta"},
                                          {"h", "h", "-1/4"},
                                          {"e21", "e12", "-1"}});
        auto statement = tensor_from_strings(gl2, ring,
                                             {{"E", "E", "1"},
                                              {"E", "h", "theta"},
                                              {"h", "E", "-theta"},
                                              {"h", "h", "-1/4"},
                                              {"e21", "e12", "-1"}});
        auto psi2 = make_psi(gl2, Poly(2));
        CHECK(act_on_tensor(psi2, proof) == statement);
    }
}

TEST_CASE("CYBE defect is equivariant under orthogonal automorphisms",
          "[autos][property]") {
    auto gl2 = make_gl(2);
    ybxtest::Rng rng(333);
    for (int trial = 0; trial < 25; ++trial) {
        auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
        auto r = ybxtest::random_tensor(rng, gl2);
        CHECK(cybe_defect(act_on_tensor(phi, r)) ==
              act_on_tensor(phi, cybe_defect(r)));
    }
    // In particular solutions map to solutions.
    auto solution = simple(gl2, "E", "E") +
                    simple(gl2, "h", "h", GaussRat(Rational(-1, 4))) -
                    simple(gl2, "e21", "e12");
    REQUIRE(cybe_defect(solution).is_zero());
    auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
    CHECK(cybe_defect(act_on_tensor(phi, solution)).is_zero());
}

TEST_CASE("operator conjugation", "[autos]") {
    auto gl2 = make_gl(2);
    ybxtest::Rng rng(4141);

    SECTION("identity conjugation") {
        auto R = ybxtest::random_op(rng, gl2);
        CHECK(conjugate_op(AutoMap<GaussRat>::identity(gl2), R) == R);
    }

    SECTION("conjugating line 1 by psi_theta scales the e12 component") {
        auto ring = make_ring({{"lambda"}});
        auto R = op_from_strings(gl2, ring, {{"E", {{"E", "lambda"}, {"e12", "1"}}}});
        auto psi3 = make_psi(gl2, Poly(3));
        auto conj = conjugate_op(psi3, R);
        auto expected =
            op_from_strings(gl2, ring, {{"E", {{"E", "lambda"}, {"e12", "3"}}}});
        CHECK(conj == expected);
    }

    SECTION("symbolic psi cannot be inverted polynomially") {
        auto ring = make_ring({{"lambda"}, {"theta", true}});
        auto R = op_from_strings(gl2, ring, {{"E", {{"E", "lambda"}, {"e12", "1"}}}});
        auto psi = make_psi(gl2, Poly::param(ring, "theta"));
        CHECK_THROWS_WITH(conjugate_op(psi, R),
                          Catch::Matchers::ContainsSubstring("substitute"));
    }

    SECTION("orthogonal conjugation matches the inverse tensor action") {
        for (int trial = 0; trial < 25; ++trial) {
            auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
            auto R = ybxtest::random_op(rng, gl2);
            CHECK(op_to_tensor(conjugate_op(phi, R)) ==
                  act_on_tensor(inverse(phi), op_to_tensor(R)));
        }
    }

    SECTION("conjugation preserves the identity checks") {
        auto ring = make_ring({{"lambda"}});
        auto R = op_from_strings(gl2, ring,
                                 {{"E", {{"E", "lambda"}}},
                                  {"h", {{"h", "-1/2"}}},
                                  {"e12", {{"e12", "-1"}}}});
        REQUIRE(check_rb(R, Poly(1)).ok);
        REQUIRE(check_rb3(R).ok);
        REQUIRE(check_rb1(R).ok);
        auto phi = lift_auto(make_inner(gl2, ybxtest::random_invertible_2x2(rng)));
        auto conj = conjugate_op(phi, R);
        CHECK(check_rb(conj, Poly(1)).ok);
        CHECK(check_rb3(conj).ok);
        CHECK(check_rb1(conj).ok);
    }
}

TEST_CASE("tensor of a conjugated operator", "[autos]") {
    auto gl2 = make_gl(2);
    ybxtest::Rng rng(5252);

    SECTION("identity gives the plain tensor") {
        auto R = ybxtest::random_op(rng, gl2);
        CHECK(tensor_of_conjugate(AutoMap<GaussRat>::identity(gl2), R) ==
              op_to_tensor(R));
    }

    SECTION("orthogonal maps keep operator and tensor orbits aligned") {
        for (int trial = 0; trial < 20; ++trial) {
            auto phi = make_inner(gl2, ybxtest::random_invertible_2x2(rng));
            auto R = ybxtest::random_op(rng, gl2);
            CHECK(tensor_of_conjugate(phi, R) ==
                  act_on_tensor(inverse(phi), op_to_tensor(R)));
        }
    }

    SECTION("the non-orthogonal center scaling separates the orbits") {
        // R from scaled line 1 at lambda = 1: R(E) = E + e12, rest 0.
        auto R = LinOp<GaussRat>::zero(gl2);
        R.set_image(0, basis_elt(gl2, "E") + basis_elt(gl2, "e12"));
        auto psi2 = make_psi(gl2, GaussRat(2));

        auto direct = tensor_of_conjugate(psi2, R);
        auto expected_direct = simple(gl2, "E", "E", GaussRat(Rational(1, 2))) +
                               simple(gl2, "E", "e12");
        CHECK(direct == expected_direct);

        auto conjugated_tensor = act_on_tensor(inverse(psi2), op_to_tensor(R));
        auto expected_conj = simple(gl2, "E", "E", GaussRat(Rational(1, 8))) +
                             simple(gl2, "E", "e12", GaussRat(Rational(1, 4)));
        CHECK(conjugated_tensor == expected_conj);

        CHECK_FALSE(direct == conjugated_tensor);
    }
}

TEST_CASE("psi-inner decomposition", "[autos]") {
    auto gl2 = make_gl(2);

    SECTION("worked example: psi_2 composed with diag(3, 1)") {
        auto phi = compose(make_psi(gl2, GaussRat(2)),
                           make_inner(gl2, diag2(GaussRat(3), GaussRat(1))));
        auto parts = decompose(phi);
        CHECK(parts.theta == GaussRat(2));
        CHECK(parts.inner.a[0][0] == GaussRat(1));
        CHECK(parts.inner.a[0][1] == GaussRat(0));
        CHECK(parts.inner.a[1][0] == GaussRat(0));
        CHECK(parts.inner.a[1][1] == GaussRat(Rational(1, 3)));
    }

    SECTION("identity decomposes trivially") {
        auto parts = decompose(AutoMap<GaussRat>::identity(gl2));
        CHECK(parts.theta == GaussRat(1));
        CHECK(make_inner(gl2, parts.inner) == AutoMap<GaussRat>::identity(gl2));
    }

    SECTION("swap matrix is recovered in normalized form") {
        Matrix<GaussRat> m = {{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}};
        auto parts = decompose(make_inner(gl2, InnerAuto(m)));
        CHECK(parts.theta == GaussRat(1));
        CHECK(parts.inner.a[0][0] == GaussRat(0));
        CHECK(parts.inner.a[0][1] == GaussRat(1));
        CHECK(parts.inner.a[1][0] == GaussRat(1));
        CHECK(parts.inner.a[1][1] == GaussRat(0));
    }

    SECTION("round trip on random psi-inner compositions") {
        ybxtest::Rng rng(616);
        for (int trial = 0; trial < 20; ++trial) {
            auto theta = ybxtest::random_gauss(rng, /*nonzero=*/true);
            auto inner = ybxtest::random_invertible_2x2(rng);
            auto phi = compose(make_psi(gl2, theta), make_inner(gl2, inner));
            auto parts = decompose(phi);
            auto recomposed =
                compose(make_psi(gl2, parts.theta), make_inner(gl2, parts.inner));
            CHECK(recomposed == phi);
            CHECK(parts.theta == theta);
        }
    }

    SECTION("maps that move E off the center are rejected") {
        auto bad = AutoMap<GaussRat>::identity(gl2);
        bad.mat[1][0] = GaussRat(1);
        CHECK_THROWS_WITH(decompose(bad),
                          Catch::Matchers::ContainsSubstring("not an automorphism"));
    }
}

TEST_CASE("minus transpose is center-inversion times an inner map", "[autos]") {
    // x -> -x^T is a Lie automorphism of gl2: theta = -1, inner part the
    // symplectic rotation.
    auto gl2 = make_gl(2);
    auto phi = AutoMap<GaussRat>::identity(gl2);
    phi.mat = zero_matrix<GaussRat>(4, 4);
    phi.mat[0][0] = GaussRat(-1);  // E -> -E
    phi.mat[1][1] = GaussRat(-1);  // h -> -h
    phi.mat[3][2] = GaussRat(-1);  // e12 -> -e21
    phi.mat[2][3] = GaussRat(-1);  // e21 -> -e12
    CHECK(validate_automorphism(phi).empty());
    auto parts = decompose(phi);
    CHECK(parts.theta == GaussRat(-1));
    CHECK(compose(make_psi(gl2, parts.theta), make_inner(gl2, parts.inner)) == phi);
}
