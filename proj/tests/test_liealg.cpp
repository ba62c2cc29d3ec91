#include "ybx/lie_algebra.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ybx;

namespace {

Element<GaussRat> basis_elt(const AlgebraPtr& alg, const std::string& label) {
    return Element<GaussRat>::basis(alg, alg->index_of(label));
}

}  // namespace

TEST_CASE("gl2 structure: basis, brackets, trace form", "[liealg]") {
    auto gl2 = make_gl(2);
    CHECK(gl2->dim() == 4);
    CHECK(gl2->basis() == std::vector<std::string>{"E", "h", "e12", "e21"});

    auto E = basis_elt(gl2, "E");
    auto h = basis_elt(gl2, "h");
    auto e12 = basis_elt(gl2, "e12");
    auto e21 = basis_elt(gl2, "e21");

    CHECK(bracket(h, e12) == e12 * GaussRat(2));
    CHECK(bracket(e12, e21) == h);
    CHECK(bracket(h, e21) == e21 * GaussRat(-2));
    CHECK(bracket(E, h).is_zero());

    // Gram of the trace form in the (E, h, e12, e21) order.
    Matrix<GaussRat> expected = {{GaussRat(2), GaussRat(0), GaussRat(0), GaussRat(0)},
                                 {GaussRat(0), GaussRat(2), GaussRat(0), GaussRat(0)},
                                 {GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)},
                                 {GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0)}};
    CHECK(mat_equal(gl2->gram(), expected));

    CHECK(form_eval(h, h) == GaussRat(2));
    CHECK(form_eval(E, e12) == GaussRat(0));
    CHECK(form_eval(e12 + e21, e12 + e21) == GaussRat(2));
}

TEST_CASE("gl2 center is spanned by E", "[liealg]") {
    auto gl2 = make_gl(2);
    // x is central iff sum_i x_i c(i,j,k) = 0 for all j, k.
    Matrix<GaussRat> rows;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            std::vector<GaussRat> row(4, GaussRat(0));
            for (std::size_t i = 0; i < 4; ++i)
                row[i] = gl2->c(i, j, k);
            rows.push_back(std::move(row));
        }
    auto kernel = mat_kernel(rows);
    REQUIRE(kernel.size() == 1);
    CHECK(kernel[0][0] != GaussRat(0));
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(kernel[0][i] == GaussRat(0));
    CHECK(gl2->central() == std::size_t{0});
}

TEST_CASE("validate accepts gl_n for n = 1, 2, 3", "[liealg]") {
    for (std::size_t n : {1u, 2u, 3u}) {
        auto rep = validate(make_gl(n));
        INFO("n = " << n);
        CHECK(rep.ok());
    }
    CHECK(validate(make_sl2()).ok());
}

TEST_CASE("validate reports a flipped structure constant as a Jacobi failure",
          "[liealg]") {
    auto good = make_gl(2);
    auto bad = std::make_shared<LieAlgebra>(*good);
    bad->set_bracket(1, 2, 2, GaussRat(-2));  // [h, e12] = -2 e12
    AlgebraPtr frozen = bad;
    auto rep = validate(frozen);
    REQUIRE_FALSE(rep.ok());
    bool jacobi_at_he12e21 = false;
    for (const auto& issue : rep.issues)
        if (issue.kind == "jacobi" && issue.where == "(h,e12,e21)")
            jacobi_at_he12e21 = true;
    CHECK(jacobi_at_he12e21);

    // Independent expansion of the Jacobiator at (h, e12, e21).
    auto h = basis_elt(frozen, "h");
    auto e12 = basis_elt(frozen, "e12");
    auto e21 = basis_elt(frozen, "e21");
    auto jac = bracket(bracket(h, e12), e21) + bracket(bracket(e12, e21), h) +
               bracket(bracket(e21, h), e12);
    CHECK(jac == h * GaussRat(-4));
}

TEST_CASE("validate reports a degenerate form", "[liealg]") {
    auto good = make_gl(2);
    auto bad = std::make_shared<LieAlgebra>(*good);
    auto g = good->gram();
    g[0][0] = GaussRat(0);
    bad->set_gram(std::move(g));
    AlgebraPtr frozen = bad;
    auto rep = validate(frozen);
    bool degenerate = false;
    for (const auto& issue : rep.issues)
        degenerate = degenerate || issue.kind == "form-nondegeneracy";
    CHECK(degenerate);
}

TEST_CASE("sl2 structure", "[liealg]") {
    auto sl2 = make_sl2();
    CHECK(sl2->dim() == 3);
    auto h = basis_elt(sl2, "h");
    auto e12 = basis_elt(sl2, "e12");
    auto e21 = basis_elt(sl2, "e21");
    CHECK(bracket(e12, e21) == h);
    CHECK(form_eval(h, h) == GaussRat(2));
    CHECK(form_eval(e12, e21) == GaussRat(1));
    CHECK(form_eval(e12, e12) == GaussRat(0));
}

TEST_CASE("dual basis of gl2", "[liealg]") {
    auto gl2 = make_gl(2);
    auto duals = dual_basis(gl2);
    REQUIRE(duals.size() == 4);
    CHECK(duals[0] == basis_elt(gl2, "E") * GaussRat(Rational(1, 2)));
    CHECK(duals[1] == basis_elt(gl2, "h") * GaussRat(Rational(1, 2)));
    CHECK(duals[2] == basis_elt(gl2, "e21"));
    CHECK(duals[3] == basis_elt(gl2, "e12"));

    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(form_eval(duals[k], Element<GaussRat>::basis(gl2, j)) ==
                  (j == k ? GaussRat(1) : GaussRat(0)));

    SECTION("degenerate form is rejected") {
        auto bad = std::make_shared<LieAlgebra>(*gl2);
        bad->set_gram(zero_matrix<GaussRat>(4, 4));
        CHECK_THROWS_WITH(dual_basis(AlgebraPtr(bad)),
                          Catch::Matchers::ContainsSubstring("degenerate"));
    }
}

TEST_CASE("form invariance on all gl2 basis triples", "[liealg]") {
    auto gl2 = make_gl(2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                auto a = Element<GaussRat>::basis(gl2, i);
                auto b = Element<GaussRat>::basis(gl2, j);
                auto c = Element<GaussRat>::basis(gl2, k);
                CHECK(form_eval(bracket(a, b), c) == form_eval(a, bracket(b, c)));
            }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi on random elements",
          "[liealg][property]") {
    ybxtest::Rng rng(424242);
    auto gl2 = make_gl(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto x = ybxtest::random_element(rng, gl2);
        auto y = ybxtest::random_element(rng, gl2);
        auto z = ybxtest::random_element(rng, gl2);
        CHECK((bracket(x, y) + bracket(y, x)).is_zero());
        auto jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
                   bracket(bracket(z, x), y);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("operations reject mixed algebras", "[liealg]") {
    auto gl2 = make_gl(2);
    auto sl2 = make_sl2();
    auto h_gl = basis_elt(gl2, "h");
    auto h_sl = basis_elt(sl2, "h");
    CHECK_THROWS_AS(bracket(h_gl, h_sl), Error);
    CHECK_THROWS_AS(Element<GaussRat>(gl2, {GaussRat(1), GaussRat(0)}), Error);
    CHECK_THROWS_WITH(gl2->index_of("e22"),
                      Catch::Matchers::ContainsSubstring("e22"));
}

TEST_CASE("derived subalgebra of gl2 is the trace-zero part", "[liealg]") {
    auto gl2 = make_gl(2);
    auto derived = derived_subalgebra(gl2);
    CHECK(derived.dim() == 3);
    CHECK(derived.contains(basis_elt(gl2, "h")));
    CHECK(derived.contains(basis_elt(gl2, "e12")));
    CHECK(derived.contains(basis_elt(gl2, "e21")));
    CHECK_FALSE(derived.contains(basis_elt(gl2, "E")));
}

TEST_CASE("elements print deterministically", "[liealg]") {
    auto gl2 = make_gl(2);
    auto x = basis_elt(gl2, "E") * GaussRat(2) - basis_elt(gl2, "e12");
    CHECK(element_str(x) == "2*E-e12");
    CHECK(element_str(Element<GaussRat>::zero(gl2)) == "0");
}
