#pragma once

// Shared helpers for the test suites: deterministic random generators and
// independent oracles (kept apart from the library code paths they check).

#include "ybx/automorphism.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ybxtest {

using namespace ybx;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (;;) {
        Rational q(num(rng), den(rng));
        if (!nonzero || q != 0)
            return q;
    }
}

inline GaussRat random_gauss(Rng& rng, bool nonzero = false) {
    for (;;) {
        GaussRat g(random_rational(rng), random_rational(rng));
        if (!nonzero || !g.is_zero())
            return g;
    }
}

inline Element<GaussRat> random_element(Rng& rng, const AlgebraPtr& alg) {
    std::vector<GaussRat> coords;
    for (std::size_t k = 0; k < alg->dim(); ++k)
        coords.push_back(random_gauss(rng));
    return Element<GaussRat>(alg, std::move(coords));
}

inline Tensor2<GaussRat> random_tensor(Rng& rng, const AlgebraPtr& alg) {
    auto m = zero_matrix<GaussRat>(alg->dim(), alg->dim());
    for (auto& row : m)
        for (auto& v : row)
            v = random_gauss(rng);
    return Tensor2<GaussRat>(alg, std::move(m));
}

inline LinOp<GaussRat> random_op(Rng& rng, const AlgebraPtr& alg) {
    auto m = zero_matrix<GaussRat>(alg->dim(), alg->dim());
    for (auto& row : m)
        for (auto& v : row)
            v = random_gauss(rng);
    return LinOp<GaussRat>(alg, std::move(m));
}

inline InnerAuto random_invertible_2x2(Rng& rng) {
    for (;;) {
        Matrix<GaussRat> a = {{random_gauss(rng), random_gauss(rng)},
                              {random_gauss(rng), random_gauss(rng)}};
        InnerAuto inner(a);
        if (!inner.det().is_zero())
            return inner;
    }
}

/// Independent CYBE oracle: expands the three-term sum over an explicit
/// list of simple tensors by element-level brackets and outer products,
/// rather than the library's direct coefficient contraction.
inline Tensor3<GaussRat> cybe_oracle(const Tensor2<GaussRat>& r) {
    struct Simple {
        GaussRat c;
        std::size_t a, b;
    };
    std::vector<Simple> terms;
    for (std::size_t i = 0; i < r.algebra->dim(); ++i)
        for (std::size_t j = 0; j < r.algebra->dim(); ++j)
            if (!r.coeff[i][j].is_zero())
                terms.push_back({r.coeff[i][j], i, j});

    auto out = Tensor3<GaussRat>::zero(r.algebra);
    auto add_triple = [&](const Element<GaussRat>& x, const Element<GaussRat>& y,
                          const Element<GaussRat>& z, const GaussRat& scale) {
        for (std::size_t p = 0; p < x.coords.size(); ++p) {
            if (x.coords[p].is_zero())
                continue;
            for (std::size_t q = 0; q < y.coords.size(); ++q) {
                if (y.coords[q].is_zero())
                    continue;
                for (std::size_t s = 0; s < z.coords.size(); ++s) {
                    if (z.coords[s].is_zero())
                        continue;
                    out.at(p, q, s) += scale * x.coords[p] * y.coords[q] * z.coords[s];
                }
            }
        }
    };

    for (const auto& t1 : terms)
        for (const auto& t2 : terms) {
            auto a1 = Element<GaussRat>::basis(r.algebra, t1.a);
            auto b1 = Element<GaussRat>::basis(r.algebra, t1.b);
            auto a2 = Element<GaussRat>::basis(r.algebra, t2.a);
            auto b2 = Element<GaussRat>::basis(r.algebra, t2.b);
            GaussRat scale = t1.c * t2.c;
            add_triple(bracket(a1, a2), b1, b2, scale);
            add_triple(a1, bracket(a2, b1), b2, -scale);
            add_triple(a1, a2, bracket(b1, b2), scale);
        }
    return out;
}

/// Independent adjoint oracle: solves omega(R(a), b) = omega(a, R*(b)) for
/// each column of R* by row reduction of an augmented system.
inline LinOp<GaussRat> adjoint_oracle(const LinOp<GaussRat>& R) {
    const auto& g = R.algebra->gram();
    std::size_t n = R.algebra->dim();
    auto rtg = mat_mul(mat_transpose(R.mat), g);
    auto out = zero_matrix<GaussRat>(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        auto aug = zero_matrix<GaussRat>(n, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                aug[i][j] = g[i][j];
            aug[i][n] = rtg[i][col];
        }
        auto pivots = rref(aug);
        if (pivots.size() != n)
            throw Error("degenerate form in adjoint oracle");
        for (std::size_t i = 0; i < n; ++i)
            out[i][col] = aug[i][n];
    }
    return LinOp<GaussRat>(R.algebra, std::move(out));
}

}  // namespace ybxtest
