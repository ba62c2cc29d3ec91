#pragma once

#include "ybx/rb_operator.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Automorphism of L given by its basis matrix (column k = image of e_k).
template <class S>
struct AutoMap {
    AlgebraPtr algebra;
    Matrix<S> mat;

    AutoMap() = default;
    AutoMap(AlgebraPtr alg, Matrix<S> m) : algebra(std::move(alg)), mat(std::move(m)) {
        if (mat.size() != algebra->dim())
            throw Error("automorphism shape does not match algebra dimension");
        for (const auto& row : mat)
            if (row.size() != algebra->dim())
                throw Error("automorphism shape does not match algebra dimension");
    }

    static AutoMap identity(AlgebraPtr alg) {
        std::size_t n = alg->dim();
        return AutoMap(std::move(alg), identity_matrix<S>(n));
    }

    friend bool operator==(const AutoMap& a, const AutoMap& b) {
        return a.algebra == b.algebra && mat_equal(a.mat, b.mat);
    }
};

template <class S>
Element<S> apply(const AutoMap<S>& phi, const Element<S>& a) {
    return apply(LinOp<S>(phi.algebra, phi.mat), a);
}

template <class S>
AutoMap<S> compose(const AutoMap<S>& a, const AutoMap<S>& b) {
    require_same_algebra(a.algebra, b.algebra);
    return AutoMap<S>(a.algebra, mat_mul(a.mat, b.mat));
}

inline AutoMap<Poly> lift_auto(const AutoMap<GaussRat>& phi) {
    return AutoMap<Poly>(phi.algebra, lift_matrix<Poly>(phi.mat));
}

namespace detail {

inline GaussRat scalar_inverse(const GaussRat& v) { return v.inverse(); }

inline Poly scalar_inverse(const Poly& v) {
    if (!v.is_constant())
        throw Error("inverse is not polynomial in the parameters; "
                    "substitute rational values first");
    return Poly(v.constant_value().inverse());
}

/// Adjugate by cofactors; ring operations only.
template <class S>
Matrix<S> mat_adjugate(const Matrix<S>& a) {
    std::size_t n = a.size();
    auto out = zero_matrix<S>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<S> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j)
                    continue;
                std::vector<S> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i)
                        row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            S cof = mat_det(minor);
            out[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return out;
}

}  // namespace detail

template <class S>
AutoMap<S> inverse(const AutoMap<S>& phi) {
    S det = mat_det(phi.mat);
    if (is_zero(det))
        throw Error("automorphism matrix is singular");
    S dinv = detail::scalar_inverse(det);
    auto adj = detail::mat_adjugate(phi.mat);
    for (auto& row : adj)
        for (auto& v : row)
            v = v * dinv;
    return AutoMap<S>(phi.algebra, std::move(adj));
}

/// Violations of the automorphism invariants: invertibility and bracket
/// preservation on all basis pairs.
template <class S>
std::vector<std::string> validate_automorphism(const AutoMap<S>& phi) {
    std::vector<std::string> issues;
    if (is_zero(mat_det(phi.mat)))
        issues.push_back("determinant is zero");
    const AlgebraPtr& alg = phi.algebra;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = i + 1; j < alg->dim(); ++j) {
            auto ei = Element<S>::basis(alg, i);
            auto ej = Element<S>::basis(alg, j);
            auto lhs = apply(phi, bracket(ei, ej));
            auto rhs = bracket(apply(phi, ei), apply(phi, ej));
            if (!(lhs - rhs).is_zero())
                issues.push_back("bracket not preserved at (" + alg->label(i) + "," +
                                 alg->label(j) + ")");
        }
    return issues;
}

// ---------------------------------------------------------------------------
// The two automorphism families of gl2

/// Invertible 2x2 matrix defining the inner automorphism x -> A x A^-1.
struct InnerAuto {
    Matrix<GaussRat> a;  // 2x2

    InnerAuto() : a(zero_matrix<GaussRat>(2, 2)) {}
    explicit InnerAuto(Matrix<GaussRat> m) : a(std::move(m)) {
        if (a.size() != 2 || a[0].size() != 2 || a[1].size() != 2)
            throw Error("inner automorphism needs a 2x2 matrix");
    }

    GaussRat det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
};

namespace detail {

inline Matrix<GaussRat> gl2_basis_matrix(std::size_t k) {
    auto m = zero_matrix<GaussRat>(2, 2);
    switch (k) {
        case 0: m[0][0] = m[1][1] = GaussRat(1); break;            // E
        case 1: m[0][0] = GaussRat(1); m[1][1] = GaussRat(-1); break;  // h
        case 2: m[0][1] = GaussRat(1); break;                      // e12
        default: m[1][0] = GaussRat(1); break;                     // e21
    }
    return m;
}

inline void require_gl2(const AlgebraPtr& alg) {
    if (alg->dim() != 4 || alg->basis() != std::vector<std::string>{"E", "h", "e12", "e21"})
        throw Error("operation requires the gl2 basis (E, h, e12, e21)");
}

}  // namespace detail

/// Basis matrix of x -> A x A^-1 on (E, h, e12, e21); fixes E.
inline AutoMap<GaussRat> make_inner(const AlgebraPtr& alg, const InnerAuto& inner) {
    detail::require_gl2(alg);
    GaussRat det = inner.det();
    if (det.is_zero())
        throw Error("inner automorphism matrix is singular");
    Matrix<GaussRat> ainv = {{inner.a[1][1] / det, -inner.a[0][1] / det},
                             {-inner.a[1][0] / det, inner.a[0][0] / det}};
    auto out = zero_matrix<GaussRat>(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        auto img = mat_mul(inner.a, mat_mul(detail::gl2_basis_matrix(k), ainv));
        auto coords = detail::gl2_coords(img);
        for (std::size_t i = 0; i < 4; ++i)
            out[i][k] = coords[i];
    }
    return AutoMap<GaussRat>(alg, std::move(out));
}

namespace detail {

inline bool psi_scale_ok(const GaussRat& th) { return !th.is_zero(); }

inline bool psi_scale_ok(const Poly& th) {
    if (th.is_zero())
        return false;
    if (th.is_constant())
        return true;
    // Symbolic scales must be visibly invertible: a single term whose
    // parameters are all declared nonzero.
    if (th.terms().size() != 1)
        return false;
    const auto& e = th.terms().begin()->first;
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] > 0 && !th.ring()->decl(k).nonzero)
            return false;
    return true;
}

}  // namespace detail

/// Center scaling: E -> th E, identity on the trace-zero part.
template <class S>
AutoMap<S> make_psi(const AlgebraPtr& alg, const S& th) {
    if (!alg->central())
        throw Error("algebra " + alg->name() + " has no designated central element");
    if (!detail::psi_scale_ok(th))
        throw Error("psi scale must be nonzero (symbolic scales need nonzero-declared "
                    "parameters)");
    auto m = identity_matrix<S>(alg->dim());
    m[*alg->central()][*alg->central()] = th;
    return AutoMap<S>(alg, std::move(m));
}

/// omega(phi(x), phi(y)) = omega(x, y) on all basis pairs.
template <class S>
bool is_orthogonal(const AutoMap<S>& phi) {
    auto g = lift_matrix<S>(phi.algebra->gram());
    auto lhs = mat_mul(mat_transpose(phi.mat), mat_mul(g, phi.mat));
    return mat_equal(lhs, g);
}

/// Form adjoint phi* = G^-1 phi^T G.
template <class S>
AutoMap<S> form_adjoint(const AutoMap<S>& phi) {
    auto adj = adjoint(LinOp<S>(phi.algebra, phi.mat));
    return AutoMap<S>(phi.algebra, std::move(adj.mat));
}

/// (phi (x) phi) r.
template <class S>
Tensor2<S> act_on_tensor(const AutoMap<S>& phi, const Tensor2<S>& r) {
    require_same_algebra(phi.algebra, r.algebra);
    return Tensor2<S>(r.algebra,
                      mat_mul(phi.mat, mat_mul(r.coeff, mat_transpose(phi.mat))));
}

/// (phi (x) phi (x) phi) t.
template <class S>
Tensor3<S> act_on_tensor(const AutoMap<S>& phi, const Tensor3<S>& t) {
    require_same_algebra(phi.algebra, t.algebra);
    const std::size_t n = t.algebra->dim();
    Tensor3<S> out = Tensor3<S>::zero(t.algebra);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(t.at(i, j, k)))
                    continue;
                for (std::size_t p = 0; p < n; ++p) {
                    if (is_zero(phi.mat[p][i]))
                        continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        if (is_zero(phi.mat[q][j]))
                            continue;
                        for (std::size_t s = 0; s < n; ++s) {
                            if (is_zero(phi.mat[s][k]))
                                continue;
                            out.at(p, q, s) +=
                                t.at(i, j, k) * phi.mat[p][i] * phi.mat[q][j] * phi.mat[s][k];
                        }
                    }
                }
            }
    return out;
}

/// phi^-1 o R o phi. The inverse must be polynomial over the scalars, so
/// parametric automorphisms have to be specialized first.
template <class S>
LinOp<S> conjugate_op(const AutoMap<S>& phi, const LinOp<S>& R) {
    require_same_algebra(phi.algebra, R.algebra);
    auto inv = inverse(phi);
    return LinOp<S>(R.algebra, mat_mul(inv.mat, mat_mul(R.mat, phi.mat)));
}

/// Tensor of phi^-1 o R o phi, which equals (phi* (x) phi^-1) applied to the
/// tensor of R. For non-orthogonal phi this is not the (phi^-1 (x) phi^-1)
/// conjugate, so operator orbits and tensor orbits differ.
template <class S>
Tensor2<S> tensor_of_conjugate(const AutoMap<S>& phi, const LinOp<S>& R) {
    auto direct = op_to_tensor(conjugate_op(phi, R));
    auto star = form_adjoint(phi);
    auto inv = inverse(phi);
    auto r = op_to_tensor(R);
    Tensor2<S> mixed(r.algebra,
                     mat_mul(star.mat, mat_mul(r.coeff, mat_transpose(inv.mat))));
    if (!(direct == mixed))
        throw Error("internal error: adjoint route disagrees with direct conjugation");
    return direct;
}

// ---------------------------------------------------------------------------
// psi-inner decomposition of a gl2 automorphism

struct PsiInnerParts {
    GaussRat theta;
    InnerAuto inner;  // normalized: first nonzero entry (row-major) is 1
};

/// Split a rational automorphism of gl2 as psi_theta o inner(A) with A
/// recovered from the linear system A x = phi0(x) A over x in {h, e12, e21}.
inline PsiInnerParts decompose(const AutoMap<GaussRat>& phi) {
    detail::require_gl2(phi.algebra);
    // theta from phi(E) = theta E
    for (std::size_t i = 1; i < 4; ++i)
        if (!phi.mat[i][0].is_zero())
            throw Error("not an automorphism: E is not mapped to a multiple of E");
    GaussRat theta = phi.mat[0][0];
    if (theta.is_zero())
        throw Error("not an automorphism: E is mapped to zero");

    // phi0 = psi_{1/theta} o phi fixes E and restricts to sl2.
    auto phi0 = compose(make_psi(phi.algebra, theta.inverse()), phi);

    // Solve A X - Y A = 0 for each sl2 basis element X with Y = phi0(X).
    Matrix<GaussRat> system;
    for (std::size_t k = 1; k < 4; ++k) {
        auto X = detail::gl2_basis_matrix(k);
        auto img = zero_matrix<GaussRat>(2, 2);
        for (std::size_t m = 0; m < 4; ++m) {
            if (phi0.mat[m][k].is_zero())
                continue;
            auto bm = detail::gl2_basis_matrix(m);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    img[r][c] += phi0.mat[m][k] * bm[r][c];
        }
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t s = 0; s < 2; ++s) {
                std::vector<GaussRat> row(4, GaussRat(0));
                for (std::size_t p = 0; p < 2; ++p)
                    for (std::size_t q = 0; q < 2; ++q) {
                        GaussRat coef(0);
                        if (p == r)
                            coef += X[q][s];
                        if (q == s)
                            coef -= img[r][p];
                        row[p * 2 + q] += coef;
                    }
                system.push_back(std::move(row));
            }
    }
    auto kernel = mat_kernel(system);
    if (kernel.empty())
        throw Error("inner part not rational");

    Matrix<GaussRat> a = {{kernel[0][0], kernel[0][1]}, {kernel[0][2], kernel[0][3]}};
    GaussRat lead(0);
    for (std::size_t r = 0; r < 2 && lead.is_zero(); ++r)
        for (std::size_t c = 0; c < 2 && lead.is_zero(); ++c)
            lead = a[r][c];
    auto inv = lead.inverse();
    for (auto& row : a)
        for (auto& v : row)
            v *= inv;
    InnerAuto inner(a);
    if (inner.det().is_zero())
        throw Error("inner part not rational");

    PsiInnerParts parts{theta, inner};
    auto recomposed = compose(make_psi(phi.algebra, theta), make_inner(phi.algebra, inner));
    if (!(recomposed == phi))
        throw Error("not an automorphism: psi-inner decomposition does not reproduce the map");
    return parts;
}

}  // namespace ybx
