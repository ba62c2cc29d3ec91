#pragma once

#include "ybx/tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Linear endomorphism of L; column k holds the coordinates of R(e_k).
template <class S>
struct LinOp {
    AlgebraPtr algebra;
    Matrix<S> mat;

    LinOp() = default;
    LinOp(AlgebraPtr alg, Matrix<S> m) : algebra(std::move(alg)), mat(std::move(m)) {
        if (mat.size() != algebra->dim())
            throw Error("operator shape does not match algebra dimension");
        for (const auto& row : mat)
            if (row.size() != algebra->dim())
                throw Error("operator shape does not match algebra dimension");
    }

    static LinOp zero(AlgebraPtr alg) {
        std::size_t n = alg->dim();
        return LinOp(std::move(alg), zero_matrix<S>(n, n));
    }

    static LinOp identity(AlgebraPtr alg) {
        std::size_t n = alg->dim();
        return LinOp(std::move(alg), identity_matrix<S>(n));
    }

    /// Set R(e_k) = image.
    void set_image(std::size_t k, const Element<S>& image) {
        require_same_algebra(algebra, image.algebra);
        for (std::size_t i = 0; i < algebra->dim(); ++i)
            mat[i][k] = image.coords[i];
    }

    bool is_zero() const {
        for (const auto& row : mat)
            for (const auto& v : row)
                if (!ybx::is_zero(v))
                    return false;
        return true;
    }

    LinOp operator-() const {
        LinOp r = *this;
        for (auto& row : r.mat)
            for (auto& v : row)
                v = -v;
        return r;
    }

    LinOp& operator+=(const LinOp& o) {
        require_same_algebra(algebra, o.algebra);
        for (std::size_t i = 0; i < mat.size(); ++i)
            for (std::size_t j = 0; j < mat.size(); ++j)
                mat[i][j] += o.mat[i][j];
        return *this;
    }
    friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
    friend LinOp operator-(LinOp a, const LinOp& b) { return a += -b; }

    friend bool operator==(const LinOp& a, const LinOp& b) {
        if (a.algebra != b.algebra)
            return false;
        return mat_equal(a.mat, b.mat);
    }
};

template <class S>
Element<S> apply(const LinOp<S>& R, const Element<S>& a) {
    require_same_algebra(R.algebra, a.algebra);
    Element<S> out = Element<S>::zero(R.algebra);
    for (std::size_t j = 0; j < a.coords.size(); ++j) {
        if (is_zero(a.coords[j]))
            continue;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            out.coords[i] += R.mat[i][j] * a.coords[j];
    }
    return out;
}

/// (A o B)(x) = A(B(x)).
template <class S>
LinOp<S> compose(const LinOp<S>& a, const LinOp<S>& b) {
    require_same_algebra(a.algebra, b.algebra);
    return LinOp<S>(a.algebra, mat_mul(a.mat, b.mat));
}

// ---------------------------------------------------------------------------
// Scalar conversions

template <class S>
Matrix<S> lift_matrix(const Matrix<GaussRat>& m) {
    Matrix<S> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<S> r;
        r.reserve(row.size());
        for (const auto& v : row)
            r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return out;
}

template <class S>
Element<S> lift_element(const Element<GaussRat>& x) {
    std::vector<S> coords(x.coords.begin(), x.coords.end());
    return Element<S>(x.algebra, std::move(coords));
}

inline LinOp<Poly> lift_op(const LinOp<GaussRat>& R) {
    return LinOp<Poly>(R.algebra, lift_matrix<Poly>(R.mat));
}

inline Tensor2<Poly> lift_tensor(const Tensor2<GaussRat>& r) {
    return Tensor2<Poly>(r.algebra, lift_matrix<Poly>(r.coeff));
}

inline LinOp<GaussRat> eval_op(const LinOp<Poly>& R,
                               const std::map<std::string, GaussRat>& assignment) {
    auto m = zero_matrix<GaussRat>(R.mat.size(), R.mat.size());
    for (std::size_t i = 0; i < R.mat.size(); ++i)
        for (std::size_t j = 0; j < R.mat.size(); ++j)
            m[i][j] = R.mat[i][j].eval(assignment);
    return LinOp<GaussRat>(R.algebra, std::move(m));
}

inline Tensor2<GaussRat> eval_tensor(const Tensor2<Poly>& r,
                                     const std::map<std::string, GaussRat>& assignment) {
    auto m = zero_matrix<GaussRat>(r.coeff.size(), r.coeff.size());
    for (std::size_t i = 0; i < r.coeff.size(); ++i)
        for (std::size_t j = 0; j < r.coeff.size(); ++j)
            m[i][j] = r.coeff[i][j].eval(assignment);
    return Tensor2<GaussRat>(r.algebra, std::move(m));
}

inline LinOp<Poly> subst_op(const LinOp<Poly>& R, const RingPtr& target,
                            const std::map<std::string, Poly>& assignment) {
    auto m = zero_matrix<Poly>(R.mat.size(), R.mat.size());
    for (std::size_t i = 0; i < R.mat.size(); ++i)
        for (std::size_t j = 0; j < R.mat.size(); ++j)
            m[i][j] = R.mat[i][j].subst(target, assignment);
    return LinOp<Poly>(R.algebra, std::move(m));
}

inline Tensor2<Poly> subst_tensor(const Tensor2<Poly>& r, const RingPtr& target,
                                  const std::map<std::string, Poly>& assignment) {
    auto m = zero_matrix<Poly>(r.coeff.size(), r.coeff.size());
    for (std::size_t i = 0; i < r.coeff.size(); ++i)
        for (std::size_t j = 0; j < r.coeff.size(); ++j)
            m[i][j] = r.coeff[i][j].subst(target, assignment);
    return Tensor2<Poly>(r.algebra, std::move(m));
}

// ---------------------------------------------------------------------------
// Adjoint and the operator <-> tensor correspondence

/// Adjoint with respect to the form: omega(R(a), b) = omega(a, R*(b)),
/// i.e. R* = G^-1 R^T G.
template <class S>
LinOp<S> adjoint(const LinOp<S>& R) {
    auto g = lift_matrix<S>(R.algebra->gram());
    auto ginv = lift_matrix<S>(R.algebra->gram_inverse());
    return LinOp<S>(R.algebra, mat_mul(ginv, mat_mul(mat_transpose(R.mat), g)));
}

/// R(a) = sum_i omega(a_i, a) b_i for r = sum a_i (x) b_i.
template <class S>
LinOp<S> tensor_to_op(const Tensor2<S>& r) {
    r.algebra->gram_inverse();  // nondegeneracy precondition
    auto g = lift_matrix<S>(r.algebra->gram());
    return LinOp<S>(r.algebra, mat_mul(mat_transpose(r.coeff), g));
}

/// r = sum_k f^k (x) R(e_k) over the form-dual basis; inverse of tensor_to_op.
template <class S>
Tensor2<S> op_to_tensor(const LinOp<S>& R) {
    auto ginv = lift_matrix<S>(R.algebra->gram_inverse());
    return Tensor2<S>(R.algebra, mat_mul(ginv, mat_transpose(R.mat)));
}

// ---------------------------------------------------------------------------
// Identity checks (all residuals are reported per basis pair)

template <class S>
struct PairDefect {
    std::size_t i, j;
    Element<S> defect;
};

template <class S>
struct CheckReport {
    bool ok = true;
    std::vector<PairDefect<S>> defects;

    explicit operator bool() const { return ok; }
};

template <class S>
std::string report_str(const CheckReport<S>& rep, const AlgebraPtr& alg) {
    if (rep.ok)
        return "holds";
    std::string out;
    for (const auto& d : rep.defects) {
        if (!out.empty())
            out += "; ";
        out += "(" + alg->label(d.i) + "," + alg->label(d.j) +
               "): " + element_str(d.defect);
    }
    return out;
}

/// Rota-Baxter identity of the given weight,
///   [R(x),R(y)] - R([R(x),y] + [x,R(y)] + w [x,y]) = 0,
/// on basis pairs i < j (both sides are antisymmetric in x, y).
template <class S>
CheckReport<S> check_rb(const LinOp<S>& R, const S& weight) {
    CheckReport<S> rep;
    const AlgebraPtr& alg = R.algebra;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = i + 1; j < alg->dim(); ++j) {
            auto x = Element<S>::basis(alg, i);
            auto y = Element<S>::basis(alg, j);
            auto rx = apply(R, x);
            auto ry = apply(R, y);
            auto defect = bracket(rx, ry) -
                          apply(R, bracket(rx, y) + bracket(x, ry) +
                                       bracket(x, y) * weight);
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.defects.push_back({i, j, std::move(defect)});
            }
        }
    return rep;
}

/// (R + R*)([a,b]) = [(R + R*)(a), b] on all ordered basis pairs; holds iff
/// the symmetric part of the corresponding tensor is invariant.
template <class S>
CheckReport<S> check_rb3(const LinOp<S>& R) {
    CheckReport<S> rep;
    const AlgebraPtr& alg = R.algebra;
    LinOp<S> sum = R + adjoint(R);
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            auto a = Element<S>::basis(alg, i);
            auto b = Element<S>::basis(alg, j);
            auto defect = apply(sum, bracket(a, b)) - bracket(apply(sum, a), b);
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.defects.push_back({i, j, std::move(defect)});
            }
        }
    return rep;
}

/// R([R(a),b] + [R*(a),b] + [a,b]) = 0 on all ordered basis pairs.
template <class S>
CheckReport<S> check_rb1(const LinOp<S>& R) {
    CheckReport<S> rep;
    const AlgebraPtr& alg = R.algebra;
    LinOp<S> adj = adjoint(R);
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            auto a = Element<S>::basis(alg, i);
            auto b = Element<S>::basis(alg, j);
            auto defect = apply(R, bracket(apply(R, a), b) + bracket(apply(adj, a), b) +
                                       bracket(a, b));
            if (!defect.is_zero()) {
                rep.ok = false;
                rep.defects.push_back({i, j, std::move(defect)});
            }
        }
    return rep;
}

template <class S>
struct CentralSumResult {
    bool ok = false;
    S gamma{};        // witness with R(E) + R*(E) = gamma E, when ok
    Element<S> sum;   // R(E) + R*(E)
};

/// R(E) + R*(E) = gamma E for the designated central basis element E.
template <class S>
CentralSumResult<S> check_usE(const LinOp<S>& R) {
    const AlgebraPtr& alg = R.algebra;
    if (!alg->central())
        throw Error("algebra " + alg->name() + " has no designated central element");
    std::size_t c = *alg->central();
    auto e = Element<S>::basis(alg, c);
    CentralSumResult<S> res;
    res.sum = apply(R, e) + apply(adjoint(R), e);
    res.ok = true;
    for (std::size_t k = 0; k < alg->dim(); ++k)
        if (k != c && !is_zero(res.sum.coords[k]))
            res.ok = false;
    if (res.ok)
        res.gamma = res.sum.coords[c];
    return res;
}

/// theta_w = R + R* + w id.
template <class S>
LinOp<S> theta_map(const LinOp<S>& R, const S& weight) {
    LinOp<S> out = R + adjoint(R);
    for (std::size_t k = 0; k < out.mat.size(); ++k)
        out.mat[k][k] += S(GaussRat(1)) * weight;
    return out;
}

namespace detail {

inline void require_constant(const Matrix<Poly>& m) {
    std::vector<std::string> offenders;
    for (const auto& row : m)
        for (const auto& v : row)
            for (const auto& name : v.used_params())
                if (std::find(offenders.begin(), offenders.end(), name) == offenders.end())
                    offenders.push_back(name);
    if (!offenders.empty()) {
        std::string list;
        for (const auto& n : offenders)
            list += (list.empty() ? "" : ", ") + n;
        throw Error("unspecialized parameters: " + list +
                    "; substitute rational values first");
    }
}

inline LinOp<GaussRat> as_constant_op(const LinOp<GaussRat>& R) { return R; }

inline LinOp<GaussRat> as_constant_op(const LinOp<Poly>& R) {
    require_constant(R.mat);
    auto m = zero_matrix<GaussRat>(R.mat.size(), R.mat.size());
    for (std::size_t i = 0; i < R.mat.size(); ++i)
        for (std::size_t j = 0; j < R.mat.size(); ++j)
            m[i][j] = R.mat[i][j].constant_value();
    return LinOp<GaussRat>(R.algebra, std::move(m));
}

inline GaussRat as_constant_scalar(const GaussRat& v) { return v; }
inline GaussRat as_constant_scalar(const Poly& v) {
    if (!v.is_constant())
        throw Error("unspecialized parameters in weight; substitute rational values first");
    return v.constant_value();
}

}  // namespace detail

/// I_w = span of theta_w applied to the derived subalgebra [L, L].
/// Echelon reduction needs field scalars, so parametric operators must be
/// specialized first.
template <class S>
Subspace ideal_I(const LinOp<S>& R, const S& weight) {
    LinOp<GaussRat> cR = detail::as_constant_op(R);
    GaussRat w = detail::as_constant_scalar(weight);
    auto D = derived_subalgebra(R.algebra);
    LinOp<GaussRat> theta = theta_map(cR, w);
    std::vector<Element<GaussRat>> images;
    for (const auto& d : D.basis)
        images.push_back(apply(theta, d));
    return span(R.algebra, images);
}

/// The unique w with (R + R*)|_[L,L] = -w id, when that restriction is
/// scalar; otherwise "no invariant weight".
template <class S>
S infer_weight(const LinOp<S>& R) {
    auto D = derived_subalgebra(R.algebra);
    if (D.dim() == 0)
        throw Error("no invariant weight: derived subalgebra is trivial");
    LinOp<S> sum = R + adjoint(R);
    const auto& d0 = D.basis[0];
    std::size_t k0 = 0;
    while (d0.coords[k0].is_zero())
        ++k0;
    auto img0 = apply(sum, lift_element<S>(d0));
    S w = -(img0.coords[k0] * d0.coords[k0].inverse());
    for (const auto& d : D.basis) {
        auto lifted = lift_element<S>(d);
        auto defect = apply(sum, lifted) + lifted * w;
        if (!defect.is_zero())
            throw Error("no invariant weight: R+R* is not scalar on the derived subalgebra");
    }
    return w;
}

}  // namespace ybx
