#pragma once

#include "ybx/lie_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// Element of L (x) L as a dense dim x dim coefficient array:
/// r = sum coeff[i][j] e_i (x) e_j.
template <class S>
struct Tensor2 {
    AlgebraPtr algebra;
    Matrix<S> coeff;

    Tensor2() = default;
    Tensor2(AlgebraPtr alg, Matrix<S> c) : algebra(std::move(alg)), coeff(std::move(c)) {
        if (coeff.size() != algebra->dim())
            throw Error("tensor shape does not match algebra dimension");
        for (const auto& row : coeff)
            if (row.size() != algebra->dim())
                throw Error("tensor shape does not match algebra dimension");
    }

    static Tensor2 zero(AlgebraPtr alg) {
        std::size_t n = alg->dim();
        return Tensor2(std::move(alg), zero_matrix<S>(n, n));
    }

    /// c * (e_i (x) e_j)
    static Tensor2 simple(AlgebraPtr alg, std::size_t i, std::size_t j, S c) {
        Tensor2 t = zero(std::move(alg));
        t.coeff[i][j] = std::move(c);
        return t;
    }

    bool is_zero() const {
        for (const auto& row : coeff)
            for (const auto& v : row)
                if (!ybx::is_zero(v))
                    return false;
        return true;
    }

    Tensor2 operator-() const {
        Tensor2 r = *this;
        for (auto& row : r.coeff)
            for (auto& v : row)
                v = -v;
        return r;
    }

    Tensor2& operator+=(const Tensor2& o) {
        require_same_algebra(algebra, o.algebra);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::size_t j = 0; j < coeff.size(); ++j)
                coeff[i][j] += o.coeff[i][j];
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) { return *this += -o; }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }

    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        if (a.algebra != b.algebra)
            return false;
        return mat_equal(a.coeff, b.coeff);
    }
};

/// Element of L (x) L (x) L (dense dim^3 array).
template <class S>
struct Tensor3 {
    AlgebraPtr algebra;
    std::vector<S> coeff;  // index (i*dim + j)*dim + k

    static Tensor3 zero(AlgebraPtr alg) {
        std::size_t n = alg->dim();
        Tensor3 t;
        t.algebra = std::move(alg);
        t.coeff.assign(n * n * n, S{});
        return t;
    }

    S& at(std::size_t i, std::size_t j, std::size_t k) {
        std::size_t n = algebra->dim();
        return coeff[(i * n + j) * n + k];
    }
    const S& at(std::size_t i, std::size_t j, std::size_t k) const {
        std::size_t n = algebra->dim();
        return coeff[(i * n + j) * n + k];
    }

    bool is_zero() const {
        for (const auto& v : coeff)
            if (!ybx::is_zero(v))
                return false;
        return true;
    }

    Tensor3& operator+=(const Tensor3& o) {
        require_same_algebra(algebra, o.algebra);
        for (std::size_t k = 0; k < coeff.size(); ++k)
            coeff[k] += o.coeff[k];
        return *this;
    }
    Tensor3& operator-=(const Tensor3& o) {
        require_same_algebra(algebra, o.algebra);
        for (std::size_t k = 0; k < coeff.size(); ++k)
            coeff[k] -= o.coeff[k];
        return *this;
    }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        if (a.algebra != b.algebra)
            return false;
        for (std::size_t k = 0; k < a.coeff.size(); ++k)
            if (!(a.coeff[k] == b.coeff[k]))
                return false;
        return true;
    }
};

/// Slot swap tau(a (x) b) = b (x) a.
template <class S>
Tensor2<S> tau(const Tensor2<S>& r) {
    Tensor2<S> out = Tensor2<S>::zero(r.algebra);
    for (std::size_t i = 0; i < r.coeff.size(); ++i)
        for (std::size_t j = 0; j < r.coeff.size(); ++j)
            out.coeff[j][i] = r.coeff[i][j];
    return out;
}

template <class S>
Tensor2<S> symmetric_part(const Tensor2<S>& r) {
    return r + tau(r);
}

template <class S>
Tensor2<S> scale_tensor(Tensor2<S> r, const S& c) {
    for (auto& row : r.coeff)
        for (auto& v : row)
            v = v * c;
    return r;
}

/// Slot-wise bracket action [x1 (x) x2, y] = [x1,y] (x) x2 + x1 (x) [x2,y].
template <class S>
Tensor2<S> ad_act(const Tensor2<S>& t, const Element<S>& y) {
    require_same_algebra(t.algebra, y.algebra);
    const LieAlgebra& L = *t.algebra;
    const std::size_t n = L.dim();
    Tensor2<S> out = Tensor2<S>::zero(t.algebra);
    for (std::size_t m = 0; m < n; ++m) {
        if (is_zero(y.coords[m]))
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (is_zero(t.coeff[i][j]))
                    continue;
                S scaled = t.coeff[i][j] * y.coords[m];
                for (std::size_t p = 0; p < n; ++p) {
                    const GaussRat& c1 = L.c(i, m, p);
                    if (!c1.is_zero())
                        out.coeff[p][j] += scaled * c1;
                    const GaussRat& c2 = L.c(j, m, p);
                    if (!c2.is_zero())
                        out.coeff[i][p] += scaled * c2;
                }
            }
    }
    return out;
}

template <class S>
Tensor3<S> ad_act(const Tensor3<S>& t, const Element<S>& y) {
    require_same_algebra(t.algebra, y.algebra);
    const LieAlgebra& L = *t.algebra;
    const std::size_t n = L.dim();
    Tensor3<S> out = Tensor3<S>::zero(t.algebra);
    for (std::size_t m = 0; m < n; ++m) {
        if (is_zero(y.coords[m]))
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (is_zero(t.at(i, j, k)))
                        continue;
                    S scaled = t.at(i, j, k) * y.coords[m];
                    for (std::size_t p = 0; p < n; ++p) {
                        const GaussRat& c1 = L.c(i, m, p);
                        if (!c1.is_zero())
                            out.at(p, j, k) += scaled * c1;
                        const GaussRat& c2 = L.c(j, m, p);
                        if (!c2.is_zero())
                            out.at(i, p, k) += scaled * c2;
                        const GaussRat& c3 = L.c(k, m, p);
                        if (!c3.is_zero())
                            out.at(i, j, p) += scaled * c3;
                    }
                }
    }
    return out;
}

template <class S>
bool is_ad_invariant(const Tensor3<S>& t) {
    for (std::size_t k = 0; k < t.algebra->dim(); ++k)
        if (!ad_act(t, Element<S>::basis(t.algebra, k)).is_zero())
            return false;
    return true;
}

template <class S>
bool is_ad_invariant(const Tensor2<S>& t) {
    for (std::size_t k = 0; k < t.algebra->dim(); ++k)
        if (!ad_act(t, Element<S>::basis(t.algebra, k)).is_zero())
            return false;
    return true;
}

/// The three-term Yang-Baxter expression
///   sum_ij [a_i,a_j](x)b_i(x)b_j - a_i(x)[a_j,b_i](x)b_j + a_i(x)a_j(x)[b_i,b_j]
/// expanded over all coefficient pairs of r; r solves CYBE iff this is zero.
template <class S>
Tensor3<S> cybe_defect(const Tensor2<S>& r) {
    const LieAlgebra& L = *r.algebra;
    const std::size_t n = L.dim();
    Tensor3<S> out = Tensor3<S>::zero(r.algebra);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(r.coeff[i][j]))
                continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (is_zero(r.coeff[k][l]))
                        continue;
                    S prod = r.coeff[i][j] * r.coeff[k][l];
                    for (std::size_t p = 0; p < n; ++p) {
                        const GaussRat& c1 = L.c(i, k, p);  // [a_i, a_j] slot 1
                        if (!c1.is_zero())
                            out.at(p, j, l) += prod * c1;
                        const GaussRat& c2 = L.c(k, j, p);  // [a_j, b_i] slot 2
                        if (!c2.is_zero())
                            out.at(i, p, l) -= prod * c2;
                        const GaussRat& c3 = L.c(j, l, p);  // [b_i, b_j] slot 3
                        if (!c3.is_zero())
                            out.at(i, k, p) += prod * c3;
                    }
                }
        }
    return out;
}

/// Canonical invariant tensor sum_k e_k (x) f^k over the form-dual basis;
/// its coefficient array is the inverse Gram matrix.
inline Tensor2<GaussRat> casimir(const AlgebraPtr& alg) {
    return Tensor2<GaussRat>(alg, alg->gram_inverse());
}

// ---------------------------------------------------------------------------
// Cobrackets

/// Linear map a -> [r, a], stored through its basis images.
template <class S>
struct Cobracket {
    AlgebraPtr algebra;
    std::vector<Tensor2<S>> images;

    Tensor2<S> operator()(const Element<S>& a) const {
        require_same_algebra(algebra, a.algebra);
        Tensor2<S> out = Tensor2<S>::zero(algebra);
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (is_zero(a.coords[k]))
                continue;
            for (std::size_t i = 0; i < algebra->dim(); ++i)
                for (std::size_t j = 0; j < algebra->dim(); ++j)
                    out.coeff[i][j] += images[k].coeff[i][j] * a.coords[k];
        }
        return out;
    }
};

template <class S>
Cobracket<S> cobracket(const Tensor2<S>& r) {
    Cobracket<S> d;
    d.algebra = r.algebra;
    for (std::size_t k = 0; k < r.algebra->dim(); ++k)
        d.images.push_back(ad_act(r, Element<S>::basis(r.algebra, k)));
    return d;
}

/// delta([a,b]) = [delta(a), b] + [a, delta(b)] on all basis pairs.
template <class S>
bool check_cocycle(const Cobracket<S>& d) {
    const AlgebraPtr& alg = d.algebra;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            auto ei = Element<S>::basis(alg, i);
            auto ej = Element<S>::basis(alg, j);
            Tensor2<S> lhs = d(bracket(ei, ej));
            Tensor2<S> rhs = ad_act(d(ei), ej) - ad_act(d(ej), ei);
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

/// Dual product is skew iff every image is tau-antisymmetric.
template <class S>
bool check_coskew(const Cobracket<S>& d) {
    for (const auto& img : d.images)
        if (!(tau(img) + img).is_zero())
            return false;
    return true;
}

/// Co-Jacobi: the cyclic sum of (delta (x) id) o delta vanishes on the basis.
template <class S>
bool check_cojacobi(const Cobracket<S>& d) {
    const std::size_t n = d.algebra->dim();
    for (std::size_t a = 0; a < n; ++a) {
        const Tensor2<S>& da = d.images[a];
        Tensor3<S> t = Tensor3<S>::zero(d.algebra);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < n; ++s) {
                if (is_zero(da.coeff[i][s]))
                    continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        t.at(p, q, s) += d.images[i].coeff[p][q] * da.coeff[i][s];
            }
        Tensor3<S> total = Tensor3<S>::zero(d.algebra);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t s = 0; s < n; ++s) {
                    const S& v = t.at(p, q, s);
                    if (is_zero(v))
                        continue;
                    total.at(p, q, s) += v;
                    total.at(s, p, q) += v;  // cyclic rotation
                    total.at(q, s, p) += v;  // cyclic rotation squared
                }
        if (!total.is_zero())
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Display

template <class S>
std::string tensor_str(const Tensor2<S>& r) {
    if (r.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < r.coeff.size(); ++i)
        for (std::size_t j = 0; j < r.coeff.size(); ++j) {
            if (is_zero(r.coeff[i][j]))
                continue;
            if (!out.empty())
                out += ", ";
            out += r.algebra->label(i) + "⊗" + r.algebra->label(j) + ": " +
                   scalar_str(r.coeff[i][j]);
        }
    return out;
}

template <class S>
std::string tensor_str(const Tensor3<S>& r) {
    if (r.is_zero())
        return "0";
    std::string out;
    const std::size_t n = r.algebra->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(r.at(i, j, k)))
                    continue;
                if (!out.empty())
                    out += ", ";
                out += r.algebra->label(i) + "⊗" + r.algebra->label(j) + "⊗" +
                       r.algebra->label(k) + ": " + scalar_str(r.at(i, j, k));
            }
    return out;
}

}  // namespace ybx
