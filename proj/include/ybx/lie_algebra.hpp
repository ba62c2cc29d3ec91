#pragma once

#include "ybx/linalg.hpp"
#include "ybx/poly.hpp"
#include "ybx/scalar_io.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Finite-dimensional Lie algebra given by a labeled basis, antisymmetric
/// structure constants over Q(i), and an optional invariant bilinear form
/// (Gram matrix). Parametric objects over the algebra carry polynomial
/// coordinates; the algebra itself is always constant.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> basis)
        : name_(std::move(name)),
          basis_(std::move(basis)),
          c_(basis_.size() * basis_.size() * basis_.size(), GaussRat(0)) {}

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& label(std::size_t k) const { return basis_.at(k); }

    std::optional<std::size_t> index(const std::string& label) const {
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (basis_[k] == label)
                return k;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& label) const {
        auto k = index(label);
        if (!k)
            throw Error("unknown basis label \"" + label + "\" in algebra " + name_);
        return *k;
    }

    const GaussRat& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim() + j) * dim() + k];
    }

    /// Sets [e_i, e_j] coefficient of e_k and its antisymmetric partner.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, GaussRat v) {
        c_[(i * dim() + j) * dim() + k] = v;
        c_[(j * dim() + i) * dim() + k] = -v;
    }

    bool has_form() const { return gram_.has_value(); }
    const Matrix<GaussRat>& gram() const {
        if (!gram_)
            throw Error("algebra " + name_ + " has no bilinear form");
        return *gram_;
    }
    void set_gram(Matrix<GaussRat> g) { gram_ = std::move(g); }

    Matrix<GaussRat> gram_inverse() const {
        try {
            return mat_inverse(gram());
        } catch (const Error&) {
            throw Error("form on " + name_ + " is degenerate");
        }
    }

    std::optional<std::size_t> central() const { return central_; }
    void set_central(std::size_t k) { central_ = k; }

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<GaussRat> c_;
    std::optional<Matrix<GaussRat>> gram_;
    std::optional<std::size_t> central_;
};

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a != b)
        throw Error("operands belong to different algebras");
}

/// Element of an algebra with coordinates in S (GaussRat or Poly).
template <class S>
struct Element {
    AlgebraPtr algebra;
    std::vector<S> coords;

    Element() = default;
    Element(AlgebraPtr alg, std::vector<S> v) : algebra(std::move(alg)), coords(std::move(v)) {
        if (coords.size() != algebra->dim())
            throw Error("coordinate length does not match algebra dimension");
    }

    static Element zero(AlgebraPtr alg) {
        std::vector<S> v(alg->dim(), S{});
        return Element(std::move(alg), std::move(v));
    }

    static Element basis(AlgebraPtr alg, std::size_t k) {
        Element e = zero(std::move(alg));
        e.coords.at(k) = S(GaussRat(1));
        return e;
    }

    bool is_zero() const {
        for (const auto& c : coords)
            if (!ybx::is_zero(c))
                return false;
        return true;
    }

    Element operator-() const {
        Element r = *this;
        for (auto& c : r.coords)
            c = -c;
        return r;
    }

    Element& operator+=(const Element& o) {
        require_same_algebra(algebra, o.algebra);
        for (std::size_t k = 0; k < coords.size(); ++k)
            coords[k] += o.coords[k];
        return *this;
    }
    Element& operator-=(const Element& o) { return *this += -o; }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    friend Element operator*(Element a, const S& s) {
        for (auto& c : a.coords)
            c = c * s;
        return a;
    }
    friend Element operator*(const S& s, Element a) { return std::move(a) * s; }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.algebra != b.algebra)
            return false;
        for (std::size_t k = 0; k < a.coords.size(); ++k)
            if (!(a.coords[k] == b.coords[k]))
                return false;
        return true;
    }
};

/// [x, y] through the structure constants.
template <class S>
Element<S> bracket(const Element<S>& x, const Element<S>& y) {
    require_same_algebra(x.algebra, y.algebra);
    const LieAlgebra& L = *x.algebra;
    Element<S> out = Element<S>::zero(x.algebra);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (is_zero(x.coords[i]))
            continue;
        for (std::size_t j = 0; j < L.dim(); ++j) {
            if (is_zero(y.coords[j]))
                continue;
            S prod = x.coords[i] * y.coords[j];
            for (std::size_t k = 0; k < L.dim(); ++k) {
                const GaussRat& ck = L.c(i, j, k);
                if (!ck.is_zero())
                    out.coords[k] += prod * ck;
            }
        }
    }
    return out;
}

/// omega(x, y) through the Gram matrix.
template <class S>
S form_eval(const Element<S>& x, const Element<S>& y) {
    require_same_algebra(x.algebra, y.algebra);
    const auto& g = x.algebra->gram();
    S out{};
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (is_zero(x.coords[i]))
            continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j) {
            if (g[i][j].is_zero())
                continue;
            out += x.coords[i] * y.coords[j] * g[i][j];
        }
    }
    return out;
}

/// Elements f^k with omega(f^k, e_j) = delta_kj.
inline std::vector<Element<GaussRat>> dual_basis(const AlgebraPtr& alg) {
    auto ginv = alg->gram_inverse();
    std::vector<Element<GaussRat>> out;
    for (std::size_t k = 0; k < alg->dim(); ++k) {
        std::vector<GaussRat> coords(alg->dim());
        for (std::size_t m = 0; m < alg->dim(); ++m)
            coords[m] = ginv[m][k];
        out.emplace_back(alg, std::move(coords));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
    std::string kind;   // "antisymmetry", "jacobi", "form-symmetry", ...
    std::string where;  // basis labels involved
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks antisymmetry, the Jacobi identity, and (when a form is present)
/// symmetry, invariance and nondegeneracy. Violations are report entries.
inline ValidationReport validate(const AlgebraPtr& alg) {
    ValidationReport rep;
    const LieAlgebra& L = *alg;
    const std::size_t n = L.dim();
    auto at = [&](std::size_t k) { return L.label(k); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (L.c(i, j, k) != -L.c(j, i, k))
                    rep.issues.push_back(
                        {"antisymmetry", "(" + at(i) + "," + at(j) + ")->" + at(k)});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto ei = Element<GaussRat>::basis(alg, i);
                auto ej = Element<GaussRat>::basis(alg, j);
                auto ek = Element<GaussRat>::basis(alg, k);
                auto jac = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                           bracket(bracket(ek, ei), ej);
                if (!jac.is_zero())
                    rep.issues.push_back(
                        {"jacobi", "(" + at(i) + "," + at(j) + "," + at(k) + ")"});
            }

    if (L.has_form()) {
        const auto& g = L.gram();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (g[i][j] != g[j][i])
                    rep.issues.push_back({"form-symmetry", "(" + at(i) + "," + at(j) + ")"});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    auto ei = Element<GaussRat>::basis(alg, i);
                    auto ej = Element<GaussRat>::basis(alg, j);
                    auto ek = Element<GaussRat>::basis(alg, k);
                    if (form_eval(bracket(ei, ej), ek) != form_eval(ei, bracket(ej, ek)))
                        rep.issues.push_back(
                            {"form-invariance",
                             "(" + at(i) + "," + at(j) + "," + at(k) + ")"});
                }
        if (mat_det(g).is_zero())
            rep.issues.push_back({"form-nondegeneracy", "det(gram)=0"});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Constructors for the algebras in play

namespace detail {

/// Coordinates of a 2x2 matrix in the (E, h, e12, e21) basis.
inline std::vector<GaussRat> gl2_coords(const Matrix<GaussRat>& m) {
    GaussRat half(Rational(1, 2));
    return {(m[0][0] + m[1][1]) * half, (m[0][0] - m[1][1]) * half, m[0][1], m[1][0]};
}

inline GaussRat trace_product(const Matrix<GaussRat>& a, const Matrix<GaussRat>& b) {
    auto p = mat_mul(a, b);
    GaussRat t(0);
    for (std::size_t k = 0; k < p.size(); ++k)
        t += p[k][k];
    return t;
}

}  // namespace detail

/// gl_n with the trace form. For n = 2 the basis is (E, h, e12, e21) with
/// E the identity matrix and h = e11 - e22; otherwise matrix units e_ij.
inline AlgebraPtr make_gl(std::size_t n) {
    if (n < 1)
        throw Error("make_gl requires n >= 1");

    std::vector<std::string> labels;
    std::vector<Matrix<GaussRat>> mats;
    auto unit = [&](std::size_t r, std::size_t c) {
        auto m = zero_matrix<GaussRat>(n, n);
        m[r][c] = GaussRat(1);
        return m;
    };

    if (n == 2) {
        labels = {"E", "h", "e12", "e21"};
        auto E = identity_matrix<GaussRat>(2);
        auto h = zero_matrix<GaussRat>(2, 2);
        h[0][0] = GaussRat(1);
        h[1][1] = GaussRat(-1);
        mats = {E, h, unit(0, 1), unit(1, 0)};
    } else {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                labels.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
                mats.push_back(unit(r, c));
            }
    }

    auto coords = [&](const Matrix<GaussRat>& m) -> std::vector<GaussRat> {
        if (n == 2)
            return detail::gl2_coords(m);
        std::vector<GaussRat> v;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                v.push_back(m[r][c]);
        return v;
    };

    auto alg = std::make_shared<LieAlgebra>("gl" + std::to_string(n), labels);
    const std::size_t dim = mats.size();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            auto comm = mat_mul(mats[i], mats[j]);
            auto ba = mat_mul(mats[j], mats[i]);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    comm[r][c] -= ba[r][c];
            auto v = coords(comm);
            for (std::size_t k = 0; k < dim; ++k)
                if (!v[k].is_zero())
                    alg->set_bracket(i, j, k, v[k]);
        }

    auto g = zero_matrix<GaussRat>(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            g[i][j] = detail::trace_product(mats[i], mats[j]);
    alg->set_gram(std::move(g));
    if (n == 2)
        alg->set_central(0);
    return alg;
}

/// sl2 with basis (h, e12, e21) and the restricted trace form.
inline AlgebraPtr make_sl2() {
    auto alg = std::make_shared<LieAlgebra>(
        "sl2", std::vector<std::string>{"h", "e12", "e21"});
    alg->set_bracket(0, 1, 1, GaussRat(2));    // [h, e12] = 2 e12
    alg->set_bracket(0, 2, 2, GaussRat(-2));   // [h, e21] = -2 e21
    alg->set_bracket(1, 2, 0, GaussRat(1));    // [e12, e21] = h
    Matrix<GaussRat> g = {{GaussRat(2), GaussRat(0), GaussRat(0)},
                          {GaussRat(0), GaussRat(0), GaussRat(1)},
                          {GaussRat(0), GaussRat(1), GaussRat(0)}};
    alg->set_gram(std::move(g));
    return alg;
}

// ---------------------------------------------------------------------------
// Subspaces (echelonized spans over Q(i))

/// Span of rational elements, stored as a reduced echelon basis. Parametric
/// elements must be specialized before they can span a subspace.
struct Subspace {
    AlgebraPtr algebra;
    std::vector<Element<GaussRat>> basis;  // rref rows, pivots normalized to 1

    std::size_t dim() const { return basis.size(); }

    bool contains(const Element<GaussRat>& x) const {
        require_same_algebra(algebra, x.algebra);
        auto v = x.coords;
        for (const auto& row : basis) {
            std::size_t pivot = 0;
            while (pivot < row.coords.size() && row.coords[pivot].is_zero())
                ++pivot;
            if (pivot == row.coords.size() || v[pivot].is_zero())
                continue;
            GaussRat f = v[pivot];
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] -= f * row.coords[k];
        }
        for (const auto& c : v)
            if (!c.is_zero())
                return false;
        return true;
    }
};

inline Subspace span(const AlgebraPtr& alg, const std::vector<Element<GaussRat>>& gens) {
    Matrix<GaussRat> rows;
    for (const auto& g : gens) {
        require_same_algebra(alg, g.algebra);
        rows.push_back(g.coords);
    }
    Subspace out{alg, {}};
    if (rows.empty())
        return out;
    rref(rows);
    for (const auto& row : rows) {
        bool nonzero = false;
        for (const auto& v : row)
            nonzero = nonzero || !v.is_zero();
        if (nonzero)
            out.basis.emplace_back(alg, row);
    }
    return out;
}

/// Derived subalgebra [L, L] as a subspace.
inline Subspace derived_subalgebra(const AlgebraPtr& alg) {
    std::vector<Element<GaussRat>> gens;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t j = i + 1; j < alg->dim(); ++j)
            gens.push_back(bracket(Element<GaussRat>::basis(alg, i),
                                   Element<GaussRat>::basis(alg, j)));
    return span(alg, gens);
}

// ---------------------------------------------------------------------------
// Display

template <class S>
std::string element_str(const Element<S>& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        if (is_zero(x.coords[k]))
            continue;
        std::string c = scalar_str(x.coords[k]);
        std::string piece;
        if (c == "1")
            piece = x.algebra->label(k);
        else if (c == "-1")
            piece = "-" + x.algebra->label(k);
        else if (c.find_first_of("+-", 1) != std::string::npos)
            piece = "(" + c + ")*" + x.algebra->label(k);
        else
            piece = c + "*" + x.algebra->label(k);
        if (!out.empty() && piece[0] != '-')
            out += "+";
        out += piece;
    }
    return out;
}

}  // namespace ybx
