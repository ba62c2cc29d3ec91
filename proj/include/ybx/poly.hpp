#pragma once

#include "ybx/gauss.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybx {

/// A named polynomial parameter; `nonzero` records a declared constraint
/// (the ring does not enforce it, catalog instantiation and make_psi do).
struct ParamDecl {
    std::string name;
    bool nonzero = false;

    friend bool operator==(const ParamDecl& a, const ParamDecl& b) {
        return a.name == b.name && a.nonzero == b.nonzero;
    }
};

/// Declares an ordered parameter set. Polynomials over different rings do
/// not mix; a ring-less constant unifies with any ring.
class PolyRing {
public:
    explicit PolyRing(std::vector<ParamDecl> params) : params_(std::move(params)) {
        for (std::size_t a = 0; a < params_.size(); ++a) {
            if (params_[a].name == "i")
                throw Error("parameter name \"i\" is reserved for the imaginary unit");
            for (std::size_t b = a + 1; b < params_.size(); ++b)
                if (params_[a].name == params_[b].name)
                    throw Error("duplicate parameter \"" + params_[a].name + "\" in ring");
        }
    }

    std::size_t size() const { return params_.size(); }
    const std::vector<ParamDecl>& params() const { return params_; }
    const ParamDecl& decl(std::size_t k) const { return params_.at(k); }
    const std::string& name(std::size_t k) const { return params_.at(k).name; }

    std::optional<std::size_t> index(const std::string& name) const {
        for (std::size_t k = 0; k < params_.size(); ++k)
            if (params_[k].name == name)
                return k;
        return std::nullopt;
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.params_ == b.params_;
    }

private:
    std::vector<ParamDecl> params_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<ParamDecl> params) {
    return std::make_shared<PolyRing>(std::move(params));
}

namespace detail {

using Expo = std::vector<unsigned>;

/// Graded lexicographic order over the declared parameter order.
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = std::accumulate(a.begin(), a.end(), 0u);
        unsigned db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db)
            return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

}  // namespace detail

/// Sparse multivariate polynomial over Q(i) in the parameters of one ring.
/// Canonical form: no stored zero coefficients; a degree-0 polynomial
/// round-trips exactly with GaussRat.
class Poly {
public:
    using Expo = detail::Expo;
    using TermMap = std::map<Expo, GaussRat, detail::GrlexLess>;

    Poly() = default;  // zero in the trivial ring (unifies with any ring)
    Poly(GaussRat c) {  // NOLINT: implicit by design
        if (!c.is_zero())
            terms_.emplace(Expo{}, std::move(c));
    }
    Poly(long long n) : Poly(GaussRat(n)) {}  // NOLINT

    static Poly constant(RingPtr ring, GaussRat c) {
        Poly p;
        p.ring_ = std::move(ring);
        if (!c.is_zero())
            p.terms_.emplace(Expo(p.ring_ ? p.ring_->size() : 0, 0u), std::move(c));
        return p;
    }

    static Poly param(RingPtr ring, const std::string& name) {
        if (!ring)
            throw Error("parameter \"" + name + "\" needs a ring");
        auto k = ring->index(name);
        if (!k)
            throw Error("parameter \"" + name + "\" is not declared in the ring");
        Poly p;
        p.ring_ = std::move(ring);
        Expo e(p.ring_->size(), 0u);
        e[*k] = 1;
        p.terms_.emplace(std::move(e), GaussRat(1));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty())
            return true;
        if (terms_.size() > 1)
            return false;
        const Expo& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    }

    GaussRat constant_value() const {
        if (terms_.empty())
            return GaussRat(0);
        if (!is_constant())
            throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
        return d;
    }

    /// Names of parameters that actually occur (with positive exponent).
    std::vector<std::string> used_params() const {
        std::vector<std::string> out;
        if (!ring_)
            return out;
        for (std::size_t k = 0; k < ring_->size(); ++k) {
            for (const auto& [e, c] : terms_) {
                if (e[k] > 0) {
                    out.push_back(ring_->name(k));
                    break;
                }
            }
        }
        return out;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        auto [ring, ta, tb] = unify(a, b);
        Poly r;
        r.ring_ = ring;
        r.terms_ = std::move(ta);
        for (auto& [e, c] : tb)
            r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        auto [ring, ta, tb] = unify(a, b);
        Poly r;
        r.ring_ = ring;
        for (const auto& [ea, ca] : ta) {
            for (const auto& [eb, cb] : tb) {
                Expo e = ea;
                for (std::size_t k = 0; k < eb.size(); ++k)
                    e[k] += eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Scale by a constant without ring bookkeeping.
    friend Poly operator*(Poly p, const GaussRat& c) {
        if (c.is_zero()) {
            p.terms_.clear();
            return p;
        }
        for (auto& [e, v] : p.terms_)
            v *= c;
        return p;
    }
    friend Poly operator*(const GaussRat& c, Poly p) { return std::move(p) * c; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact substitution of rational values; every occurring parameter
    /// must be assigned.
    GaussRat eval(const std::map<std::string, GaussRat>& assignment) const {
        for (const auto& name : used_params())
            if (!assignment.count(name))
                throw Error("missing parameter \"" + name + "\" in assignment");
        GaussRat total(0);
        for (const auto& [e, c] : terms_) {
            GaussRat term = c;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0)
                    continue;
                const GaussRat& v = assignment.at(ring_->name(k));
                for (unsigned p = 0; p < e[k]; ++p)
                    term *= v;
            }
            total += term;
        }
        return total;
    }

    /// Substitute polynomials for parameters, landing in `target`.
    /// Parameters not mentioned must exist in the target ring.
    Poly subst(const RingPtr& target,
               const std::map<std::string, Poly>& assignment) const {
        Poly total = Poly::constant(target, GaussRat(0));
        for (const auto& [e, c] : terms_) {
            Poly term = Poly::constant(target, c);
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0)
                    continue;
                const std::string& name = ring_->name(k);
                Poly v;
                if (auto it = assignment.find(name); it != assignment.end())
                    v = it->second;
                else if (target && target->index(name))
                    v = Poly::param(target, name);
                else
                    throw Error("parameter \"" + name +
                                "\" has no substitute and is absent from the target ring");
                for (unsigned p = 0; p < e[k]; ++p)
                    term *= v;
            }
            total += term;
        }
        return total;
    }

private:
    void add_term(const Expo& e, const GaussRat& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    static bool same_ring(const RingPtr& a, const RingPtr& b) {
        return a == b || (a && b && *a == *b);
    }

    static TermMap rekeyed(const TermMap& t, std::size_t n) {
        TermMap out;
        for (const auto& [e, c] : t) {
            Expo key = e;
            key.resize(n, 0u);
            out.emplace(std::move(key), c);
        }
        return out;
    }

    static std::tuple<RingPtr, TermMap, TermMap> unify(const Poly& a, const Poly& b) {
        // A ring without parameters is the constants ring and unifies with
        // anything, exactly like the null ring of plain constants.
        bool ca = !a.ring_ || a.ring_->size() == 0;
        bool cb = !b.ring_ || b.ring_->size() == 0;
        if (ca && cb)
            return {a.ring_ ? a.ring_ : b.ring_, a.terms_, b.terms_};
        if (ca)
            return {b.ring_, rekeyed(a.terms_, b.ring_->size()), b.terms_};
        if (cb)
            return {a.ring_, a.terms_, rekeyed(b.terms_, a.ring_->size())};
        if (!same_ring(a.ring_, b.ring_)) {
            auto names = [](const RingPtr& r) {
                std::string s;
                for (const auto& p : r->params())
                    s += (s.empty() ? "" : ",") + p.name;
                return s;
            };
            throw Error("mismatched parameter sets: (" + names(a.ring_) + ") vs (" +
                        names(b.ring_) + ")");
        }
        return {a.ring_, a.terms_, b.terms_};
    }

    RingPtr ring_;
    TermMap terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Embed a ring-less scalar into a concrete ring (no-op for GaussRat users).
inline Poly promote(const GaussRat& c, const RingPtr& ring) {
    return Poly::constant(ring, c);
}
inline Poly promote(const Poly& p, const RingPtr& ring) {
    return p.ring() ? p : Poly::constant(ring, GaussRat(0)) + p;
}

}  // namespace ybx
