#pragma once

#include "ybx/automorphism.hpp"
#include "ybx/catalog_checks.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace ybx::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parameter headers

inline RingPtr ring_from_json(const json& j) {
    std::vector<ParamDecl> decls;
    for (const auto& p : j) {
        ParamDecl d;
        d.name = p.at("name").get<std::string>();
        d.nonzero = p.value("nonzero", false);
        decls.push_back(std::move(d));
    }
    return make_ring(std::move(decls));
}

inline json ring_json(const PolyRing& ring) {
    json out = json::array();
    for (const auto& d : ring.params()) {
        json p = {{"name", d.name}};
        if (d.nonzero)
            p["nonzero"] = true;
        out.push_back(std::move(p));
    }
    return out;
}

inline RingPtr file_ring(const json& j) {
    if (j.contains("params"))
        return ring_from_json(j.at("params"));
    return make_ring({});
}

// ---------------------------------------------------------------------------
// Algebras

/// {"name", "basis", "brackets": [[i, j, {k: scalar}], ...], "gram": [[..]]};
/// omitted bracket pairs are zero. The central element is inferred: a basis
/// vector is designated central when it alone spans the kernel of ad.
inline AlgebraPtr load_algebra(const json& j) {
    auto alg = std::make_shared<LieAlgebra>(
        j.at("name").get<std::string>(),
        j.at("basis").get<std::vector<std::string>>());
    for (const auto& entry : j.value("brackets", json::array())) {
        std::size_t i = alg->index_of(entry.at(0).get<std::string>());
        std::size_t k = alg->index_of(entry.at(1).get<std::string>());
        for (const auto& [label, value] : entry.at(2).items())
            alg->set_bracket(i, k, alg->index_of(label),
                             parse_gauss(value.get<std::string>()));
    }
    if (j.contains("gram")) {
        const auto& g = j.at("gram");
        auto gram = zero_matrix<GaussRat>(alg->dim(), alg->dim());
        for (std::size_t r = 0; r < alg->dim(); ++r)
            for (std::size_t c = 0; c < alg->dim(); ++c)
                gram[r][c] = parse_gauss(g.at(r).at(c).get<std::string>());
        alg->set_gram(std::move(gram));
    }
    std::optional<std::size_t> central;
    for (std::size_t k = 0; k < alg->dim(); ++k) {
        bool is_central = true;
        for (std::size_t m = 0; m < alg->dim() && is_central; ++m)
            for (std::size_t p = 0; p < alg->dim() && is_central; ++p)
                is_central = alg->c(k, m, p).is_zero();
        if (is_central) {
            if (central) {
                central.reset();  // center is not one-dimensional
                break;
            }
            central = k;
        }
    }
    if (central)
        alg->set_central(*central);
    AlgebraPtr frozen = alg;
    auto report = validate(frozen);
    if (!report.ok()) {
        std::string msg = "algebra \"" + frozen->name() + "\" is invalid:";
        for (const auto& issue : report.issues)
            msg += " [" + issue.kind + " " + issue.where + "]";
        throw Error(msg);
    }
    return frozen;
}

inline json algebra_json(const AlgebraPtr& alg) {
    json out;
    out["name"] = alg->name();
    out["basis"] = alg->basis();
    json brackets = json::array();
    for (std::size_t i = 0; i < alg->dim(); ++i)
        for (std::size_t k = i + 1; k < alg->dim(); ++k) {
            json coeffs;
            for (std::size_t p = 0; p < alg->dim(); ++p)
                if (!alg->c(i, k, p).is_zero())
                    coeffs[alg->label(p)] = scalar_str(alg->c(i, k, p));
            if (!coeffs.is_null())
                brackets.push_back(json::array({alg->label(i), alg->label(k), coeffs}));
        }
    out["brackets"] = std::move(brackets);
    if (alg->has_form()) {
        json gram = json::array();
        for (std::size_t r = 0; r < alg->dim(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < alg->dim(); ++c)
                row.push_back(scalar_str(alg->gram()[r][c]));
            gram.push_back(std::move(row));
        }
        out["gram"] = std::move(gram);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensors and operators

inline void require_algebra_name(const json& j, const AlgebraPtr& alg) {
    std::string name = j.at("algebra").get<std::string>();
    if (name != alg->name())
        throw Error("file references algebra \"" + name + "\" but \"" + alg->name() +
                    "\" was loaded");
}

/// {"algebra", "params"?, "entries": [[i, j, scalar], ...]}.
inline Tensor2<Poly> load_tensor(const json& j, const AlgebraPtr& alg) {
    require_algebra_name(j, alg);
    RingPtr ring = file_ring(j);
    auto r = Tensor2<Poly>::zero(alg);
    for (const auto& entry : j.at("entries")) {
        if (entry.size() != 3)
            throw Error("tensor entries need the form [label, label, scalar]");
        r.coeff[alg->index_of(entry.at(0).get<std::string>())]
               [alg->index_of(entry.at(1).get<std::string>())] =
            parse_scalar(entry.at(2).get<std::string>(), ring);
    }
    return r;
}

inline json tensor_json(const Tensor2<Poly>& r, const RingPtr& ring) {
    json out;
    out["algebra"] = r.algebra->name();
    if (ring && ring->size() > 0)
        out["params"] = ring_json(*ring);
    json entries = json::array();
    for (std::size_t i = 0; i < r.algebra->dim(); ++i)
        for (std::size_t k = 0; k < r.algebra->dim(); ++k)
            if (!r.coeff[i][k].is_zero())
                entries.push_back(json::array({r.algebra->label(i), r.algebra->label(k),
                                               scalar_str(r.coeff[i][k])}));
    out["entries"] = std::move(entries);
    return out;
}

inline json tensor3_json(const Tensor3<Poly>& t, const RingPtr& ring) {
    json out;
    out["algebra"] = t.algebra->name();
    if (ring && ring->size() > 0)
        out["params"] = ring_json(*ring);
    json entries = json::array();
    const std::size_t n = t.algebra->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = 0; m < n; ++m)
                if (!t.at(i, k, m).is_zero())
                    entries.push_back(json::array({t.algebra->label(i), t.algebra->label(k),
                                                   t.algebra->label(m),
                                                   scalar_str(t.at(i, k, m))}));
    out["entries"] = std::move(entries);
    return out;
}

/// {"algebra", "params"?, "images": {label: {label: scalar}}}.
inline LinOp<Poly> load_op(const json& j, const AlgebraPtr& alg) {
    require_algebra_name(j, alg);
    RingPtr ring = file_ring(j);
    auto R = LinOp<Poly>::zero(alg);
    for (const auto& [arg, image] : j.at("images").items()) {
        std::size_t col = alg->index_of(arg);
        for (const auto& [label, value] : image.items())
            R.mat[alg->index_of(label)][col] =
                parse_scalar(value.get<std::string>(), ring);
    }
    return R;
}

inline json op_json(const LinOp<Poly>& R, const RingPtr& ring) {
    json out;
    out["algebra"] = R.algebra->name();
    if (ring && ring->size() > 0)
        out["params"] = ring_json(*ring);
    json images;
    for (std::size_t col = 0; col < R.algebra->dim(); ++col) {
        json image;
        for (std::size_t row = 0; row < R.algebra->dim(); ++row)
            if (!R.mat[row][col].is_zero())
                image[R.algebra->label(row)] = scalar_str(R.mat[row][col]);
        if (!image.is_null())
            images[R.algebra->label(col)] = std::move(image);
    }
    out["images"] = images.is_null() ? json::object() : std::move(images);
    return out;
}

/// The ring every polynomial entry of a loaded object lives in (all entries
/// share one file ring; zero entries are ring-less).
template <class T>
RingPtr entries_ring(const T& entries) {
    for (const auto& row : entries)
        for (const auto& v : row)
            if (v.ring())
                return v.ring();
    return make_ring({});
}

// ---------------------------------------------------------------------------
// Automorphisms

/// {"kind": "inner", "A": [[..]]} | {"kind": "psi", "theta": s, "params"?}
/// | {"kind": "matrix", "mat": [[..]], "params"?}; an array means the
/// composition of its items, first entry applied last (outermost).
inline AutoMap<Poly> load_auto(const json& j, const AlgebraPtr& alg) {
    if (j.is_array()) {
        if (j.empty())
            throw Error("empty automorphism composition");
        auto phi = load_auto(j.front(), alg);
        for (std::size_t k = 1; k < j.size(); ++k)
            phi = compose(phi, load_auto(j.at(k), alg));
        return phi;
    }
    std::string kind = j.at("kind").get<std::string>();
    AutoMap<Poly> phi;
    if (kind == "inner") {
        const auto& a = j.at("A");
        Matrix<GaussRat> m = {{parse_gauss(a.at(0).at(0).get<std::string>()),
                               parse_gauss(a.at(0).at(1).get<std::string>())},
                              {parse_gauss(a.at(1).at(0).get<std::string>()),
                               parse_gauss(a.at(1).at(1).get<std::string>())}};
        phi = lift_auto(make_inner(alg, InnerAuto(m)));
    } else if (kind == "psi") {
        RingPtr ring = file_ring(j);
        phi = make_psi(alg, parse_scalar(j.at("theta").get<std::string>(), ring));
    } else if (kind == "matrix") {
        RingPtr ring = file_ring(j);
        auto m = zero_matrix<Poly>(alg->dim(), alg->dim());
        for (std::size_t r = 0; r < alg->dim(); ++r)
            for (std::size_t c = 0; c < alg->dim(); ++c)
                m[r][c] = parse_scalar(j.at("mat").at(r).at(c).get<std::string>(), ring);
        phi = AutoMap<Poly>(alg, std::move(m));
    } else {
        throw Error("unknown automorphism kind \"" + kind + "\"");
    }
    auto issues = validate_automorphism(phi);
    if (!issues.empty()) {
        std::string msg = "map is not an automorphism:";
        for (const auto& issue : issues)
            msg += " [" + issue + "]";
        throw Error(msg);
    }
    return phi;
}

// ---------------------------------------------------------------------------
// Verification reports

inline json report_json(const catalog::Report& rep) {
    json out;
    out["ok"] = rep.ok;
    out["families_checked"] = rep.families_checked;
    out["instances_checked"] = rep.instances_checked;
    json families = json::array();
    for (const auto& fam : rep.families) {
        json jf;
        jf["id"] = fam.id;
        jf["group"] = fam.group;
        jf["ok"] = fam.ok;
        json instances = json::array();
        for (const auto& inst : fam.instances) {
            json ji;
            ji["label"] = inst.label;
            ji["ok"] = inst.ok;
            if (!inst.notes.empty())
                ji["notes"] = inst.notes;
            json checks = json::array();
            for (const auto& check : inst.checks) {
                json jc;
                jc["name"] = check.name;
                jc["expected"] = check.expected;
                jc["actual"] = check.actual;
                jc["ok"] = check.ok;
                if (!check.details.empty())
                    jc["details"] = check.details;
                checks.push_back(std::move(jc));
            }
            ji["checks"] = std::move(checks);
            instances.push_back(std::move(ji));
        }
        jf["instances"] = std::move(instances);
        families.push_back(std::move(jf));
    }
    out["families"] = std::move(families);
    json crosses = json::array();
    for (const auto& cc : rep.cross_checks) {
        json jc;
        jc["name"] = cc.name;
        jc["subject"] = cc.subject;
        jc["ok"] = cc.ok;
        jc["details"] = cc.details;
        crosses.push_back(std::move(jc));
    }
    out["cross_checks"] = std::move(crosses);
    return out;
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("malformed JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write \"" + path + "\"");
    out << text;
}

}  // namespace ybx::io
