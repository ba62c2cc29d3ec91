#pragma once

#include "ybx/io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ybx::cli {

namespace detail {

inline void emit(const std::string& text, const std::string& out_path,
                 std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        io::write_text_file(out_path, text);
}

inline RingPtr op_ring(const LinOp<Poly>& R) { return io::entries_ring(R.mat); }
inline RingPtr tensor_ring(const Tensor2<Poly>& r) { return io::entries_ring(r.coeff); }

inline std::string defect_lines(const CheckReport<Poly>& rep, const AlgebraPtr& alg) {
    std::string out;
    for (const auto& d : rep.defects)
        out += "defect at (" + alg->label(d.i) + "," + alg->label(d.j) +
               "): " + element_str(d.defect) + "\n";
    return out;
}

inline nlohmann::json defect_json(const CheckReport<Poly>& rep, const AlgebraPtr& alg) {
    nlohmann::json defects = nlohmann::json::array();
    for (const auto& d : rep.defects)
        defects.push_back({{"pair", {alg->label(d.i), alg->label(d.j)}},
                           {"defect", element_str(d.defect)}});
    return defects;
}

inline int finish_identity_check(const std::string& name, const CheckReport<Poly>& rep,
                                 const AlgebraPtr& alg, const std::string& format,
                                 const std::string& out_path, std::ostream& out) {
    if (format == "json") {
        nlohmann::json j = {{"check", name}, {"ok", rep.ok}};
        if (!rep.ok)
            j["defects"] = defect_json(rep, alg);
        emit(io::dump(j), out_path, out);
    } else {
        if (rep.ok)
            emit(name + ": holds\n", out_path, out);
        else
            emit(name + ": fails\n" + defect_lines(rep, alg), out_path, out);
    }
    return rep.ok ? 0 : 1;
}

inline std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline std::string summary_table(const catalog::Report& rep) {
    static const std::vector<std::pair<std::string, std::string>> columns = {
        {"rb-weight1", "rb1w"},  {"adjoint-rb-weight1", "adjw"}, {"usE", "usE"},
        {"rb3", "rb3"},          {"rb1", "rb1"},                 {"cybe", "cybe"},
        {"sym-invariant", "symI"}, {"sym-nonzero", "symN"},      {"cocycle", "cocy"},
        {"coskew", "cosk"},      {"cojacobi", "cojc"}};
    std::string out = pad("instance", 18);
    for (const auto& [name, head] : columns)
        out += " " + pad(head, 5);
    out += "\n";
    for (const auto& fam : rep.families)
        for (const auto& inst : fam.instances) {
            out += pad(inst.label, 18);
            for (const auto& [name, head] : columns) {
                std::string cell = "-";
                for (const auto& check : inst.checks)
                    if (check.name == name)
                        cell = check.ok ? "ok" : "FAIL";
                out += " " + pad(cell, 5);
            }
            out += "\n";
        }
    for (const auto& cc : rep.cross_checks) {
        out += "[cross-check] " + cc.name + ": " + (cc.ok ? "ok" : "FAIL") + "\n";
        for (const auto& d : cc.details)
            out += "    " + d + "\n";
    }
    for (const auto& fam : rep.families)
        for (const auto& inst : fam.instances)
            for (const auto& note : inst.notes)
                out += "[note] " + inst.label + ": " + note + "\n";
    out += "families: " + std::to_string(rep.families_checked) +
           ", instances: " + std::to_string(rep.instances_checked) + ", " +
           (rep.ok ? "all expectations met" : "EXPECTATION MISMATCHES") + "\n";
    return out;
}

}  // namespace detail

/// Executes one subcommand. Exit codes: 0 pass, 1 check failed, 2 input or
/// usage error. Output is deterministic for identical inputs.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"exact verifier for Yang-Baxter structures on gl2"};
    app.name("ybx");
    app.require_subcommand(1);

    std::string algebra_path, tensor_path, op_path, auto_path, out_path;
    std::string format = "text", weight_str = "1", on_what, which = "theorem3", only;
    bool emit_images = false;

    auto add_common = [&](CLI::App* cmd, bool needs_algebra) {
        if (needs_algebra)
            cmd->add_option("--algebra", algebra_path, "algebra file")->required();
        cmd->add_option("--out", out_path, "write the result to a file");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* cmd_cybe = app.add_subcommand("check-cybe", "Yang-Baxter equation defect");
    add_common(cmd_cybe, true);
    cmd_cybe->add_option("--tensor", tensor_path, "tensor file")->required();

    auto* cmd_rb = app.add_subcommand("check-rb", "Rota-Baxter identity");
    add_common(cmd_rb, true);
    cmd_rb->add_option("--op", op_path, "operator file")->required();
    cmd_rb->add_option("--weight", weight_str, "weight scalar")->required();

    auto* cmd_rb3 = app.add_subcommand("check-rb3", "symmetric-part identity");
    add_common(cmd_rb3, true);
    cmd_rb3->add_option("--op", op_path, "operator file")->required();

    auto* cmd_rb1 = app.add_subcommand("check-rb1", "kernel identity");
    add_common(cmd_rb1, true);
    cmd_rb1->add_option("--op", op_path, "operator file")->required();

    auto* cmd_use = app.add_subcommand("check-usE", "central sum condition");
    add_common(cmd_use, true);
    cmd_use->add_option("--op", op_path, "operator file")->required();

    auto* cmd_infer = app.add_subcommand("infer-weight", "weight from R+R* on [L,L]");
    add_common(cmd_infer, true);
    cmd_infer->add_option("--op", op_path, "operator file")->required();

    auto* cmd_adj = app.add_subcommand("adjoint", "form adjoint of an operator");
    add_common(cmd_adj, true);
    cmd_adj->add_option("--op", op_path, "operator file")->required();

    auto* cmd_tot = app.add_subcommand("to-tensor", "tensor of an operator");
    add_common(cmd_tot, true);
    cmd_tot->add_option("--op", op_path, "operator file")->required();

    auto* cmd_too = app.add_subcommand("to-operator", "operator of a tensor");
    add_common(cmd_too, true);
    cmd_too->add_option("--tensor", tensor_path, "tensor file")->required();

    auto* cmd_cob = app.add_subcommand("cobracket", "induced cobracket images");
    add_common(cmd_cob, true);
    cmd_cob->add_option("--tensor", tensor_path, "tensor file")->required();
    cmd_cob->add_flag("--emit-images", emit_images, "write the images as JSON");

    auto* cmd_bialg =
        app.add_subcommand("check-bialgebra", "cocycle, co-skew and co-Jacobi checks");
    add_common(cmd_bialg, true);
    cmd_bialg->add_option("--tensor", tensor_path, "tensor file")->required();

    auto* cmd_act = app.add_subcommand("act", "apply an automorphism");
    add_common(cmd_act, true);
    cmd_act->add_option("--auto", auto_path, "automorphism file")->required();
    cmd_act->add_option("--on", on_what, "what to act on")
        ->required()
        ->check(CLI::IsMember({"op", "tensor"}));
    cmd_act->add_option("--op", op_path, "operator file");
    cmd_act->add_option("--tensor", tensor_path, "tensor file");

    auto* cmd_catalog = app.add_subcommand("catalog", "built-in family catalog");
    cmd_catalog->require_subcommand(1);
    auto* cmd_list = cmd_catalog->add_subcommand("list", "list catalog families");
    cmd_list->add_option("--which", which, "family group")
        ->check(CLI::IsMember({"theorem3", "theorem4", "reduced", "theorem5", "sl2"}));
    cmd_list->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_list->add_option("--out", out_path, "write the result to a file");
    auto* cmd_verify = cmd_catalog->add_subcommand("verify", "verify the catalog");
    cmd_verify->add_option("--only", only, "restrict to families with this id prefix");
    cmd_verify->add_option("--out", out_path, "write the JSON report to a file");
    cmd_verify->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv;
    argv.push_back("ybx");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_cybe)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto r = io::load_tensor(io::read_json_file(tensor_path), alg);
            auto defect = cybe_defect(r);
            bool ok = defect.is_zero();
            if (format == "json") {
                nlohmann::json j = {{"check", "check-cybe"}, {"ok", ok}};
                j["defect"] = io::tensor3_json(defect, detail::tensor_ring(r))["entries"];
                detail::emit(io::dump(j), out_path, out);
            } else {
                detail::emit("CYBE defect: " + tensor_str(defect) + "\n", out_path, out);
            }
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(cmd_rb)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            Poly weight = parse_scalar(weight_str, detail::op_ring(R));
            auto rep = check_rb(R, weight);
            return detail::finish_identity_check(
                "Rota-Baxter identity (weight " + scalar_str(weight) + ")", rep, alg,
                format, out_path, out);
        }
        if (app.got_subcommand(cmd_rb3)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            return detail::finish_identity_check("symmetric-part identity", check_rb3(R),
                                                 alg, format, out_path, out);
        }
        if (app.got_subcommand(cmd_rb1)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            return detail::finish_identity_check("kernel identity", check_rb1(R), alg,
                                                 format, out_path, out);
        }
        if (app.got_subcommand(cmd_use)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            auto res = check_usE(R);
            if (format == "json") {
                nlohmann::json j = {{"check", "check-usE"}, {"ok", res.ok}};
                if (res.ok)
                    j["gamma"] = scalar_str(res.gamma);
                else
                    j["sum"] = element_str(res.sum);
                detail::emit(io::dump(j), out_path, out);
            } else if (res.ok) {
                detail::emit("R(E)+R*(E) = (" + scalar_str(res.gamma) + ")*E\n", out_path,
                             out);
            } else {
                detail::emit("R(E)+R*(E) = " + element_str(res.sum) +
                                 " (not a multiple of E)\n",
                             out_path, out);
            }
            return res.ok ? 0 : 1;
        }
        if (app.got_subcommand(cmd_infer)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            try {
                Poly w = infer_weight(R);
                if (format == "json")
                    detail::emit(io::dump({{"weight", scalar_str(w)}}), out_path, out);
                else
                    detail::emit("weight: " + scalar_str(w) + "\n", out_path, out);
                return 0;
            } catch (const Error& e) {
                if (std::string(e.what()).find("no invariant weight") != std::string::npos) {
                    err << e.what() << "\n";
                    return 1;
                }
                throw;
            }
        }
        if (app.got_subcommand(cmd_adj)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            auto adj = adjoint(R);
            detail::emit(io::dump(io::op_json(adj, detail::op_ring(R))), out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_tot)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto R = io::load_op(io::read_json_file(op_path), alg);
            auto r = op_to_tensor(R);
            detail::emit(io::dump(io::tensor_json(r, detail::op_ring(R))), out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_too)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto r = io::load_tensor(io::read_json_file(tensor_path), alg);
            auto R = tensor_to_op(r);
            detail::emit(io::dump(io::op_json(R, detail::tensor_ring(r))), out_path, out);
            return 0;
        }
        if (app.got_subcommand(cmd_cob)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto r = io::load_tensor(io::read_json_file(tensor_path), alg);
            auto d = cobracket(r);
            if (emit_images || format == "json") {
                nlohmann::json images;
                for (std::size_t k = 0; k < alg->dim(); ++k)
                    images[alg->label(k)] =
                        io::tensor_json(d.images[k], detail::tensor_ring(r))["entries"];
                nlohmann::json j = {{"algebra", alg->name()}, {"images", images}};
                auto ring = detail::tensor_ring(r);
                if (ring && ring->size() > 0)
                    j["params"] = io::ring_json(*ring);
                detail::emit(io::dump(j), out_path, out);
            } else {
                std::string text;
                for (std::size_t k = 0; k < alg->dim(); ++k)
                    text += "delta(" + alg->label(k) +
                            ") = " + tensor_str(d.images[k]) + "\n";
                detail::emit(text, out_path, out);
            }
            return 0;
        }
        if (app.got_subcommand(cmd_bialg)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto r = io::load_tensor(io::read_json_file(tensor_path), alg);
            auto d = cobracket(r);
            bool cocycle = check_cocycle(d);
            bool coskew = check_coskew(d);
            bool cojacobi = check_cojacobi(d);
            bool ok = cocycle && coskew && cojacobi;
            if (format == "json") {
                detail::emit(io::dump({{"cocycle", cocycle},
                                       {"coskew", coskew},
                                       {"cojacobi", cojacobi},
                                       {"ok", ok}}),
                             out_path, out);
            } else {
                std::string text;
                text += std::string("cocycle: ") + (cocycle ? "holds" : "fails") + "\n";
                text += std::string("co-skew: ") + (coskew ? "holds" : "fails") + "\n";
                text += std::string("co-Jacobi: ") + (cojacobi ? "holds" : "fails") + "\n";
                detail::emit(text, out_path, out);
            }
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(cmd_act)) {
            auto alg = io::load_algebra(io::read_json_file(algebra_path));
            auto phi = io::load_auto(io::read_json_file(auto_path), alg);
            if (on_what == "op") {
                if (op_path.empty())
                    throw Error("--on op needs --op");
                auto R = io::load_op(io::read_json_file(op_path), alg);
                auto moved = conjugate_op(phi, R);
                auto ring = io::entries_ring(moved.mat);
                detail::emit(io::dump(io::op_json(moved, ring)), out_path, out);
            } else {
                if (tensor_path.empty())
                    throw Error("--on tensor needs --tensor");
                auto r = io::load_tensor(io::read_json_file(tensor_path), alg);
                auto moved = act_on_tensor(phi, r);
                auto ring = io::entries_ring(moved.coeff);
                detail::emit(io::dump(io::tensor_json(moved, ring)), out_path, out);
            }
            return 0;
        }
        if (app.got_subcommand(cmd_catalog)) {
            static const catalog::Catalog cat;
            if (cmd_catalog->got_subcommand(cmd_list)) {
                auto families = cat.list(which);
                if (format == "json") {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto* f : families) {
                        nlohmann::json jf = {{"id", f->id},
                                             {"kind", f->is_operator() ? "operator" : "tensor"},
                                             {"params", io::ring_json(*f->ring)}};
                        for (const auto& [param, values] : f->finite) {
                            nlohmann::json vals = nlohmann::json::array();
                            for (const auto& v : values)
                                vals.push_back(scalar_str(v));
                            jf["finite"][param] = vals;
                        }
                        if (f->op)
                            jf["images"] = io::op_json(*f->op, f->ring)["images"];
                        else
                            jf["entries"] = io::tensor_json(*f->tensor, f->ring)["entries"];
                        j.push_back(std::move(jf));
                    }
                    detail::emit(io::dump(j), out_path, out);
                } else {
                    std::string text;
                    for (const auto* f : families) {
                        text += f->id + " (" + (f->is_operator() ? "operator" : "tensor") +
                                ")";
                        std::string params;
                        for (const auto& d : f->ring->params())
                            params += (params.empty() ? "" : ", ") + d.name +
                                      (d.nonzero ? " (nonzero)" : "");
                        for (const auto& [param, values] : f->finite) {
                            std::string vals;
                            for (const auto& v : values)
                                vals += (vals.empty() ? "" : ",") + scalar_str(v);
                            params += " [" + param + " in {" + vals + "}]";
                        }
                        if (!params.empty())
                            text += ": " + params;
                        text += "\n";
                    }
                    text += std::to_string(families.size()) + " families\n";
                    detail::emit(text, out_path, out);
                }
                return 0;
            }
            auto report = catalog::verify_all(cat, only);
            if (!out_path.empty())
                io::write_text_file(out_path, io::dump(io::report_json(report)));
            if (format == "json")
                out << io::dump(io::report_json(report));
            else
                out << detail::summary_table(report);
            return report.ok ? 0 : 1;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ybx::cli
