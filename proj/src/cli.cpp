#include "bottchern/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "bottchern/catalog.hpp"
#include "bottchern/cohomology.hpp"
#include "bottchern/formality.hpp"
#include "bottchern/textio.hpp"

namespace bc {

namespace {

using nlohmann::json;

Theory theory_from_flag(const std::string& s) {
    if (s == "bc" || s == "bottchern" || s == "bott-chern") return Theory::bott_chern;
    if (s == "aeppli") return Theory::aeppli;
    if (s == "dolbeault") return Theory::dolbeault;
    if (s == "partial") return Theory::partial;
    if (s == "derham") return Theory::de_rham;
    throw Error("unknown theory '" + s + "'");
}

std::pair<int, int> parse_bidegree(const std::string& s) {
    auto comma = s.find(',');
    try {
        if (comma != std::string::npos)
            return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
    }
    throw Error("--bidegree expects 'p,q'");
}

struct LoadedModel {
    ModelDocument doc;
    std::string origin;  // catalog name or file path
};

LoadedModel load_model(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open model file '" + file + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        ModelDocument doc = parse_model(text);
        return {std::move(doc), file};
    }
    if (name.empty()) throw Error("no model given (name a catalog model or use --model-file)");
    const catalog::CatalogEntry& entry = catalog::builtin(name);
    ModelDocument doc{entry.model, default_generator_names(entry.model.dim()), {}};
    doc.generator_weights.assign(entry.model.dim(), std::nullopt);
    return {std::move(doc), name};
}

json weight_json(const Weight& w) { return json::array({w.a, w.b}); }

json form_json(const Form& f, const std::vector<std::string>& names) {
    return to_string(f, names);
}

// Renders the aggregated dimensions as the usual centered triangle, row k
// holding h^{p,q} with p+q=k and p decreasing left to right.
void print_triangle(std::ostream& out, int n, const json& dims) {
    int width = 3;
    for (auto& [key, value] : dims.items())
        width = std::max(width, (int)std::to_string(value.get<int>()).size() + 1);
    int row_len = (n + 1) * width;
    for (int k = 0; k <= 2 * n; ++k) {
        std::string row;
        for (int p = std::min(n, k); p >= std::max(0, k - n); --p) {
            int q = k - p;
            std::string cell = dims.at(std::to_string(p) + "," + std::to_string(q)).dump();
            row += std::string(width - cell.size(), ' ') + cell;
        }
        int pad = (row_len - (int)row.size()) / 2;
        out << std::string(std::max(0, pad), ' ') << row << "\n";
    }
}

struct Printer {
    std::ostream& out;
    bool as_json;

    void emit(const json& doc, const std::function<void(const json&)>& text_renderer) const {
        if (as_json)
            out << doc.dump(2) << "\n";
        else
            text_renderer(doc);
    }
};

std::string sector_label(const json& s) {
    std::string label = "(" + s["p"].dump() + "," + s["q"].dump() + ")";
    auto w = s["weight"];
    if (w[0].get<int>() != 0 || w[1].get<int>() != 0)
        label += " weight (" + w[0].dump() + "," + w[1].dump() + ")";
    return label;
}

int command_list(const Printer& pr) {
    json doc;
    doc["models"] = json::array();
    for (const std::string& name : catalog::names()) {
        const auto& e = catalog::builtin(name);
        doc["models"].push_back({{"name", name}, {"dim", e.model.dim()}, {"notes", e.notes}});
    }
    pr.emit(doc, [&](const json& d) {
        for (const auto& m : d["models"])
            pr.out << m["name"].get<std::string>() << "  (n=" << m["dim"] << ")  "
                   << m["notes"].get<std::string>() << "\n";
    });
    return 0;
}

int command_validate(const Printer& pr, const LoadedModel& lm) {
    ValidationReport report = lm.doc.model.validate();
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["ok"] = report.ok();
    doc["issues"] = json::array();
    for (const auto& issue : report.issues)
        doc["issues"].push_back({{"kind", issue.kind},
                                 {"where", issue.where},
                                 {"residual", to_string(issue.residual, lm.doc.generator_names)},
                                 {"detail", issue.detail}});
    pr.emit(doc, [&](const json& d) {
        pr.out << "model " << d["model"].get<std::string>() << ": "
               << (d["ok"].get<bool>() ? "valid" : "INVALID") << "\n";
        for (const auto& i : d["issues"])
            pr.out << "  " << i["kind"].get<std::string>() << " at "
                   << i["where"].get<std::string>() << ": " << i["detail"].get<std::string>()
                   << "  [residual: " << i["residual"].get<std::string>() << "]\n";
    });
    return report.ok() ? 0 : 1;
}

int command_cohomology(const Printer& pr, const LoadedModel& lm, const std::string& theory_flag,
                       const std::string& bidegree, int degree) {
    Bicomplex bx(lm.doc.model);
    const auto& names = lm.doc.generator_names;
    Theory t = theory_from_flag(theory_flag);
    int n = bx.dim();
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["theory"] = to_string(t);
    doc["n"] = n;

    if (t == Theory::de_rham) {
        doc["betti"] = json::array();
        doc["degrees"] = json::array();
        int k_lo = 0, k_hi = 2 * n;
        if (degree >= 0) k_lo = k_hi = degree;
        for (int k = 0; k <= 2 * n; ++k) doc["betti"].push_back(bx.betti_over_window(k));
        for (int k = k_lo; k <= k_hi; ++k)
            for (Weight w : bx.model().window_weights()) {
                const CohomologyGroup& g = bx.de_rham_group(k, w);
                if (g.dim() == 0 && !w.is_zero()) continue;
                json entry{{"k", k}, {"weight", weight_json(w)}, {"dim", g.dim()}};
                entry["representatives"] = json::array();
                for (const Form& r : g.representatives)
                    entry["representatives"].push_back(form_json(r, names));
                doc["degrees"].push_back(entry);
            }
        pr.emit(doc, [&](const json& d) {
            pr.out << "de Rham Betti numbers of " << d["model"].get<std::string>() << ": ";
            for (const auto& b : d["betti"]) pr.out << b << " ";
            pr.out << "\n";
            for (const auto& s : d["degrees"]) {
                pr.out << "k=" << s["k"] << " weight (" << s["weight"][0] << ","
                       << s["weight"][1] << ")  dim " << s["dim"] << "\n";
                for (const auto& r : s["representatives"])
                    pr.out << "    " << r.get<std::string>() << "\n";
            }
        });
        return 0;
    }

    int p_only = -1, q_only = -1;
    if (!bidegree.empty()) std::tie(p_only, q_only) = parse_bidegree(bidegree);

    doc["dims"] = json::object();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            doc["dims"][std::to_string(p) + "," + std::to_string(q)] =
                bx.dim_over_window(t, p, q);
    doc["sectors"] = json::array();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (p_only >= 0 && (p != p_only || q != q_only)) continue;
            for (Weight w : bx.model().window_weights()) {
                const CohomologyGroup& g = bx.group(t, p, q, w);
                if (g.dim() == 0 && p_only < 0) continue;
                json entry{{"p", p}, {"q", q}, {"weight", weight_json(w)}, {"dim", g.dim()}};
                entry["representatives"] = json::array();
                for (const Form& r : g.representatives)
                    entry["representatives"].push_back(form_json(r, names));
                doc["sectors"].push_back(entry);
            }
        }
    pr.emit(doc, [&](const json& d) {
        pr.out << to_string(t) << " dimensions of " << d["model"].get<std::string>() << ":\n";
        print_triangle(pr.out, n, d["dims"]);
        for (const auto& s : d["sectors"]) {
            if (s["dim"].get<int>() == 0) continue;
            pr.out << sector_label(s) << "  dim " << s["dim"] << "\n";
            for (const auto& r : s["representatives"])
                pr.out << "    " << r.get<std::string>() << "\n";
        }
    });
    return 0;
}

int command_harmonic(const Printer& pr, const LoadedModel& lm, const std::string& theory_flag,
                     const std::string& bidegree) {
    Bicomplex bx(lm.doc.model);
    const auto& names = lm.doc.generator_names;
    Theory t = theory_from_flag(theory_flag);
    if (!is_laplacian_theory(t))
        throw Error("harmonic spaces exist for bc|aeppli|dolbeault");
    int n = bx.dim();
    int p_only = -1, q_only = -1;
    if (!bidegree.empty()) std::tie(p_only, q_only) = parse_bidegree(bidegree);
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["theory"] = to_string(t);
    doc["n"] = n;
    doc["dims"] = json::object();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            doc["dims"][std::to_string(p) + "," + std::to_string(q)] =
                bx.harmonic_dim_over_hodge_weights(t, p, q);
    doc["sectors"] = json::array();
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (p_only >= 0 && (p != p_only || q != q_only)) continue;
            for (Weight w : bx.model().hodge_weights()) {
                const HarmonicSpace& h = bx.harmonic(t, p, q, w);
                if (h.dim() == 0 && p_only < 0) continue;
                json entry{{"p", p}, {"q", q}, {"weight", weight_json(w)}, {"dim", h.dim()}};
                entry["basis"] = json::array();
                for (const Form& r : h.basis) entry["basis"].push_back(form_json(r, names));
                doc["sectors"].push_back(entry);
            }
        }
    pr.emit(doc, [&](const json& d) {
        pr.out << "ker Laplacian (" << to_string(t) << ") of " << d["model"].get<std::string>()
               << ":\n";
        print_triangle(pr.out, n, d["dims"]);
        for (const auto& s : d["sectors"]) {
            if (s["dim"].get<int>() == 0) continue;
            pr.out << sector_label(s) << "  dim " << s["dim"] << "\n";
            for (const auto& r : s["basis"]) pr.out << "    " << r.get<std::string>() << "\n";
        }
    });
    return 0;
}

int command_formality(const Printer& pr, const LoadedModel& lm, const std::string& theory_flag) {
    Bicomplex bx(lm.doc.model);
    Theory t = theory_from_flag(theory_flag);
    if (t != Theory::bott_chern && t != Theory::dolbeault)
        throw Error("formality is decided for bc|dolbeault");
    FormalityVerdict v = is_geometrically_formal(bx, t);
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["theory"] = to_string(t);
    doc["formal"] = v.formal;
    if (v.witness) {
        doc["witness"] = {{"left", form_json(v.witness->first, lm.doc.generator_names)},
                          {"right", form_json(v.witness->second, lm.doc.generator_names)}};
    } else {
        doc["witness"] = nullptr;
    }
    pr.emit(doc, [&](const json& d) {
        pr.out << d["model"].get<std::string>() << " is "
               << (d["formal"].get<bool>() ? "FORMAL" : "NOT FORMAL") << " for theory "
               << d["theory"].get<std::string>() << "\n";
        if (!d["witness"].is_null())
            pr.out << "  witness: (" << d["witness"]["left"].get<std::string>() << ") ^ ("
                   << d["witness"]["right"].get<std::string>() << ") is not harmonic\n";
    });
    return 0;
}

int command_massey(const Printer& pr, const LoadedModel& lm, const std::string& fa,
                   const std::string& fb, const std::string& fc, std::ostream& err) {
    Bicomplex bx(lm.doc.model);
    const auto& names = lm.doc.generator_names;
    MasseyInput input{parse_form(fa, names), parse_form(fb, names), parse_form(fc, names)};
    MasseyResult r;
    try {
        r = massey_abc(bx, input);
    } catch (const ProductNotExact& e) {
        err << "massey: undefined: " << e.what() << "\n";
        return 2;
    } catch (const NotACocycle& e) {
        err << "massey: undefined: " << e.what() << "\n";
        return 2;
    }
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["inputs"] = {{"a", form_json(input.a12, names)},
                     {"b", form_json(input.a23, names)},
                     {"c", form_json(input.a34, names)}};
    doc["alpha13"] = form_json(r.alpha13, names);
    doc["alpha24"] = form_json(r.alpha24, names);
    doc["representative"] = form_json(r.rho, names);
    doc["targetBidegree"] = json::array({r.target_p, r.target_q});
    doc["targetWeight"] = weight_json(r.target_weight);
    doc["aeppliDim"] = r.aeppli_dim;
    doc["indeterminacyDim"] = r.indeterminacy.dim();
    doc["quotientDim"] = r.quotient_dim();
    doc["classCoordinates"] = json::array();
    for (const GaussQ& c : r.rho_class) doc["classCoordinates"].push_back(to_string(c));
    doc["vanishes"] = r.vanishes;
    pr.emit(doc, [&](const json& d) {
        pr.out << "massey product on " << d["model"].get<std::string>() << ": "
               << (d["vanishes"].get<bool>() ? "VANISHES" : "NON-VANISHING") << "\n";
        pr.out << "  representative: " << d["representative"].get<std::string>() << "\n";
        pr.out << "  potentials: alpha13 = " << d["alpha13"].get<std::string>()
               << ", alpha24 = " << d["alpha24"].get<std::string>() << "\n";
        pr.out << "  target: H_A^(" << d["targetBidegree"][0] << "," << d["targetBidegree"][1]
               << ") dim " << d["aeppliDim"] << ", indeterminacy dim " << d["indeterminacyDim"]
               << ", quotient dim " << d["quotientDim"] << "\n";
    });
    return 0;
}

int command_obstructions(const Printer& pr, const LoadedModel& lm, std::size_t budget) {
    Bicomplex bx(lm.doc.model);
    const auto& names = lm.doc.generator_names;
    ObstructionReport r = obstruction_report(bx, budget);
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["classes"] = r.classes_scanned;
    doc["pairsVanishing"] = r.pairs_vanishing;
    doc["triplesEvaluated"] = r.triples_evaluated;
    doc["windowLimited"] = r.window_limited;
    doc["metricFormal"] = r.metric_verdict.formal;
    doc["modelObstructed"] = r.obstructed();
    doc["verdict"] = r.obstructed()
                         ? "not geometrically-Bott-Chern-formal"
                         : (r.metric_verdict.formal ? "geometrically-Bott-Chern-formal"
                                                    : "no Massey obstruction found");
    doc["nonvanishing"] = json::array();
    for (const auto& f : r.nonvanishing)
        doc["nonvanishing"].push_back({{"a", form_json(f.a12, names)},
                                       {"b", form_json(f.a23, names)},
                                       {"c", form_json(f.a34, names)},
                                       {"representative", form_json(f.result.rho, names)}});
    pr.emit(doc, [&](const json& d) {
        pr.out << "obstruction scan of " << d["model"].get<std::string>() << ": "
               << d["verdict"].get<std::string>() << "\n";
        pr.out << "  classes " << d["classes"] << ", vanishing pairs " << d["pairsVanishing"]
               << ", triples evaluated " << d["triplesEvaluated"] << ", window-limited "
               << d["windowLimited"] << "\n";
        pr.out << "  declared metric formal: " << (d["metricFormal"].get<bool>() ? "yes" : "no")
               << "\n";
        for (const auto& f : d["nonvanishing"])
            pr.out << "  non-vanishing: <" << f["a"].get<std::string>() << ", "
                   << f["b"].get<std::string>() << ", " << f["c"].get<std::string>()
                   << "> = " << f["representative"].get<std::string>() << "\n";
    });
    return 0;
}

int command_delta(const Printer& pr, const LoadedModel& lm) {
    Bicomplex bx(lm.doc.model);
    json doc;
    doc["model"] = lm.doc.model.name();
    doc["delta"] = json::array();
    for (int k = 0; k <= 2 * bx.dim(); ++k) doc["delta"].push_back(delta_k(bx, k));
    doc["ddbarLemma"] = ddbar_lemma(bx);
    pr.emit(doc, [&](const json& d) {
        pr.out << "non-Kaehler degrees of " << d["model"].get<std::string>() << ": ";
        for (const auto& v : d["delta"]) pr.out << v << " ";
        pr.out << "\n  del-delbar lemma: " << (d["ddbarLemma"].get<bool>() ? "holds" : "fails")
               << "\n";
    });
    return 0;
}

int command_surfaces(const Printer& pr, const std::string& table_name,
                     const std::string& check_file) {
    json doc;
    doc["tables"] = json::array();
    for (const auto& t : catalog::surface_regression_tables()) {
        if (!table_name.empty() && t.name != table_name) continue;
        json entry{{"name", t.name}, {"displayName", t.display_name}, {"notes", t.notes}};
        entry["dolbeaultKernel"] = json::array();
        for (const Form& f : t.dolbeault_kernel)
            entry["dolbeaultKernel"].push_back(to_string(f));
        entry["bottChernKernel"] = json::array();
        for (const Form& f : t.bott_chern_kernel)
            entry["bottChernKernel"].push_back(to_string(f));
        doc["tables"].push_back(entry);
    }
    if (!check_file.empty()) {
        if (table_name.empty()) throw Error("--check-model needs --table");
        LoadedModel lm = load_model("", check_file);
        Bicomplex bx(lm.doc.model);
        catalog::SurfaceCheck check =
            catalog::check_surface(bx, catalog::surface_table(table_name));
        json c{{"table", check.table}, {"ok", check.ok}, {"mismatches", json::array()}};
        for (const auto& m : check.mismatches)
            c["mismatches"].push_back({{"theory", to_string(m.theory)},
                                       {"p", m.p},
                                       {"q", m.q},
                                       {"expectedDim", m.expected_dim},
                                       {"computedDim", m.computed_dim},
                                       {"spanEqual", m.span_equal}});
        doc["check"] = c;
    }
    pr.emit(doc, [&](const json& d) {
        for (const auto& t : d["tables"]) {
            pr.out << t["name"].get<std::string>() << " (" << t["displayName"].get<std::string>()
                   << ")\n";
            pr.out << "  ker Dolbeault Laplacian:\n";
            for (const auto& f : t["dolbeaultKernel"])
                pr.out << "    " << f.get<std::string>() << "\n";
            pr.out << "  ker Bott-Chern Laplacian:\n";
            for (const auto& f : t["bottChernKernel"])
                pr.out << "    " << f.get<std::string>() << "\n";
        }
        if (d.contains("check")) {
            const auto& c = d["check"];
            pr.out << "check against " << c["table"].get<std::string>() << ": "
                   << (c["ok"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
            for (const auto& m : c["mismatches"])
                pr.out << "  " << m["theory"].get<std::string>() << " (" << m["p"] << ","
                       << m["q"] << "): expected dim " << m["expectedDim"] << ", computed "
                       << m["computedDim"] << "\n";
        }
    });
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Bott-Chern / Aeppli cohomology and formality calculator"};
    app.require_subcommand(1);

    std::string format;
    if (const char* env = std::getenv("BOTTCHERN_FORMAT")) format = env;
    if (format.empty()) format = "text";
    app.add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string model_file;
    app.add_option("--model-file", model_file, "read the model from a document file");

    std::string model_name, theory = "bc", bidegree, fa, fb, fc, table, check_file;
    int degree = -1;
    std::size_t budget = 250000;

    CLI::App* c_list = app.add_subcommand("list", "list the built-in models");
    CLI::App* c_validate = app.add_subcommand("validate", "check structure equations");
    c_validate->add_option("model", model_name);
    CLI::App* c_cohom = app.add_subcommand("cohomology", "compute cohomology dimensions");
    c_cohom->add_option("model", model_name);
    c_cohom->add_option("--theory", theory, "bc|aeppli|dolbeault|partial|derham");
    c_cohom->add_option("--bidegree", bidegree, "restrict to one bidegree p,q");
    c_cohom->add_option("--degree", degree, "restrict de Rham output to one degree");
    CLI::App* c_harm = app.add_subcommand("harmonic", "compute Laplacian kernels");
    c_harm->add_option("model", model_name);
    c_harm->add_option("--theory", theory, "bc|aeppli|dolbeault");
    c_harm->add_option("--bidegree", bidegree, "restrict to one bidegree p,q");
    CLI::App* c_formal = app.add_subcommand("formality", "decide geometric formality");
    c_formal->add_option("model", model_name);
    c_formal->add_option("--theory", theory, "bc|dolbeault");
    CLI::App* c_massey = app.add_subcommand("massey", "evaluate a triple Massey product");
    c_massey->add_option("model", model_name);
    c_massey->add_option("--a", fa, "first Bott-Chern cocycle")->required();
    c_massey->add_option("--b", fb, "second Bott-Chern cocycle")->required();
    c_massey->add_option("--c", fc, "third Bott-Chern cocycle")->required();
    CLI::App* c_obstr = app.add_subcommand("obstructions", "scan all Massey triples");
    c_obstr->add_option("model", model_name);
    c_obstr->add_option("--budget", budget, "cap on evaluated triples");
    CLI::App* c_delta = app.add_subcommand("delta", "non-Kaehler degrees and del-delbar lemma");
    c_delta->add_option("model", model_name);
    CLI::App* c_surf = app.add_subcommand("surfaces", "print surface regression tables");
    c_surf->add_option("--table", table, "restrict to one table");
    c_surf->add_option("--check-model", check_file, "cross-check a model file against --table");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    Printer pr{out, format == "json"};
    try {
        if (app.got_subcommand(c_list)) return command_list(pr);
        if (app.got_subcommand(c_surf)) return command_surfaces(pr, table, check_file);
        LoadedModel lm = load_model(model_name, model_file);
        if (app.got_subcommand(c_validate)) return command_validate(pr, lm);
        if (app.got_subcommand(c_cohom))
            return command_cohomology(pr, lm, theory, bidegree, degree);
        if (app.got_subcommand(c_harm)) return command_harmonic(pr, lm, theory, bidegree);
        if (app.got_subcommand(c_formal)) return command_formality(pr, lm, theory);
        if (app.got_subcommand(c_massey)) return command_massey(pr, lm, fa, fb, fc, err);
        if (app.got_subcommand(c_obstr)) return command_obstructions(pr, lm, budget);
        if (app.got_subcommand(c_delta)) return command_delta(pr, lm);
    } catch (const ValidationFailure& e) {
        err << "validation failed:\n";
        for (const auto& issue : e.report.issues)
            err << "  " << issue.kind << " at " << issue.where << ": " << issue.detail << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const WeightOverflow& e) {
        err << "weight window overflow: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace bc
