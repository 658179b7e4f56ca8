#include "tistab/cli.h"

#include <CLI11.hpp>

#include <sstream>

#include "tistab/cluster.h"
#include "tistab/codebook.h"
#include "tistab/io.h"
#include "tistab/smallscale.h"

namespace tistab {

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

Exponent parse_box(const std::string &text, size_t dim) {
    Exponent box;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("bad box entry '" + item + "'");
        }
        box.push_back(v);
    }
    if (box.size() != dim) {
        throw std::invalid_argument("box needs " + std::to_string(dim) + " entries");
    }
    return box;
}

json generators_json(const GeneratorMap &m) {
    json out = json::array();
    for (size_t c = 0; c < m.cols(); c++) {
        json col = json::array();
        for (size_t r = 0; r < m.rows(); r++) {
            col.push_back(poly_to_json(m.at(r, c)));
        }
        out.push_back(col);
    }
    return out;
}

std::string columns_text(const GeneratorMap &m) {
    std::string s;
    for (size_t c = 0; c < m.cols(); c++) {
        s += "  (";
        for (size_t r = 0; r < m.rows(); r++) {
            s += (r ? ", " : "") + m.at(r, c).str();
        }
        s += ")\n";
    }
    return s;
}

json report_json(const CheckReport &r) {
    return {{"name", r.name}, {"passed", r.passed}, {"deviation", r.deviation},
            {"tolerance", r.tolerance}, {"detail", r.detail}};
}

struct Context {
    bool json_out = false;
    std::string output;
    std::ostream &out;

    // Emits a produced code: JSON code file or a text summary; optionally saved.
    void emit_code(const CodeSpec &code, const std::string &summary) const {
        if (!output.empty()) {
            save_code(code, output);
        }
        if (json_out) {
            out << serialize_code(code);
            return;
        }
        out << summary;
        out << code.name << ": dim " << code.dim << ", " << code.q << " qubits per site, "
            << code.num_generators() << " generators" << (code.css ? " (css)" : "") << "\n";
        out << render_diagram(code.sigma) << "\n";
    }
};

int run_verify(const Context &ctx, const CodeSpec &code) {
    StabilizerReport r = verify_stabilizer(code);
    if (ctx.json_out) {
        json j = {{"code", code.name}, {"commuting", r.commuting}};
        if (!r.commuting) {
            j["row"] = r.row;
            j["col"] = r.col;
            j["witness"] = poly_to_json(r.witness);
        }
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << code.name << ": " << r.str() << "\n";
    }
    return r.commuting ? kPass : kFail;
}

int run_kernel(const Context &ctx, const CodeSpec &code, const std::string &box_text,
               const std::vector<std::string> &certify) {
    KernelBasis k = bounded_kernel(code.sigma, parse_box(box_text, code.dim));
    std::vector<CertificationReport> reports;
    for (const std::string &s : certify) {
        reports.push_back(certify_on_torus(k, TorusShape::parse(s)));
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
    if (ctx.json_out) {
        json certs = json::array();
        for (const auto &r : reports) {
            certs.push_back({{"shape", r.shape.str()},
                             {"kernel_dim", r.kernel_dim},
                             {"span_dim", r.span_dim},
                             {"deficit", r.deficit},
                             {"contained", r.contained},
                             {"locally_complete", r.locally_complete},
                             {"passed", r.passed()}});
        }
        ctx.out << json{{"code", code.name}, {"generators", generators_json(k.generators)}, {"certification", certs}}
                       .dump(2)
                << "\n";
    } else {
        ctx.out << k.size() << " kernel generators in box " << exponent_str(k.box) << ":\n"
                << columns_text(k.generators);
        for (const auto &r : reports) {
            ctx.out << r.str() << "\n";
        }
    }
    return ok ? kPass : kFail;
}

int run_logical(const Context &ctx, const CodeSpec &code, const std::vector<std::string> &lengths) {
    bool ok = true;
    json all = json::array();
    for (const std::string &l : lengths) {
        TorusShape shape = TorusShape::parse(l);
        CountReport c = count_logical(code, shape);
        GapReport g = logical_operator_gap(code, shape);
        ok = ok && c.consistent() && g.consistent;
        if (ctx.json_out) {
            all.push_back({{"shape", shape.str()},
                           {"n_qubits", c.n_qubits},
                           {"stab_rank", c.stab_rank},
                           {"k", c.k_encoded},
                           {"bulk_term", c.bulk_term},
                           {"c_constant", c.c_constant},
                           {"consistent", c.consistent()},
                           {"gap", g.gap},
                           {"gap_consistent", g.consistent}});
        } else {
            ctx.out << c.str() << "\n" << g.str() << "\n";
        }
    }
    if (ctx.json_out) {
        ctx.out << json{{"code", code.name}, {"tori", all}}.dump(2) << "\n";
    }
    return ok ? kPass : kFail;
}

int run_duality(const Context &ctx, const CodeSpec &code, const std::optional<Exponent> &box) {
    DualityReport r = double_gauge_check(code, box);
    if (ctx.json_out) {
        ctx.out << json{{"code", code.name}, {"x_route", r.x_route}, {"z_route", r.z_route},
                        {"differences", r.differences}, {"passed", r.passed()}}
                       .dump(2)
                << "\n";
    } else {
        ctx.out << code.name << "\n" << r.str();
    }
    return r.passed() ? kPass : kFail;
}

SymmetryModel model_for_cluster(const CodeSpec &code) {
    if (code.css && code.n_x == 0) {
        return SymmetryModel::from_code(code);
    }
    return ungauge_css(code);
}

int run_cluster(const Context &ctx, const CodeSpec &code, const std::string &sublattice) {
    ClusterSpec c = build_cluster(model_for_cluster(code));
    CodeSpec cluster = c.to_code("cluster_" + code.name);
    bool commuting = verify_stabilizer(cluster).commuting;
    bool sre = sre_witness(c);
    if (sublattice.empty()) {
        std::ostringstream summary;
        summary << "commuting: " << (commuting ? "yes" : "no") << "\nCZ layer to single-site X: "
                << (sre ? "yes" : "no") << "\n";
        ctx.emit_code(cluster, summary.str());
        return commuting && sre ? kPass : kFail;
    }
    Sublattice which = parse_sublattice(sublattice);
    CodeSpec gauged = gauge_sublattice(c, which);
    std::ostringstream summary;
    bool ok = commuting && sre;
    if (which == Sublattice::both) {
        SelfDualityReport r = self_duality_check(c);
        ok = ok && r.passed();
        summary << r.str();
    }
    if (ctx.json_out && which == Sublattice::both) {
        json j = code_to_json(gauged);
        ctx.out << json{{"code", j}, {"self_dual", ok}}.dump(2) << "\n";
        if (!ctx.output.empty()) {
            save_code(gauged, ctx.output);
        }
    } else {
        ctx.emit_code(gauged, summary.str());
    }
    return ok ? kPass : kFail;
}

int run_smallscale(const Context &ctx, const CodeSpec &code, const std::string &lengths, const std::string &checks,
                   size_t cap) {
    SymmetryModel model = SymmetryModel::from_code(code);
    std::vector<CheckReport> reports = run_checks(model, TorusShape::parse(lengths), parse_check_list(checks), cap);
    bool ok = true;
    json all = json::array();
    for (const CheckReport &r : reports) {
        // The local-flux ground space check is informational when exactness fails.
        bool counts = r.name != "groundspace(local flux)";
        ok = ok && (r.passed || !counts);
        if (ctx.json_out) {
            all.push_back(report_json(r));
        } else {
            ctx.out << r.str() << "\n";
        }
    }
    if (ctx.json_out) {
        ctx.out << json{{"model", code.name}, {"shape", lengths}, {"checks", all}, {"passed", ok}}.dump(2) << "\n";
    }
    return ok ? kPass : kFail;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Translation-invariant stabilizer codes over Laurent polynomials, and gauging dualities.",
                 "tistab"};
    app.fallthrough();
    app.require_subcommand(1);
    Context ctx{false, "", out};
    app.add_flag("--json", ctx.json_out, "Machine-readable output");

    std::string file;
    std::string box;
    std::string sublattice;
    std::string lengths;
    std::string checks = "all";
    std::string code_name;
    std::vector<std::string> certify;
    std::vector<std::string> tori;
    size_t cap = kDefaultQubitCap;

    auto add_file = [&](CLI::App *sub) { sub->add_option("file", file, "Code file (JSON)")->required(); };
    auto add_output = [&](CLI::App *sub) { sub->add_option("-o,--output", ctx.output, "Write the produced code file"); };

    CLI::App *verify = app.add_subcommand("verify", "Check that all stabilizer translates commute");
    add_file(verify);
    CLI::App *gauge_cmd = app.add_subcommand("gauge", "Gauge a Z-only symmetry model into a CSS code");
    add_file(gauge_cmd);
    gauge_cmd->add_option("--box", box, "Kernel search box a,b,..");
    add_output(gauge_cmd);
    CLI::App *ungauge_cmd = app.add_subcommand("ungauge", "Ungauge a CSS code through its X stabilizers");
    add_file(ungauge_cmd);
    ungauge_cmd->add_option("--box", box, "Kernel search box a,b,..");
    add_output(ungauge_cmd);
    CLI::App *kernel = app.add_subcommand("kernel", "Local generators of the kernel of the generator map");
    add_file(kernel);
    kernel->add_option("--box", box, "Search box a,b,..")->required();
    kernel->add_option("--certify", certify, "Torus lengths L1,L2,.. (repeatable)");
    CLI::App *logical = app.add_subcommand("logical", "Encoded qubits on tori");
    add_file(logical);
    logical->add_option("--lengths", tori, "Torus lengths L1,L2,.. (repeatable)")->required();
    CLI::App *duality = app.add_subcommand("duality-check", "Ungauge then gauge through X and through Z");
    add_file(duality);
    duality->add_option("--box", box, "Kernel search box a,b,..");
    CLI::App *cluster = app.add_subcommand("cluster", "Cluster model on the bipartite graph of the constraints");
    add_file(cluster);
    cluster->add_option("--gauge-sublattice", sublattice, "matter, gauge or both")
        ->check(CLI::IsMember({"matter", "gauge", "both"}));
    add_output(cluster);
    CLI::App *render = app.add_subcommand("render", "ASCII pictures of the generators");
    add_file(render);
    CLI::App *smallscale = app.add_subcommand("smallscale", "Dense checks of the gauging maps on a tiny torus");
    smallscale->add_option("--model", file, "Z-only model file")->required();
    smallscale->add_option("--lengths", lengths, "Torus lengths L1,L2,..")->required();
    smallscale->add_option("--check", checks, "all|lemma2|lemma3|claim1|elements|groundspace (comma list)");
    smallscale->add_option("--cap", cap, "Qubit cap");
    CLI::App *codebook = app.add_subcommand("codebook", "Built-in codes");
    codebook->require_subcommand(1);
    CLI::App *list = codebook->add_subcommand("list", "List code names");
    CLI::App *dump = codebook->add_subcommand("dump", "Print a code file");
    dump->add_option("name", code_name, "Code name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        auto opt_box = [&](size_t dim) -> std::optional<Exponent> {
            if (box.empty()) {
                return std::nullopt;
            }
            return parse_box(box, dim);
        };
        if (*codebook) {
            if (*list) {
                if (ctx.json_out) {
                    out << json(codebook_names()).dump(2) << "\n";
                } else {
                    for (const auto &n : codebook_names()) {
                        out << n << "\n";
                    }
                }
                return kPass;
            }
            out << serialize_code(get_code(code_name));
            return kPass;
        }
        CodeSpec code = load_code(file);
        if (*verify) {
            return run_verify(ctx, code);
        }
        if (*gauge_cmd) {
            SymmetryModel model = SymmetryModel::from_code(code);
            GaugingComplex g = gauge(model, opt_box(code.dim), "gauged_" + code.name);
            std::string note = g.mu_locally_complete ? "" : "warning: flux generators not locally complete\n";
            ctx.emit_code(g.code, note);
            return kPass;
        }
        if (*ungauge_cmd) {
            SymmetryModel model = ungauge_css(code, opt_box(code.dim));
            CodeSpec out_code = model.to_code("ungauged_" + code.name);
            std::string summary = std::to_string(model.phi.cols()) + " local symmetry generators\n";
            ctx.emit_code(out_code, summary);
            return kPass;
        }
        if (*kernel) {
            return run_kernel(ctx, code, box, certify);
        }
        if (*logical) {
            return run_logical(ctx, code, tori);
        }
        if (*duality) {
            return run_duality(ctx, code, opt_box(code.dim));
        }
        if (*cluster) {
            return run_cluster(ctx, code, sublattice);
        }
        if (*render) {
            if (ctx.json_out) {
                json pics = json::array();
                for (size_t g = 0; g < code.num_generators(); g++) {
                    pics.push_back(render_diagram(code.generator(g)));
                }
                out << json{{"code", code.name}, {"generators", pics}}.dump(2) << "\n";
            } else {
                out << render_diagram(code.sigma) << "\n";
            }
            return kPass;
        }
        if (*smallscale) {
            return run_smallscale(ctx, code, lengths, checks, cap);
        }
    } catch (const NotSymmetricError &e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv = {"tistab"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return cli_main(int(argv.size()), argv.data(), out, err);
}

}  // namespace tistab
