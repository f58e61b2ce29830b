#include "gyro/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gyro/catalog.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/graph_build.hpp"
#include "gyro/json_io.hpp"
#include "gyro/reproduce.hpp"

namespace gyro {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw argument_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A source is a catalog key or a table-file path; failing tables need
// --allow-errata either way.
GyroGroup resolve_group(const std::string& source, bool allow_errata) {
    const auto known = catalog::keys();
    if (std::find(known.begin(), known.end(), source) != known.end()) {
        const auto& entry = catalog::get(source);
        if (!entry.valid && !allow_errata)
            throw structure_error("catalog entry '" + source +
                                  "' is erratum-tolerant; pass --allow-errata to use it");
        return entry.group;
    }
    return table_from_json(read_file(source), allow_errata);
}

// Generator lists are label tokens, comma-separated; commas inside
// parentheses belong to pair labels like "(3,0)".
std::vector<std::string> split_generator_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') --depth;
        cur += c;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> resolve_generators(const GyroGroup& g, const std::string& spec) {
    std::vector<int> out;
    for (const auto& token : split_generator_tokens(spec)) out.push_back(g.element_of(token));
    if (out.empty()) throw argument_error("empty generator list");
    return out;
}

std::string graph_text(const MultiGraph& g) {
    std::ostringstream out;
    out << to_string(g.kind()) << ": " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges\n";
    for (int id = 0; id < g.vertex_count(); ++id) {
        const auto& v = g.vertex(id);
        out << "  v" << id << " " << v.name;
        if (v.orbit) {
            out << " (";
            for (size_t i = 0; i < v.orbit->orbit.size(); ++i)
                out << (i ? "," : "") << v.orbit->orbit[i];
            out << ")";
        }
        out << "\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << g.vertex(e.u).name << " -- " << g.vertex(e.v).name;
        if (e.p > 1) out << "  [p=" << e.p << "]";
        out << "\n";
    }
    for (const auto& w : g.warnings()) out << "  warning: " << w << "\n";
    return out.str();
}

void print_graph(const MultiGraph& g, const std::string& format, std::ostream& out) {
    if (format == "dot")
        out << emit_dot(g);
    else if (format == "text")
        out << graph_text(g);
    else
        out << graph_to_json(g);
}

int cmd_validate(const std::string& source, const std::string& format, std::ostream& out) {
    std::optional<ValidationReport> report;
    const auto known = catalog::keys();
    if (std::find(known.begin(), known.end(), source) != known.end()) {
        const auto& e = catalog::get(source);
        report = validate(e.group.table(), e.group.identity());
    } else {
        report = validate_table_json(read_file(source));
    }
    if (format == "text")
        out << report->summary();
    else
        out << report_to_json(*report);
    return report->passed() ? kExitOk : kExitValidation;
}

int cmd_info(const GyroGroup& g, std::ostream& out) {
    out << "name: " << g.name() << "\n";
    out << "order: " << g.order() << "\n";
    out << "identity: " << g.label(g.identity()) << "\n";
    out << "element orders:";
    for (int s = 0; s < g.order(); ++s) out << " " << g.label(s) << ":" << order_of(g, s);
    out << "\n";
    out << "gyro-commutative: " << (is_gyrocommutative(g) ? "yes" : "no") << "\n";
    out << "skew left loop property: " << (has_skew_left_loop(g) ? "yes" : "no") << "\n";
    return kExitOk;
}

AnalysisChecks parse_checks(const std::string& spec, std::optional<MultiGraph>& other_storage) {
    AnalysisChecks checks;
    if (spec.empty()) return checks;
    checks.comps = checks.degrees = checks.shape = false;
    for (const auto& item : split_generator_tokens(spec)) {
        if (item == "comps") checks.comps = true;
        else if (item == "degrees") checks.degrees = true;
        else if (item == "shape") checks.shape = true;
        else if (item == "vt") checks.vt = true;
        else if (item == "et") checks.et = true;
        else if (item == "ham") checks.ham = true;
        else if (item.rfind("iso=", 0) == 0) {
            other_storage = graph_from_json(read_file(item.substr(4)));
            checks.iso_other = &*other_storage;
        } else {
            throw argument_error("unknown check '" + item + "'");
        }
    }
    return checks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite gyro-groups, their G-graphs and Cayley graphs"};
    app.name("gyro");
    app.require_subcommand(1);

    std::string source, gens, format = "json", side = "left", checks_spec, other_path;
    bool allow_errata = false, allow_identity = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("source", source, "catalog key or table JSON file")->required();
        cmd->add_flag("--allow-errata", allow_errata, "ingest tables that fail validation");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|dot|text")->check(CLI::IsMember({"json", "dot", "text"}));
    };

    auto* c_validate = app.add_subcommand("validate", "run the axiom checks on a table");
    add_source(c_validate);
    add_format(c_validate);

    auto* c_info = app.add_subcommand("info", "basic facts about a gyro-group");
    add_source(c_info);

    auto* c_ggraph = app.add_subcommand("ggraph", "build the G-graph for a generator set");
    add_source(c_ggraph);
    c_ggraph->add_option("-S,--generators", gens, "comma-separated generator labels")->required();
    c_ggraph->add_flag("--allow-identity", allow_identity,
                       "keep an identity generator as a singleton level");
    add_format(c_ggraph);

    auto* c_cayley = app.add_subcommand("cayley", "build the left/right Cayley graph");
    add_source(c_cayley);
    c_cayley->add_option("-S,--generators", gens, "comma-separated generator labels")->required();
    c_cayley->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
    add_format(c_cayley);

    auto* c_line = app.add_subcommand("linegraph", "line graph of a graph JSON file");
    c_line->add_option("graph", other_path, "graph JSON file")->required();
    add_format(c_line);

    auto* c_analyze = app.add_subcommand("analyze", "structural analysis of a graph JSON file");
    c_analyze->add_option("graph", other_path, "graph JSON file")->required();
    c_analyze->add_option("--checks", checks_spec,
                          "comma list: comps,degrees,shape,vt,et,ham,iso=<other.json>");

    auto* c_catalog = app.add_subcommand("catalog", "embedded tables from the literature");
    auto* c_list = c_catalog->add_subcommand("list", "list keys, orders and errata flags");
    auto* c_dump = c_catalog->add_subcommand("dump", "emit a catalog table as JSON");
    c_dump->add_option("key", source, "catalog key")->required();
    c_catalog->require_subcommand(1);

    auto* c_dih = app.add_subcommand("dihedralize", "dihedralize a gyro-commutative table");
    add_source(c_dih);

    auto* c_repro = app.add_subcommand("reproduce", "re-check every claim and print a table");

    try {
        std::vector<const char*> argv{"gyro"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*c_validate) return cmd_validate(source, format, out);
        if (*c_info) return cmd_info(resolve_group(source, allow_errata), out);
        if (*c_ggraph) {
            const GyroGroup g = resolve_group(source, allow_errata);
            GGraphOptions opts;
            opts.allow_identity_level = allow_identity;
            print_graph(g_graph(g, resolve_generators(g, gens), opts), format, out);
            return kExitOk;
        }
        if (*c_cayley) {
            const GyroGroup g = resolve_group(source, allow_errata);
            const auto S = resolve_generators(g, gens);
            print_graph(side == "left" ? l_cayley(g, S) : r_cayley(g, S), format, out);
            return kExitOk;
        }
        if (*c_line) {
            print_graph(line_graph(graph_from_json(read_file(other_path))), format, out);
            return kExitOk;
        }
        if (*c_analyze) {
            const MultiGraph g = graph_from_json(read_file(other_path));
            std::optional<MultiGraph> other;
            const AnalysisChecks checks = parse_checks(checks_spec, other);
            out << analysis_to_json(analyze(g, checks));
            return kExitOk;
        }
        if (*c_list) {
            for (const auto& e : catalog::entries()) {
                out << e.key << "  order " << e.group.order();
                if (!e.errata.empty()) out << "  [errata: " << e.errata.size() << "]";
                if (!e.valid) out << "  [fails validation]";
                out << "\n";
            }
            return kExitOk;
        }
        if (*c_dump) {
            out << table_to_json(catalog::get(source).group);
            return kExitOk;
        }
        if (*c_dih) {
            out << table_to_json(catalog::dihedralize(resolve_group(source, allow_errata)));
            return kExitOk;
        }
        if (*c_repro) {
            const bool ok = print_claim_table(run_all_claims(), out);
            return ok ? kExitOk : kExitValidation;
        }
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const structure_error& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const lookup_error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const argument_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no command dispatched\n";
    return kExitUsage;
}

}  // namespace gyro
