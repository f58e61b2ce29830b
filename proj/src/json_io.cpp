#include "gyro/json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gyro/errors.hpp"

namespace gyro {

using json = nlohmann::ordered_json;

namespace {

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw argument_error("malformed JSON");
    return j;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

json check_to_json(const CheckResult& r) {
    json j;
    j["status"] = status_name(r.status);
    if (r.witness) j["witness"] = {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

}  // namespace

std::string table_to_json(const GyroGroup& g) {
    json j;
    j["name"] = g.name();
    j["order"] = g.order();
    j["identity"] = g.identity();
    j["labels"] = g.labels();
    j["table"] = g.table();
    return dump_canonical(j);
}

GyroGroup table_from_json(const std::string& text, bool allow_errata) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("table"))
        throw argument_error("table JSON needs at least {order, table}");
    const int n = j["order"].get<int>();
    std::string name = j.value("name", std::string("table"));
    const int identity = j.value("identity", 0);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    auto table = j["table"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n) throw argument_error("order does not match table size");
    if (allow_errata) return GyroGroup::unchecked(std::move(name), std::move(table), identity,
                                                  std::move(labels));
    ValidationReport report = validate(table, identity);
    if (!report.passed())
        throw structure_error("table '" + name + "' failed validation:\n" + report.summary());
    return GyroGroup::unchecked(std::move(name), std::move(table), identity, std::move(labels));
}

ValidationReport validate_table_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("table"))
        throw argument_error("table JSON needs at least {table}");
    auto table = j["table"].get<std::vector<std::vector<int>>>();
    return validate(table, j.value("identity", 0));
}

std::string graph_to_json(const MultiGraph& graph) {
    json j;
    j["kind"] = to_string(graph.kind());
    json verts = json::array();
    for (int id = 0; id < graph.vertex_count(); ++id) {
        const auto& v = graph.vertex(id);
        json jv;
        jv["id"] = id;
        if (v.orbit) {
            jv["level"] = v.orbit->level;
            jv["orbit"] = v.orbit->orbit;
        } else if (v.element) {
            jv["element"] = *v.element;
        }
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& e : graph.edges()) {
        json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["p"] = e.p;
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    j["warnings"] = graph.warnings();
    return dump_canonical(j);
}

MultiGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("kind") || !j.contains("vertices") || !j.contains("edges"))
        throw argument_error("graph JSON needs {kind, vertices, edges}");
    auto kind = kind_from_string(j["kind"].get<std::string>());
    if (!kind) throw argument_error("unknown graph kind '" + j["kind"].get<std::string>() + "'");
    std::vector<MultiGraph::Vertex> vertices;
    for (const auto& jv : j["vertices"]) {
        if (jv.value("id", -1) != static_cast<int>(vertices.size()))
            throw argument_error("vertex ids must be 0..n-1 in order");
        MultiGraph::Vertex v;
        if (jv.contains("level")) {
            OrbitVertex ov;
            ov.level = jv["level"].get<int>();
            ov.orbit = jv["orbit"].get<std::vector<int>>();
            if (ov.orbit.empty()) throw argument_error("empty orbit");
            ov.anchor = *std::min_element(ov.orbit.begin(), ov.orbit.end());
            v.name = "L" + std::to_string(ov.level) + "_" + std::to_string(ov.anchor);
            v.orbit = std::move(ov);
        } else if (jv.contains("element")) {
            v.element = jv["element"].get<int>();
            v.name = (*kind == MultiGraph::Kind::line ? "e" : "") + std::to_string(*v.element);
        } else {
            throw argument_error("vertex needs level+orbit or element");
        }
        vertices.push_back(std::move(v));
    }
    std::vector<MultiGraph::Edge> edges;
    for (const auto& je : j["edges"])
        edges.push_back({je.at("u").get<int>(), je.at("v").get<int>(), je.value("p", 1)});
    std::vector<std::string> warnings;
    if (j.contains("warnings")) warnings = j["warnings"].get<std::vector<std::string>>();
    return MultiGraph(*kind, std::move(vertices), std::move(edges), {}, std::move(warnings));
}

std::string emit_dot(const MultiGraph& graph) {
    std::ostringstream out;
    out << "graph " << to_string(graph.kind()) << " {\n";
    for (int id = 0; id < graph.vertex_count(); ++id)
        out << "  \"" << graph.vertex(id).name << "\";\n";
    for (const auto& e : graph.edges())
        for (int k = 0; k < e.p; ++k)
            out << "  \"" << graph.vertex(e.u).name << "\" -- \"" << graph.vertex(e.v).name
                << "\";\n";
    out << "}\n";
    return out.str();
}

std::string report_to_json(const ValidationReport& report) {
    json j;
    j["order"] = report.order;
    j["identity"] = report.identity;
    j["passed"] = report.passed();
    json axioms;
    for (const auto& [axiom, result] : report.axiom_results)
        axioms[to_string(axiom)] = check_to_json(result);
    j["axioms"] = std::move(axioms);
    json derived;
    for (const auto& [prop, result] : report.derived_properties)
        derived[to_string(prop)] = check_to_json(result);
    j["derived"] = std::move(derived);
    return dump_canonical(j);
}

std::string analysis_to_json(const AnalysisReport& report) {
    json j;
    j["component_count"] = report.component_count;
    j["components"] = report.component_vertex_lists;
    j["degree_sequence"] = report.degree_sequence;
    j["is_regular"] = report.regular;
    j["is_bipartite"] = report.bipartite;
    j["recognized_shape"] = report.recognized_shape.to_string();
    if (report.vertex_transitive) j["is_vertex_transitive"] = *report.vertex_transitive;
    if (report.edge_transitive) j["is_edge_transitive"] = *report.edge_transitive;
    if (report.hamiltonian) {
        j["is_hamiltonian"] = *report.hamiltonian;
        if (report.hamiltonian_cycle) j["hamiltonian_cycle"] = *report.hamiltonian_cycle;
    }
    if (report.isomorphic_to_other) j["isomorphic"] = *report.isomorphic_to_other;
    if (report.vertex_transitive || report.edge_transitive)
        j["automorphism_generator_count"] = report.automorphism_generator_count;
    return dump_canonical(j);
}

}  // namespace gyro
