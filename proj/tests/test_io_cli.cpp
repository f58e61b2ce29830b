#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gyro/catalog.hpp"
#include "gyro/cli.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph_build.hpp"
#include "gyro/json_io.hpp"

using namespace gyro;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table JSON round-trip is byte-stable") {
    const auto& g15 = catalog::get("G15").group;
    const std::string dumped = table_to_json(g15);
    const GyroGroup parsed = table_from_json(dumped);
    CHECK(parsed.table() == g15.table());
    CHECK(parsed.labels() == g15.labels());
    CHECK(table_to_json(parsed) == dumped);
}

TEST_CASE("table ingestion validates unless errata are allowed") {
    const std::string dumped = table_to_json(catalog::get("K1-as-printed").group);
    CHECK_THROWS_AS(table_from_json(dumped), structure_error);
    CHECK_NOTHROW(table_from_json(dumped, /*allow_errata=*/true));
}

TEST_CASE("graph JSON round-trip is byte-stable") {
    for (const auto& graph :
         {g_graph(catalog::get("G15").group, {1, 4}),
          l_cayley(catalog::get("G8-example").group, {1, 2, 3}),
          line_graph(g_graph(catalog::get("G8-example").group, {1, 3}))}) {
        const std::string dumped = graph_to_json(graph);
        const MultiGraph parsed = graph_from_json(dumped);
        CHECK(graph_to_json(parsed) == dumped);
        CHECK(parsed.vertex_count() == graph.vertex_count());
        CHECK(parsed.edge_count() == graph.edge_count());
    }
}

TEST_CASE("DOT output renders p parallel lines per p-edge") {
    const auto doubled = g_graph(catalog::get("O1").group, {5, 7});
    const std::string dot = emit_dot(doubled);
    size_t strokes = 0, pos = 0;
    while ((pos = dot.find("--", pos)) != std::string::npos) {
        ++strokes;
        pos += 2;
    }
    CHECK(strokes == 8);  // 4 double edges

    const MultiGraph empty(MultiGraph::Kind::ggraph, {}, {});
    CHECK(emit_dot(empty) == "graph ggraph {\n}\n");
}

TEST_CASE("cli: ggraph dot output for the 8-cycle is byte-exact") {
    const auto r = cli({"ggraph", "G8-example", "-S", "1,3", "--format", "dot"});
    CHECK(r.status == kExitOk);
    CHECK(r.out ==
          "graph ggraph {\n"
          "  \"L1_0\";\n"
          "  \"L1_2\";\n"
          "  \"L1_4\";\n"
          "  \"L1_6\";\n"
          "  \"L3_0\";\n"
          "  \"L3_1\";\n"
          "  \"L3_2\";\n"
          "  \"L3_4\";\n"
          "  \"L1_0\" -- \"L3_0\";\n"
          "  \"L1_0\" -- \"L3_1\";\n"
          "  \"L1_2\" -- \"L3_0\";\n"
          "  \"L1_2\" -- \"L3_2\";\n"
          "  \"L1_4\" -- \"L3_1\";\n"
          "  \"L1_4\" -- \"L3_4\";\n"
          "  \"L1_6\" -- \"L3_2\";\n"
          "  \"L1_6\" -- \"L3_4\";\n"
          "}\n");
}

TEST_CASE("cli: validate a one-element table passes") {
    const auto path = temp_file("gyro_trivial.json",
                                "{\"name\":\"trivial\",\"order\":1,\"identity\":0,"
                                "\"labels\":[\"0\"],\"table\":[[0]]}");
    const auto r = cli({"validate", path.string()});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("\"passed\": true") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli: validate reports on tables with out-of-range entries") {
    const auto path = temp_file("gyro_oob.json",
                                "{\"order\":2,\"identity\":0,\"table\":[[0,1],[9,0]]}");
    const auto r = cli({"validate", path.string()});
    CHECK(r.status == kExitValidation);
    CHECK(r.out.find("out of range") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli: exit codes") {
    CHECK(cli({"nonsense"}).status == kExitUsage);
    CHECK(cli({"catalog", "dump", "no-such"}).status == kExitUsage);
    CHECK(cli({"validate", "K1-as-printed"}).status == kExitValidation);
    // building a graph on an erratum-tolerant entry needs the flag
    CHECK(cli({"ggraph", "K1-as-printed", "-S", "5,7"}).status == kExitValidation);
    CHECK(cli({"ggraph", "G8-example", "-S", "0,1"}).status == kExitUsage);

    // capacity: hamiltonicity on a 65-vertex graph
    std::ostringstream big;
    big << "{\"kind\":\"ggraph\",\"vertices\":[";
    for (int i = 0; i < 65; ++i)
        big << (i ? "," : "") << "{\"id\":" << i << ",\"element\":" << i << "}";
    big << "],\"edges\":[";
    for (int i = 0; i < 65; ++i)
        big << (i ? "," : "") << "{\"u\":" << i << ",\"v\":" << (i + 1) % 65 << ",\"p\":1}";
    big << "]}";
    const auto path = temp_file("gyro_big.json", big.str());
    const auto r = cli({"analyze", path.string(), "--checks", "ham"});
    CHECK(r.status == kExitCapacity);
    std::filesystem::remove(path);
}

TEST_CASE("cli: catalog dump round-trips through ingestion") {
    const auto dump = cli({"catalog", "dump", "G15"});
    CHECK(dump.status == kExitOk);
    const auto path = temp_file("gyro_g15.json", dump.out);
    const auto again = cli({"validate", path.string()});
    CHECK(again.status == kExitOk);
    std::filesystem::remove(path);
}

TEST_CASE("cli: generators are labels, so 1-based tables work verbatim") {
    // the L(1) table relabeled 1..8; the drawn sets {7,8} name indices 6,7
    auto table = catalog::get("L1").group.table();
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i) labels.push_back(std::to_string(i));
    const GyroGroup relabeled = GyroGroup::unchecked("L1-onebased", table, 0, labels);
    const auto path = temp_file("gyro_l1.json", table_to_json(relabeled));
    const auto r = cli({"ggraph", path.string(), "-S", "7,8", "--format", "text"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("ggraph: 8 vertices") != std::string::npos);
    std::filesystem::remove(path);

    const auto dih = cli({"ggraph", "DihG8", "-S", "(3,0),(4,0),(0,1)", "--format", "text"});
    CHECK(dih.status == kExitOk);
    CHECK(dih.out.find("ggraph: 20 vertices") != std::string::npos);
}

TEST_CASE("cli: analyze emits the report") {
    const auto graph = cli({"ggraph", "G15", "-S", "1,4"});
    const auto path = temp_file("gyro_phi15.json", graph.out);
    const auto r = cli({"analyze", path.string(), "--checks", "comps,degrees,shape,vt,et"});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("\"component_count\": 1") != std::string::npos);
    CHECK(r.out.find("\"recognized_shape\": \"K{3,5}\"") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli: analyze with iso= compares against another graph") {
    const auto a = cli({"ggraph", "G8-example", "-S", "1,3"});
    const auto b = cli({"cayley", "G8-example", "-S", "1,3"});
    const auto pa = temp_file("gyro_a.json", a.out);
    const auto pb = temp_file("gyro_b.json", b.out);
    const auto r = cli({"analyze", pa.string(), "--checks", "iso=" + pb.string()});
    CHECK(r.status == kExitOk);
    CHECK(r.out.find("\"isomorphic\": true") != std::string::npos);
    std::filesystem::remove(pa);
    std::filesystem::remove(pb);
}

TEST_CASE("cli: dihedralize emits the doubled table") {
    const auto r = cli({"dihedralize", "DihG8-base"});
    CHECK(r.status == kExitOk);
    const GyroGroup dih = table_from_json(r.out);
    CHECK(dih.order() == 16);
    CHECK(dih.table() == catalog::get("DihG8").group.table());

    CHECK(cli({"dihedralize", "G15"}).status == kExitValidation);
}

TEST_CASE("cli: mis-typed JSON fields are a usage error, not a crash") {
    const auto bad_table = temp_file("gyro_mistyped.json", "{\"table\":[[\"a\"]]}");
    CHECK(cli({"validate", bad_table.string()}).status == kExitUsage);
    const auto bad_order = temp_file("gyro_mistyped2.json",
                                     "{\"order\":\"eight\",\"table\":[[0]]}");
    CHECK(cli({"ggraph", bad_order.string(), "-S", "1"}).status == kExitUsage);
    std::filesystem::remove(bad_table);
    std::filesystem::remove(bad_order);
}

TEST_CASE("every catalog table round-trips through its JSON dump") {
    for (const auto& e : catalog::entries()) {
        const std::string dumped = table_to_json(e.group);
        const GyroGroup parsed = table_from_json(dumped, /*allow_errata=*/true);
        CHECK(parsed.table() == e.group.table());
        CHECK(parsed.labels() == e.group.labels());
        CHECK(table_to_json(parsed) == dumped);
    }
}
