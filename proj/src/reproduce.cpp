#include "gyro/reproduce.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "gyro/catalog.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/graph_build.hpp"
#include "gyro/gyrogroup.hpp"

namespace gyro {

namespace {

struct Claim {
    int id;
    std::string title;
    // throws or appends to `problems` on failure
    void (*run)(std::vector<std::string>& problems);
};

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

const GyroGroup& grp(const std::string& key) { return catalog::get(key).group; }

std::vector<int> range1(int lo, int hi) {  // [lo, hi)
    std::vector<int> out;
    for (int i = lo; i < hi; ++i) out.push_back(i);
    return out;
}

bool cycle_is_valid(const MultiGraph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n) return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (static_cast<int>(distinct.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (g.multiplicity(cycle[i], cycle[(i + 1) % n]) == 0) return false;
    return true;
}

// ---- claims, one function per acceptance criterion ----

void claim_axiom_gate(std::vector<std::string>& problems) {
    for (const char* key :
         {"L1", "O1", "K1-table9", "G15", "G16", "G4", "DihG8", "G8-example"}) {
        const auto& e = catalog::get(key);
        const auto report = validate(e.group.table(), e.group.identity());
        expect(problems, report.passed(), std::string(key) + " fails validation");
    }
    const auto& bad = catalog::get("K1-as-printed");
    const auto report = validate(bad.group.table(), 0);
    const auto& latin = report.axiom(Axiom::rows_latin);
    expect(problems, latin.status == CheckStatus::fail && latin.witness.has_value(),
           "K1-as-printed should fail rows-latin with a witness");
}

void claim_two_squares(std::vector<std::string>& problems) {
    const auto g = g_graph(grp("G8-example"), {1, 2});
    expect(problems, g.vertex_count() == 8, "expected 8 vertices");
    expect(problems, g.edge_count() == 8 && g.is_simple(), "expected 8 unit edges");
    const auto comps = components(g);
    expect(problems, comps.size() == 2, "expected 2 components");
    if (comps.size() == 2) {
        const auto c0 = induced_subgraph(g, comps[0]);
        const auto c1 = induced_subgraph(g, comps[1]);
        expect(problems, isomorphic(c0, c1).has_value(), "components not isomorphic");
        for (const auto* c : {&c0, &c1}) {
            const auto shape = recognize(*c);
            expect(problems, shape.tag == Shape::Tag::cycle && shape.n == 4,
                   "component not recognized as C4");
        }
    }
    expect(problems,
           left_generated(grp("G8-example"), {1, 2}).size() != 8,
           "left closure of {1,2} should be proper");
}

void claim_eight_cycle(std::vector<std::string>& problems) {
    const auto g = g_graph(grp("G8-example"), {1, 3});
    const auto shape = recognize(g);
    expect(problems, shape.tag == Shape::Tag::cycle && shape.n == 8, "expected C8");
    expect(problems, left_generated(grp("G8-example"), {1, 3}).size() == 8,
           "left closure of {1,3} should be everything");
}

void claim_connectivity_sweep(std::vector<std::string>& problems) {
    for (const auto& entry : catalog::entries()) {
        if (!entry.valid || entry.group.order() > 16) continue;
        const auto& g = entry.group;
        const int n = g.order();
        std::vector<int> gens;
        for (int a = 1; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                for (int c = b; c < n; ++c) {
                    gens.clear();
                    gens.push_back(a);
                    if (b != a) gens.push_back(b);
                    if (c != b && c != a) gens.push_back(c);
                    const auto graph = g_graph(g, gens);
                    const bool connected = components(graph).size() == 1;
                    const bool spans =
                        static_cast<int>(left_generated(g, gens).size()) == n;
                    if (connected != spans) {
                        std::ostringstream what;
                        what << entry.key << " S={";
                        for (int s : gens) what << s << ",";
                        what << "}: connected=" << connected << " spans=" << spans;
                        problems.push_back(what.str());
                        return;
                    }
                }
            }
        }
    }
}

void claim_complete_bipartite_shapes(std::vector<std::string>& problems) {
    const auto k1 = recognize(g_graph(grp("K1-table9"), {5, 7}));
    expect(problems,
           k1.tag == Shape::Tag::complete_bipartite && k1.a == 2 && k1.b == 4 &&
               k1.multiplicity == 1,
           "Phi(K1,{5,7}) should be simple K{2,4}");
    for (const char* key : {"M1-as-printed", "O1"}) {
        const auto s = recognize(g_graph(grp(key), {5, 7}));
        expect(problems,
               s.tag == Shape::Tag::complete_bipartite && s.a == 2 && s.b == 2 &&
                   s.multiplicity == 2,
               std::string("Phi(") + key + ",{5,7}) should be K{2,2} with double edges");
    }
}

void claim_bipartite_g15(std::vector<std::string>& problems) {
    const auto& g15 = grp("G15");
    const auto shape = recognize(g_graph(g15, {1, 4}));
    expect(problems,
           shape.tag == Shape::Tag::complete_bipartite && shape.a == 3 && shape.b == 5 &&
               shape.multiplicity == 1,
           "Phi(G15,{1,4}) should be simple K{5,3}");
    expect(problems, order_of(g15, 1) == 3, "o(1) should be 3");
    expect(problems, order_of(g15, 4) == 5, "o(4) should be 5");
}

void claim_g4_rook_structure(std::vector<std::string>& problems) {
    const auto& g = catalog::g4();
    const auto graph = g_graph(g, range1(8, 16));
    expect(problems, components(graph).size() == 1, "Phi(G(4),H(4)) should be connected");
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (graph.weighted_degree(v) != 14) {
            problems.push_back("vertex " + std::to_string(v) + " has degree " +
                               std::to_string(graph.weighted_degree(v)) + ", expected 14");
            break;
        }
    const auto cycle = is_hamiltonian(graph);
    expect(problems, cycle.has_value(), "no Hamiltonian cycle found");
    if (cycle) expect(problems, cycle_is_valid(graph, *cycle), "returned cycle is invalid");
    for (int j = 8; j < 16; ++j) {
        int count = 0;
        for (const auto& v : graph.vertices())
            if (v.orbit->level == j) ++count;
        expect(problems, count == 8,
               "V_" + std::to_string(j) + " has " + std::to_string(count) +
                   " vertices, expected 8 (the printed '=2' is an erratum)");
    }
}

void check_degree_formula(std::vector<std::string>& problems, const GyroGroup& g,
                          const std::vector<int>& gens, const std::string& what,
                          bool allow_identity = false) {
    GGraphOptions opts;
    opts.allow_identity_level = allow_identity;
    const auto graph = g_graph(g, gens, opts);
    const int k = static_cast<int>(gens.size());
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const int s = graph.vertex(v).orbit->level;
        const int want = order_of(g, s) * (k - 1);
        if (graph.weighted_degree(v) != want) {
            problems.push_back(what + ": vertex at level " + std::to_string(s) +
                               " has degree " + std::to_string(graph.weighted_degree(v)) +
                               ", formula gives " + std::to_string(want));
            return;
        }
    }
}

void claim_degree_formula(std::vector<std::string>& problems) {
    check_degree_formula(problems, grp("G8-example"), {1, 2}, "Phi(G8,{1,2})");
    check_degree_formula(problems, grp("G8-example"), {1, 3}, "Phi(G8,{1,3})");
    check_degree_formula(problems, grp("K1-table9"), {5, 7}, "Phi(K1,{5,7})");
    check_degree_formula(problems, grp("M1-as-printed"), {5, 7}, "Phi(M1,{5,7})");
    check_degree_formula(problems, grp("O1"), {5, 7}, "Phi(O1,{5,7})");
    check_degree_formula(problems, grp("G15"), {1, 4}, "Phi(G15,{1,4})");
    check_degree_formula(problems, catalog::g4(), range1(8, 16), "Phi(G(4),H(4))");

    // Phi(G(4),P(4)) including the identity level: the quoted level degrees
    // {56,28,56,14,56,28,56} require all eight levels to be present; the
    // brute-force degrees decide (the printed deg(v4)=16 is an erratum).
    GGraphOptions opts;
    opts.allow_identity_level = true;
    const auto graph = g_graph(catalog::g4(), range1(0, 8), opts);
    const int expected[8] = {7, 56, 28, 56, 14, 56, 28, 56};
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const int s = graph.vertex(v).orbit->level;
        if (graph.weighted_degree(v) != expected[s]) {
            problems.push_back("Phi(G(4),P(4)) level " + std::to_string(s) + " degree " +
                               std::to_string(graph.weighted_degree(v)) + ", expected " +
                               std::to_string(expected[s]));
            return;
        }
    }
    check_degree_formula(problems, catalog::g4(), range1(0, 8), "Phi(G(4),P(4))", true);
}

void claim_cayley_g8_asymmetric(std::vector<std::string>& problems) {
    const auto cay = l_cayley(grp("G8-example"), {1, 2, 3});
    const std::set<std::pair<int, int>> drawn = {{0, 1}, {0, 2}, {0, 3}, {1, 3},
                                                 {1, 5}, {2, 3}, {2, 6}, {4, 5},
                                                 {4, 6}, {4, 7}, {5, 7}, {6, 7}};
    std::set<std::pair<int, int>> got;
    for (const auto& e : cay.edges()) got.insert({e.u, e.v});
    expect(problems, got == drawn, "edge set differs from the drawn 12 pairs");
    expect(problems, !is_vertex_transitive(cay), "Cay(G8,{1,2,3}) should not be vertex-transitive");
}

void claim_trivial_gyrations_g16(std::vector<std::string>& problems) {
    const auto& g16 = grp("G16");
    const std::vector<int> s{1, 2, 3};
    for (int g = 0; g < 16; ++g)
        for (int gen : s)
            if (!gyration(g16, g, gen).is_identity()) {
                problems.push_back("gyr[" + std::to_string(g) + "," + std::to_string(gen) +
                                   "] is not the identity");
                return;
            }
    for (int gen : s)
        expect(problems,
               std::find(s.begin(), s.end(), left_inverse(g16, gen)) != s.end(),
               "S={1,2,3} should be symmetric");
    expect(problems, is_vertex_transitive(g_graph(g16, s)),
           "Phi(G16,{1,2,3}) is not vertex-transitive: level orders are o(1)=2, "
           "o(2)=o(3)=4, so vertex degrees split 4 vs 8 (and (S> = {0,1,2,3}, "
           "so S does not left-generate G16)");
}

void claim_four_squares_g16(std::vector<std::string>& problems) {
    const auto graph = g_graph(grp("G16"), {8, 9});
    const auto comps = components(graph);
    expect(problems, comps.size() == 4, "expected 4 components");
    for (const auto& comp : comps) {
        const auto shape = recognize(induced_subgraph(graph, comp));
        expect(problems, shape.tag == Shape::Tag::cycle && shape.n == 4,
               "component not recognized as C4");
    }
    std::set<std::set<int>> got;
    for (const auto& v : graph.vertices())
        got.insert(std::set<int>(v.orbit->orbit.begin(), v.orbit->orbit.end()));
    std::set<std::set<int>> drawn;
    for (int k = 0; k < 8; k += 2) {
        drawn.insert({k, 8 + k});
        drawn.insert({k + 1, 9 + k});
        drawn.insert({k, 9 + k});
        drawn.insert({k + 1, 8 + k});
    }
    expect(problems, got == drawn, "vertex pairs differ from the drawn vertex pairs");
    expect(problems, is_vertex_transitive(graph), "Phi(G16,{8,9}) should be vertex-transitive");
}

void claim_line_graph_identity(std::vector<std::string>& problems) {
    const auto& g8 = grp("G8-example");
    const auto orb1 = cyclic_subgyrogroup(g8, 1);
    const auto orb3 = cyclic_subgyrogroup(g8, 3);
    std::set<int> inter;
    for (int x : orb1)
        if (std::find(orb3.begin(), orb3.end(), x) != orb3.end()) inter.insert(x);
    expect(problems, inter == std::set<int>{0}, "<1> and <3> should meet only in 0");

    const auto phi = g_graph(g8, {1, 3});
    expect(problems, phi.is_simple(), "Phi(G8,{1,3}) should be simple");
    const auto lg = line_graph(phi);
    std::set<int> a_set(orb1.begin(), orb1.end());
    a_set.insert(orb3.begin(), orb3.end());
    a_set.erase(0);
    const auto cay = l_cayley(g8, std::vector<int>(a_set.begin(), a_set.end()));
    expect(problems, isomorphic(lg, cay).has_value(), "L(Phi) should be isomorphic to Cay(G,A)");
    const auto s1 = recognize(lg);
    const auto s2 = recognize(cay);
    expect(problems, s1.tag == Shape::Tag::cycle && s1.n == 8, "L(Phi) should be C8");
    expect(problems, s2.tag == Shape::Tag::cycle && s2.n == 8, "Cay(G,A) should be C8");
    expect(problems, is_vertex_transitive(phi) && is_edge_transitive(phi),
           "Phi(G8,{1,3}) should be symmetric");
}

void claim_dihedralization(std::vector<std::string>& problems) {
    const auto& base = grp("DihG8-base");
    const auto dih = catalog::dihedralize(base);
    const auto& printed = grp("DihG8");
    expect(problems, dih.table() == printed.table(),
           "dihedralize(base) should reproduce the printed table entrywise");
    expect(problems, validate(dih.table(), dih.identity()).passed(),
           "dihedralization should pass validation");
    const auto graph = g_graph(printed, {3, 4, 8});
    expect(problems, graph.vertex_count() == 20, "expected 4+8+8 = 20 vertices");
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const int s = graph.vertex(v).orbit->level;
        const int want = order_of(printed, s) * 2;
        if (graph.weighted_degree(v) != want) {
            problems.push_back("degree formula fails at level " + std::to_string(s));
            return;
        }
    }
}

void claim_property_suite(std::vector<std::string>& problems) {
    for (const auto& entry : catalog::entries()) {
        if (!entry.valid) continue;
        const auto& g = entry.group;
        const int n = g.order();
        const auto report = validate(g.table(), g.identity());
        expect(problems,
               report.axiom(Axiom::g3).passed() && report.axiom(Axiom::g4).passed() &&
                   report.axiom(Axiom::gyr_automorphism).passed(),
               entry.key + ": G3/G4/gyr-automorphism should hold exhaustively");
        for (int a = 0; a < n; ++a) {
            if (!gyration(g, a, g.identity()).is_identity() ||
                !gyration(g, g.identity(), a).is_identity()) {
                problems.push_back(entry.key + ": gyr with identity should be id");
                break;
            }
            if (g.oplus(a, left_inverse(g, a)) != g.identity()) {
                problems.push_back(entry.key + ": left inverse should be two-sided");
                break;
            }
        }
        for (int s = 0; s < n; ++s) {
            std::set<int> covered;
            size_t total = 0;
            for (const auto& orbit : orbit_vertices(g, s)) {
                covered.insert(orbit.orbit.begin(), orbit.orbit.end());
                total += orbit.orbit.size();
            }
            if (static_cast<int>(covered.size()) != n || total != static_cast<size_t>(n)) {
                problems.push_back(entry.key + ": orbits of s=" + std::to_string(s) +
                                   " do not partition G");
                break;
            }
        }
    }
}

const Claim kClaims[] = {
    {1, "axiom gate: catalog tables validate; K(1)-as-printed fails rows-latin",
     claim_axiom_gate},
    {2, "Phi(G8,{1,2}): two isomorphic C4 components; {1,2} does not left-generate",
     claim_two_squares},
    {3, "Phi(G8,{1,3}) is C8; {1,3} left-generates G8", claim_eight_cycle},
    {4, "connectivity: connected(Phi(G,S)) iff (S> = G, all catalog groups, |S| <= 3",
     claim_connectivity_sweep},
    {5, "Phi(K1,{5,7}) = K{2,4}; Phi(M1,{5,7}), Phi(O1,{5,7}) = K{2,2} doubled",
     claim_complete_bipartite_shapes},
    {6, "Phi(G15,{1,4}) = simple K{5,3}; o(1)=3, o(4)=5", claim_bipartite_g15},
    {7, "Phi(G(4),H(4)): connected, 14-regular, hamiltonian, 8 vertices per level",
     claim_g4_rook_structure},
    {8, "degree formula d(v) = o(s)(k-1) on all built G-graphs; G(4)/P(4) levels",
     claim_degree_formula},
    {9, "Cay(G8,{1,2,3}): the 12 drawn edges; not vertex-transitive", claim_cayley_g8_asymmetric},
    {10, "G16, S={1,2,3}: trivial gyrations, symmetric S, vertex-transitive G-graph",
     claim_trivial_gyrations_g16},
    {11, "Phi(G16,{8,9}): four C4 components matching the drawn pairs; vertex-transitive",
     claim_four_squares_g16},
    {12, "L(Phi(G8,{1,3})) = Cay(G8,{1,3}) = C8; Phi(G8,{1,3}) symmetric",
     claim_line_graph_identity},
    {13, "dihedralize(base) reproduces the printed table; Dih(G8) G-graph degrees",
     claim_dihedralization},
    {14, "property suite: exhaustive axiom/derived checks on every valid catalog group",
     claim_property_suite},
};

}  // namespace

std::vector<ClaimResult> run_all_claims() {
    std::vector<ClaimResult> out;
    for (const auto& claim : kClaims) {
        ClaimResult r;
        r.id = claim.id;
        r.title = claim.title;
        std::vector<std::string> problems;
        try {
            claim.run(problems);
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        r.passed = problems.empty();
        if (!problems.empty()) {
            for (size_t i = 0; i < problems.size(); ++i) {
                if (i) r.detail += "; ";
                r.detail += problems[i];
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool print_claim_table(const std::vector<ClaimResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title
            << "\n";
        if (!r.passed) {
            out << "      " << r.detail << "\n";
            all = false;
        }
    }
    out << (all ? "all claims reproduced" : "some claims failed") << "\n";
    return all;
}

}  // namespace gyro
