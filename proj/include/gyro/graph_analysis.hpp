#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gyro/multigraph.hpp"
#include "gyro/permutation.hpp"

namespace gyro {

// Exact searches (isomorphism, automorphism orbits, hamiltonicity) refuse
// graphs larger than this.
inline constexpr int kSearchCap = 64;

// Partition of the vertex set by undirected reachability, each class
// ascending, classes ordered by smallest member.
std::vector<std::vector<int>> components(const MultiGraph& graph);

// Subgraph induced by the given vertices (re-indexed in the given order,
// payloads preserved).
MultiGraph induced_subgraph(const MultiGraph& graph, const std::vector<int>& verts);

// Multiplicity-weighted degree of every vertex, by vertex id.
std::vector<int> degree_sequence(const MultiGraph& graph);

bool is_regular(const MultiGraph& graph);
// 2-colorability of the underlying simple graph; fills the parts when asked.
bool is_bipartite(const MultiGraph& graph, std::vector<int>* side = nullptr);

struct Shape {
    enum class Tag { none, cycle, complete_bipartite };
    Tag tag = Tag::none;
    int n = 0;            // cycle length
    int a = 0, b = 0;     // part sizes, a <= b
    int multiplicity = 1; // uniform edge multiplicity of K_{a,b}

    std::string to_string() const;
};

// Exact recognizer for C_n (connected, simple, 2-regular) and K_{a,b}
// (connected, complete bipartite, uniform multiplicity); none otherwise.
Shape recognize(const MultiGraph& graph);

// A multiplicity-preserving vertex bijection graph1 -> graph2, if one
// exists.  Backtracking with neighborhood-refinement pruning; exact.
// capacity_error beyond kSearchCap vertices.
std::optional<Permutation> isomorphic(const MultiGraph& graph1, const MultiGraph& graph2);

struct AutomorphismOrbits {
    std::vector<std::vector<int>> vertex_orbits;  // vertex ids
    std::vector<std::vector<int>> edge_orbits;    // indices into edges()
    int generator_count = 0;  // non-identity automorphisms harvested
};

// Orbits of the full automorphism group (multiplicity-preserving
// bijections), computed by targeted backtracking searches; deterministic
// ordering by smallest member.
AutomorphismOrbits automorphism_orbits(const MultiGraph& graph);

bool is_vertex_transitive(const MultiGraph& graph);

// Single orbit on edges.  For connected simple graphs with >= 5 vertices the
// result is cross-checked against vertex-transitivity of the line graph;
// disagreement throws (it would mean a search bug).
bool is_edge_transitive(const MultiGraph& graph);

// A Hamiltonian cycle of the simple underlying graph as a vertex sequence
// (parallel edges never help), or nullopt.  Exact backtracking with
// degree-ordered branching.  argument_error under 3 vertices,
// capacity_error beyond kSearchCap.
std::optional<std::vector<int>> is_hamiltonian(const MultiGraph& graph);

struct AnalysisReport {
    int component_count = 0;
    std::vector<std::vector<int>> component_vertex_lists;
    std::vector<int> degree_sequence;  // by vertex id
    bool regular = false;
    bool bipartite = false;
    Shape recognized_shape;
    std::optional<bool> vertex_transitive;
    std::optional<bool> edge_transitive;
    std::optional<bool> hamiltonian;
    std::optional<std::vector<int>> hamiltonian_cycle;
    std::optional<bool> isomorphic_to_other;
    int automorphism_generator_count = 0;
};

struct AnalysisChecks {
    bool comps = true;
    bool degrees = true;
    bool shape = true;
    bool vt = false;
    bool et = false;
    bool ham = false;
    const MultiGraph* iso_other = nullptr;
};

AnalysisReport analyze(const MultiGraph& graph, const AnalysisChecks& checks = {});

}  // namespace gyro
