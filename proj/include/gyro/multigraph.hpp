#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gyro {

// One cycle of the permutation x -> s+x, tagged with its generator level.
// Two vertices are equal iff both the level and the orbit set match.
struct OrbitVertex {
    int level = 0;            // the generator element s
    std::vector<int> orbit;   // cycle order, starting at the anchor
    int anchor = 0;           // minimal element of the orbit

    bool same_vertex(const OrbitVertex& other) const;
};

// Undirected graph with integer edge multiplicities (p-edges).  Cayley
// graphs also retain their directed arc multiset; the undirected edge map is
// the projection obtained by merging antiparallel arc pairs.
class MultiGraph {
  public:
    enum class Kind { ggraph, lcayley, rcayley, line };

    struct Vertex {
        std::optional<OrbitVertex> orbit;  // G-graph payload
        std::optional<int> element;        // Cayley payload / line-graph source edge id
        std::string name;                  // display name, not serialized
    };

    struct Edge {
        int u = 0;
        int v = 0;  // u < v
        int p = 1;
    };

    struct Arc {
        int from = 0;
        int to = 0;
    };

    MultiGraph() = default;
    MultiGraph(Kind kind, std::vector<Vertex> vertices, std::vector<Edge> edges,
               std::vector<Arc> arcs = {}, std::vector<std::string> warnings = {});

    Kind kind() const { return kind_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(int id) const { return vertices_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Multiplicity of {u,v}; 0 when absent.
    int multiplicity(int u, int v) const;
    bool is_simple() const;  // all multiplicities 1
    // Sum of incident multiplicities.
    int weighted_degree(int v) const;
    // Ids of vertices joined to v by at least one edge, ascending.
    std::vector<int> neighbors(int v) const;

    int total_arc_count() const { return static_cast<int>(arcs_.size()); }

  private:
    Kind kind_ = Kind::ggraph;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;            // canonical: u < v, sorted lexicographically
    std::vector<Arc> arcs_;              // Cayley only; sorted, duplicates = multiplicity
    std::vector<std::string> warnings_;
    std::vector<std::vector<int>> adj_;  // dense multiplicity matrix
};

std::string to_string(MultiGraph::Kind k);
std::optional<MultiGraph::Kind> kind_from_string(const std::string& s);

}  // namespace gyro
