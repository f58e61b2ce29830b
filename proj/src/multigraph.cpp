#include "gyro/multigraph.hpp"

#include <algorithm>
#include <set>

#include "gyro/errors.hpp"

namespace gyro {

bool OrbitVertex::same_vertex(const OrbitVertex& other) const {
    if (level != other.level) return false;
    return std::set<int>(orbit.begin(), orbit.end()) ==
           std::set<int>(other.orbit.begin(), other.orbit.end());
}

MultiGraph::MultiGraph(Kind kind, std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::vector<Arc> arcs, std::vector<std::string> warnings)
    : kind_(kind),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      arcs_(std::move(arcs)),
      warnings_(std::move(warnings)) {
    const int n = vertex_count();
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n || e.u == e.v || e.p < 1)
            throw argument_error("malformed edge");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw argument_error("duplicate edge entry");
    for (const auto& a : arcs_)
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw argument_error("malformed arc");
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    adj_.assign(n, std::vector<int>(n, 0));
    for (const auto& e : edges_) {
        adj_[e.u][e.v] = e.p;
        adj_[e.v][e.u] = e.p;
    }
}

int MultiGraph::multiplicity(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw argument_error("vertex out of range");
    return adj_[u][v];
}

bool MultiGraph::is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.p == 1; });
}

int MultiGraph::weighted_degree(int v) const {
    if (v < 0 || v >= vertex_count()) throw argument_error("vertex out of range");
    int d = 0;
    for (int u = 0; u < vertex_count(); ++u) d += adj_[v][u];
    return d;
}

std::vector<int> MultiGraph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw argument_error("vertex out of range");
    std::vector<int> out;
    for (int u = 0; u < vertex_count(); ++u)
        if (adj_[v][u] > 0) out.push_back(u);
    return out;
}

std::string to_string(MultiGraph::Kind k) {
    switch (k) {
        case MultiGraph::Kind::ggraph: return "ggraph";
        case MultiGraph::Kind::lcayley: return "lcayley";
        case MultiGraph::Kind::rcayley: return "rcayley";
        case MultiGraph::Kind::line: return "line";
    }
    return "?";
}

std::optional<MultiGraph::Kind> kind_from_string(const std::string& s) {
    if (s == "ggraph") return MultiGraph::Kind::ggraph;
    if (s == "lcayley") return MultiGraph::Kind::lcayley;
    if (s == "rcayley") return MultiGraph::Kind::rcayley;
    if (s == "line") return MultiGraph::Kind::line;
    return std::nullopt;
}

}  // namespace gyro
