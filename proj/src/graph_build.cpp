#include "gyro/graph_build.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gyro/errors.hpp"

namespace gyro {

std::vector<OrbitVertex> orbit_vertices(const GyroGroup& g, int s) {
    if (s < 0 || s >= g.order()) throw argument_error("generator out of range");
    const int n = g.order();
    {
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            const int y = g.oplus(s, x);
            if (hit[y]) throw structure_error("left translation by " + std::to_string(s) +
                                              " is not a permutation");
            hit[y] = 1;
        }
    }
    std::vector<char> seen(n, 0);
    std::vector<OrbitVertex> out;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        OrbitVertex v;
        v.level = s;
        v.anchor = x;  // x is minimal in its cycle: smaller members were already seen
        int y = x;
        do {
            seen[y] = 1;
            v.orbit.push_back(y);
            y = g.oplus(s, y);
        } while (y != x);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitVertex& a, const OrbitVertex& b) { return a.anchor < b.anchor; });
    return out;
}

namespace {

std::vector<int> distinct_generators(const GyroGroup& g, const std::vector<int>& gens,
                                     bool allow_identity) {
    if (gens.empty()) throw argument_error("empty generator set");
    std::vector<int> out;
    for (int s : gens) {
        if (s < 0 || s >= g.order()) throw argument_error("generator out of range");
        if (s == g.identity() && !allow_identity)
            throw argument_error("identity element is not allowed as a generator");
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

std::string ggraph_vertex_name(const OrbitVertex& v) {
    return "L" + std::to_string(v.level) + "_" + std::to_string(v.anchor);
}

}  // namespace

MultiGraph g_graph(const GyroGroup& g, const std::vector<int>& gens, const GGraphOptions& opts) {
    const std::vector<int> levels = distinct_generators(g, gens, opts.allow_identity_level);
    std::vector<MultiGraph::Vertex> vertices;
    std::vector<std::set<int>> orbit_sets;
    std::vector<std::string> warnings;
    for (int s : levels) {
        auto orbits = orbit_vertices(g, s);
        std::set<size_t> sizes;
        for (auto& o : orbits) sizes.insert(o.orbit.size());
        if (sizes.size() > 1) {
            std::ostringstream w;
            w << "level " << s << ": non-uniform cycle lengths {";
            bool first = true;
            for (size_t sz : sizes) {
                if (!first) w << ",";
                w << sz;
                first = false;
            }
            w << "}";
            warnings.push_back(w.str());
        }
        for (auto& o : orbits) {
            MultiGraph::Vertex v;
            v.name = ggraph_vertex_name(o);
            orbit_sets.emplace_back(o.orbit.begin(), o.orbit.end());
            v.orbit = std::move(o);
            vertices.push_back(std::move(v));
        }
    }
    std::vector<MultiGraph::Edge> edges;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(vertices.size()); ++j) {
            if (vertices[i].orbit->level == vertices[j].orbit->level) continue;
            int p = 0;
            for (int x : orbit_sets[i]) p += orbit_sets[j].count(x);
            if (p >= 1) edges.push_back({i, j, p});
        }
    }
    return MultiGraph(MultiGraph::Kind::ggraph, std::move(vertices), std::move(edges), {},
                      std::move(warnings));
}

namespace {

MultiGraph cayley(const GyroGroup& g, const std::vector<int>& gens, bool left) {
    const std::vector<int> sel = distinct_generators(g, gens, false);
    const int n = g.order();
    std::vector<MultiGraph::Vertex> vertices(n);
    for (int x = 0; x < n; ++x) {
        vertices[x].element = x;
        vertices[x].name = g.label(x);
    }
    std::vector<MultiGraph::Arc> arcs;
    std::map<std::pair<int, int>, int> arc_count;
    for (int s : sel) {
        for (int x = 0; x < n; ++x) {
            const int y = left ? g.oplus(s, x) : g.oplus(x, s);
            if (y == x)
                throw structure_error("left translation by a non-identity element has a "
                                      "fixed point; table is not a gyro-group");
            arcs.push_back({x, y});
            ++arc_count[{x, y}];
        }
    }
    // Undirected projection: antiparallel pairs merge, so the multiplicity of
    // {u,v} is the larger of the two directed counts.
    std::vector<MultiGraph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto it_uv = arc_count.find({u, v});
            auto it_vu = arc_count.find({v, u});
            const int f = it_uv == arc_count.end() ? 0 : it_uv->second;
            const int b = it_vu == arc_count.end() ? 0 : it_vu->second;
            const int p = std::max(f, b);
            if (p > 0) edges.push_back({u, v, p});
        }
    }
    return MultiGraph(left ? MultiGraph::Kind::lcayley : MultiGraph::Kind::rcayley,
                      std::move(vertices), std::move(edges), std::move(arcs));
}

}  // namespace

MultiGraph l_cayley(const GyroGroup& g, const std::vector<int>& gens) {
    return cayley(g, gens, true);
}

MultiGraph r_cayley(const GyroGroup& g, const std::vector<int>& gens) {
    return cayley(g, gens, false);
}

MultiGraph line_graph(const MultiGraph& graph) {
    if (!graph.is_simple()) throw argument_error("line graph requires simple graph");
    const auto& es = graph.edges();
    std::vector<MultiGraph::Vertex> vertices(es.size());
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        vertices[i].element = i;  // index of the source edge
        vertices[i].name = "e" + std::to_string(i);
    }
    std::vector<MultiGraph::Edge> edges;
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(es.size()); ++j) {
            const bool share = es[i].u == es[j].u || es[i].u == es[j].v ||
                               es[i].v == es[j].u || es[i].v == es[j].v;
            if (share) edges.push_back({i, j, 1});
        }
    return MultiGraph(MultiGraph::Kind::line, std::move(vertices), std::move(edges));
}

}  // namespace gyro
