#include "gyro/graph_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gyro/errors.hpp"
#include "gyro/graph_build.hpp"

namespace gyro {

std::vector<std::vector<int>> components(const MultiGraph& graph) {
    const int n = graph.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v}, members;
        comp[v] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int u : graph.neighbors(x)) {
                if (comp[u] < 0) {
                    comp[u] = comp[v];
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

MultiGraph induced_subgraph(const MultiGraph& graph, const std::vector<int>& verts) {
    std::map<int, int> index;
    std::vector<MultiGraph::Vertex> vs;
    for (int v : verts) {
        if (v < 0 || v >= graph.vertex_count()) throw argument_error("vertex out of range");
        if (index.count(v)) throw argument_error("duplicate vertex in subgraph selection");
        index[v] = static_cast<int>(vs.size());
        vs.push_back(graph.vertex(v));
    }
    std::vector<MultiGraph::Edge> es;
    for (const auto& e : graph.edges()) {
        auto iu = index.find(e.u), iv = index.find(e.v);
        if (iu != index.end() && iv != index.end()) es.push_back({iu->second, iv->second, e.p});
    }
    std::vector<MultiGraph::Arc> as;
    for (const auto& a : graph.arcs()) {
        auto iu = index.find(a.from), iv = index.find(a.to);
        if (iu != index.end() && iv != index.end()) as.push_back({iu->second, iv->second});
    }
    return MultiGraph(graph.kind(), std::move(vs), std::move(es), std::move(as));
}

std::vector<int> degree_sequence(const MultiGraph& graph) {
    std::vector<int> out(graph.vertex_count());
    for (int v = 0; v < graph.vertex_count(); ++v) out[v] = graph.weighted_degree(v);
    return out;
}

bool is_regular(const MultiGraph& graph) {
    const auto degs = degree_sequence(graph);
    return std::adjacent_find(degs.begin(), degs.end(), std::not_equal_to<>()) == degs.end();
}

bool is_bipartite(const MultiGraph& graph, std::vector<int>* side) {
    const int n = graph.vertex_count();
    std::vector<int> color(n, -1);
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        color[v] = 0;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int u : graph.neighbors(x)) {
                if (color[u] < 0) {
                    color[u] = 1 - color[x];
                    stack.push_back(u);
                } else if (color[u] == color[x]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = color;
    return true;
}

std::string Shape::to_string() const {
    switch (tag) {
        case Tag::none: return "none";
        case Tag::cycle: return "C" + std::to_string(n);
        case Tag::complete_bipartite: {
            std::string s = "K{" + std::to_string(a) + "," + std::to_string(b) + "}";
            if (multiplicity != 1) s += " x" + std::to_string(multiplicity);
            return s;
        }
    }
    return "none";
}

Shape recognize(const MultiGraph& graph) {
    const int n = graph.vertex_count();
    Shape shape;
    if (n == 0 || components(graph).size() != 1) return shape;
    const auto degs = degree_sequence(graph);
    if (n >= 3 && graph.is_simple() &&
        std::all_of(degs.begin(), degs.end(), [](int d) { return d == 2; })) {
        shape.tag = Shape::Tag::cycle;
        shape.n = n;
        return shape;
    }
    std::vector<int> side;
    if (n >= 2 && is_bipartite(graph, &side)) {
        int a = 0;
        for (int v = 0; v < n; ++v) a += side[v] == 0;
        const int b = n - a;
        if (a >= 1 && b >= 1) {
            int mult = 0;
            bool complete = true;
            for (int u = 0; u < n && complete; ++u)
                for (int v = u + 1; v < n && complete; ++v) {
                    if (side[u] == side[v]) continue;
                    const int p = graph.multiplicity(u, v);
                    if (p == 0) complete = false;
                    else if (mult == 0) mult = p;
                    else if (p != mult) complete = false;
                }
            if (complete && mult > 0) {
                shape.tag = Shape::Tag::complete_bipartite;
                shape.a = std::min(a, b);
                shape.b = std::max(a, b);
                shape.multiplicity = mult;
                return shape;
            }
        }
    }
    return shape;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const MultiGraph& g) {
    Matrix m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (const auto& e : g.edges()) {
        m[e.u][e.v] = e.p;
        m[e.v][e.u] = e.p;
    }
    return m;
}

// Joint iterated neighborhood refinement over two graphs so the resulting
// colors are comparable across them.
std::pair<std::vector<int>, std::vector<int>> joint_refine(const Matrix& m1, const Matrix& m2,
                                                           std::vector<int> c1,
                                                           std::vector<int> c2) {
    const int n1 = static_cast<int>(m1.size());
    const int n2 = static_cast<int>(m2.size());
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    for (;;) {
        std::vector<Sig> s1(n1), s2(n2);
        auto sig_of = [](const Matrix& m, const std::vector<int>& col, int v) {
            std::vector<std::pair<int, int>> neigh;
            for (int u = 0; u < static_cast<int>(m.size()); ++u)
                if (m[v][u]) neigh.emplace_back(col[u], m[v][u]);
            std::sort(neigh.begin(), neigh.end());
            return Sig{col[v], std::move(neigh)};
        };
        for (int v = 0; v < n1; ++v) s1[v] = sig_of(m1, c1, v);
        for (int v = 0; v < n2; ++v) s2[v] = sig_of(m2, c2, v);
        std::vector<Sig> all(s1);
        all.insert(all.end(), s2.begin(), s2.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        auto rank = [&](const Sig& s) {
            return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
        };
        std::vector<int> n1c(n1), n2c(n2);
        for (int v = 0; v < n1; ++v) n1c[v] = rank(s1[v]);
        for (int v = 0; v < n2; ++v) n2c[v] = rank(s2[v]);
        if (n1c == c1 && n2c == c2) return {c1, c2};
        c1 = std::move(n1c);
        c2 = std::move(n2c);
    }
}

// Backtracking search for a multiplicity-preserving bijection, with optional
// forced assignments.  Complete: returns nullopt only when none exists.
std::optional<std::vector<int>> find_mapping(const Matrix& m1, const Matrix& m2,
                                             const std::vector<std::pair<int, int>>& forced) {
    const int n = static_cast<int>(m1.size());
    if (static_cast<int>(m2.size()) != n) return std::nullopt;
    if (n == 0) return std::vector<int>{};
    std::vector<int> init1(n, 0), init2(n, 0);
    int mark = 1;
    for (auto [v, w] : forced) {
        // individualize forced vertices before refining
        init1[v] = mark;
        init2[w] = mark;
        ++mark;
    }
    auto [c1, c2] = joint_refine(m1, m2, std::move(init1), std::move(init2));
    {
        auto h1 = c1, h2 = c2;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        if (h1 != h2) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (c1[v] == c2[w]) cand[v].push_back(w);
    for (auto [v, w] : forced) {
        if (std::find(cand[v].begin(), cand[v].end(), w) == cand[v].end()) return std::nullopt;
        cand[v] = {w};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cand[a].size() != cand[b].size()) return cand[a].size() < cand[b].size();
        return a < b;
    });
    std::vector<int> mapping(n, -1);
    std::vector<char> used(n, 0);
    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w : cand[v]) {
            if (used[w]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                const int u = order[d];
                if (m1[v][u] != m2[w][mapping[u]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[v] = w;
            used[w] = 1;
            if (self(self, depth + 1)) return true;
            mapping[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return mapping;
}

void check_capacity(const MultiGraph& g) {
    if (g.vertex_count() > kSearchCap)
        throw capacity_error("graph exceeds the exact-search cap of " +
                             std::to_string(kSearchCap) + " vertices");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

std::optional<Permutation> isomorphic(const MultiGraph& graph1, const MultiGraph& graph2) {
    check_capacity(graph1);
    check_capacity(graph2);
    if (graph1.vertex_count() != graph2.vertex_count()) return std::nullopt;
    if (graph1.edge_count() != graph2.edge_count()) return std::nullopt;
    auto mapping = find_mapping(multiplicity_matrix(graph1), multiplicity_matrix(graph2), {});
    if (!mapping) return std::nullopt;
    return Permutation(*mapping);
}

AutomorphismOrbits automorphism_orbits(const MultiGraph& graph) {
    check_capacity(graph);
    const int n = graph.vertex_count();
    const Matrix m = multiplicity_matrix(graph);
    const auto& es = graph.edges();
    const int ne = static_cast<int>(es.size());
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < ne; ++i) edge_index[{es[i].u, es[i].v}] = i;

    AutomorphismOrbits result;
    UnionFind vuf(n), euf(std::max(ne, 1));
    auto absorb = [&](const std::vector<int>& aut) {
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            if (aut[v] != v) identity = false;
            vuf.unite(v, aut[v]);
        }
        for (int i = 0; i < ne; ++i) {
            const int u = aut[es[i].u], v = aut[es[i].v];
            euf.unite(i, edge_index.at({std::min(u, v), std::max(u, v)}));
        }
        if (!identity) ++result.generator_count;
    };

    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            if (vuf.find(v) == vuf.find(w)) continue;
            if (auto aut = find_mapping(m, m, {{v, w}})) absorb(*aut);
        }
    }
    for (int i = 0; i < ne; ++i) {
        for (int j = i + 1; j < ne; ++j) {
            if (euf.find(i) == euf.find(j)) continue;
            if (es[i].p != es[j].p) continue;
            auto aut = find_mapping(m, m, {{es[i].u, es[j].u}, {es[i].v, es[j].v}});
            if (!aut) aut = find_mapping(m, m, {{es[i].u, es[j].v}, {es[i].v, es[j].u}});
            if (aut) absorb(*aut);
        }
    }
    result.vertex_orbits = classes_of(vuf, n);
    result.edge_orbits = ne == 0 ? std::vector<std::vector<int>>{} : classes_of(euf, ne);
    return result;
}

bool is_vertex_transitive(const MultiGraph& graph) {
    check_capacity(graph);
    const int n = graph.vertex_count();
    if (n <= 1) return true;
    const Matrix m = multiplicity_matrix(graph);
    UnionFind uf(n);
    for (int w = 1; w < n; ++w) {
        if (uf.find(0) == uf.find(w)) continue;
        auto aut = find_mapping(m, m, {{0, w}});
        if (!aut) return false;
        for (int v = 0; v < n; ++v) uf.unite(v, (*aut)[v]);
    }
    return true;
}

namespace {

bool edge_transitive_direct(const MultiGraph& graph) {
    const auto& es = graph.edges();
    const int ne = static_cast<int>(es.size());
    if (ne <= 1) return true;
    const Matrix m = multiplicity_matrix(graph);
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < ne; ++i) edge_index[{es[i].u, es[i].v}] = i;
    UnionFind uf(ne);
    auto absorb = [&](const std::vector<int>& aut) {
        for (int i = 0; i < ne; ++i) {
            const int u = aut[es[i].u], v = aut[es[i].v];
            uf.unite(i, edge_index.at({std::min(u, v), std::max(u, v)}));
        }
    };
    for (int j = 1; j < ne; ++j) {
        if (uf.find(0) == uf.find(j)) continue;
        if (es[0].p != es[j].p) return false;
        auto aut = find_mapping(m, m, {{es[0].u, es[j].u}, {es[0].v, es[j].v}});
        if (!aut) aut = find_mapping(m, m, {{es[0].u, es[j].v}, {es[0].v, es[j].u}});
        if (!aut) return false;
        absorb(*aut);
    }
    return true;
}

}  // namespace

bool is_edge_transitive(const MultiGraph& graph) {
    check_capacity(graph);
    const bool direct = edge_transitive_direct(graph);
    // Cross-check with the line-graph criterion where it is known to apply
    // (Whitney exceptions live below 5 vertices).
    if (graph.vertex_count() >= 5 && graph.is_simple() &&
        components(graph).size() == 1 && graph.edge_count() <= kSearchCap) {
        const bool via_line = is_vertex_transitive(line_graph(graph));
        if (via_line != direct)
            throw std::logic_error("edge-transitivity cross-check failed: direct=" +
                                   std::to_string(direct) + " line-graph=" +
                                   std::to_string(via_line));
    }
    return direct;
}

namespace {

// Deterministic rotation-extension pass: from the current path, breadth-first
// over rotation-reachable endpoints, extend whenever an endpoint sees an
// unvisited vertex (fewest onward moves first).  Finds cycles quickly on
// dense structured graphs; never proves absence.
std::optional<std::vector<int>> rotation_closure_cycle(int n,
                                                       const std::vector<uint64_t>& adj) {
    std::vector<int> path{0};
    auto rotations = [&](const std::vector<int>& p, auto&& visit) {
        std::vector<int> pos(n, -1);
        for (int i = 0; i < static_cast<int>(p.size()); ++i) pos[p[i]] = i;
        uint64_t nb = adj[p.back()];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            const int i = pos[w];
            if (i < 0 || i + 1 >= static_cast<int>(p.size()) - 1) continue;
            std::vector<int> q(p.begin(), p.begin() + i + 1);
            q.insert(q.end(), p.rbegin(), p.rend() - (i + 1));
            visit(std::move(q));
        }
    };
    while (static_cast<int>(path.size()) < n) {
        uint64_t inpath = 0;
        for (int v : path) inpath |= uint64_t{1} << v;
        bool extended = false;
        std::vector<char> seen_end(n, 0);
        seen_end[path.back()] = 1;
        std::vector<std::vector<int>> queue{path};
        for (size_t qi = 0; qi < queue.size() && !extended; ++qi) {
            const std::vector<int> p = queue[qi];
            uint64_t ext = adj[p.back()] & ~inpath;
            if (ext) {
                int best = -1, best_deg = n + 1;
                while (ext) {
                    const int w = std::countr_zero(ext);
                    ext &= ext - 1;
                    const int deg = std::popcount(adj[w] & ~inpath);
                    if (deg < best_deg) {
                        best = w;
                        best_deg = deg;
                    }
                }
                path = p;
                path.push_back(best);
                extended = true;
                break;
            }
            rotations(p, [&](std::vector<int> q) {
                if (!seen_end[q.back()]) {
                    seen_end[q.back()] = 1;
                    queue.push_back(std::move(q));
                }
            });
        }
        if (!extended) return std::nullopt;
    }
    // rotate until the endpoint closes on the start
    std::vector<char> seen_end(n, 0);
    seen_end[path.back()] = 1;
    std::vector<std::vector<int>> queue{path};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const std::vector<int> p = queue[qi];
        if (adj[p.back()] & uint64_t{1}) return p;
        rotations(p, [&](std::vector<int> q) {
            if (!seen_end[q.back()]) {
                seen_end[q.back()] = 1;
                queue.push_back(std::move(q));
            }
        });
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> is_hamiltonian(const MultiGraph& graph) {
    const int n = graph.vertex_count();
    if (n < 3) throw argument_error("hamiltonicity needs at least 3 vertices");
    check_capacity(graph);
    if (components(graph).size() != 1) return std::nullopt;

    std::vector<uint64_t> adj(n, 0);
    for (const auto& e : graph.edges()) {
        adj[e.u] |= uint64_t{1} << e.v;
        adj[e.v] |= uint64_t{1} << e.u;
    }
    for (int v = 0; v < n; ++v)
        if (std::popcount(adj[v]) < 2) return std::nullopt;

    if (auto fast = rotation_closure_cycle(n, adj)) return fast;

    const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::vector<int> path{0};
    uint64_t visited = uint64_t{1};

    auto remaining_connected = [&](uint64_t rest) {
        if (!rest) return true;
        const int start = std::countr_zero(rest);
        uint64_t seen = uint64_t{1} << start, frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & rest & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen == rest;
    };

    auto backtrack = [&](auto&& self, int current) -> bool {
        if (static_cast<int>(path.size()) == n) return (adj[current] >> 0 & 1) != 0;
        const uint64_t rest = all & ~visited;
        // every unvisited vertex still needs two usable path neighbors
        uint64_t scan = rest;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const uint64_t usable = adj[v] & (rest | (uint64_t{1} << current) | uint64_t{1});
            if (std::popcount(usable) < 2) return false;
        }
        if (!remaining_connected(rest)) return false;
        // degree-ordered branching: fewest onward moves first
        std::vector<std::pair<int, int>> nexts;
        uint64_t choices = adj[current] & rest;
        while (choices) {
            const int w = std::countr_zero(choices);
            choices &= choices - 1;
            nexts.emplace_back(std::popcount(adj[w] & rest), w);
        }
        std::sort(nexts.begin(), nexts.end());
        for (auto [unused_deg, w] : nexts) {
            visited |= uint64_t{1} << w;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            visited &= ~(uint64_t{1} << w);
        }
        return false;
    };

    if (!backtrack(backtrack, 0)) return std::nullopt;
    return path;
}

AnalysisReport analyze(const MultiGraph& graph, const AnalysisChecks& checks) {
    AnalysisReport report;
    report.component_vertex_lists = components(graph);
    report.component_count = static_cast<int>(report.component_vertex_lists.size());
    report.degree_sequence = degree_sequence(graph);
    report.regular = is_regular(graph);
    report.bipartite = is_bipartite(graph);
    if (checks.shape) report.recognized_shape = recognize(graph);
    if (checks.vt) report.vertex_transitive = is_vertex_transitive(graph);
    if (checks.et) report.edge_transitive = is_edge_transitive(graph);
    if (checks.ham && graph.vertex_count() >= 3) {
        report.hamiltonian_cycle = is_hamiltonian(graph);
        report.hamiltonian = report.hamiltonian_cycle.has_value();
    }
    if (checks.vt || checks.et) {
        report.automorphism_generator_count = automorphism_orbits(graph).generator_count;
    }
    if (checks.iso_other) report.isomorphic_to_other = isomorphic(graph, *checks.iso_other).has_value();
    return report;
}

}  // namespace gyro
