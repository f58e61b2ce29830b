#pragma once

#include <vector>

#include "gyro/gyrogroup.hpp"
#include "gyro/multigraph.hpp"

namespace gyro {

// Cycle decomposition of x -> s+x, ordered by anchor; the orbits partition G.
std::vector<OrbitVertex> orbit_vertices(const GyroGroup& g, int s);

struct GGraphOptions {
    // Identity generators create degenerate singleton levels and are
    // rejected by default.  Opting in keeps the level; its vertices are the
    // n singleton orbits.
    bool allow_identity_level = false;
};

// G-gyro-graph: vertices are the per-level orbit cycles, with a p-edge
// between distinct vertices whose orbits meet in p >= 1 elements.  Vertex
// order: levels in the order given, anchors ascending within a level.
// Attaches a warning when a level's cycle lengths are non-uniform.
MultiGraph g_graph(const GyroGroup& g, const std::vector<int>& gens,
                   const GGraphOptions& opts = {});

// Left Cayley graph: one arc x -> s+x per generator; undirected projection
// merges antiparallel arc pairs, multiplicity = max of the two directions.
MultiGraph l_cayley(const GyroGroup& g, const std::vector<int>& gens);

// Right Cayley graph: arcs x -> x+s.
MultiGraph r_cayley(const GyroGroup& g, const std::vector<int>& gens);

// Line graph of a simple loop-free graph: one vertex per edge, adjacent iff
// the edges share an endpoint.  argument_error on multigraph input.
MultiGraph line_graph(const MultiGraph& graph);

}  // namespace gyro
