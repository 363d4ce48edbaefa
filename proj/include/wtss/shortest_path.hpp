#pragma once

#include <optional>
#include <vector>

#include "wtss/graph.hpp"

namespace wtss {

// Exact distances from (or to) one vertex. Unreachable is a distinct state,
// never a sentinel weight.
struct DistanceTable {
    std::vector<std::optional<Rational>> dist;

    bool reachable(VertexId v) const { return dist[static_cast<std::size_t>(v)].has_value(); }
    const Rational& at(VertexId v) const { return *dist[static_cast<std::size_t>(v)]; }
    const std::optional<Rational>& get(VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
};

// Single-source shortest distances by round-based relaxation; weights may be
// negative. Throws NegativeCycleError when a reachable negative cycle keeps
// relaxing past round n-1.
DistanceTable sssp(const Subgraph& g, VertexId src);

// Distances towards dst, i.e. sssp on the edge-reversed view.
DistanceTable reverse_sssp(const Subgraph& g, VertexId dst);

// The subgraph formed by exactly the edges (u,v) with
// dist(s,u) + w(u,v) + dist(v,t) == dist(s,t). Throws UnreachableError when
// there is no s-t path.
Subgraph shortest_path_subgraph(const Subgraph& g, VertexId s, VertexId t);

}  // namespace wtss
