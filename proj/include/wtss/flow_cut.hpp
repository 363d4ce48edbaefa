#pragma once

#include <vector>

#include "wtss/graph.hpp"

namespace wtss {

// Integral unit-capacity flow from a set of source vertices to one sink.
struct FlowAssignment {
    std::vector<char> flow;  // per edge id of the parent graph, 0 or 1
    int value = 0;
    std::vector<VertexId> sources;
    VertexId sink = 0;

    bool carries(EdgeId e) const { return flow[static_cast<std::size_t>(e)] != 0; }
    std::vector<EdgeId> support() const;
};

// A cut with the vertex partition it induces. partition() fills side_a with
// the vertices reachable from the sources once the cut is gone;
// farthest_min_cut() fills side_b with the vertices that still have a
// residual path to the sink and side_a with the complement.
struct CutResult {
    std::vector<EdgeId> cut;        // ascending
    std::vector<VertexId> side_a;   // ascending
    std::vector<VertexId> side_b;   // ascending
    std::vector<char> in_a;         // indicator over vertex ids
};

// Maximum flow by BFS augmentation over the residual graph. The source set is
// handled natively (no materialized super-source). Deterministic: the BFS
// scans residual arcs in ascending edge-id order and starts from the sources
// in ascending vertex order, so repeated runs give identical assignments.
// Value 0 when t is unreachable. Requires t not in sources.
FlowAssignment max_flow(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t);

// The unique (S,t)-min-cut whose source side contains the source side of
// every other min-cut: compute a max flow, take B = vertices with a residual
// path to t, A = complement, and cut = edges from A to B.
// Throws UnreachableError when the max-flow value is 0.
CutResult farthest_min_cut(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t);

// Splits the vertex set around an (S,t)-cut: A = reachable from the sources
// in g minus the cut. Throws NotACutError if t stays reachable.
CutResult partition(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t,
                    const std::vector<EdgeId>& cut);

// Farthest min-cut taken inside the shortest-path subgraph of g w.r.t. s,t.
CutResult fsmc(const Subgraph& g, const std::vector<VertexId>& sources, VertexId s, VertexId t);

// Max flow restricted to the shortest-path subgraph of g w.r.t. s,t.
FlowAssignment short_max_flow(const Subgraph& g, const std::vector<VertexId>& sources, VertexId s,
                              VertexId t);

// Splits an integral flow into `value` many edge-disjoint source-to-sink
// paths (any flow on cycles is left behind). Deterministic.
std::vector<std::vector<EdgeId>> decompose_flow_paths(const Subgraph& g, const FlowAssignment& f);

}  // namespace wtss
