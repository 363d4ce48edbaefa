#pragma once

#include <optional>
#include <vector>

#include "wtss/graph.hpp"

namespace wtss {

// Correspondence between a graph and its out-degree-reduced form. Every
// original edge is represented by exactly one leaf edge carrying its weight;
// all other transformed edges are zero-weight plumbing.
struct TransformMapping {
    int original_vertex_count = 0;
    VertexId transformed_source = 0;
    bool super_source_added = false;
    // Per original edge id: the transformed leaf edge standing in for it
    // (absent when the edge was not part of the transformed view).
    std::vector<std::optional<EdgeId>> leaf_of_original;
    // Per transformed edge id: the original edge id, or -1 for gadget edges.
    std::vector<EdgeId> original_of_transformed;
    // Per original vertex: root of its fan-out tree, or -1 when out-degree 0.
    std::vector<VertexId> gadget_root;
};

struct TransformResult {
    Graph graph;
    TransformMapping mapping;
};

// Rebuilds the graph so that the source has out-degree 1 and every other
// vertex out-degree at most 2, preserving all distances from the source.
// When the source has more than one out-edge a fresh zero-weight super-source
// is prepended first; then each vertex's out-edges are re-hung off a balanced
// zero-weight binary tree whose leaves carry the original weights. Leaf order
// follows canonical out-edge order. The overloads without an explicit source
// use the parent graph's designated source.
TransformResult reduce_out_degree(const Subgraph& g, VertexId source);
TransformResult reduce_out_degree(const Subgraph& g);
TransformResult reduce_out_degree(const Graph& g);

// Projects a subgraph of the transformed graph back onto original edge ids:
// an original edge is included iff its leaf edge is.
Subgraph map_back(const TransformMapping& mapping, const Subgraph& transformed,
                  const Graph& original);

}  // namespace wtss
