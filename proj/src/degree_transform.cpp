#include "wtss/degree_transform.hpp"

#include "wtss/errors.hpp"

namespace wtss {

namespace {

struct Builder {
    std::vector<Edge> edges;
    std::vector<EdgeId> original_of_transformed;
    int next_vertex;

    EdgeId add(VertexId tail, VertexId head, const Rational& w, EdgeId original) {
        edges.push_back({tail, head, w});
        original_of_transformed.push_back(original);
        return static_cast<EdgeId>(edges.size()) - 1;
    }
};

// Balanced fan-out tree over out_edges[lo, hi): returns the subtree root and
// records each leaf vertex in creation order next to its out-edge index.
VertexId build_tree(Builder& b, std::vector<std::pair<std::size_t, VertexId>>& leaves,
                    std::size_t lo, std::size_t hi) {
    VertexId node = b.next_vertex++;
    if (hi - lo == 1) {
        leaves.push_back({lo, node});
        return node;
    }
    std::size_t mid = lo + (hi - lo + 1) / 2;
    VertexId left = build_tree(b, leaves, lo, mid);
    b.add(node, left, Rational(0), -1);
    VertexId right = build_tree(b, leaves, mid, hi);
    b.add(node, right, Rational(0), -1);
    return node;
}

}  // namespace

TransformResult reduce_out_degree(const Subgraph& g, VertexId source) {
    const Graph& parent = g.parent();
    int n = parent.vertex_count();
    if (source < 0 || source >= n) throw RangeError("source vertex out of range");
    TransformMapping mapping;
    mapping.original_vertex_count = n;
    mapping.leaf_of_original.resize(static_cast<std::size_t>(parent.edge_count()));
    mapping.gadget_root.assign(static_cast<std::size_t>(n), -1);

    Builder b;
    b.next_vertex = n;
    mapping.transformed_source = source;
    if (static_cast<int>(g.out_edges(source).size()) > 1) {
        VertexId super_source = b.next_vertex++;
        b.add(super_source, source, Rational(0), -1);
        mapping.super_source_added = true;
        mapping.transformed_source = super_source;
    }

    for (VertexId v = 0; v < n; ++v) {
        std::vector<EdgeId> out = g.out_edges(v);
        if (out.empty()) continue;
        std::vector<std::pair<std::size_t, VertexId>> leaves;
        // build_tree creates vertices in preorder, so the root gets the next
        // free id; hook the vertex to it before emitting the tree edges.
        VertexId root = b.next_vertex;
        b.add(v, root, Rational(0), -1);
        build_tree(b, leaves, 0, out.size());
        mapping.gadget_root[static_cast<std::size_t>(v)] = root;
        for (const auto& [edge_index, leaf] : leaves) {
            EdgeId original = out[edge_index];
            const Edge& ed = parent.edge(original);
            EdgeId leaf_edge = b.add(leaf, ed.head, ed.weight, original);
            mapping.leaf_of_original[static_cast<std::size_t>(original)] = leaf_edge;
        }
    }

    mapping.original_of_transformed = std::move(b.original_of_transformed);
    Graph transformed(b.next_vertex, std::move(b.edges), mapping.transformed_source);
    return {std::move(transformed), std::move(mapping)};
}

TransformResult reduce_out_degree(const Subgraph& g) {
    return reduce_out_degree(g, g.parent().source());
}

TransformResult reduce_out_degree(const Graph& g) { return reduce_out_degree(full_view(g)); }

Subgraph map_back(const TransformMapping& mapping, const Subgraph& transformed,
                  const Graph& original) {
    if (static_cast<std::size_t>(original.edge_count()) != mapping.leaf_of_original.size())
        throw RangeError("mapping does not belong to this graph");
    std::vector<EdgeId> included;
    for (EdgeId e = 0; e < original.edge_count(); ++e) {
        const auto& leaf = mapping.leaf_of_original[static_cast<std::size_t>(e)];
        if (leaf && transformed.includes(*leaf)) included.push_back(e);
    }
    return Subgraph(original, included);
}

}  // namespace wtss
