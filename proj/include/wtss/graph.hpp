#pragma once

#include <iosfwd>
#include <vector>

#include "wtss/rational.hpp"

namespace wtss {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    Rational weight;
};

// Directed multigraph with a designated source vertex. Edge ids are dense,
// equal to the position in the edge list, and that list order is the
// canonical order for every deterministic output of this library. Parallel
// edges and self-loops are allowed. Immutable after construction.
class Graph {
  public:
    Graph(int vertex_count, std::vector<Edge> edges, VertexId source);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexId source() const { return source_; }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids leaving / entering v, ascending.
    const std::vector<EdgeId>& out_ids(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<EdgeId>& in_ids(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }

    bool all_weights_integral() const;

    friend bool operator==(const Graph& a, const Graph& b);

  private:
    int n_;
    std::vector<Edge> edges_;
    VertexId source_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// Edge-subset view of a parent graph. The vertex set is always the parent's
// full vertex set; views never renumber vertices or edges. Cheap to copy and
// to shrink, which the recursive construction does a lot.
class Subgraph {
  public:
    explicit Subgraph(const Graph& parent, bool include_all = true);
    Subgraph(const Graph& parent, const std::vector<EdgeId>& edge_ids);
    Subgraph(const Graph& parent, std::vector<char> mask);

    const Graph& parent() const { return *parent_; }
    int vertex_count() const { return parent_->vertex_count(); }
    bool includes(EdgeId e) const { return mask_[static_cast<std::size_t>(e)] != 0; }
    int edge_count() const { return count_; }

    std::vector<EdgeId> edge_ids() const;
    std::vector<EdgeId> out_edges(VertexId v) const;
    std::vector<EdgeId> in_edges(VertexId v) const;

    Subgraph without(const std::vector<EdgeId>& edge_ids) const;
    Subgraph restricted_to(const std::vector<char>& keep) const;

    const std::vector<char>& mask() const { return mask_; }

    friend bool operator==(const Subgraph& a, const Subgraph& b);

  private:
    const Graph* parent_;
    std::vector<char> mask_;
    int count_;
};

Subgraph full_view(const Graph& g);

// Vertices reachable from the given set following included edges forward
// (or backward when reverse is set). Result is an indicator over vertex ids.
std::vector<char> reachable(const Subgraph& g, const std::vector<VertexId>& from, bool reverse = false);

// Union of all s-t paths: keeps edge (u,v) iff u is reachable from s and t is
// reachable from v inside the view. Empty when t is unreachable.
Subgraph st_path_closure(const Subgraph& g, VertexId s, VertexId t);

// Line-oriented text format: '#' comments, "n <count>", "s <vertex>",
// "e <tail> <head> <weight>" with weight a decimal integer or "p/q".
// "n" must precede all "e" lines. Rejects out-of-range vertices and any
// negative-weight cycle reachable from the source.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

void serialize(const Graph& g, std::ostream& out);
void serialize(const Subgraph& g, std::ostream& out);
std::string serialize_to_string(const Graph& g);
std::string serialize_to_string(const Subgraph& g);

// Interprets h as an edge-subset of g by matching (tail, head, weight)
// multisets; throws RangeError when h has an edge g cannot account for.
// Used by the CLI, whose two inputs arrive as separate files.
Subgraph subgraph_of(const Graph& g, const Graph& h);

}  // namespace wtss
