#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "wtss/graph.hpp"
#include "wtss/rational.hpp"

namespace wtss {

// One terminal branch of the recursive construction: which cut was removed at
// each recursion level to reach it (-1 entries form the unexpanded suffix),
// the sizes of the cut sequence computed there, and the value of the closing
// flow whose sink edges get kept.
struct CutRecord {
    std::vector<int> choices;
    std::vector<std::size_t> cut_sizes;
    std::size_t final_flow_value = 0;
};

struct TargetBuildInfo {
    VertexId target = 0;
    bool reachable = false;
    Rational base_distance;            // source-to-target distance before any increment
    std::size_t kept_in_degree = 0;    // in-edges of the target that survive
    std::size_t terminal_branch_count = 0;
    std::vector<CutRecord> ledger;
};

struct WtssResult {
    Subgraph h;
    VertexId source = 0;
    std::optional<VertexId> target;    // engaged for single-target builds
    int budget = 1;
    std::vector<TargetBuildInfo> targets;
};

// floor(e * (k-1)! * 2^k): the guaranteed cap on how many in-edges of a
// target the single-target construction can keep.
unsigned long long indegree_bound(int budget);

// Exact count bound on terminal branches of the recursion:
// sum over j in [k] of (k-1)!/(k-j)!.
unsigned long long terminal_branch_bound(int budget);

// Single-target construction. Produces a subgraph that differs from g only at
// the in-edges of t and preserves the s-to-t distance under every integer
// weight increment of total at most budget. Pipeline: out-degree reduction,
// then a recursion that repeatedly removes farthest min-cuts of the
// shortest-path subgraph and finally keeps the sink edges of one closing
// max flow per surviving branch, then projection back to original edge ids.
// Throws UnreachableError when t cannot be reached from s, IntegralityError
// on non-integer weights, ParameterError for budget < 1.
WtssResult build_wtss_t(const Subgraph& g, VertexId s, VertexId t, int budget);
WtssResult build_wtss_t(const Graph& g, VertexId s, VertexId t, int budget);

// Whole-graph construction: processes vertices in ascending id order, each
// round restricting the in-edges of one vertex to what the single-target
// build on the current (already pruned) graph keeps. Unreachable vertices
// lose all in-edges; the source keeps none of its in-edges.
WtssResult build_wtss(const Graph& g, VertexId s, int budget);

struct Statistics {
    std::size_t edge_count = 0;
    std::vector<std::size_t> in_degree;
    std::size_t max_in_degree = 0;
    unsigned long long in_degree_cap = 0;
    std::vector<CutRecord> ledger;
};

Statistics stats(const WtssResult& result);

// Sidecar text format: "edges N", "max_indegree N", "bound N".
void write_stats(const Statistics& s, std::ostream& out);

}  // namespace wtss
