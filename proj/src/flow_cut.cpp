#include "wtss/flow_cut.hpp"

#include <algorithm>
#include <deque>

#include "wtss/errors.hpp"
#include "wtss/shortest_path.hpp"

namespace wtss {

std::vector<EdgeId> FlowAssignment::support() const {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < static_cast<EdgeId>(flow.size()); ++e)
        if (flow[static_cast<std::size_t>(e)]) ids.push_back(e);
    return ids;
}

namespace {

struct ResidualArc {
    EdgeId edge;
    VertexId to;
    bool backward;
};

// Residual arcs out of v in ascending edge-id order: forward arcs are
// included edges with no flow, backward arcs are included edges into v that
// currently carry flow.
std::vector<ResidualArc> residual_arcs(const Subgraph& g, const std::vector<char>& flow, VertexId v) {
    const Graph& parent = g.parent();
    const auto& out = parent.out_ids(v);
    const auto& in = parent.in_ids(v);
    std::vector<ResidualArc> arcs;
    std::size_t i = 0, j = 0;
    while (i < out.size() || j < in.size()) {
        bool take_out = j >= in.size() || (i < out.size() && out[i] < in[j]);
        if (take_out) {
            EdgeId e = out[i++];
            if (g.includes(e) && !flow[static_cast<std::size_t>(e)])
                arcs.push_back({e, parent.edge(e).head, false});
        } else {
            EdgeId e = in[j++];
            if (g.includes(e) && flow[static_cast<std::size_t>(e)])
                arcs.push_back({e, parent.edge(e).tail, true});
        }
    }
    return arcs;
}

bool find_augmenting_path(const Subgraph& g, const std::vector<char>& flow,
                          const std::vector<VertexId>& sources, VertexId t,
                          std::vector<ResidualArc>& path) {
    const Graph& parent = g.parent();
    std::vector<char> seen(static_cast<std::size_t>(parent.vertex_count()), 0);
    std::vector<ResidualArc> via(static_cast<std::size_t>(parent.vertex_count()), {-1, -1, false});
    std::deque<VertexId> queue;
    for (VertexId s : sources) {
        if (!seen[static_cast<std::size_t>(s)]) {
            seen[static_cast<std::size_t>(s)] = 1;
            queue.push_back(s);
        }
    }
    bool found = false;
    while (!queue.empty() && !found) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const ResidualArc& arc : residual_arcs(g, flow, v)) {
            if (seen[static_cast<std::size_t>(arc.to)]) continue;
            seen[static_cast<std::size_t>(arc.to)] = 1;
            via[static_cast<std::size_t>(arc.to)] = arc;
            if (arc.to == t) {
                found = true;
                break;
            }
            queue.push_back(arc.to);
        }
    }
    if (!found) return false;
    path.clear();
    VertexId v = t;
    while (via[static_cast<std::size_t>(v)].edge >= 0) {
        const ResidualArc& arc = via[static_cast<std::size_t>(v)];
        path.push_back(arc);
        v = arc.backward ? g.parent().edge(arc.edge).head : g.parent().edge(arc.edge).tail;
    }
    return true;
}

std::vector<VertexId> sorted_unique(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

FlowAssignment max_flow(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t) {
    const Graph& parent = g.parent();
    if (t < 0 || t >= parent.vertex_count()) throw RangeError("sink out of range");
    std::vector<VertexId> src = sorted_unique(sources);
    for (VertexId s : src) {
        if (s < 0 || s >= parent.vertex_count()) throw RangeError("source out of range");
        if (s == t) throw RangeError("sink must not be a source");
    }
    FlowAssignment f;
    f.flow.assign(static_cast<std::size_t>(parent.edge_count()), 0);
    f.sources = src;
    f.sink = t;
    std::vector<ResidualArc> path;
    while (find_augmenting_path(g, f.flow, src, t, path)) {
        for (const ResidualArc& arc : path)
            f.flow[static_cast<std::size_t>(arc.edge)] = arc.backward ? 0 : 1;
        ++f.value;
    }
    return f;
}

CutResult farthest_min_cut(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t) {
    FlowAssignment f = max_flow(g, sources, t);
    if (f.value == 0) throw UnreachableError("sink unreachable from source set");
    const Graph& parent = g.parent();
    int n = parent.vertex_count();
    // B = vertices with a residual path to t, found by walking residual arcs
    // backwards from t.
    std::vector<char> in_b(static_cast<std::size_t>(n), 0);
    std::deque<VertexId> queue;
    in_b[static_cast<std::size_t>(t)] = 1;
    queue.push_back(t);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : parent.in_ids(v)) {
            if (!g.includes(e) || f.flow[static_cast<std::size_t>(e)]) continue;
            VertexId u = parent.edge(e).tail;
            if (!in_b[static_cast<std::size_t>(u)]) {
                in_b[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
        }
        for (EdgeId e : parent.out_ids(v)) {
            if (!g.includes(e) || !f.flow[static_cast<std::size_t>(e)]) continue;
            VertexId u = parent.edge(e).head;
            if (!in_b[static_cast<std::size_t>(u)]) {
                in_b[static_cast<std::size_t>(u)] = 1;
                queue.push_back(u);
            }
        }
    }
    CutResult result;
    result.in_a.assign(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) {
        if (in_b[static_cast<std::size_t>(v)])
            result.side_b.push_back(v);
        else {
            result.in_a[static_cast<std::size_t>(v)] = 1;
            result.side_a.push_back(v);
        }
    }
    for (EdgeId e = 0; e < parent.edge_count(); ++e) {
        if (!g.includes(e)) continue;
        const Edge& ed = parent.edge(e);
        if (result.in_a[static_cast<std::size_t>(ed.tail)] && in_b[static_cast<std::size_t>(ed.head)])
            result.cut.push_back(e);
    }
    return result;
}

CutResult partition(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t,
                    const std::vector<EdgeId>& cut) {
    Subgraph rest = g.without(cut);
    std::vector<char> in_a = reachable(rest, sorted_unique(sources));
    if (in_a[static_cast<std::size_t>(t)])
        throw NotACutError("edge set does not cut all source-to-sink paths");
    CutResult result;
    result.cut = cut;
    std::sort(result.cut.begin(), result.cut.end());
    result.cut.erase(std::unique(result.cut.begin(), result.cut.end()), result.cut.end());
    result.in_a = in_a;
    for (VertexId v = 0; v < g.parent().vertex_count(); ++v) {
        if (in_a[static_cast<std::size_t>(v)])
            result.side_a.push_back(v);
        else
            result.side_b.push_back(v);
    }
    return result;
}

CutResult fsmc(const Subgraph& g, const std::vector<VertexId>& sources, VertexId s, VertexId t) {
    Subgraph shortest = shortest_path_subgraph(g, s, t);
    return farthest_min_cut(shortest, sources, t);
}

FlowAssignment short_max_flow(const Subgraph& g, const std::vector<VertexId>& sources, VertexId s,
                              VertexId t) {
    Subgraph shortest = shortest_path_subgraph(g, s, t);
    return max_flow(shortest, sources, t);
}

std::vector<std::vector<EdgeId>> decompose_flow_paths(const Subgraph& g, const FlowAssignment& f) {
    const Graph& parent = g.parent();
    std::vector<char> remaining = f.flow;
    std::vector<std::vector<EdgeId>> paths;
    for (int unit = 0; unit < f.value; ++unit) {
        // BFS from the sources following only flow-carrying edges.
        std::vector<EdgeId> via(static_cast<std::size_t>(parent.vertex_count()), -1);
        std::vector<char> seen(static_cast<std::size_t>(parent.vertex_count()), 0);
        std::deque<VertexId> queue;
        for (VertexId s : f.sources) {
            if (!seen[static_cast<std::size_t>(s)]) {
                seen[static_cast<std::size_t>(s)] = 1;
                queue.push_back(s);
            }
        }
        bool found = false;
        while (!queue.empty() && !found) {
            VertexId v = queue.front();
            queue.pop_front();
            for (EdgeId e : parent.out_ids(v)) {
                if (!remaining[static_cast<std::size_t>(e)]) continue;
                VertexId next = parent.edge(e).head;
                if (seen[static_cast<std::size_t>(next)]) continue;
                seen[static_cast<std::size_t>(next)] = 1;
                via[static_cast<std::size_t>(next)] = e;
                if (next == f.sink) {
                    found = true;
                    break;
                }
                queue.push_back(next);
            }
        }
        if (!found) throw std::logic_error("flow value exceeds path decomposition");
        std::vector<EdgeId> path;
        VertexId v = f.sink;
        while (via[static_cast<std::size_t>(v)] >= 0) {
            EdgeId e = via[static_cast<std::size_t>(v)];
            path.push_back(e);
            remaining[static_cast<std::size_t>(e)] = 0;
            v = parent.edge(e).tail;
        }
        std::reverse(path.begin(), path.end());
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace wtss
