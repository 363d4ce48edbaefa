#include "wtss/shortest_path.hpp"

#include "wtss/errors.hpp"

namespace wtss {

namespace {

DistanceTable relax_rounds(const Subgraph& g, VertexId start, bool reverse) {
    const Graph& parent = g.parent();
    int n = parent.vertex_count();
    if (start < 0 || start >= n) throw RangeError("vertex id out of range");
    DistanceTable table;
    table.dist.resize(static_cast<std::size_t>(n));
    table.dist[static_cast<std::size_t>(start)] = Rational(0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < parent.edge_count(); ++e) {
            if (!g.includes(e)) continue;
            const Edge& ed = parent.edge(e);
            VertexId from = reverse ? ed.head : ed.tail;
            VertexId to = reverse ? ed.tail : ed.head;
            const auto& df = table.dist[static_cast<std::size_t>(from)];
            if (!df) continue;
            Rational candidate = *df + ed.weight;
            auto& dt = table.dist[static_cast<std::size_t>(to)];
            if (!dt || candidate < *dt) {
                dt = candidate;
                changed = true;
            }
        }
        if (!changed) return table;
        if (round == n - 1)
            throw NegativeCycleError("relaxation did not converge: negative cycle");
    }
    return table;
}

}  // namespace

DistanceTable sssp(const Subgraph& g, VertexId src) { return relax_rounds(g, src, false); }

DistanceTable reverse_sssp(const Subgraph& g, VertexId dst) { return relax_rounds(g, dst, true); }

Subgraph shortest_path_subgraph(const Subgraph& g, VertexId s, VertexId t) {
    // Work inside the s-t path closure: the qualifying edges all live there,
    // and it shields the reverse relaxation from negative cycles that reach t
    // without being reachable from s.
    Subgraph corridor = st_path_closure(g, s, t);
    DistanceTable from_s = sssp(corridor, s);
    if (!from_s.reachable(t)) throw UnreachableError("target not reachable from source");
    DistanceTable to_t = reverse_sssp(corridor, t);
    const Rational& total = from_s.at(t);
    const Graph& parent = g.parent();
    std::vector<char> keep(static_cast<std::size_t>(parent.edge_count()), 0);
    for (EdgeId e = 0; e < parent.edge_count(); ++e) {
        if (!corridor.includes(e)) continue;
        const Edge& ed = parent.edge(e);
        const auto& du = from_s.get(ed.tail);
        const auto& dv = to_t.get(ed.head);
        if (du && dv && *du + ed.weight + *dv == total) keep[static_cast<std::size_t>(e)] = 1;
    }
    return g.restricted_to(keep);
}

}  // namespace wtss
