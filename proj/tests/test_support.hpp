#pragma once

// Brute-force reference implementations used as oracles. Everything here is
// deliberately independent of the library's algorithmic paths: plain
// enumeration over simple paths, edge subsets and compositions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "wtss/graph.hpp"
#include "wtss/oracle.hpp"
#include "wtss/rational.hpp"

namespace wtss::testing {

inline Rational path_weight(const Graph& g, const std::vector<EdgeId>& path) {
    Rational total(0);
    for (EdgeId e : path) total += g.edge(e).weight;
    return total;
}

// All simple s-t paths (vertex-repetition free) as edge-id sequences, in DFS
// order following ascending edge ids.
inline std::vector<std::vector<EdgeId>> enumerate_simple_paths(const Subgraph& g, VertexId s,
                                                               VertexId t) {
    std::vector<std::vector<EdgeId>> paths;
    std::vector<EdgeId> current;
    std::vector<char> visited(static_cast<std::size_t>(g.parent().vertex_count()), 0);
    std::function<void(VertexId)> walk = [&](VertexId v) {
        if (v == t) {
            paths.push_back(current);
            return;
        }
        visited[static_cast<std::size_t>(v)] = 1;
        for (EdgeId e : g.out_edges(v)) {
            VertexId next = g.parent().edge(e).head;
            if (visited[static_cast<std::size_t>(next)]) continue;
            current.push_back(e);
            walk(next);
            current.pop_back();
        }
        visited[static_cast<std::size_t>(v)] = 0;
    };
    walk(s);
    return paths;
}

inline std::vector<EdgeId> union_of_paths(const std::vector<std::vector<EdgeId>>& paths) {
    std::vector<EdgeId> edges;
    for (const auto& p : paths) edges.insert(edges.end(), p.begin(), p.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

inline std::vector<EdgeId> union_of_min_weight_paths(const Subgraph& g, VertexId s, VertexId t) {
    auto paths = enumerate_simple_paths(g, s, t);
    if (paths.empty()) return {};
    std::optional<Rational> best;
    for (const auto& p : paths) {
        Rational w = path_weight(g.parent(), p);
        if (!best || w < *best) best = w;
    }
    std::vector<std::vector<EdgeId>> chosen;
    for (const auto& p : paths)
        if (path_weight(g.parent(), p) == *best) chosen.push_back(p);
    return union_of_paths(chosen);
}

// Distance by minimizing over simple paths; equals the true shortest distance
// whenever no negative cycle is reachable.
inline std::optional<Rational> brute_distance(const Subgraph& g, VertexId s, VertexId t) {
    if (s == t) return Rational(0);
    std::optional<Rational> best;
    for (const auto& p : enumerate_simple_paths(g, s, t)) {
        Rational w = path_weight(g.parent(), p);
        if (!best || w < *best) best = w;
    }
    return best;
}

// All simple cycles as edge-id sequences (each cycle reported once per
// starting vertex choice; fine for predicates over cycle weights).
inline std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const Graph& g) {
    std::vector<std::vector<EdgeId>> cycles;
    Subgraph view = full_view(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<EdgeId> current;
        std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
        std::function<void(VertexId)> walk = [&](VertexId u) {
            for (EdgeId e : view.out_edges(u)) {
                VertexId next = g.edge(e).head;
                if (next == v) {
                    current.push_back(e);
                    cycles.push_back(current);
                    current.pop_back();
                    continue;
                }
                if (next < v || visited[static_cast<std::size_t>(next)]) continue;
                visited[static_cast<std::size_t>(next)] = 1;
                current.push_back(e);
                walk(next);
                current.pop_back();
                visited[static_cast<std::size_t>(next)] = 0;
            }
        };
        walk(v);
    }
    return cycles;
}

inline bool is_cut(const Subgraph& g, const std::vector<VertexId>& sources, VertexId t,
                   const std::vector<EdgeId>& cut) {
    std::vector<char> reach = reachable(g.without(cut), sources);
    return !reach[static_cast<std::size_t>(t)];
}

// All source-to-sink cuts of exactly the given size.
inline std::vector<std::vector<EdgeId>> cuts_of_size(const Subgraph& g,
                                                     const std::vector<VertexId>& sources,
                                                     VertexId t, std::size_t size) {
    std::vector<EdgeId> ids = g.edge_ids();
    std::vector<std::vector<EdgeId>> found;
    std::vector<EdgeId> chosen;
    std::function<void(std::size_t)> pick = [&](std::size_t from) {
        if (chosen.size() == size) {
            if (is_cut(g, sources, t, chosen)) found.push_back(chosen);
            return;
        }
        for (std::size_t i = from; i < ids.size(); ++i) {
            if (ids.size() - i < size - chosen.size()) break;
            chosen.push_back(ids[i]);
            pick(i + 1);
            chosen.pop_back();
        }
    };
    pick(0);
    return found;
}

inline std::optional<std::size_t> brute_min_cut_value(const Subgraph& g,
                                                      const std::vector<VertexId>& sources,
                                                      VertexId t) {
    std::vector<char> reach = reachable(g, sources);
    if (!reach[static_cast<std::size_t>(t)]) return 0;
    for (std::size_t size = 1; size <= static_cast<std::size_t>(g.edge_count()); ++size)
        if (!cuts_of_size(g, sources, t, size).empty()) return size;
    return std::nullopt;  // cannot happen: removing all edges always cuts
}

// Maximum number of edge-disjoint source-to-sink paths, by exhaustive
// branching over which path to peel off next (memoized on the edge mask).
inline int brute_disjoint_paths(const Subgraph& g, const std::vector<VertexId>& sources,
                                VertexId t) {
    std::map<std::vector<char>, int> memo;
    std::function<int(const Subgraph&)> best = [&](const Subgraph& view) -> int {
        auto it = memo.find(view.mask());
        if (it != memo.end()) return it->second;
        int answer = 0;
        for (VertexId s : sources) {
            if (s == t) continue;
            for (const auto& path : enumerate_simple_paths(view, s, t))
                answer = std::max(answer, 1 + best(view.without(path)));
        }
        memo[view.mask()] = answer;
        return answer;
    };
    return best(g);
}

// Deterministic integer in [lo, hi]; avoids unspecified distribution classes.
inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct RandomGraphOptions {
    int min_n = 2;
    int max_n = 7;
    int max_m = 12;
    std::int64_t min_w = -2;
    std::int64_t max_w = 5;
    bool allow_self_loops = false;
    bool require_positive_cycles = false;  // every simple cycle strictly positive
    bool zero_weights = false;
};

inline bool negative_cycle_reachable(const Graph& g) {
    std::vector<char> reach = reachable(full_view(g), {g.source()});
    for (const auto& cycle : enumerate_simple_cycles(g)) {
        if (!(path_weight(g, cycle) < Rational(0))) continue;
        if (reach[static_cast<std::size_t>(g.edge(cycle.front()).tail)]) return true;
    }
    return false;
}

inline Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {}) {
    for (;;) {
        int n = static_cast<int>(rand_int(rng, options.min_n, options.max_n));
        int m = static_cast<int>(rand_int(rng, 1, options.max_m));
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) {
            Edge e;
            e.tail = static_cast<VertexId>(rand_int(rng, 0, n - 1));
            e.head = static_cast<VertexId>(rand_int(rng, 0, n - 1));
            if (!options.allow_self_loops && e.tail == e.head) {
                e.head = static_cast<VertexId>((e.head + 1) % n);
            }
            e.weight = options.zero_weights ? Rational(0)
                                         : Rational(rand_int(rng, options.min_w, options.max_w));
            edges.push_back(e);
        }
        Graph g(n, std::move(edges), 0);
        if (negative_cycle_reachable(g)) continue;
        if (options.require_positive_cycles) {
            bool ok = true;
            for (const auto& cycle : enumerate_simple_cycles(g)) {
                if (!(Rational(0) < path_weight(g, cycle))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        return g;
    }
}

// Fixture: s -> a -> t with the given weights plus direct weights overridable.
inline Graph chain_graph(std::vector<std::int64_t> weights) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < weights.size(); ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1),
                         Rational(weights[i])});
    return Graph(static_cast<int>(weights.size()) + 1, std::move(edges), 0);
}

// Fixture: s=0, a=1, b=2, t=3 with edges s->a, s->b, a->t, b->t.
inline Graph diamond_graph(std::int64_t sa, std::int64_t sb, std::int64_t at, std::int64_t bt) {
    std::vector<Edge> edges{{0, 1, Rational(sa)},
                            {0, 2, Rational(sb)},
                            {1, 3, Rational(at)},
                            {2, 3, Rational(bt)}};
    return Graph(4, std::move(edges), 0);
}

}  // namespace wtss::testing
