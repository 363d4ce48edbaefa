#include "wtss/lb_generators.hpp"

#include <stdexcept>

#include "wtss/errors.hpp"

namespace wtss {

namespace {

void check_predicted(const LBInstance& inst) {
    if (inst.graph.edge_count() != inst.predicted_edge_count)
        throw std::logic_error("generated edge count differs from the closed form");
}

}  // namespace

LBInstance gen_tree_lb(int budget, int x) {
    if (budget < 2) throw ParameterError("tree family needs budget >= 2");
    if (budget > 25) throw ParameterError("tree family capped at budget 25");
    if (x < 1) throw ParameterError("tree family needs at least one sink vertex");

    // Largest l with 2 + 3 + ... + l <= budget.
    int l = 1;
    int used = 0;
    while (used + (l + 1) <= budget) {
        ++l;
        used += l;
    }

    std::vector<Edge> edges;
    VertexId next_vertex = 1;  // 0 is the source
    std::vector<VertexId> entry(static_cast<std::size_t>(l) + 1, -1);
    std::vector<VertexId> tree_base(static_cast<std::size_t>(l) + 1, -1);
    std::vector<int> height(static_cast<std::size_t>(l) + 1, 0);
    std::vector<EdgeId> entry_edge(static_cast<std::size_t>(l) + 1, -1);
    // Edge from a heap node's parent down to it, indexed by heap position.
    std::vector<std::vector<EdgeId>> down_edge(static_cast<std::size_t>(l) + 1);

    int prefix = 0;  // sum(2..i)
    int total_leaves = 0;
    for (int i = 1; i <= l; ++i) {
        if (i >= 2) prefix += i;
        height[static_cast<std::size_t>(i)] = budget - prefix;
        total_leaves += 1 << height[static_cast<std::size_t>(i)];
    }

    for (int i = 1; i <= l; ++i) {
        int h = height[static_cast<std::size_t>(i)];
        entry[static_cast<std::size_t>(i)] = next_vertex++;
        int heap_size = (2 << h) - 1;  // 2^(h+1) - 1 binary-tree nodes
        tree_base[static_cast<std::size_t>(i)] = next_vertex;
        next_vertex += heap_size;
        down_edge[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(heap_size) + 1, -1);
    }
    VertexId first_sink = next_vertex;
    next_vertex += x;

    auto heap_vertex = [&](int tree, int node) {
        return tree_base[static_cast<std::size_t>(tree)] + node - 1;
    };

    // Entry edges first, with the staggered weights that keep the trees on
    // distinct distance tiers.
    prefix = 0;
    for (int i = 1; i <= l; ++i) {
        if (i >= 2) prefix += i;
        entry_edge[static_cast<std::size_t>(i)] = static_cast<EdgeId>(edges.size());
        edges.push_back({0, entry[static_cast<std::size_t>(i)], Rational(prefix + i)});
    }
    // Tree edges: entry vertex down to the binary part, then level order.
    for (int i = 1; i <= l; ++i) {
        int h = height[static_cast<std::size_t>(i)];
        down_edge[static_cast<std::size_t>(i)][1] = static_cast<EdgeId>(edges.size());
        edges.push_back({entry[static_cast<std::size_t>(i)], heap_vertex(i, 1), Rational(1)});
        for (int node = 1; node < (1 << h); ++node) {
            for (int child : {2 * node, 2 * node + 1}) {
                down_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(child)] =
                    static_cast<EdgeId>(edges.size());
                edges.push_back({heap_vertex(i, node), heap_vertex(i, child), Rational(1)});
            }
        }
    }
    // Every leaf feeds every sink vertex.
    std::vector<std::vector<EdgeId>> leaf_sink_edge(static_cast<std::size_t>(l) + 1);
    for (int i = 1; i <= l; ++i) {
        int h = height[static_cast<std::size_t>(i)];
        for (int leaf = 1 << h; leaf < (2 << h); ++leaf) {
            for (int j = 0; j < x; ++j) {
                leaf_sink_edge[static_cast<std::size_t>(i)].push_back(
                    static_cast<EdgeId>(edges.size()));
                edges.push_back({heap_vertex(i, leaf), first_sink + j, Rational(1)});
            }
        }
    }

    LBInstance inst{Graph(next_vertex, std::move(edges), 0),
                    "tree",
                    budget,
                    x,
                    0,
                    {},
                    Rational(0),
                    ""};
    long long tree_edges = 0;
    for (int i = 1; i <= l; ++i) tree_edges += 2 * (1LL << height[static_cast<std::size_t>(i)]) - 1;
    inst.predicted_edge_count = l + tree_edges + static_cast<long long>(total_leaves) * x;

    // One witness per full source-to-sink path: raise the cheaper entry edges
    // enough to price their trees out, and bump the sibling edge at every
    // branch along the chosen tree path.
    for (int i = 1; i <= l; ++i) {
        int h = height[static_cast<std::size_t>(i)];
        for (int leaf = 1 << h, leaf_index = 0; leaf < (2 << h); ++leaf, ++leaf_index) {
            for (int j = 0; j < x; ++j) {
                LBWitness w;
                w.label = "path-tree" + std::to_string(i) + "-leaf" + std::to_string(leaf_index) +
                          "-x" + std::to_string(first_sink + j);
                for (int prior = 1; prior < i; ++prior)
                    w.increment.set(entry_edge[static_cast<std::size_t>(prior)],
                                    Rational(i + 1 - prior));
                for (int node = leaf; node > 1; node /= 2) {
                    int sibling = node ^ 1;
                    w.increment.set(
                        down_edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(sibling)],
                        Rational(1));
                }
                if (w.increment.total() > inst.max_witness_total)
                    inst.max_witness_total = w.increment.total();
                inst.witnesses.push_back(std::move(w));
            }
        }
    }

    check_predicted(inst);
    return inst;
}

LBInstance gen_rational_weight_lb(int n) {
    if (n < 4) throw ParameterError("rational-weight family needs n >= 4");
    std::vector<Edge> edges;
    edges.push_back({0, 1, Rational(n)});  // the single heavy entry edge
    std::vector<EdgeId> chain_edge(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<EdgeId, std::pair<int, int>>> skip_edges;
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = i + 1; j <= n - 1; ++j) {
            EdgeId id = static_cast<EdgeId>(edges.size());
            if (j == i + 1) {
                chain_edge[static_cast<std::size_t>(i)] = id;
                edges.push_back({i, j, Rational(0)});
            } else {
                skip_edges.push_back({id, {i, j}});
                edges.push_back({i, j, Rational(2LL * n - i - j, 2LL * n)});
            }
        }
    }

    LBInstance inst{Graph(n, std::move(edges), 0),
                    "rational-weight",
                    1,
                    n,
                    static_cast<long long>(n - 1) * (n - 2) / 2 + 1,
                    {},
                    Rational(1),
                    ""};
    for (const auto& [id, ij] : skip_edges) {
        LBWitness w;
        w.label = "e" + std::to_string(id);
        w.increment.set(chain_edge[static_cast<std::size_t>(ij.first)], Rational(1));
        inst.witnesses.push_back(std::move(w));
    }
    check_predicted(inst);
    return inst;
}

namespace {

LBInstance bipartite_family(int n, const Rational& edge_weight, const std::string& family) {
    if (n < 6) throw ParameterError(family + " family needs n >= 6");
    int a_count = n / 2 - 1;
    int b_count = n - n / 2 - 1;
    VertexId first_a = 1;
    VertexId first_b = first_a + a_count;
    VertexId sink = first_b + b_count;

    std::vector<Edge> edges;
    std::vector<EdgeId> source_edge(static_cast<std::size_t>(a_count));
    std::vector<EdgeId> sink_edge(static_cast<std::size_t>(b_count));
    for (int a = 0; a < a_count; ++a) {
        source_edge[static_cast<std::size_t>(a)] = static_cast<EdgeId>(edges.size());
        edges.push_back({0, first_a + a, edge_weight});
    }
    for (int a = 0; a < a_count; ++a)
        for (int b = 0; b < b_count; ++b)
            edges.push_back({first_a + a, first_b + b, edge_weight});
    for (int b = 0; b < b_count; ++b) {
        sink_edge[static_cast<std::size_t>(b)] = static_cast<EdgeId>(edges.size());
        edges.push_back({first_b + b, sink, edge_weight});
    }

    LBInstance inst{Graph(n, std::move(edges), 0),
                    family,
                    1,
                    n,
                    static_cast<long long>(a_count) + static_cast<long long>(a_count) * b_count +
                        b_count,
                    {},
                    Rational(0),
                    ""};
    inst.witnesses.reserve(static_cast<std::size_t>(a_count) * static_cast<std::size_t>(b_count));
    if (family == "rational-increment") {
        for (int u = 0; u < a_count; ++u) {
            for (int v = 0; v < b_count; ++v) {
                LBWitness w;
                w.label = "path-" + std::to_string(first_a + u) + "-" + std::to_string(first_b + v);
                for (int a = 0; a < a_count; ++a)
                    if (a != u)
                        w.increment.set(source_edge[static_cast<std::size_t>(a)],
                                        Rational(1, a_count - 1));
                for (int b = 0; b < b_count; ++b)
                    if (b != v)
                        w.increment.set(sink_edge[static_cast<std::size_t>(b)],
                                        Rational(1, b_count - 1));
                if (w.increment.total() > inst.max_witness_total)
                    inst.max_witness_total = w.increment.total();
                inst.witnesses.push_back(std::move(w));
            }
        }
        if (inst.max_witness_total > Rational(inst.budget))
            inst.note = "witnesses as constructed total " + inst.max_witness_total.to_string() +
                        ", above the nominal budget " + std::to_string(inst.budget) +
                        "; certify with the larger budget";
    } else {
        for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
            LBWitness w;
            w.label = "e" + std::to_string(e);
            w.increment.set(e, Rational(-1));
            inst.witnesses.push_back(std::move(w));
        }
        inst.max_witness_total = Rational(-1);
    }
    check_predicted(inst);
    return inst;
}

}  // namespace

LBInstance gen_rational_increment_lb(int n) {
    return bipartite_family(n, Rational(1), "rational-increment");
}

LBInstance gen_decrement_lb(int n) { return bipartite_family(n, Rational(2), "decrement"); }

}  // namespace wtss
