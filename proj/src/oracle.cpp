#include "wtss/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "wtss/errors.hpp"
#include "wtss/shortest_path.hpp"

namespace wtss {

Rational IncrementFunction::total() const {
    Rational sum(0);
    for (const auto& [e, amount] : amounts) sum += amount;
    return sum;
}

Rational IncrementFunction::at(EdgeId e) const {
    for (const auto& [edge, amount] : amounts)
        if (edge == e) return amount;
    return Rational(0);
}

void IncrementFunction::set(EdgeId e, const Rational& amount) {
    auto it = std::lower_bound(amounts.begin(), amounts.end(), e,
                               [](const auto& entry, EdgeId id) { return entry.first < id; });
    if (it != amounts.end() && it->first == e) {
        if (amount.is_zero())
            amounts.erase(it);
        else
            it->second = amount;
    } else if (!amount.is_zero()) {
        amounts.insert(it, {e, amount});
    }
}

bool IncrementFunction::all_integral() const {
    return std::all_of(amounts.begin(), amounts.end(),
                       [](const auto& entry) { return entry.second.is_integer(); });
}

std::string IncrementFunction::to_string() const {
    if (amounts.empty()) return "(empty)";
    std::string out;
    for (const auto& [e, amount] : amounts) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e) + "=" + amount.to_string();
    }
    return out;
}

IncrementEnumerator::IncrementEnumerator(int edge_count, int budget)
    : m_(edge_count), k_(budget), current_total_(0), fresh_total_(true), done_(false) {
    if (budget < 0) throw BudgetError("increment budget must be non-negative");
    if (edge_count < 0) throw RangeError("negative edge count");
    dense_.assign(static_cast<std::size_t>(m_), 0);
}

std::optional<IncrementFunction> IncrementEnumerator::next() {
    while (!done_) {
        if (fresh_total_) {
            if (current_total_ > k_ || (m_ == 0 && current_total_ > 0)) {
                done_ = true;
                break;
            }
            std::fill(dense_.begin(), dense_.end(), 0);
            if (current_total_ > 0) dense_[0] = current_total_;
            fresh_total_ = false;
        } else {
            // Successor in descending lexicographic order: move one unit from
            // the rightmost movable position and flush everything after it.
            int p = -1;
            for (int i = m_ - 2; i >= 0; --i) {
                if (dense_[static_cast<std::size_t>(i)] > 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) {
                ++current_total_;
                fresh_total_ = true;
                continue;
            }
            std::int64_t moved = 0;
            for (int i = p + 1; i < m_; ++i) {
                moved += dense_[static_cast<std::size_t>(i)];
                dense_[static_cast<std::size_t>(i)] = 0;
            }
            --dense_[static_cast<std::size_t>(p)];
            dense_[static_cast<std::size_t>(p) + 1] = moved + 1;
        }
        IncrementFunction inc;
        for (int e = 0; e < m_; ++e)
            if (dense_[static_cast<std::size_t>(e)] != 0)
                inc.amounts.push_back({e, Rational(dense_[static_cast<std::size_t>(e)])});
        return inc;
    }
    return std::nullopt;
}

unsigned long long increment_count(int edge_count, int budget) {
    if (budget < 0) throw BudgetError("increment budget must be non-negative");
    // C(m + k, k)
    unsigned long long result = 1;
    for (int i = 1; i <= budget; ++i)
        result = result * static_cast<unsigned long long>(edge_count + i) /
                 static_cast<unsigned long long>(i);
    return result;
}

Graph apply_increment(const Graph& g, const IncrementFunction& inc) {
    std::vector<Edge> edges = g.edges();
    for (const auto& [e, amount] : inc.amounts) {
        if (e < 0 || e >= g.edge_count()) throw RangeError("increment on unknown edge");
        edges[static_cast<std::size_t>(e)].weight += amount;
    }
    return Graph(g.vertex_count(), std::move(edges), g.source());
}

IncrementFunction transport_increment(const TransformMapping& mapping,
                                      const IncrementFunction& inc) {
    IncrementFunction out;
    for (const auto& [e, amount] : inc.amounts) {
        if (e < 0 || static_cast<std::size_t>(e) >= mapping.leaf_of_original.size())
            throw RangeError("increment on unknown edge");
        const auto& leaf = mapping.leaf_of_original[static_cast<std::size_t>(e)];
        if (!leaf) throw RangeError("increment on an edge outside the transformed view");
        out.set(*leaf, amount);
    }
    return out;
}

namespace {

bool same_distance(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || *a == *b;
}

std::optional<Counterexample> verify_targets(const Graph& g, const Subgraph& h, VertexId s,
                                             int budget, const std::vector<VertexId>& targets) {
    if (&h.parent() != &g) throw RangeError("subgraph does not view the graph under test");
    IncrementEnumerator enumerator(g.edge_count(), budget);
    while (auto inc = enumerator.next()) {
        Graph incremented = apply_increment(g, *inc);
        Subgraph h_view(incremented, h.edge_ids());
        DistanceTable in_g = sssp(full_view(incremented), s);
        DistanceTable in_h = sssp(h_view, s);
        for (VertexId t : targets) {
            if (!same_distance(in_g.get(t), in_h.get(t))) {
                Counterexample ce;
                ce.increment = *inc;
                ce.target = t;
                ce.dist_in_g = in_g.get(t);
                ce.dist_in_h = in_h.get(t);
                return ce;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Counterexample> verify_wtss(const Graph& g, const Subgraph& h, VertexId s,
                                          int budget) {
    std::vector<VertexId> targets(static_cast<std::size_t>(g.vertex_count()));
    std::iota(targets.begin(), targets.end(), 0);
    return verify_targets(g, h, s, budget, targets);
}

std::optional<Counterexample> verify_wtss_t(const Graph& g, const Subgraph& h, VertexId s,
                                            VertexId t, int budget) {
    return verify_targets(g, h, s, budget, {t});
}

bool NecessityReport::all_necessary() const {
    return std::all_of(edges.begin(), edges.end(), [](const EdgeNecessity& e) {
        return e.status == Necessity::kNecessary;
    });
}

namespace {

// First target whose distance changes when `edge` is dropped under w + inc.
std::optional<std::pair<VertexId, bool>> separates(const Graph& g, VertexId s, EdgeId edge,
                                                   const IncrementFunction& inc) {
    Graph incremented = apply_increment(g, inc);
    DistanceTable with_edge = sssp(full_view(incremented), s);
    DistanceTable without_edge = sssp(Subgraph(incremented, true).without({edge}), s);
    for (VertexId t = 0; t < g.vertex_count(); ++t)
        if (!same_distance(with_edge.get(t), without_edge.get(t))) return {{t, true}};
    return std::nullopt;
}

}  // namespace

NecessityReport verify_edge_necessity(const Graph& g, VertexId s, int budget,
                                      const std::vector<IncrementFunction>& witnesses,
                                      bool exhaustive) {
    if (!exhaustive && witnesses.empty())
        throw ParameterError("witness-driven mode needs at least one witness");
    Rational budget_value(budget);
    for (const auto& w : witnesses)
        if (w.total() > budget_value)
            throw WitnessBudgetError("witness exceeds the increment budget: " + w.to_string());

    NecessityReport report;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EdgeNecessity entry;
        entry.edge = e;
        for (const auto& w : witnesses) {
            if (auto hit = separates(g, s, e, w)) {
                entry.status = Necessity::kNecessary;
                entry.witness = w;
                entry.target = hit->first;
                break;
            }
        }
        if (entry.status == Necessity::kNotProven && exhaustive) {
            IncrementEnumerator enumerator(g.edge_count(), budget);
            while (auto inc = enumerator.next()) {
                if (auto hit = separates(g, s, e, *inc)) {
                    entry.status = Necessity::kNecessary;
                    entry.witness = *inc;
                    entry.target = hit->first;
                    break;
                }
            }
        }
        report.edges.push_back(std::move(entry));
    }
    return report;
}

std::optional<FtrsCounterexample> verify_ftrs_reduction(const Graph& g, const Subgraph& h,
                                                        VertexId s, int budget) {
    if (&h.parent() != &g) throw RangeError("subgraph does not view the graph under test");
    for (const Edge& e : g.edges())
        if (!e.weight.is_zero()) throw ParameterError("reachability check needs all-zero weights");
    if (budget < 0) throw BudgetError("deletion budget must be non-negative");

    int m = g.edge_count();
    std::vector<EdgeId> chosen;
    std::optional<FtrsCounterexample> failure;

    auto check_current = [&]() -> bool {
        Subgraph g_view = full_view(g).without(chosen);
        Subgraph h_view = [&] {
            Subgraph view(g, h.edge_ids());
            return view.without(chosen);
        }();
        std::vector<char> reach_g = reachable(g_view, {s});
        std::vector<char> reach_h = reachable(h_view, {s});
        for (VertexId t = 0; t < g.vertex_count(); ++t) {
            if (reach_g[static_cast<std::size_t>(t)] != reach_h[static_cast<std::size_t>(t)]) {
                failure = FtrsCounterexample{chosen, t,
                                             reach_g[static_cast<std::size_t>(t)] != 0,
                                             reach_h[static_cast<std::size_t>(t)] != 0};
                return false;
            }
        }
        return true;
    };

    // Deletion sets in ascending size, lexicographic within one size.
    std::function<bool(EdgeId, int)> walk = [&](EdgeId first, int remaining) -> bool {
        if (remaining == 0) return check_current();
        for (EdgeId e = first; e < m; ++e) {
            chosen.push_back(e);
            bool ok = walk(e + 1, remaining - 1);
            chosen.pop_back();
            if (!ok) return false;
        }
        return true;
    };

    for (int size = 0; size <= budget && !failure; ++size) walk(0, size);
    return failure;
}

}  // namespace wtss
