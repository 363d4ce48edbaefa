#include "wtss/wtss_builder.hpp"

#include <algorithm>
#include <ostream>

#include "wtss/degree_transform.hpp"
#include "wtss/errors.hpp"
#include "wtss/flow_cut.hpp"
#include "wtss/shortest_path.hpp"

namespace wtss {

unsigned long long indegree_bound(int budget) {
    if (budget < 1) throw ParameterError("budget must be at least 1");
    if (budget > 20) throw ParameterError("in-degree bound overflows past budget 20");
    long double value = 2.718281828459045235L;
    for (int i = 2; i < budget; ++i) value *= i;       // (k-1)!
    for (int i = 0; i < budget; ++i) value *= 2.0L;    // 2^k
    return static_cast<unsigned long long>(value);
}

unsigned long long terminal_branch_bound(int budget) {
    if (budget < 1) throw ParameterError("budget must be at least 1");
    if (budget > 20) throw ParameterError("visit bound overflows past budget 20");
    // sum_{j=1..k} (k-1)! / (k-j)!  ==  sum of falling products
    unsigned long long total = 0;
    for (int j = 1; j <= budget; ++j) {
        unsigned long long term = 1;
        for (int f = budget - j + 1; f <= budget - 1; ++f)
            term *= static_cast<unsigned long long>(f);
        total += term;
    }
    return total;
}

namespace {

// Next round's sources: the cut's near side by source-reachability, plus the
// vertices it feeds across the cut, minus the sink.
std::vector<VertexId> advance_sources(const Subgraph& shortest, const CutResult& cut,
                                      const std::vector<VertexId>& sources, VertexId t) {
    CutResult part = partition(shortest, sources, t, cut.cut);
    std::vector<VertexId> next = part.side_a;
    const Graph& parent = shortest.parent();
    for (EdgeId e = 0; e < parent.edge_count(); ++e) {
        if (!shortest.includes(e)) continue;
        const Edge& ed = parent.edge(e);
        if (part.in_a[static_cast<std::size_t>(ed.tail)] &&
            !part.in_a[static_cast<std::size_t>(ed.head)])
            next.push_back(ed.head);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    next.erase(std::remove(next.begin(), next.end(), t), next.end());
    return next;
}

class TargetBuilder {
  public:
    TargetBuilder(const Graph& graph, VertexId source, VertexId target, int budget)
        : graph_(graph), source_(source), target_(target), k_(budget) {
        kept_.assign(static_cast<std::size_t>(graph.edge_count()), 0);
    }

    // Returns false when the target is unreachable.
    bool run() {
        DistanceTable base = sssp(full_view(graph_), source_);
        if (!base.reachable(target_)) return false;
        base_distance_ = base.at(target_);
        recurse(full_view(graph_), std::vector<int>(static_cast<std::size_t>(k_), -1), 1);
        if (terminal_count_ > terminal_branch_bound(k_))
            throw std::logic_error("terminal branch count exceeds its bound");
        return true;
    }

    const std::vector<char>& kept_sink_edges() const { return kept_; }
    const std::vector<CutRecord>& ledger() const { return ledger_; }
    std::size_t terminal_count() const { return terminal_count_; }
    const Rational& base_distance() const { return base_distance_; }

  private:
    void recurse(const Subgraph& current, const std::vector<int>& choices, int level) {
        // A branch stops once some earlier level's removed-cut index reaches
        // the cap for this depth; at level k+1 this always holds.
        for (int i = 1; i < level; ++i)
            if (choices[static_cast<std::size_t>(i - 1)] >= k_ - level + i) return;
        if (level > k_ + 1) throw std::logic_error("recursion descended past level k+1");

        std::optional<Rational> dist = sssp(current, source_).get(target_);
        Rational level_distance = base_distance_ + Rational(level - 1);
        if (dist && *dist < level_distance)
            throw std::logic_error("branch distance fell below its level floor");

        std::vector<int> child_choices = choices;
        if (dist && *dist == level_distance) {
            CutRecord record;
            record.choices = choices;
            // One shortest-path subgraph serves the whole cut sequence of
            // this branch; only the source set grows between rounds.
            Subgraph shortest = shortest_path_subgraph(current, source_, target_);
            std::vector<VertexId> sources{source_};
            std::vector<EdgeId> cut_sink_edges;
            for (int i = 1; i <= k_; ++i) {
                CutResult cut = farthest_min_cut(shortest, sources, target_);
                record.cut_sizes.push_back(cut.cut.size());
                for (EdgeId e : cut.cut)
                    if (graph_.edge(e).head == target_) cut_sink_edges.push_back(e);
                child_choices[static_cast<std::size_t>(level - 1)] = i - 1;
                recurse(st_path_closure(current.without(cut.cut), source_, target_),
                        child_choices, level + 1);
                sources = advance_sources(shortest, cut, sources, target_);
            }
            FlowAssignment flow = max_flow(shortest, sources, target_);
            record.final_flow_value = static_cast<std::size_t>(flow.value);
            check_doubling(record);
            for (EdgeId e : flow.support())
                if (graph_.edge(e).head == target_) kept_[static_cast<std::size_t>(e)] = 1;
            // Cut edges that point straight at the target are source-to-sink
            // edges of the closing flow, so they must all have been kept.
            for (EdgeId e : cut_sink_edges)
                if (!kept_[static_cast<std::size_t>(e)])
                    throw std::logic_error("cut edge at the target missing from the kept set");
            ledger_.push_back(std::move(record));
            ++terminal_count_;
        } else {
            child_choices[static_cast<std::size_t>(level - 1)] = 0;
            recurse(current, child_choices, level + 1);
        }
    }

    static void check_doubling(const CutRecord& record) {
        for (std::size_t i = 0; i + 1 < record.cut_sizes.size(); ++i)
            if (record.cut_sizes[i + 1] > 2 * record.cut_sizes[i])
                throw std::logic_error("consecutive cut sizes more than doubled");
        if (!record.cut_sizes.empty() &&
            record.final_flow_value > 2 * record.cut_sizes.back())
            throw std::logic_error("closing flow more than doubled the last cut");
    }

    const Graph& graph_;
    VertexId source_;
    VertexId target_;
    int k_;
    Rational base_distance_;
    std::vector<char> kept_;
    std::vector<CutRecord> ledger_;
    std::size_t terminal_count_ = 0;
};

void validate_build_inputs(const Subgraph& g, VertexId s, VertexId t, int budget) {
    if (budget < 1) throw ParameterError("budget must be at least 1");
    int n = g.parent().vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) throw RangeError("vertex id out of range");
    for (EdgeId e = 0; e < g.parent().edge_count(); ++e)
        if (g.includes(e) && !g.parent().edge(e).weight.is_integer())
            throw IntegralityError("construction requires integer weights");
}

}  // namespace

WtssResult build_wtss_t(const Subgraph& g, VertexId s, VertexId t, int budget) {
    validate_build_inputs(g, s, t, budget);
    const Graph& parent = g.parent();

    if (t == s) {
        // The source keeps its distance-zero trivially; drop its in-edges.
        WtssResult result{g.without(g.in_edges(s)), s, t, budget, {}};
        TargetBuildInfo info;
        info.target = t;
        info.reachable = true;
        info.base_distance = Rational(0);
        result.targets.push_back(std::move(info));
        return result;
    }

    TransformResult tr = reduce_out_degree(g, s);
    TargetBuilder builder(tr.graph, tr.mapping.transformed_source, t, budget);
    if (!builder.run()) throw UnreachableError("target not reachable from source");

    // Keep everything except the target's in-edges, then add back the kept
    // sink edges, all expressed in transformed ids; project to original ids.
    std::vector<char> h_mask(static_cast<std::size_t>(tr.graph.edge_count()), 1);
    for (EdgeId e : tr.graph.in_ids(t)) h_mask[static_cast<std::size_t>(e)] = 0;
    for (EdgeId e = 0; e < tr.graph.edge_count(); ++e)
        if (builder.kept_sink_edges()[static_cast<std::size_t>(e)])
            h_mask[static_cast<std::size_t>(e)] = 1;
    Subgraph h = map_back(tr.mapping, Subgraph(tr.graph, std::move(h_mask)), parent);

    TargetBuildInfo info;
    info.target = t;
    info.reachable = true;
    info.base_distance = builder.base_distance();
    info.kept_in_degree = h.in_edges(t).size();
    info.terminal_branch_count = builder.terminal_count();
    info.ledger = builder.ledger();
    if (info.kept_in_degree > indegree_bound(budget))
        throw std::logic_error("kept in-degree exceeds its bound");

    return WtssResult{std::move(h), s, t, budget, {std::move(info)}};
}

WtssResult build_wtss_t(const Graph& g, VertexId s, VertexId t, int budget) {
    return build_wtss_t(full_view(g), s, t, budget);
}

WtssResult build_wtss(const Graph& g, VertexId s, int budget) {
    validate_build_inputs(full_view(g), s, s, budget);
    std::vector<char> mask(static_cast<std::size_t>(g.edge_count()), 1);
    std::vector<TargetBuildInfo> infos;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == s) {
            for (EdgeId e : g.in_ids(v)) mask[static_cast<std::size_t>(e)] = 0;
            TargetBuildInfo info;
            info.target = v;
            info.reachable = true;
            info.base_distance = Rational(0);
            infos.push_back(std::move(info));
            continue;
        }
        Subgraph current(g, mask);
        try {
            WtssResult round = build_wtss_t(current, s, v, budget);
            for (EdgeId e : g.in_ids(v))
                if (!round.h.includes(e)) mask[static_cast<std::size_t>(e)] = 0;
            infos.push_back(std::move(round.targets.front()));
        } catch (const UnreachableError&) {
            // Unreachable before any increment means unreachable after every
            // increment as well, so the vertex needs no in-edges at all.
            for (EdgeId e : g.in_ids(v)) mask[static_cast<std::size_t>(e)] = 0;
            TargetBuildInfo info;
            info.target = v;
            info.reachable = false;
            infos.push_back(std::move(info));
        }
    }
    return WtssResult{Subgraph(g, std::move(mask)), s, std::nullopt, budget, std::move(infos)};
}

Statistics stats(const WtssResult& result) {
    Statistics s;
    const Graph& parent = result.h.parent();
    s.edge_count = static_cast<std::size_t>(result.h.edge_count());
    s.in_degree.resize(static_cast<std::size_t>(parent.vertex_count()), 0);
    for (EdgeId e = 0; e < parent.edge_count(); ++e)
        if (result.h.includes(e)) ++s.in_degree[static_cast<std::size_t>(parent.edge(e).head)];
    s.max_in_degree = s.in_degree.empty()
                          ? 0
                          : *std::max_element(s.in_degree.begin(), s.in_degree.end());
    s.in_degree_cap = indegree_bound(result.budget);
    for (const TargetBuildInfo& info : result.targets)
        s.ledger.insert(s.ledger.end(), info.ledger.begin(), info.ledger.end());
    return s;
}

void write_stats(const Statistics& s, std::ostream& out) {
    out << "edges " << s.edge_count << '\n';
    out << "max_indegree " << s.max_in_degree << '\n';
    out << "bound " << s.in_degree_cap << '\n';
}

}  // namespace wtss
