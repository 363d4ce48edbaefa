#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wtss/errors.hpp"
#include "wtss/flow_cut.hpp"
#include "wtss/shortest_path.hpp"

using namespace wtss;

TEST_CASE("max_flow finds the two disjoint diamond paths") {
    Graph g = testing::diamond_graph(1, 2, 2, 1);
    Subgraph view = full_view(g);
    FlowAssignment f = max_flow(view, {0}, 3);
    CHECK(f.value == 2);
    CHECK(f.value == testing::brute_disjoint_paths(view, {0}, 3));
}

TEST_CASE("max_flow on a single path and on direct source-sink edges") {
    Graph chain = testing::chain_graph({1, 1, 1});
    CHECK(max_flow(full_view(chain), {0}, 3).value == 1);

    Graph direct(3, {{0, 2, Rational(1)}, {1, 2, Rational(1)}}, 0);
    FlowAssignment f = max_flow(full_view(direct), {0, 1}, 2);
    CHECK(f.value == 2);
    CHECK(f.carries(0));
    CHECK(f.carries(1));
}

TEST_CASE("max_flow value 0 when the sink is unreachable and rejects sink in sources") {
    Graph g(3, {{0, 1, Rational(1)}}, 0);
    CHECK(max_flow(full_view(g), {0}, 2).value == 0);
    CHECK_THROWS_AS(max_flow(full_view(g), {1}, 1), RangeError);
}

TEST_CASE("max_flow value matches the disjoint-path packing oracle on random graphs") {
    std::mt19937_64 rng(211);
    for (int i = 0; i < 80; ++i) {
        Graph g = testing::random_graph(rng);
        Subgraph view = full_view(g);
        VertexId t = g.vertex_count() - 1;
        FlowAssignment f = max_flow(view, {0}, t);
        CHECK(f.value == testing::brute_disjoint_paths(view, {0}, t));
        // Flow support decomposes into exactly value paths.
        if (f.value > 0) {
            auto paths = decompose_flow_paths(view, f);
            CHECK(paths.size() == static_cast<std::size_t>(f.value));
        }
    }
}

TEST_CASE("farthest_min_cut on fixtures") {
    Graph chain = testing::chain_graph({1, 1});
    CutResult c = farthest_min_cut(full_view(chain), {0}, 2);
    CHECK(c.cut == std::vector<EdgeId>{1});
    CHECK(c.side_a == std::vector<VertexId>{0, 1});
    CHECK(c.side_b == std::vector<VertexId>{2});

    Graph diamond = testing::diamond_graph(1, 2, 2, 1);
    CutResult d = farthest_min_cut(full_view(diamond), {0}, 3);
    CHECK(d.cut == std::vector<EdgeId>{2, 3});
    CHECK(d.side_a == std::vector<VertexId>{0, 1, 2});

    Graph single(2, {{0, 1, Rational(5)}}, 0);
    CHECK(farthest_min_cut(full_view(single), {0}, 1).cut == std::vector<EdgeId>{0});

    Graph unreachable(3, {{0, 1, Rational(1)}}, 0);
    CHECK_THROWS_AS(farthest_min_cut(full_view(unreachable), {0}, 2), UnreachableError);
}

TEST_CASE("farthest_min_cut is a min-cut whose near side strictly dominates") {
    std::mt19937_64 rng(307);
    int checked = 0;
    while (checked < 60) {
        Graph g = testing::random_graph(rng);
        Subgraph view = full_view(g);
        VertexId t = g.vertex_count() - 1;
        if (!reachable(view, {0})[static_cast<std::size_t>(t)]) continue;
        CutResult far = farthest_min_cut(view, {0}, t);
        FlowAssignment f = max_flow(view, {0}, t);
        CHECK(far.cut.size() == static_cast<std::size_t>(f.value));
        CutResult far_part = partition(view, {0}, t, far.cut);
        auto all_cuts = testing::cuts_of_size(view, {0}, t, far.cut.size());
        CHECK(!all_cuts.empty());
        bool saw_self = false;
        for (const auto& other : all_cuts) {
            CutResult part = partition(view, {0}, t, other);
            if (other == far.cut) {
                saw_self = true;
                continue;
            }
            // The near side A of any other min-cut is strictly contained.
            bool subset = true;
            for (VertexId v : part.side_a)
                if (!far_part.in_a[static_cast<std::size_t>(v)]) subset = false;
            CHECK(subset);
            CHECK(part.side_a.size() < far_part.side_a.size());
        }
        CHECK(saw_self);
        ++checked;
    }
}

TEST_CASE("adding a source-side-to-far-side edge raises the flow by exactly one") {
    std::mt19937_64 rng(401);
    int checked = 0;
    while (checked < 40) {
        Graph g = testing::random_graph(rng);
        VertexId t = g.vertex_count() - 1;
        if (!reachable(full_view(g), {0})[static_cast<std::size_t>(t)]) continue;
        CutResult far = farthest_min_cut(full_view(g), {0}, t);
        int old_value = static_cast<int>(far.cut.size());
        for (VertexId b : far.side_b) {
            std::vector<Edge> edges = g.edges();
            edges.push_back({0, b, Rational(0)});
            Graph extended(g.vertex_count(), std::move(edges), 0);
            Subgraph ext_view = full_view(extended);
            FlowAssignment f = max_flow(ext_view, {0}, t);
            CHECK(f.value == old_value + 1);
            // The old cut plus the new edge is again a min-cut, and the
            // farthest cut's near side can only have moved outward.
            std::vector<EdgeId> extended_cut = far.cut;
            extended_cut.push_back(extended.edge_count() - 1);
            CHECK(testing::is_cut(ext_view, {0}, t, extended_cut));
            CHECK(extended_cut.size() == static_cast<std::size_t>(f.value));
            CutResult far2 = farthest_min_cut(ext_view, {0}, t);
            for (VertexId v : far.side_a) CHECK(far2.in_a[static_cast<std::size_t>(v)]);
        }
        ++checked;
    }
}

TEST_CASE("growing the source set can only shrink the far side") {
    std::mt19937_64 rng(419);
    int checked = 0;
    while (checked < 40) {
        Graph g = testing::random_graph(rng);
        Subgraph view = full_view(g);
        VertexId t = g.vertex_count() - 1;
        if (!reachable(view, {0})[static_cast<std::size_t>(t)]) continue;
        CutResult base = farthest_min_cut(view, {0}, t);
        std::vector<VertexId> sources{0};
        for (VertexId v = 1; v < g.vertex_count() - 1; ++v)
            if (testing::rand_int(rng, 0, 1)) sources.push_back(v);
        CutResult wide = farthest_min_cut(view, sources, t);
        for (VertexId v : wide.side_b)
            CHECK(std::find(base.side_b.begin(), base.side_b.end(), v) != base.side_b.end());
        ++checked;
    }
}

TEST_CASE("every direct source-to-sink edge is saturated") {
    std::mt19937_64 rng(433);
    for (int i = 0; i < 60; ++i) {
        Graph g = testing::random_graph(rng);
        VertexId t = g.vertex_count() - 1;
        std::vector<VertexId> sources;
        for (VertexId v = 0; v < g.vertex_count() - 1; ++v)
            if (v == 0 || testing::rand_int(rng, 0, 1)) sources.push_back(v);
        FlowAssignment f = max_flow(full_view(g), sources, t);
        for (VertexId s : sources)
            for (EdgeId e : g.out_ids(s))
                if (g.edge(e).head == t) CHECK(f.carries(e));
    }
}

TEST_CASE("partition examples and NotACutError") {
    Graph chain = testing::chain_graph({1, 1});
    CutResult p = partition(full_view(chain), {0}, 2, {1});
    CHECK(p.side_a == std::vector<VertexId>{0, 1});
    CHECK(p.side_b == std::vector<VertexId>{2});

    Graph diamond = testing::diamond_graph(1, 2, 2, 1);
    CutResult q = partition(full_view(diamond), {0}, 3, {0, 1});
    CHECK(q.side_a == std::vector<VertexId>{0});
    CHECK(q.side_b == std::vector<VertexId>{1, 2, 3});

    CHECK_THROWS_AS(partition(full_view(diamond), {0}, 3, {2}), NotACutError);
}

TEST_CASE("fsmc cuts inside the shortest-path subgraph") {
    Graph equal = testing::diamond_graph(1, 2, 2, 1);
    CutResult c = fsmc(full_view(equal), {0}, 0, 3);
    CHECK(c.cut.size() == 2);
    for (EdgeId e : c.cut) CHECK(equal.edge(e).head == 3);

    // One strictly longer path: only the short path is cut, with one edge.
    Graph skewed = testing::diamond_graph(1, 2, 3, 1);
    CutResult d = fsmc(full_view(skewed), {0}, 0, 3);
    CHECK(d.cut == std::vector<EdgeId>{3});

    // Unique shortest path of three edges: the farthest singleton is the last edge.
    Graph chain = testing::chain_graph({1, 1, 1});
    CutResult e = fsmc(full_view(chain), {0}, 0, 3);
    CHECK(e.cut == std::vector<EdgeId>{2});
}

TEST_CASE("short_max_flow ignores non-shortest paths") {
    Graph skewed = testing::diamond_graph(1, 2, 3, 1);
    CHECK(short_max_flow(full_view(skewed), {0}, 0, 3).value == 1);
    Graph equal = testing::diamond_graph(1, 2, 2, 1);
    CHECK(short_max_flow(full_view(equal), {0}, 0, 3).value == 2);
    Graph chain = testing::chain_graph({1, 1});
    CHECK(short_max_flow(full_view(chain), {0}, 0, 2).value == 1);
}

TEST_CASE("repeated flows and cuts are byte-for-byte deterministic") {
    std::mt19937_64 rng(353);
    for (int i = 0; i < 20; ++i) {
        Graph g = testing::random_graph(rng);
        VertexId t = g.vertex_count() - 1;
        FlowAssignment a = max_flow(full_view(g), {0}, t);
        FlowAssignment b = max_flow(full_view(g), {0}, t);
        CHECK(a.flow == b.flow);
    }
}
