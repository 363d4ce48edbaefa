#pragma once

#include <string>
#include <vector>

#include "wtss/graph.hpp"
#include "wtss/oracle.hpp"

namespace wtss {

struct LBWitness {
    std::string label;
    IncrementFunction increment;
};

// A generated adversarial instance together with the increments that certify
// every edge as necessary and the closed-form edge count it must match.
struct LBInstance {
    Graph graph;
    std::string family;
    int budget = 1;            // nominal increment budget the family targets
    int size_parameter = 0;
    long long predicted_edge_count = 0;
    std::vector<LBWitness> witnesses;
    Rational max_witness_total;
    // Non-empty when the stored witnesses exceed the nominal budget; callers
    // then verify with a budget of max_witness_total instead.
    std::string note;
};

// Fan-of-trees family: l chained binary trees hang off the source with
// increasing entry weights, every leaf feeds every one of x sink vertices.
// Tree i has height k - sum(2..i) below its entry vertex, so each full
// root-to-sink path can be made uniquely shortest with total increment k.
// Edge count: l + sum_i (2*leaves_i - 1) + leaves * x.
LBInstance gen_tree_lb(int budget, int x);

// Rational-weight family on n vertices: a zero-weight chain v1..v_{n-1}
// reached through one heavy edge, plus all forward skip edges with weights
// 1 - (i+j)/2n. A unit increment on one chain edge makes exactly one skip
// edge indispensable. Edge count: C(n-1,2) + 1.
LBInstance gen_rational_weight_lb(int n);

// Rational-increment family on n vertices: complete bipartite middle layer,
// all weights 1; fractional increments on the other source and sink edges
// isolate any chosen path. Edge count: |A| + |A||B| + |B|.
LBInstance gen_rational_increment_lb(int n);

// Decrement family: same topology with all weights 2; decrementing any one
// edge by 1 makes exactly the paths through it shorter.
LBInstance gen_decrement_lb(int n);

}  // namespace wtss
