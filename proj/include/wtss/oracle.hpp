#pragma once

#include <optional>
#include <vector>

#include "wtss/degree_transform.hpp"
#include "wtss/graph.hpp"
#include "wtss/rational.hpp"

namespace wtss {

// Edge -> added weight, sparse and sorted by edge id. Amounts are naturals in
// integer mode; demo mode also allows non-negative rationals and (for the
// decrement family only) negative deltas.
struct IncrementFunction {
    std::vector<std::pair<EdgeId, Rational>> amounts;

    Rational total() const;
    Rational at(EdgeId e) const;
    void set(EdgeId e, const Rational& amount);
    bool all_integral() const;
    std::string to_string() const;
};

// Streams every increment function with natural amounts and total at most
// budget over m edges, each exactly once: grouped by total ascending, and
// within one total in descending lexicographic order by edge id, e.g. for
// m=2, budget=2: (0,0),(1,0),(0,1),(2,0),(1,1),(0,2). Count is C(m+k, k).
class IncrementEnumerator {
  public:
    IncrementEnumerator(int edge_count, int budget);
    std::optional<IncrementFunction> next();

  private:
    int m_;
    int k_;
    int current_total_;
    bool fresh_total_;
    bool done_;
    std::vector<std::int64_t> dense_;
};

unsigned long long increment_count(int edge_count, int budget);

// New graph with weights w + I; the input is untouched.
Graph apply_increment(const Graph& g, const IncrementFunction& inc);

// The same increment carried over to a transformed graph: each original
// edge's amount lands on its leaf edge, gadget edges get zero.
IncrementFunction transport_increment(const TransformMapping& mapping,
                                      const IncrementFunction& inc);

struct Counterexample {
    IncrementFunction increment;
    VertexId target = 0;
    std::optional<Rational> dist_in_g;
    std::optional<Rational> dist_in_h;
};

// Exhaustively checks that h preserves every source distance of g under all
// integer increments with total at most budget. Returns the first failure in
// enumeration order (targets ascending within one increment), or nullopt.
std::optional<Counterexample> verify_wtss(const Graph& g, const Subgraph& h, VertexId s, int budget);

// Same check restricted to a single target vertex.
std::optional<Counterexample> verify_wtss_t(const Graph& g, const Subgraph& h, VertexId s,
                                            VertexId t, int budget);

enum class Necessity { kNecessary, kNotProven };

struct EdgeNecessity {
    EdgeId edge = 0;
    Necessity status = Necessity::kNotProven;
    // Increment and target demonstrating that dropping the edge changes a
    // distance; present iff status == kNecessary.
    std::optional<IncrementFunction> witness;
    VertexId target = 0;
};

struct NecessityReport {
    std::vector<EdgeNecessity> edges;

    bool all_necessary() const;
};

// Certifies edges as NECESSARY when some increment (a supplied witness first,
// then the full integer enumeration when exhaustive is set) separates the
// graph with and without the edge. Witnesses above the budget raise
// WitnessBudgetError; demo mode (exhaustive == false) requires witnesses.
NecessityReport verify_edge_necessity(const Graph& g, VertexId s, int budget,
                                      const std::vector<IncrementFunction>& witnesses,
                                      bool exhaustive);

struct FtrsCounterexample {
    std::vector<EdgeId> removed;
    VertexId target = 0;
    bool reachable_in_g = false;
    bool reachable_in_h = false;
};

// For an all-zero-weight graph: checks that h preserves reachability from s
// under every deletion of at most budget edges. Exhaustive over deletion sets.
std::optional<FtrsCounterexample> verify_ftrs_reduction(const Graph& g, const Subgraph& h,
                                                        VertexId s, int budget);

}  // namespace wtss
