#include "wtss/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "wtss/errors.hpp"

namespace wtss {

Graph::Graph(int vertex_count, std::vector<Edge> edges, VertexId source)
    : n_(vertex_count), edges_(std::move(edges)), source_(source) {
    if (n_ < 0) throw RangeError("negative vertex count");
    if (source_ < 0 || source_ >= n_) throw RangeError("source vertex out of range");
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.tail < 0 || ed.tail >= n_ || ed.head < 0 || ed.head >= n_)
            throw RangeError("edge endpoint out of range");
        out_[static_cast<std::size_t>(ed.tail)].push_back(e);
        in_[static_cast<std::size_t>(ed.head)].push_back(e);
    }
}

bool Graph::all_weights_integral() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.weight.is_integer(); });
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.source_ != b.source_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        if (a.edges_[i].tail != b.edges_[i].tail || a.edges_[i].head != b.edges_[i].head ||
            a.edges_[i].weight != b.edges_[i].weight)
            return false;
    }
    return true;
}

Subgraph::Subgraph(const Graph& parent, bool include_all)
    : parent_(&parent),
      mask_(static_cast<std::size_t>(parent.edge_count()), include_all ? 1 : 0),
      count_(include_all ? parent.edge_count() : 0) {}

Subgraph::Subgraph(const Graph& parent, const std::vector<EdgeId>& edge_ids)
    : parent_(&parent), mask_(static_cast<std::size_t>(parent.edge_count()), 0), count_(0) {
    for (EdgeId e : edge_ids) {
        if (e < 0 || e >= parent.edge_count()) throw RangeError("edge id out of range");
        if (!mask_[static_cast<std::size_t>(e)]) {
            mask_[static_cast<std::size_t>(e)] = 1;
            ++count_;
        }
    }
}

Subgraph::Subgraph(const Graph& parent, std::vector<char> mask)
    : parent_(&parent), mask_(std::move(mask)), count_(0) {
    if (mask_.size() != static_cast<std::size_t>(parent.edge_count()))
        throw RangeError("edge mask size mismatch");
    for (char bit : mask_)
        if (bit) ++count_;
}

std::vector<EdgeId> Subgraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<std::size_t>(count_));
    for (EdgeId e = 0; e < parent_->edge_count(); ++e)
        if (mask_[static_cast<std::size_t>(e)]) ids.push_back(e);
    return ids;
}

std::vector<EdgeId> Subgraph::out_edges(VertexId v) const {
    std::vector<EdgeId> ids;
    for (EdgeId e : parent_->out_ids(v))
        if (mask_[static_cast<std::size_t>(e)]) ids.push_back(e);
    return ids;
}

std::vector<EdgeId> Subgraph::in_edges(VertexId v) const {
    std::vector<EdgeId> ids;
    for (EdgeId e : parent_->in_ids(v))
        if (mask_[static_cast<std::size_t>(e)]) ids.push_back(e);
    return ids;
}

Subgraph Subgraph::without(const std::vector<EdgeId>& edge_ids) const {
    Subgraph result = *this;
    for (EdgeId e : edge_ids) {
        if (e < 0 || e >= parent_->edge_count()) throw RangeError("edge id out of range");
        if (result.mask_[static_cast<std::size_t>(e)]) {
            result.mask_[static_cast<std::size_t>(e)] = 0;
            --result.count_;
        }
    }
    return result;
}

Subgraph Subgraph::restricted_to(const std::vector<char>& keep) const {
    Subgraph result = *this;
    for (EdgeId e = 0; e < parent_->edge_count(); ++e) {
        if (result.mask_[static_cast<std::size_t>(e)] && !keep[static_cast<std::size_t>(e)]) {
            result.mask_[static_cast<std::size_t>(e)] = 0;
            --result.count_;
        }
    }
    return result;
}

bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
}

Subgraph full_view(const Graph& g) { return Subgraph(g, true); }

std::vector<char> reachable(const Subgraph& g, const std::vector<VertexId>& from, bool reverse) {
    const Graph& parent = g.parent();
    std::vector<char> seen(static_cast<std::size_t>(parent.vertex_count()), 0);
    std::deque<VertexId> queue;
    for (VertexId v : from) {
        if (v < 0 || v >= parent.vertex_count()) throw RangeError("vertex id out of range");
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        const auto& ids = reverse ? parent.in_ids(v) : parent.out_ids(v);
        for (EdgeId e : ids) {
            if (!g.includes(e)) continue;
            VertexId next = reverse ? parent.edge(e).tail : parent.edge(e).head;
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    }
    return seen;
}

Subgraph st_path_closure(const Subgraph& g, VertexId s, VertexId t) {
    std::vector<char> from_s = reachable(g, {s});
    std::vector<char> to_t = reachable(g, {t}, /*reverse=*/true);
    std::vector<char> keep(static_cast<std::size_t>(g.parent().edge_count()), 0);
    for (EdgeId e = 0; e < g.parent().edge_count(); ++e) {
        if (!g.includes(e)) continue;
        const Edge& ed = g.parent().edge(e);
        if (from_s[static_cast<std::size_t>(ed.tail)] && to_t[static_cast<std::size_t>(ed.head)])
            keep[static_cast<std::size_t>(e)] = 1;
    }
    return g.restricted_to(keep);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) fields.push_back(tok);
    return fields;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_number(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) parse_fail(line_no, std::string("malformed ") + what);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        parse_fail(line_no, std::string("malformed ") + what);
    }
}

// Bellman-Ford pass used purely for load-time validation of the
// "no negative cycle reachable from the source" invariant.
void reject_negative_cycles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(n));
    dist[static_cast<std::size_t>(g.source())] = Rational(0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const Edge& e : g.edges()) {
            const auto& du = dist[static_cast<std::size_t>(e.tail)];
            if (!du) continue;
            Rational candidate = *du + e.weight;
            auto& dv = dist[static_cast<std::size_t>(e.head)];
            if (!dv || candidate < *dv) {
                dv = candidate;
                changed = true;
            }
        }
        if (!changed) return;
        if (round == n - 1)
            throw NegativeCycleError("negative-weight cycle reachable from source");
    }
}

}  // namespace

Graph load_graph(std::istream& in) {
    std::optional<int> n;
    std::optional<VertexId> source;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;
        if (fields[0] == "n") {
            if (fields.size() != 2) parse_fail(line_no, "expected 'n <count>'");
            if (n) parse_fail(line_no, "duplicate 'n' line");
            long long v = parse_number(fields[1], line_no, "vertex count");
            if (v < 0 || v > INT32_MAX) parse_fail(line_no, "vertex count out of range");
            n = static_cast<int>(v);
        } else if (fields[0] == "s") {
            if (fields.size() != 2) parse_fail(line_no, "expected 's <vertex>'");
            long long v = parse_number(fields[1], line_no, "source vertex");
            source = static_cast<VertexId>(v);
        } else if (fields[0] == "e") {
            if (fields.size() != 4) parse_fail(line_no, "expected 'e <tail> <head> <weight>'");
            if (!n) parse_fail(line_no, "'e' line before 'n' line");
            Edge e;
            long long tail = parse_number(fields[1], line_no, "edge tail");
            long long head = parse_number(fields[2], line_no, "edge head");
            if (tail < 0 || tail >= *n || head < 0 || head >= *n)
                throw RangeError("line " + std::to_string(line_no) + ": vertex id out of range");
            e.tail = static_cast<VertexId>(tail);
            e.head = static_cast<VertexId>(head);
            try {
                e.weight = Rational::parse(fields[3]);
            } catch (const std::exception& ex) {
                parse_fail(line_no, std::string("bad weight: ") + ex.what());
            }
            edges.push_back(e);
        } else {
            parse_fail(line_no, "unknown directive '" + fields[0] + "'");
        }
    }
    if (!n) throw ParseError("missing 'n' line");
    VertexId s = source.value_or(0);
    if (s < 0 || s >= *n) throw RangeError("source vertex out of range");
    Graph g(*n, std::move(edges), s);
    reject_negative_cycles(g);
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_graph(in);
}

namespace {

void write_edge_line(std::ostream& out, const Edge& e) {
    out << "e " << e.tail << ' ' << e.head << ' ' << e.weight.to_string() << '\n';
}

}  // namespace

void serialize(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << '\n';
    out << "s " << g.source() << '\n';
    for (const Edge& e : g.edges()) write_edge_line(out, e);
}

void serialize(const Subgraph& g, std::ostream& out) {
    out << "n " << g.parent().vertex_count() << '\n';
    out << "s " << g.parent().source() << '\n';
    for (EdgeId e = 0; e < g.parent().edge_count(); ++e)
        if (g.includes(e)) write_edge_line(out, g.parent().edge(e));
}

std::string serialize_to_string(const Graph& g) {
    std::ostringstream out;
    serialize(g, out);
    return out.str();
}

std::string serialize_to_string(const Subgraph& g) {
    std::ostringstream out;
    serialize(g, out);
    return out.str();
}

Subgraph subgraph_of(const Graph& g, const Graph& h) {
    if (h.vertex_count() != g.vertex_count())
        throw RangeError("subgraph file has a different vertex count");
    if (h.source() != g.source()) throw RangeError("subgraph file has a different source");
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<EdgeId> picked;
    picked.reserve(static_cast<std::size_t>(h.edge_count()));
    for (const Edge& he : h.edges()) {
        bool matched = false;
        for (EdgeId e : g.out_ids(he.tail)) {
            const Edge& ge = g.edge(e);
            if (!used[static_cast<std::size_t>(e)] && ge.head == he.head && ge.weight == he.weight) {
                used[static_cast<std::size_t>(e)] = 1;
                picked.push_back(e);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw RangeError("edge " + std::to_string(he.tail) + "->" + std::to_string(he.head) +
                             " of the subgraph file is not present in the parent graph");
    }
    return Subgraph(g, picked);
}

}  // namespace wtss
