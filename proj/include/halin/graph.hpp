#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halin/errors.hpp"

namespace halin {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple undirected graph over dense vertex ids [0, vertex_count).
///
/// The edge list is kept sorted and duplicate-free and every neighbor list is
/// sorted ascending, so all traversals built on top of it are deterministic.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 0) throw Error("vertex count must be non-negative");
        for (Edge& e : edges_) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= n_)
                throw Error("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw Error("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    static Graph from_pairs(int vertex_count, std::initializer_list<std::pair<int, int>> pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [a, b] : pairs) edges.push_back(make_edge(a, b));
        return Graph(vertex_count, std::move(edges));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    bool has_edge(Vertex a, Vertex b) const {
        if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
        const auto& list = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(list.begin(), list.end(), b);
    }

    int min_degree() const {
        int best = n_ == 0 ? 0 : degree(0);
        for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void check_vertex(Vertex v) const {
        if (!has_vertex(v)) throw Error("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Sorted duplicate-free set of vertices of one host graph.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet of(const Graph& g, std::vector<Vertex> members) {
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
            throw Error("duplicate member in vertex set");
        if (!members.empty() && (members.front() < 0 || members.back() >= g.vertex_count()))
            throw Error("vertex set member out of range");
        VertexSet s;
        s.members_ = std::move(members);
        return s;
    }

    std::span<const Vertex> members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

private:
    std::vector<Vertex> members_;
};

namespace detail {

inline bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

inline Vertex parse_vertex_token(std::string_view tok, int line_no) {
    if (tok.front() == '-') throw ParseError(line_no, "negative number '" + std::string(tok) + "'");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "malformed token '" + std::string(tok) + "'");
    // Cap: the id becomes a direct index into the adjacency table.
    if (value > 10'000'000) throw ParseError(line_no, "vertex identifier too large");
    return static_cast<Vertex>(value);
}

}  // namespace detail

/// Parses the edge-list text format: one "u v" pair per line, '#' comments,
/// blank lines allowed. Vertices are the ids as written; vertex_count is the
/// largest mentioned id plus one.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (detail::is_blank_or_comment(line)) continue;

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) +
                                          " token(s)");
        Vertex a = detail::parse_vertex_token(tokens[0], line_no);
        Vertex b = detail::parse_vertex_token(tokens[1], line_no);
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        edges.push_back(make_edge(a, b));
        edge_lines.push_back(line_no);
    }

    // Duplicate detection reports the line of the later occurrence.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges[a] != edges[b] ? edges[a] < edges[b] : edge_lines[a] < edge_lines[b];
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i - 1]] == edges[order[i]]) {
            const Edge& e = edges[order[i]];
            throw ParseError(edge_lines[order[i]], "duplicate edge " + std::to_string(e.u) + " " +
                                                       std::to_string(e.v));
        }
    }

    Vertex max_id = -1;
    for (const Edge& e : edges) max_id = std::max(max_id, e.v);
    return Graph(max_id + 1, std::move(edges));
}

inline Graph parse_edge_list(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(std::string_view(buf.view()));
}

/// Canonical serialization: one edge per line, endpoints ascending within a
/// line, lines sorted by (u, v). Re-parsing yields an identical graph as long
/// as no vertex above the largest edge endpoint exists.
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

/// True iff g is connected with exactly vertex_count - 1 edges.
inline bool is_tree(const Graph& g) {
    if (g.vertex_count() < 1) return false;
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

/// True iff |s| >= 3 and the subgraph induced by s is a single cycle
/// (connected, every induced degree exactly 2).
inline bool is_induced_cycle(const Graph& g, const VertexSet& s) {
    if (s.size() < 3) return false;
    for (Vertex v : s.members()) {
        int d = 0;
        for (Vertex w : g.neighbors(v))
            if (s.contains(w)) ++d;
        if (d != 2) return false;
    }
    // All induced degrees are 2; a single cycle iff the members are connected.
    std::vector<Vertex> stack{s.members().front()};
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[static_cast<std::size_t>(stack.front())] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (s.contains(w) && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == s.size();
}

}  // namespace halin
