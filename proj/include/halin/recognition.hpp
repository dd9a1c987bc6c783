#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string_view>

#include "halin/graph.hpp"

namespace halin {

/// Rooted spanning tree as a parent map. parent[root] == -1 and depth is the
/// distance from the root along tree edges.
struct SpanningTree {
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<int> depth;

    int vertex_count() const { return static_cast<int>(parent.size()); }

    std::vector<int> degrees() const {
        std::vector<int> deg(parent.size(), 0);
        for (Vertex v = 0; v < vertex_count(); ++v) {
            if (parent[static_cast<std::size_t>(v)] >= 0) {
                ++deg[static_cast<std::size_t>(v)];
                ++deg[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            }
        }
        return deg;
    }

    /// Leaves derived as the vertices that are no vertex's parent, ascending.
    std::vector<Vertex> leaves() const {
        std::vector<char> has_child(parent.size(), 0);
        for (Vertex p : parent)
            if (p >= 0) has_child[static_cast<std::size_t>(p)] = 1;
        std::vector<Vertex> out;
        for (Vertex v = 0; v < vertex_count(); ++v)
            if (!has_child[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    /// Tree edges in canonical sorted order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(parent.size());
        for (Vertex v = 0; v < vertex_count(); ++v)
            if (parent[static_cast<std::size_t>(v)] >= 0)
                out.push_back(make_edge(v, parent[static_cast<std::size_t>(v)]));
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const SpanningTree&) const = default;
};

/// Breadth-first spanning tree; neighbors are explored in ascending id order
/// so the result is a deterministic function of the graph.
inline SpanningTree bfs_tree(const Graph& g, Vertex root) {
    int n = g.vertex_count();
    if (!g.has_vertex(root)) throw Error("bfs root out of range");
    SpanningTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(n), -2);  // -2 = unreached
    t.depth.assign(static_cast<std::size_t>(n), -1);
    std::queue<Vertex> q;
    q.push(root);
    t.parent[static_cast<std::size_t>(root)] = -1;
    t.depth[static_cast<std::size_t>(root)] = 0;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if (t.parent[static_cast<std::size_t>(w)] == -2) {
                t.parent[static_cast<std::size_t>(w)] = v;
                t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) throw Error("graph is disconnected");
    return t;
}

/// Tree-cycle witness that a graph is Halin: the underlying tree plus the
/// cyclic order of its leaves.
struct HalinCertificate {
    SpanningTree tree;
    std::vector<Vertex> leaf_cycle;

    bool operator==(const HalinCertificate&) const = default;
};

enum class CertificateDefect {
    None,
    NotSpanning,
    DegreeTwoInTree,
    NonTreeEdgeSetMismatch,
    LeafSetMismatch,
    NotInducedCycle,
    NonPlanarOrder,
};

inline std::string_view to_string(CertificateDefect d) {
    switch (d) {
        case CertificateDefect::None: return "none";
        case CertificateDefect::NotSpanning: return "not-spanning";
        case CertificateDefect::DegreeTwoInTree: return "degree-two-in-tree";
        case CertificateDefect::NonTreeEdgeSetMismatch: return "non-tree-edge-set-mismatch";
        case CertificateDefect::LeafSetMismatch: return "leaf-set-mismatch";
        case CertificateDefect::NotInducedCycle: return "not-induced-cycle";
        case CertificateDefect::NonPlanarOrder: return "non-planar-order";
    }
    return "unknown";
}

struct VerifyResult {
    bool ok = false;
    CertificateDefect defect = CertificateDefect::None;
};

namespace detail {

/// Vertices ordered by increasing tree depth.
inline std::vector<Vertex> by_depth(const SpanningTree& tree) {
    std::vector<Vertex> order(static_cast<std::size_t>(tree.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return tree.depth[static_cast<std::size_t>(a)] < tree.depth[static_cast<std::size_t>(b)];
    });
    return order;
}

/// True iff every subtree's leaves occupy one contiguous arc of the cycle,
/// i.e. the cycle order is realizable by a plane embedding of the rooted
/// tree. Assumes a structurally valid spanning tree, an internal root and a
/// cycle consisting of exactly the tree leaves.
inline bool plane_consistent(const SpanningTree& tree, const std::vector<Vertex>& cyc) {
    const int n = tree.vertex_count();
    const int r = static_cast<int>(cyc.size());
    const Vertex root = tree.root;
    std::vector<Vertex> order = by_depth(tree);

    // Root-child ancestor of every vertex, top-down.
    std::vector<Vertex> top(static_cast<std::size_t>(n), -1);
    int root_children = 0;
    for (Vertex v : order) {
        if (v == root) continue;
        Vertex p = tree.parent[static_cast<std::size_t>(v)];
        if (p == root) {
            top[static_cast<std::size_t>(v)] = v;
            ++root_children;
        } else {
            top[static_cast<std::size_t>(v)] = top[static_cast<std::size_t>(p)];
        }
    }

    // The root subtrees must partition the cycle into exactly one run each.
    int runs = 0;
    int first_boundary = 0;
    for (int i = 0; i < r; ++i) {
        Vertex here = top[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])];
        Vertex before = top[static_cast<std::size_t>(cyc[static_cast<std::size_t>((i + r - 1) % r)])];
        if (here != before) {
            if (runs == 0) first_boundary = i;
            ++runs;
        }
    }
    if (runs != root_children) return false;

    // Rotated so no deeper subtree can wrap, every subtree must cover a
    // gap-free position interval.
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < r; ++i)
        pos[static_cast<std::size_t>(cyc[static_cast<std::size_t>((first_boundary + i) % r)])] = i;
    std::vector<int> min_pos(static_cast<std::size_t>(n), r);
    std::vector<int> max_pos(static_cast<std::size_t>(n), -1);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        int p = pos[static_cast<std::size_t>(v)];
        if (p >= 0) {
            min_pos[static_cast<std::size_t>(v)] = max_pos[static_cast<std::size_t>(v)] = p;
            count[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == root) continue;
        auto p = static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)]);
        auto s = static_cast<std::size_t>(v);
        min_pos[p] = std::min(min_pos[p], min_pos[s]);
        max_pos[p] = std::max(max_pos[p], max_pos[s]);
        count[p] += count[s];
    }
    for (Vertex v = 0; v < n; ++v) {
        auto s = static_cast<std::size_t>(v);
        if (count[s] > 0 && max_pos[s] - min_pos[s] + 1 != count[s]) return false;
    }
    return true;
}

}  // namespace detail

/// Checks every HalinCertificate invariant against g. Defects are reported in
/// a fixed order: spanning-tree structure (including an internal root), tree
/// degrees, non-tree edge set versus the cycle edges, leaf set, induced
/// cycle, plane-embeddable cycle order.
inline VerifyResult verify_certificate(const Graph& g, const HalinCertificate& cert) {
    const int n = g.vertex_count();
    const SpanningTree& t = cert.tree;

    // Spanning tree over exactly the host's vertices.
    if (t.vertex_count() != n || static_cast<int>(t.depth.size()) != n || n < 2 ||
        !g.has_vertex(t.root))
        return {false, CertificateDefect::NotSpanning};
    if (t.parent[static_cast<std::size_t>(t.root)] != -1 ||
        t.depth[static_cast<std::size_t>(t.root)] != 0)
        return {false, CertificateDefect::NotSpanning};
    for (Vertex v = 0; v < n; ++v) {
        if (v == t.root) continue;
        Vertex p = t.parent[static_cast<std::size_t>(v)];
        if (!g.has_vertex(p) || !g.has_edge(v, p)) return {false, CertificateDefect::NotSpanning};
        if (t.depth[static_cast<std::size_t>(v)] != t.depth[static_cast<std::size_t>(p)] + 1)
            return {false, CertificateDefect::NotSpanning};
    }

    auto tree_deg = t.degrees();
    // The rooted form requires an internal root; together with the no-degree-2
    // rule every internal vertex then has tree-degree >= 3.
    if (tree_deg[static_cast<std::size_t>(t.root)] < 2)
        return {false, CertificateDefect::NotSpanning};
    for (Vertex v = 0; v < n; ++v)
        if (tree_deg[static_cast<std::size_t>(v)] == 2)
            return {false, CertificateDefect::DegreeTwoInTree};

    // Well-formed leaf cycle: valid distinct vertices, r >= 3.
    const std::vector<Vertex>& cyc = cert.leaf_cycle;
    const int r = static_cast<int>(cyc.size());
    if (r < 3) return {false, CertificateDefect::LeafSetMismatch};
    {
        std::vector<Vertex> sorted_cyc(cyc);
        std::sort(sorted_cyc.begin(), sorted_cyc.end());
        if (sorted_cyc.front() < 0 || sorted_cyc.back() >= n ||
            std::adjacent_find(sorted_cyc.begin(), sorted_cyc.end()) != sorted_cyc.end())
            return {false, CertificateDefect::LeafSetMismatch};
    }

    // The r consecutive pairs (with wrap) must be exactly E(G) \ E(T).
    std::vector<Edge> tree_edges = t.edges();
    std::vector<Edge> non_tree;
    non_tree.reserve(g.edges().size());
    std::set_difference(g.edges().begin(), g.edges().end(), tree_edges.begin(), tree_edges.end(),
                        std::back_inserter(non_tree));
    std::vector<Edge> cycle_edges;
    cycle_edges.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        Vertex a = cyc[static_cast<std::size_t>(i)];
        Vertex b = cyc[static_cast<std::size_t>((i + 1) % r)];
        if (a == b) return {false, CertificateDefect::NonTreeEdgeSetMismatch};
        cycle_edges.push_back(make_edge(a, b));
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
    if (std::adjacent_find(cycle_edges.begin(), cycle_edges.end()) != cycle_edges.end())
        return {false, CertificateDefect::NonTreeEdgeSetMismatch};
    if (cycle_edges != non_tree) return {false, CertificateDefect::NonTreeEdgeSetMismatch};

    // The cycle entries must be exactly the tree-degree-1 vertices. With an
    // internal root these are also the childless vertices.
    std::vector<Vertex> cycle_set(cyc);
    std::sort(cycle_set.begin(), cycle_set.end());
    std::vector<Vertex> degree_one;
    for (Vertex v = 0; v < n; ++v)
        if (tree_deg[static_cast<std::size_t>(v)] == 1) degree_one.push_back(v);
    if (cycle_set != degree_one) return {false, CertificateDefect::LeafSetMismatch};

    if (!is_induced_cycle(g, VertexSet::of(g, cycle_set)))
        return {false, CertificateDefect::NotInducedCycle};

    // The combinatorial checks above admit non-planar graphs (K_{3,3} has a
    // spanning double star whose non-tree edges form an induced leaf cycle);
    // Halin graphs are exactly the plane-consistent cases.
    if (!detail::plane_consistent(t, cyc)) return {false, CertificateDefect::NonPlanarOrder};

    return {true, CertificateDefect::None};
}

enum class Verdict { Halin, NotHalin };

struct RootTrace {
    Vertex root = 0;
    CertificateDefect defect = CertificateDefect::None;

    bool operator==(const RootTrace&) const = default;
};

struct RecognitionReport {
    Verdict verdict = Verdict::NotHalin;
    std::optional<HalinCertificate> certificate;
    std::vector<RootTrace> roots_tried;
    bool oracle_used = false;
    std::string reason;  // set when verdict == NotHalin
};

namespace detail {

/// Walks the edge set `ring` (as adjacency restricted to `members`) into a
/// cyclic vertex order starting from the smallest member toward its smaller
/// neighbor. Returns nullopt unless the edges form one cycle covering all
/// members.
inline std::optional<std::vector<Vertex>> walk_cycle(const std::vector<Vertex>& members,
                                                     const std::vector<Edge>& ring) {
    if (members.size() < 3 || ring.size() != members.size()) return std::nullopt;
    std::vector<std::vector<Vertex>> adj;
    std::vector<int> index(members.size());
    auto local = [&](Vertex v) {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        if (it == members.end() || *it != v) return -1;
        return static_cast<int>(it - members.begin());
    };
    adj.assign(members.size(), {});
    for (const Edge& e : ring) {
        int a = local(e.u), b = local(e.v);
        if (a < 0 || b < 0) return std::nullopt;
        adj[static_cast<std::size_t>(a)].push_back(e.v);
        adj[static_cast<std::size_t>(b)].push_back(e.u);
    }
    for (auto& list : adj) {
        if (list.size() != 2) return std::nullopt;
        std::sort(list.begin(), list.end());
    }
    std::vector<Vertex> order;
    order.reserve(members.size());
    Vertex start = members.front();
    Vertex prev = start;
    Vertex cur = adj[0].front();  // smaller neighbor of the smallest member
    order.push_back(start);
    while (cur != start) {
        order.push_back(cur);
        if (order.size() > members.size()) return std::nullopt;
        const auto& nb = adj[static_cast<std::size_t>(local(cur))];
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (order.size() != members.size()) return std::nullopt;
    return order;
}

/// Builds the certificate candidate for one BFS tree, or reports why it is
/// not one. The final word is always verify_certificate.
inline std::pair<std::optional<HalinCertificate>, CertificateDefect> certificate_from_tree(
    const Graph& g, SpanningTree tree) {
    std::vector<Edge> tree_edges = tree.edges();
    std::vector<Edge> non_tree;
    std::set_difference(g.edges().begin(), g.edges().end(), tree_edges.begin(), tree_edges.end(),
                        std::back_inserter(non_tree));
    std::vector<Vertex> leaf_set = tree.leaves();

    // S_v: endpoints of the non-tree edges.
    std::vector<Vertex> s_v;
    for (const Edge& e : non_tree) {
        s_v.push_back(e.u);
        s_v.push_back(e.v);
    }
    std::sort(s_v.begin(), s_v.end());
    s_v.erase(std::unique(s_v.begin(), s_v.end()), s_v.end());
    if (s_v != leaf_set) return {std::nullopt, CertificateDefect::LeafSetMismatch};
    if (non_tree.size() != leaf_set.size())
        return {std::nullopt, CertificateDefect::NonTreeEdgeSetMismatch};

    auto order = walk_cycle(leaf_set, non_tree);
    if (!order) return {std::nullopt, CertificateDefect::NotInducedCycle};

    HalinCertificate cert{std::move(tree), std::move(*order)};
    VerifyResult vr = verify_certificate(g, cert);
    if (!vr.ok) return {std::nullopt, vr.defect};
    return {std::move(cert), CertificateDefect::None};
}

}  // namespace detail

/// The BFS-based Halin test: roots are tried in ascending order and the first
/// whose BFS tree yields a verifying tree-cycle representation wins. A graph
/// that is disconnected, has fewer than 4 vertices or a vertex of degree
/// below 3 is rejected up front.
inline RecognitionReport recognize_bfs(const Graph& g) {
    RecognitionReport report;
    if (g.vertex_count() < 4) {
        report.reason = "fewer than 4 vertices";
        return report;
    }
    if (!is_connected(g)) {
        report.reason = "disconnected";
        return report;
    }
    if (g.min_degree() < 3) {
        report.reason = "min degree " + std::to_string(g.min_degree());
        return report;
    }
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        auto [cert, defect] = detail::certificate_from_tree(g, bfs_tree(g, root));
        if (cert) {
            report.verdict = Verdict::Halin;
            report.certificate = std::move(cert);
            return report;
        }
        report.roots_tried.push_back({root, defect});
    }
    report.reason = "no root yields a tree-cycle representation";
    return report;
}

inline constexpr int kDefaultOracleBound = 14;

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

/// Enumerates every spanning tree of g in a fixed order: edges are considered
/// in canonical sorted order, and for each the include branch is explored
/// before the exclude branch. Branches that can no longer connect the graph
/// are pruned. `emit` returns true to stop early.
inline bool for_each_spanning_tree(const Graph& g,
                                   const std::function<bool(const std::vector<Edge>&)>& emit) {
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (n == 0) return false;
    std::vector<Edge> chosen;
    chosen.reserve(static_cast<std::size_t>(n - 1));

    std::function<bool(int, UnionFind, int)> rec = [&](int idx, UnionFind uf,
                                                       int components) -> bool {
        if (components == 1) return emit(chosen);
        if (idx == m) return false;
        // Feasibility: the remaining edges must still be able to connect what
        // the chosen forest has not merged yet.
        {
            UnionFind probe = uf;
            int c = components;
            for (int j = idx; j < m && c > 1; ++j)
                if (probe.unite(edges[static_cast<std::size_t>(j)].u,
                                edges[static_cast<std::size_t>(j)].v))
                    --c;
            if (c > 1) return false;
        }
        const Edge& e = edges[static_cast<std::size_t>(idx)];
        if (uf.find(e.u) == uf.find(e.v)) return rec(idx + 1, std::move(uf), components);
        UnionFind with = uf;
        with.unite(e.u, e.v);
        chosen.push_back(e);
        if (rec(idx + 1, std::move(with), components - 1)) return true;
        chosen.pop_back();
        return rec(idx + 1, std::move(uf), components);
    };
    return rec(0, UnionFind(n), n);
}

inline std::optional<SpanningTree> tree_from_edges(const Graph& g,
                                                   const std::vector<Edge>& tree_edges) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : tree_edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    Vertex root = -1;
    for (Vertex v = 0; v < n && root < 0; ++v)
        if (deg[static_cast<std::size_t>(v)] >= 2) root = v;
    if (root < 0) return std::nullopt;
    for (auto& list : adj) std::sort(list.begin(), list.end());

    SpanningTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(n), -2);
    t.depth.assign(static_cast<std::size_t>(n), -1);
    t.parent[static_cast<std::size_t>(root)] = -1;
    t.depth[static_cast<std::size_t>(root)] = 0;
    std::queue<Vertex> q;
    q.push(root);
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (t.parent[static_cast<std::size_t>(w)] == -2) {
                t.parent[static_cast<std::size_t>(w)] = v;
                t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) return std::nullopt;
    return t;
}

}  // namespace detail

/// Ground-truth recognizer: enumerates every spanning tree and accepts iff
/// some tree's certificate verifies. Exponential; guarded by max_vertices.
inline RecognitionReport recognize_oracle(const Graph& g, int max_vertices = kDefaultOracleBound) {
    if (g.vertex_count() > max_vertices)
        throw BoundExceeded("recognition oracle bound exceeded: " +
                            std::to_string(g.vertex_count()) + " vertices > " +
                            std::to_string(max_vertices));
    RecognitionReport report;
    report.oracle_used = true;
    if (g.vertex_count() < 2) {
        report.reason = "fewer than 4 vertices";
        return report;
    }
    // Any tree-cycle decomposition has exactly n-1 tree edges plus one cycle
    // edge per leaf, so m <= 2n-2. Denser graphs need no enumeration, which
    // also keeps dense near-bound inputs from exploding the search.
    if (g.edge_count() > 2 * g.vertex_count() - 2) {
        report.reason = "too many edges for a tree-cycle representation";
        return report;
    }
    detail::for_each_spanning_tree(g, [&](const std::vector<Edge>& tree_edges) {
        auto tree = detail::tree_from_edges(g, tree_edges);
        if (!tree) return false;
        // Cheap pre-checks keep the enumeration fast; the final word is
        // verify_certificate inside certificate_from_tree.
        auto deg = tree->degrees();
        for (int d : deg)
            if (d == 2) return false;
        auto [cert, defect] = detail::certificate_from_tree(g, std::move(*tree));
        (void)defect;
        if (!cert) return false;
        report.verdict = Verdict::Halin;
        report.certificate = std::move(cert);
        return true;
    });
    if (report.verdict == Verdict::NotHalin)
        report.reason = "no spanning tree admits a leaf cycle";
    return report;
}

}  // namespace halin
