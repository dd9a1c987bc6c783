#pragma once

#include <array>

#include "halin/wheel.hpp"

namespace halin {

/// A verifying certificate enriched with the plane orientation the coloring
/// pass needs: per-internal-vertex ordered child lists and the leaf sequence
/// a depth-first traversal in that child order emits.
struct OrientedRepresentation {
    HalinCertificate cert;
    std::vector<std::vector<Vertex>> children;  // plane order; empty for leaves
    std::vector<Vertex> leaf_order;             // rotation/reflection of cert.leaf_cycle
};

/// Total color assignment, vertex -> color index in {1,2,3,4}.
struct Coloring {
    std::vector<int> assignment;

    int color(Vertex v) const { return assignment[static_cast<std::size_t>(v)]; }

    bool operator==(const Coloring&) const = default;
};

struct ProperCheck {
    bool proper = false;
    int colors_used = 0;
};

/// True iff no edge is monochromatic and every vertex carries a positive
/// color; also counts the distinct colors used.
inline ProperCheck verify_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count()) return {false, 0};
    std::vector<int> seen;
    for (int col : c.assignment) {
        if (col < 1) return {false, 0};
        if (std::find(seen.begin(), seen.end(), col) == seen.end()) seen.push_back(col);
    }
    for (const Edge& e : g.edges())
        if (c.color(e.u) == c.color(e.v)) return {false, static_cast<int>(seen.size())};
    return {true, static_cast<int>(seen.size())};
}

// The 3-coloring procedure was asked to color a graph containing an induced odd wheel.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const WheelWitness& w)
        : Error("input contains an induced odd wheel (hub " + std::to_string(w.hub) + ")"),
          witness_(w) {}

    const WheelWitness& witness() const { return witness_; }

private:
    WheelWitness witness_;
};

// The candidate color set of a vertex ran dry during the coloring DFS. This
// is surfaced, never patched with a fourth color: a firing is evidence
// against three-colorability of the input, so the partial coloring travels
// with the error for diagnosis.
class EmptyCandidateSet : public Error {
public:
    EmptyCandidateSet(Vertex v, std::vector<int> partial)
        : Error("candidate color set empty at vertex " + std::to_string(v)),
          vertex_(v),
          partial_(std::move(partial)) {}

    Vertex vertex() const { return vertex_; }
    const std::vector<int>& partial_coloring() const { return partial_; }

private:
    Vertex vertex_;
    std::vector<int> partial_;
};

namespace detail {

struct SubtreeSpan {
    int min_pos = -1;
    int max_pos = -1;
    int count = 0;
};

/// Post-order accumulation of each vertex's subtree leaf positions.
inline std::vector<SubtreeSpan> subtree_spans(const SpanningTree& tree,
                                              const std::vector<std::vector<Vertex>>& kids,
                                              const std::vector<int>& leaf_pos) {
    const int n = tree.vertex_count();
    std::vector<SubtreeSpan> span(static_cast<std::size_t>(n));
    // Vertices in order of decreasing depth so children are done first.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return tree.depth[static_cast<std::size_t>(a)] > tree.depth[static_cast<std::size_t>(b)];
    });
    for (Vertex v : order) {
        SubtreeSpan& s = span[static_cast<std::size_t>(v)];
        if (kids[static_cast<std::size_t>(v)].empty()) {
            s.min_pos = s.max_pos = leaf_pos[static_cast<std::size_t>(v)];
            s.count = 1;
            continue;
        }
        for (Vertex c : kids[static_cast<std::size_t>(v)]) {
            const SubtreeSpan& cs = span[static_cast<std::size_t>(c)];
            if (s.count == 0) {
                s = cs;
            } else {
                s.min_pos = std::min(s.min_pos, cs.min_pos);
                s.max_pos = std::max(s.max_pos, cs.max_pos);
                s.count += cs.count;
            }
        }
    }
    return span;
}

}  // namespace detail

namespace detail {

/// Per-certificate plane structure: raw child lists, each vertex's root-child
/// ancestor, and the positions on cert.leaf_cycle where a root-subtree arc
/// begins (reading forward).
struct CycleArcs {
    std::vector<std::vector<Vertex>> kids;
    std::vector<Vertex> top;
    std::vector<int> arc_starts;
};

inline CycleArcs cycle_arcs(const HalinCertificate& cert) {
    const int n = cert.tree.vertex_count();
    const std::vector<Vertex>& cyc = cert.leaf_cycle;
    const int r = static_cast<int>(cyc.size());
    CycleArcs arcs;
    arcs.kids.assign(static_cast<std::size_t>(n), {});
    for (Vertex v = 0; v < n; ++v)
        if (v != cert.tree.root)
            arcs.kids[static_cast<std::size_t>(cert.tree.parent[static_cast<std::size_t>(v)])]
                .push_back(v);
    arcs.top.assign(static_cast<std::size_t>(n), -1);
    for (Vertex v : by_depth(cert.tree)) {
        if (v == cert.tree.root) continue;
        Vertex p = cert.tree.parent[static_cast<std::size_t>(v)];
        arcs.top[static_cast<std::size_t>(v)] =
            p == cert.tree.root ? v : arcs.top[static_cast<std::size_t>(p)];
    }
    for (int i = 0; i < r; ++i) {
        Vertex here = arcs.top[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])];
        Vertex before =
            arcs.top[static_cast<std::size_t>(cyc[static_cast<std::size_t>((i + r - 1) % r)])];
        if (here != before) arcs.arc_starts.push_back(i);
    }
    if (arcs.arc_starts.size() != arcs.kids[static_cast<std::size_t>(cert.tree.root)].size())
        throw InternalError("subtree leaves are not contiguous on the cycle");
    return arcs;
}

/// Builds the oriented representation whose leaf_order starts at cycle
/// position `start` and proceeds in direction `dir` (+1 or -1). `start` must
/// be an arc boundary in that direction.
inline OrientedRepresentation orient_at(const Graph& g, const HalinCertificate& cert,
                                        const CycleArcs& arcs, int start, int dir) {
    const int n = g.vertex_count();
    const std::vector<Vertex>& cyc = cert.leaf_cycle;
    const int r = static_cast<int>(cyc.size());

    OrientedRepresentation rep;
    rep.cert = cert;
    rep.leaf_order.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        rep.leaf_order.push_back(cyc[static_cast<std::size_t>(((start + i * dir) % r + r) % r)]);

    std::vector<int> leaf_pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < r; ++i)
        leaf_pos[static_cast<std::size_t>(rep.leaf_order[static_cast<std::size_t>(i)])] = i;

    auto span = subtree_spans(cert.tree, arcs.kids, leaf_pos);
    for (Vertex v = 0; v < n; ++v) {
        const auto& s = span[static_cast<std::size_t>(v)];
        if (s.max_pos - s.min_pos + 1 != s.count)
            throw InternalError("subtree leaves are not contiguous on the cycle");
    }

    rep.children = arcs.kids;
    for (auto& list : rep.children)
        std::sort(list.begin(), list.end(), [&](Vertex a, Vertex b) {
            return span[static_cast<std::size_t>(a)].min_pos <
                   span[static_cast<std::size_t>(b)].min_pos;
        });

    // The traversal order is the defining property; check it outright.
    std::vector<Vertex> emitted;
    emitted.reserve(static_cast<std::size_t>(r));
    std::vector<Vertex> stack{cert.tree.root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        const auto& ch = rep.children[static_cast<std::size_t>(v)];
        if (ch.empty()) emitted.push_back(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    if (emitted != rep.leaf_order)
        throw InternalError("depth-first traversal does not emit the leaf order");
    return rep;
}

/// Chooses among the (position, direction) orientation candidates accepted by
/// `usable`: smallest starting leaf wins, ties broken toward the smaller
/// second leaf.
template <typename Pred>
std::pair<int, int> pick_orientation(const HalinCertificate& cert, const CycleArcs& arcs,
                                     Pred usable) {
    const std::vector<Vertex>& cyc = cert.leaf_cycle;
    const int r = static_cast<int>(cyc.size());
    int best_pos = -1, best_dir = 0;
    auto consider = [&](int pos, int dir) {
        if (!usable(pos)) return;
        if (best_pos < 0) {
            best_pos = pos;
            best_dir = dir;
            return;
        }
        Vertex cur = cyc[static_cast<std::size_t>(pos)];
        Vertex best = cyc[static_cast<std::size_t>(best_pos)];
        if (cur != best) {
            if (cur < best) {
                best_pos = pos;
                best_dir = dir;
            }
            return;
        }
        Vertex cur2 = cyc[static_cast<std::size_t>((pos + dir + r) % r)];
        Vertex best2 = cyc[static_cast<std::size_t>((best_pos + best_dir + r) % r)];
        if (cur2 < best2) {
            best_pos = pos;
            best_dir = dir;
        }
    };
    for (int start : arcs.arc_starts) {
        consider(start, +1);
        consider((start + r - 1) % r, -1);  // previous arc's end, read backward
    }
    if (best_pos < 0) throw InternalError("no usable orientation of the leaf cycle");
    return {best_pos, best_dir};
}

}  // namespace detail

/// Derives the plane orientation from a verifying certificate: children are
/// ordered by where each child's subtree first appears on the leaf cycle, and
/// the cycle is rotated (possibly reflected) so the traversal starts at the
/// smallest leaf that begins a root-subtree arc. Fails with InternalError if
/// some subtree's leaves are not contiguous on the cycle, which no verifying
/// certificate can produce.
inline OrientedRepresentation orient_representation(const Graph& g,
                                                    const HalinCertificate& cert) {
    VerifyResult vr = verify_certificate(g, cert);
    if (!vr.ok)
        throw Error("certificate does not verify: " + std::string(to_string(vr.defect)));
    detail::CycleArcs arcs = detail::cycle_arcs(cert);
    auto [pos, dir] = detail::pick_orientation(cert, arcs, [](int) { return true; });
    return detail::orient_at(g, cert, arcs, pos, dir);
}

/// 3-coloring of a wheel-free Halin graph over the palette {1,2,3}. The
/// leftmost leaf p and parent(rightmost leaf q) get color 3, the
/// root-to-parent(p) and root-to-parent(parent(q)) tree paths alternate
/// colors 1,2 by depth parity, and a depth-first pass in plane order colors
/// every remaining vertex with the least color its colored neighbors have not
/// used. Raises PreconditionViolated when an odd wheel is present and
/// EmptyCandidateSet when some vertex's candidate set runs dry.
inline Coloring three_color_wheel_free(const Graph& g, const OrientedRepresentation& rep) {
    if (auto w = find_odd_wheel(g)) throw PreconditionViolated(*w);

    const int n = g.vertex_count();
    const SpanningTree& tree = rep.cert.tree;
    const Vertex root = tree.root;
    std::vector<int> color(static_cast<std::size_t>(n), 0);

    auto least_free = [&](Vertex u) {
        bool used[4] = {false, false, false, false};
        int distinct = 0;
        for (Vertex w : g.neighbors(u)) {
            int c = color[static_cast<std::size_t>(w)];
            if (c >= 1 && c <= 3 && !used[c]) {
                used[c] = true;
                ++distinct;
            }
        }
        if (distinct > 2) throw EmptyCandidateSet(u, color);
        for (int c = 1; c <= 3; ++c)
            if (!used[c]) return c;
        throw EmptyCandidateSet(u, color);  // unreachable given the check above
    };

    const bool star_tree =
        static_cast<int>(rep.children[static_cast<std::size_t>(root)].size()) == n - 1;
    if (star_tree) {
        // Height-1 tree: the graph is a wheel, and only even wheels pass the
        // precondition. Alternate the rim and give the hub the third color.
        for (std::size_t i = 0; i < rep.leaf_order.size(); ++i)
            color[static_cast<std::size_t>(rep.leaf_order[i])] = i % 2 == 0 ? 1 : 2;
        color[static_cast<std::size_t>(root)] = 3;
    } else {
        Vertex p = rep.leaf_order.front();
        Vertex q = rep.leaf_order.back();
        const std::vector<Vertex>* leaf_order = &rep.leaf_order;
        const std::vector<std::vector<Vertex>>* children = &rep.children;
        OrientedRepresentation reoriented;

        // When p and q are both leaf children of the root, giving color 3 to
        // both p and parent(q) = root would make the tree edge p-root
        // monochromatic. The leftmost/rightmost choice is free, so restart
        // the traversal inside an internal root subtree instead; one exists
        // because the tree is not a star.
        if (tree.parent[static_cast<std::size_t>(p)] ==
            tree.parent[static_cast<std::size_t>(q)]) {
            detail::CycleArcs arcs = detail::cycle_arcs(rep.cert);
            auto [pos, dir] = detail::pick_orientation(rep.cert, arcs, [&](int at) {
                Vertex owner = arcs.top[static_cast<std::size_t>(
                    rep.cert.leaf_cycle[static_cast<std::size_t>(at)])];
                return !arcs.kids[static_cast<std::size_t>(owner)].empty();
            });
            reoriented = detail::orient_at(g, rep.cert, arcs, pos, dir);
            leaf_order = &reoriented.leaf_order;
            children = &reoriented.children;
            p = leaf_order->front();
            q = leaf_order->back();
        }
        const Vertex parent_q = tree.parent[static_cast<std::size_t>(q)];

        // Step 6 first; these assignments are never overwritten.
        color[static_cast<std::size_t>(p)] = 3;
        color[static_cast<std::size_t>(parent_q)] = 3;

        // Steps 7 and 8: alternate 1,2 by tree depth so the two paths agree
        // wherever they overlap; vertices already colored 3 are skipped.
        auto color_root_path = [&](Vertex target) {
            for (Vertex w = target;; w = tree.parent[static_cast<std::size_t>(w)]) {
                if (color[static_cast<std::size_t>(w)] == 0)
                    color[static_cast<std::size_t>(w)] =
                        tree.depth[static_cast<std::size_t>(w)] % 2 == 0 ? 1 : 2;
                if (w == root) break;
            }
        };
        color_root_path(tree.parent[static_cast<std::size_t>(p)]);
        if (parent_q != root) color_root_path(tree.parent[static_cast<std::size_t>(parent_q)]);

        // Steps 9 and 10: depth-first in plane order, least free color.
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            if (color[static_cast<std::size_t>(u)] == 0)
                color[static_cast<std::size_t>(u)] = least_free(u);
            const auto& ch = (*children)[static_cast<std::size_t>(u)];
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
    }

    Coloring result{std::move(color)};
    ProperCheck check = verify_proper(g, result);
    if (!check.proper || check.colors_used > 3)
        throw InternalError("three-coloring pass produced an invalid coloring");
    return result;
}

/// Exact backtracking coloring in depth-first tree order with incremental
/// color budgets (3, then 4) and symmetry breaking: the root is fixed to
/// color 1 and its first child to color 2. Always succeeds on Halin inputs.
inline Coloring four_color_exact(const Graph& g, const OrientedRepresentation& rep) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<Vertex> stack{rep.cert.tree.root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = rep.children[static_cast<std::size_t>(v)];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int)> assign = [&](int i, int budget) -> bool {
        if (i == n) return true;
        Vertex u = order[static_cast<std::size_t>(i)];
        int lo = 1, hi = budget;
        if (i == 0) hi = 1;           // root
        if (i == 1) lo = hi = 2;      // first child, adjacent to the root
        for (int c = lo; c <= hi; ++c) {
            bool clash = false;
            for (Vertex w : g.neighbors(u))
                if (color[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[static_cast<std::size_t>(u)] = c;
            if (assign(i + 1, budget)) return true;
            color[static_cast<std::size_t>(u)] = 0;
        }
        return false;
    };

    for (int budget : {3, 4}) {
        std::fill(color.begin(), color.end(), 0);
        if (assign(0, budget)) {
            Coloring result{color};
            ProperCheck check = verify_proper(g, result);
            if (!check.proper || check.colors_used > 4)
                throw InternalError("exact coloring pass produced an invalid coloring");
            return result;
        }
    }
    throw InternalError("4-coloring search exhausted on a supposedly planar input");
}

/// Fixed DOT palette for color indices 1..4.
inline constexpr std::array<std::string_view, 4> kDotPalette = {"#e41a1c", "#377eb8", "#4daf4a",
                                                                "#984ea3"};

/// "vertex color" lines, vertices ascending.
inline std::string coloring_to_text(const Coloring& c) {
    std::string out;
    for (std::size_t v = 0; v < c.assignment.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(c.assignment[v]);
        out += '\n';
    }
    return out;
}

/// DOT rendering of the graph with vertices filled per the fixed palette.
inline std::string to_dot(const Graph& g, const Coloring& c) {
    std::string out = "graph halin {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int col = c.assignment[static_cast<std::size_t>(v)];
        out += "  " + std::to_string(v) + " [fillcolor=\"" +
               std::string(kDotPalette[static_cast<std::size_t>(col - 1)]) + "\"];\n";
    }
    for (const Edge& e : g.edges())
        out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace halin
