#include <catch2/catch_amalgamated.hpp>

#include "halin/generator.hpp"
#include "halin/recognition.hpp"
#include "halin/report.hpp"

using namespace halin;

namespace {

Graph k4() {
    return Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

// Internal vertices 0,1; leaves 2..5 joined by the cycle 2-3-4-5.
Graph prism() {
    return Graph::from_pairs(
        6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}

HalinCertificate prism_certificate() {
    HalinCertificate cert;
    cert.tree.root = 0;
    cert.tree.parent = {-1, 0, 0, 0, 1, 1};
    cert.tree.depth = {0, 1, 1, 1, 2, 2};
    cert.leaf_cycle = {2, 3, 4, 5};
    return cert;
}

HalinCertificate k4_star_certificate(std::vector<Vertex> leaf_cycle) {
    HalinCertificate cert;
    cert.tree.root = 0;
    cert.tree.parent = {-1, 0, 0, 0};
    cert.tree.depth = {0, 1, 1, 1};
    cert.leaf_cycle = std::move(leaf_cycle);
    return cert;
}

Graph cube_q3() {
    return Graph::from_pairs(8, {{0, 1},
                                 {1, 2},
                                 {2, 3},
                                 {3, 0},
                                 {4, 5},
                                 {5, 6},
                                 {6, 7},
                                 {7, 4},
                                 {0, 4},
                                 {1, 5},
                                 {2, 6},
                                 {3, 7}});
}

Graph k33() {
    std::vector<Edge> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) edges.push_back(Edge{a, b});
    return Graph(6, std::move(edges));
}

// Matrix-tree theorem via fraction-free (Bareiss) elimination: the number of
// spanning trees is any cofactor of the Laplacian. Exact for the small sizes
// used here.
long long kirchhoff_tree_count(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return n;
    int m = n - 1;
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = g.degree(i + 1);
    for (const Edge& e : g.edges()) {
        if (e.u == 0 || e.v == 0) continue;
        a[e.u - 1][e.v - 1] -= 1;
        a[e.v - 1][e.u - 1] -= 1;
    }
    long long prev = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            for (int j = 0; j < m; ++j) a[k][j] = -a[k][j];
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return a[m - 1][m - 1];
}

long long enumerate_tree_count(const Graph& g) {
    long long count = 0;
    detail::for_each_spanning_tree(g, [&](const std::vector<Edge>& tree_edges) {
        Graph t(g.vertex_count(), tree_edges);
        REQUIRE(is_tree(t));
        ++count;
        return false;
    });
    return count;
}

// Halin graphs are 3-connected; an independent necessary condition on every
// certified positive.
bool three_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            Vertex start = 0;
            while (start == a || start == b) ++start;
            std::vector<char> seen(n, 0);
            seen[a] = seen[b] = 1;
            std::vector<Vertex> stack{start};
            seen[start] = 1;
            int reached = 1;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            if (reached != n - 2) return false;
        }
    }
    return true;
}

Graph random_connected_graph(SplitMix64& rng, int n) {
    while (true) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.below(100) < 45) edges.push_back(Edge{i, j});
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
}

}  // namespace

TEST_CASE("bfs_tree explores neighbors in ascending order") {
    SECTION("K4 rooted at 0 is a star") {
        SpanningTree t = bfs_tree(k4(), 0);
        REQUIRE(t.parent == std::vector<Vertex>{-1, 0, 0, 0});
        REQUIRE(t.leaves() == std::vector<Vertex>{1, 2, 3});
        REQUIRE(t.depth == std::vector<int>{0, 1, 1, 1});
    }
    SECTION("path") {
        Graph path = Graph::from_pairs(3, {{0, 1}, {1, 2}});
        SpanningTree t = bfs_tree(path, 0);
        REQUIRE(t.parent == std::vector<Vertex>{-1, 0, 1});
        REQUIRE(t.leaves() == std::vector<Vertex>{2});
    }
    SECTION("C4 rooted at 0: vertex 2 hangs off vertex 1") {
        SpanningTree t = bfs_tree(cycle(4), 0);
        REQUIRE(t.parent == std::vector<Vertex>{-1, 0, 1, 0});
        REQUIRE(t.leaves() == std::vector<Vertex>{2, 3});
        REQUIRE(t.depth == std::vector<int>{0, 1, 2, 1});
    }
    SECTION("disconnected input") {
        Graph two = Graph::from_pairs(4, {{0, 1}, {2, 3}});
        REQUIRE_THROWS_AS(bfs_tree(two, 0), Error);
    }
}

TEST_CASE("verify_certificate accepts genuine tree-cycle representations") {
    REQUIRE(verify_certificate(k4(), k4_star_certificate({1, 2, 3})).ok);
    // Any cyclic order of a triangle is the same cycle.
    REQUIRE(verify_certificate(k4(), k4_star_certificate({1, 3, 2})).ok);
    REQUIRE(verify_certificate(prism(), prism_certificate()).ok);
}

TEST_CASE("verify_certificate reports defect codes") {
    SECTION("not spanning: wrong parent edge") {
        HalinCertificate cert = prism_certificate();
        cert.tree.parent[4] = 0;  // 0-4 is not an edge
        auto vr = verify_certificate(prism(), cert);
        REQUIRE_FALSE(vr.ok);
        REQUIRE(vr.defect == CertificateDefect::NotSpanning);
    }
    SECTION("not spanning: inconsistent depth") {
        HalinCertificate cert = prism_certificate();
        cert.tree.depth[4] = 7;
        REQUIRE(verify_certificate(prism(), cert).defect == CertificateDefect::NotSpanning);
    }
    SECTION("degree-two vertex in the tree") {
        Graph w5 = Graph::from_pairs(
            5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
        HalinCertificate cert;
        cert.tree.root = 1;
        cert.tree.parent = {1, -1, 0, 0, 1};  // vertex 1 ends up with tree-degree 2
        cert.tree.depth = {1, 0, 2, 2, 1};
        cert.leaf_cycle = {2, 3, 4};
        auto vr = verify_certificate(w5, cert);
        REQUIRE_FALSE(vr.ok);
        REQUIRE(vr.defect == CertificateDefect::DegreeTwoInTree);
    }
    SECTION("cycle sequence uses a non-edge") {
        HalinCertificate cert = prism_certificate();
        cert.leaf_cycle = {2, 3, 5, 4};  // 3-5 is not an edge
        REQUIRE(verify_certificate(prism(), cert).defect ==
                CertificateDefect::NonTreeEdgeSetMismatch);
    }
    SECTION("cycle sequence misses a non-tree edge") {
        HalinCertificate cert = prism_certificate();
        cert.leaf_cycle = {2, 3, 4};  // drops vertex 5 and its cycle edges
        REQUIRE(verify_certificate(prism(), cert).defect ==
                CertificateDefect::NonTreeEdgeSetMismatch);
    }
    SECTION("combinatorially valid but non-planar order: K33's double star") {
        // BFS from vertex 0 produces this tree; its non-tree edges form an
        // induced 4-cycle on the leaves, yet K33 is not planar. Only the
        // plane-order check rejects it.
        HalinCertificate cert;
        cert.tree.root = 0;
        cert.tree.parent = {-1, 3, 3, 0, 0, 0};
        cert.tree.depth = {0, 2, 2, 1, 1, 1};
        cert.leaf_cycle = {1, 4, 2, 5};
        auto vr = verify_certificate(k33(), cert);
        REQUIRE_FALSE(vr.ok);
        REQUIRE(vr.defect == CertificateDefect::NonPlanarOrder);
    }
    SECTION("leaf-rooted parent maps are rejected") {
        HalinCertificate cert;
        cert.tree.root = 1;
        cert.tree.parent = {1, -1, 0, 0};
        cert.tree.depth = {1, 0, 2, 2};
        cert.leaf_cycle = {1, 2, 3};
        REQUIRE(verify_certificate(k4(), cert).defect == CertificateDefect::NotSpanning);
    }
    SECTION("malformed leaf cycle") {
        HalinCertificate cert = prism_certificate();
        cert.leaf_cycle = {2, 3};
        REQUIRE(verify_certificate(prism(), cert).defect == CertificateDefect::LeafSetMismatch);
        cert.leaf_cycle = {2, 3, 3, 4};
        REQUIRE(verify_certificate(prism(), cert).defect == CertificateDefect::LeafSetMismatch);
        cert.leaf_cycle = {2, 3, 4, 9};
        REQUIRE(verify_certificate(prism(), cert).defect == CertificateDefect::LeafSetMismatch);
    }
}

TEST_CASE("verify_certificate is invariant under rotation and reflection") {
    struct Case {
        Graph g;
        HalinCertificate cert;
    };
    std::vector<Case> cases;
    cases.push_back({k4(), k4_star_certificate({1, 2, 3})});
    cases.push_back({prism(), prism_certificate()});
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        GeneratorParams params;
        params.target_internal = 4;
        params.max_children = 4;
        params.seed = seed;
        auto inst = generate_halin(params);
        cases.push_back({inst.graph, inst.certificate});
    }
    for (const Case& c : cases) {
        const auto& cyc = c.cert.leaf_cycle;
        for (std::size_t shift = 0; shift < cyc.size(); ++shift) {
            HalinCertificate rotated = c.cert;
            std::rotate(rotated.leaf_cycle.begin(), rotated.leaf_cycle.begin() + shift,
                        rotated.leaf_cycle.end());
            REQUIRE(verify_certificate(c.g, rotated).ok);
            std::reverse(rotated.leaf_cycle.begin(), rotated.leaf_cycle.end());
            REQUIRE(verify_certificate(c.g, rotated).ok);
        }
    }
}

TEST_CASE("recognize_bfs") {
    SECTION("K4: root 0 wins with the star certificate") {
        RecognitionReport report = recognize_bfs(k4());
        REQUIRE(report.verdict == Verdict::Halin);
        REQUIRE(report.certificate.has_value());
        REQUIRE(report.certificate->tree.root == 0);
        REQUIRE(report.certificate->tree.parent == std::vector<Vertex>{-1, 0, 0, 0});
        REQUIRE(report.certificate->leaf_cycle == std::vector<Vertex>{1, 2, 3});
        REQUIRE(report.roots_tried.empty());
        REQUIRE_FALSE(report.oracle_used);
    }
    SECTION("C6 fails the degree pre-filter") {
        RecognitionReport report = recognize_bfs(cycle(6));
        REQUIRE(report.verdict == Verdict::NotHalin);
        REQUIRE(report.reason == "min degree 2");
        REQUIRE(report.roots_tried.empty());
    }
    SECTION("prism is recognized") {
        RecognitionReport report = recognize_bfs(prism());
        REQUIRE(report.verdict == Verdict::Halin);
        REQUIRE(verify_certificate(prism(), *report.certificate).ok);
    }
    SECTION("Q3 is not Halin, and the oracle agrees") {
        RecognitionReport bfs = recognize_bfs(cube_q3());
        REQUIRE(bfs.verdict == Verdict::NotHalin);
        REQUIRE(bfs.roots_tried.size() == 8);  // min degree 3, every root tried
        RecognitionReport oracle = recognize_oracle(cube_q3());
        REQUIRE(oracle.verdict == Verdict::NotHalin);
        REQUIRE(oracle.oracle_used);
    }
    SECTION("small or disconnected inputs are rejected up front") {
        REQUIRE(recognize_bfs(cycle(3)).reason == "fewer than 4 vertices");
        Graph two_k4_parts = Graph::from_pairs(
            8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
        REQUIRE(recognize_bfs(two_k4_parts).reason == "disconnected");
    }
    SECTION("deterministic: repeated runs serialize identically") {
        for (const Graph& g : {k4(), prism(), cube_q3()}) {
            RecognitionReport a = recognize_bfs(g);
            RecognitionReport b = recognize_bfs(g);
            REQUIRE(report_to_text(a) == report_to_text(b));
            REQUIRE(report_to_json(a) == report_to_json(b));
        }
    }
}

TEST_CASE("report serialization golden forms") {
    RecognitionReport halin_report = recognize_bfs(k4());
    REQUIRE(report_to_text(halin_report) ==
            "verdict: halin\n"
            "root: 0\n"
            "tree_edges: 0-1 0-2 0-3\n"
            "leaf_cycle: 1 2 3\n"
            "oracle_used: false\n"
            "roots_tried: 0\n");
    Json j = report_to_json(halin_report);
    REQUIRE(j["verdict"] == "halin");
    REQUIRE(j["tree_edges"] == Json::array({{0, 1}, {0, 2}, {0, 3}}));
    REQUIRE(j["leaf_cycle"] == Json::array({1, 2, 3}));

    RecognitionReport miss = recognize_bfs(cycle(6));
    REQUIRE(report_to_text(miss) ==
            "verdict: not-halin\n"
            "reason: min degree 2\n"
            "oracle_used: false\n"
            "roots_tried: 0\n");

    WheelWitness w{0, {1, 2, 3}};
    REQUIRE(witness_to_text(w) == "hub 0; rim 1 2 3");
}

TEST_CASE("spanning tree enumeration matches the matrix-tree theorem") {
    REQUIRE(kirchhoff_tree_count(k4()) == 16);  // Cayley: 4^2
    REQUIRE(enumerate_tree_count(k4()) == 16);
    REQUIRE(enumerate_tree_count(cycle(5)) == 5);
    REQUIRE(enumerate_tree_count(prism()) == kirchhoff_tree_count(prism()));

    SplitMix64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng.below(4));
        Graph g = random_connected_graph(rng, n);
        REQUIRE(enumerate_tree_count(g) == kirchhoff_tree_count(g));
    }
}

TEST_CASE("recognize_oracle") {
    SECTION("K4 is Halin") {
        RecognitionReport report = recognize_oracle(k4());
        REQUIRE(report.verdict == Verdict::Halin);
        REQUIRE(verify_certificate(k4(), *report.certificate).ok);
        REQUIRE(report.oracle_used);
    }
    SECTION("prism: a two-internal-vertex tree is found") {
        RecognitionReport report = recognize_oracle(prism());
        REQUIRE(report.verdict == Verdict::Halin);
        REQUIRE(verify_certificate(prism(), *report.certificate).ok);
        auto deg = report.certificate->tree.degrees();
        int internal = 0;
        for (int d : deg)
            if (d >= 2) ++internal;
        REQUIRE(internal == 2);
        REQUIRE(report.certificate->leaf_cycle.size() == 4);
    }
    SECTION("K33 is not Halin") {
        RecognitionReport report = recognize_oracle(k33());
        REQUIRE(report.verdict == Verdict::NotHalin);
    }
    SECTION("dense graphs short-circuit: no tree-cycle decomposition fits") {
        std::vector<Edge> edges;
        for (int i = 0; i < 14; ++i)
            for (int j = i + 1; j < 14; ++j) edges.push_back(Edge{i, j});
        Graph k14(14, std::move(edges));
        RecognitionReport report = recognize_oracle(k14);  // returns immediately
        REQUIRE(report.verdict == Verdict::NotHalin);
        REQUIRE(report.reason == "too many edges for a tree-cycle representation");
        // Boundary: wheels sit exactly at m = 2n-2 and must still pass.
        Graph w13 = Graph(0, {});
        {
            std::vector<Edge> we;
            for (int i = 1; i <= 12; ++i) {
                we.push_back(Edge{0, i});
                we.push_back(make_edge(i, i % 12 + 1));
            }
            w13 = Graph(13, std::move(we));
        }
        REQUIRE(recognize_oracle(w13).verdict == Verdict::Halin);
    }
    SECTION("bound is enforced") {
        std::vector<Edge> edges;
        for (int i = 0; i < 15; ++i) edges.push_back(make_edge(i, (i + 1) % 15));
        Graph big(15, std::move(edges));
        REQUIRE_THROWS_AS(recognize_oracle(big), BoundExceeded);
        REQUIRE_NOTHROW(recognize_oracle(big, 15));
    }
}

TEST_CASE("certified graphs are 3-connected") {
    REQUIRE(three_connected(k4()));
    REQUIRE(three_connected(prism()));
    REQUIRE_FALSE(three_connected(cycle(5)));

    for (std::uint64_t seed = 21; seed <= 32; ++seed) {
        GeneratorParams params;
        params.target_internal = 1 + static_cast<int>(seed % 4);
        params.max_children = 3 + static_cast<int>(seed % 2);
        params.seed = seed;
        auto inst = generate_halin(params);
        if (inst.graph.vertex_count() > 12) continue;
        REQUIRE(three_connected(inst.graph));
        RecognitionReport oracle = recognize_oracle(inst.graph);
        REQUIRE(oracle.verdict == Verdict::Halin);
    }
}

TEST_CASE("bfs recognition is sound and oracle-dominated on a small corpus") {
    std::vector<Graph> corpus{k4(), prism(), cube_q3(), k33(), cycle(6)};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GeneratorParams params;
        params.target_internal = 1 + static_cast<int>(seed % 4);
        params.max_children = 3 + static_cast<int>(seed % 2);
        params.seed = seed;
        auto inst = generate_halin(params);
        if (inst.graph.vertex_count() <= 12) corpus.push_back(inst.graph);
        auto perturbed = perturb_non_halin(inst.graph, inst.certificate, seed * 101);
        if (perturbed.graph.vertex_count() <= 12) corpus.push_back(perturbed.graph);
    }
    for (const Graph& g : corpus) {
        RecognitionReport bfs = recognize_bfs(g);
        if (bfs.verdict == Verdict::Halin) {
            REQUIRE(verify_certificate(g, *bfs.certificate).ok);  // soundness
            REQUIRE(recognize_oracle(g).verdict == Verdict::Halin);  // oracle dominance
        }
    }
}
