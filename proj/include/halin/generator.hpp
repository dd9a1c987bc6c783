#pragma once

#include "halin/coloring.hpp"

namespace halin {

/// Deterministic 64-bit stream (splitmix64). The state advances by
/// 0x9E3779B97F4A7C15 and the output is mixed with 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB; bounded draws reduce by modulo. Fixed here so corpus
/// fixtures are reproducible across implementations and languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform draw from [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Retry k of a rejection-sampled generation runs on state seed + k * gamma,
/// gamma being the splitmix64 increment. Attempt 0 is the seed itself.
inline std::uint64_t sub_seed(std::uint64_t seed, int attempt) {
    return seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
}

struct GeneratorParams {
    int target_internal = 1;       // internal tree vertices to grow
    int max_children = 3;          // upper bound on children per expansion
    std::uint64_t seed = 0;
    bool require_odd_wheel_free = false;
    int retry_budget = 64;         // rejection-sampling attempts
};

struct GeneratedInstance {
    Graph graph;
    HalinCertificate certificate;
    std::uint64_t seed_used = 0;  // sub-seed of the accepted attempt
    int attempts = 0;
};

namespace detail {

inline GeneratedInstance grow_halin(const GeneratorParams& params, std::uint64_t seed) {
    SplitMix64 rng(seed);

    // Rooted plane tree. Ids are assigned in creation order; the root's
    // children come first, expansions append. The plane leaf sequence is kept
    // explicitly: an expanded leaf's children take over its position.
    std::vector<Vertex> parent{-1};
    int root_children = rng.range(3, params.max_children);
    std::vector<Vertex> leaves;
    for (int i = 0; i < root_children; ++i) {
        parent.push_back(0);
        leaves.push_back(static_cast<Vertex>(parent.size()) - 1);
    }
    int internal = 1;
    while (internal < params.target_internal) {
        int slot = rng.range(0, static_cast<int>(leaves.size()) - 1);
        Vertex grown = leaves[static_cast<std::size_t>(slot)];
        int fanout = rng.range(2, params.max_children);
        std::vector<Vertex> fresh;
        for (int i = 0; i < fanout; ++i) {
            parent.push_back(grown);
            fresh.push_back(static_cast<Vertex>(parent.size()) - 1);
        }
        leaves.erase(leaves.begin() + slot);
        leaves.insert(leaves.begin() + slot, fresh.begin(), fresh.end());
        ++internal;
    }

    const int n = static_cast<int>(parent.size());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1 + static_cast<int>(leaves.size())));
    for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge(v, parent[static_cast<std::size_t>(v)]));
    for (std::size_t i = 0; i < leaves.size(); ++i)
        edges.push_back(make_edge(leaves[i], leaves[(i + 1) % leaves.size()]));

    GeneratedInstance out{Graph(n, std::move(edges)), HalinCertificate{}, seed, 1};
    out.certificate.tree.root = 0;
    out.certificate.tree.parent = std::move(parent);
    out.certificate.tree.depth.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v < n; ++v)  // ids grow away from the root
        out.certificate.tree.depth[static_cast<std::size_t>(v)] =
            out.certificate.tree.depth[static_cast<std::size_t>(
                out.certificate.tree.parent[static_cast<std::size_t>(v)])] +
            1;
    out.certificate.leaf_cycle = std::move(leaves);

    VerifyResult vr = verify_certificate(out.graph, out.certificate);
    if (!vr.ok)
        throw InternalError("generated certificate does not verify: " +
                            std::string(to_string(vr.defect)));
    return out;
}

}  // namespace detail

/// Grows a random plane tree with no degree-2 vertices and joins its leaves in
/// plane order. When require_odd_wheel_free is set, regenerates with
/// successive sub-seeds until no induced odd wheel remains.
inline GeneratedInstance generate_halin(const GeneratorParams& params) {
    if (params.target_internal < 1) throw Error("target_internal must be at least 1");
    if (params.max_children < 3) throw Error("max_children must be at least 3");
    for (int attempt = 0; attempt < std::max(1, params.retry_budget); ++attempt) {
        GeneratedInstance inst = detail::grow_halin(params, sub_seed(params.seed, attempt));
        inst.attempts = attempt + 1;
        if (!params.require_odd_wheel_free || !find_odd_wheel(inst.graph)) return inst;
    }
    throw RetryExhausted("no odd-wheel-free instance within " +
                         std::to_string(std::max(1, params.retry_budget)) + " attempts");
}

struct Perturbation {
    Graph graph;
    std::string mutation;
};

/// One seeded mutation of a certified Halin graph: delete a cycle edge,
/// delete a tree edge, or add a chord between non-adjacent leaves. Mutation
/// kinds that have no candidates (e.g. chords in K_4) are excluded from the
/// draw. The result is usually not Halin but callers must label it by oracle,
/// not by assumption.
inline Perturbation perturb_non_halin(const Graph& g, const HalinCertificate& cert,
                                      std::uint64_t seed) {
    VerifyResult vr = verify_certificate(g, cert);
    if (!vr.ok)
        throw Error("certificate does not verify: " + std::string(to_string(vr.defect)));
    SplitMix64 rng(seed);

    std::vector<Edge> tree_edges = cert.tree.edges();
    std::vector<Edge> cycle_edges;
    std::set_difference(g.edges().begin(), g.edges().end(), tree_edges.begin(), tree_edges.end(),
                        std::back_inserter(cycle_edges));
    std::vector<Edge> chords;
    const auto& cyc = cert.leaf_cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        for (std::size_t j = i + 1; j < cyc.size(); ++j)
            if (!g.has_edge(cyc[i], cyc[j])) chords.push_back(make_edge(cyc[i], cyc[j]));
    std::sort(chords.begin(), chords.end());

    std::vector<int> kinds{0, 1};
    if (!chords.empty()) kinds.push_back(2);
    int kind = kinds[rng.below(kinds.size())];

    auto remove_edge = [&](const Edge& victim) {
        std::vector<Edge> edges;
        edges.reserve(g.edges().size() - 1);
        for (const Edge& e : g.edges())
            if (e != victim) edges.push_back(e);
        return Graph(g.vertex_count(), std::move(edges));
    };
    auto name = [](const char* verb, const Edge& e) {
        return std::string(verb) + " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    };

    if (kind == 0) {
        Edge victim = cycle_edges[rng.below(cycle_edges.size())];
        return {remove_edge(victim), name("delete-cycle-edge", victim)};
    }
    if (kind == 1) {
        Edge victim = tree_edges[rng.below(tree_edges.size())];
        return {remove_edge(victim), name("delete-tree-edge", victim)};
    }
    Edge chord = chords[rng.below(chords.size())];
    std::vector<Edge> edges = g.edges();
    edges.push_back(chord);
    return {Graph(g.vertex_count(), std::move(edges)), name("add-leaf-chord", chord)};
}

}  // namespace halin
