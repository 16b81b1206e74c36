#ifndef INJCOLOR_GENERATORS_HPP
#define INJCOLOR_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "injcolor/configurations.hpp"
#include "injcolor/graph.hpp"
#include "injcolor/mad.hpp"

namespace inj {

/// Random graph with a hard degree cap; no density control.
inline Graph gen_random_bounded_degree(int n, std::uint64_t seed, int max_degree,
    int target_edges)
{
    if (n < 1)
        throw std::invalid_argument("gen_random_bounded_degree: n must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = 0, cap = 40 * (target_edges + 1);
    while (g.num_edges() < target_edges && attempts++ < cap) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v))
            continue;
        if (g.degree(u) >= max_degree || g.degree(v) >= max_degree)
            continue;
        g.add_edge(u, v);
    }
    return g;
}

/// Random graph satisfying the theorem hypotheses: insert edges under
/// the degree-4 cap, then while the density is too high delete an edge
/// inside the densest-subgraph witness. Deterministic for a given
/// (n, seed).
inline Graph gen_random_eligible(int n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("gen_random_eligible: n must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int target = (4 * n) / 3;
    int attempts = 0, cap = 60 * n + 100;
    while (g.num_edges() < target && attempts++ < cap) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v))
            continue;
        if (g.degree(u) >= 4 || g.degree(v) >= 4)
            continue;
        g.add_edge(u, v);
    }
    while (true) {
        auto dw = mad_exact(g);
        if (dw.mad < kEightThirds)
            break;
        std::vector<char> in(g.vertex_capacity(), false);
        for (VertexId v : dw.witness)
            in[v] = true;
        std::vector<EdgeId> inside;
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.edge_ends(e);
            if (in[u] && in[v])
                inside.push_back(e);
        }
        std::uniform_int_distribution<size_t> ei(0, inside.size() - 1);
        g.remove_edge(inside[ei(rng)]);
    }
    return g;
}

/// A gadget graph plus the configuration its detector is expected to
/// report, roles included.
struct GadgetResult {
    Graph graph;
    Configuration expected;
};

namespace detail {

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

}  // namespace detail

/// Small eligible graph containing exactly one witness of the given
/// kind. Surrounding structure is padded with 4-vertices carrying
/// two-edge chains and single subdivision vertices, which keeps every
/// padding vertex at final charge 8/3 and adds no pattern of any
/// earlier kind.
inline GadgetResult gen_gadget(ConfigKind kind)
{
    GadgetResult out;
    switch (kind) {
    case ConfigKind::DegreeOne: {
        // square 0-1-2-3 with a pendant 4 on vertex 0
        out.graph = detail::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 4}};
        out.expected.deletion = {4};
        break;
    }
    case ConfigKind::ThreeTwoPoorTriple: {
        // hub 0 joined to three 3_2-vertices 1,2,3, each closing a
        // triangle with its own pair of 2-vertices
        out.graph = detail::from_edges(10,
            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 5}, {2, 6}, {2, 7}, {6, 7},
                {3, 8}, {3, 9}, {8, 9}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::PoorBesidePoor: {
        // two adjacent 3_2-vertices 0,1; both poor
        out.graph = detail::from_edges(6,
            {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"w", 1}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::ThreeTwoBesideTwoOne: {
        // 0 is a 3_2-vertex whose 2-neighbor 1 heads a two-edge chain
        // (so 1 is a 2_1-vertex); everything else is 4-vertex padding
        out.graph = detail::from_edges(13,
            {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7},
                {7, 8}, {6, 9}, {9, 8}, {6, 10}, {10, 8}, {8, 11}, {11, 12}, {12, 9}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"w", 1}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::TrianglePendant: {
        // triangle 0-1-2 with both corners 1,2 of degree 2; apex 0 has
        // degree 4 but one further neighbor (3) of degree 2
        out.graph = detail::from_edges(10,
            {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7},
                {6, 8}, {7, 9}, {8, 5}, {9, 5}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"u", 3}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::AllSmallNeighbors: {
        // 0 sits between two 2-vertices; every other vertex can see a
        // 4-vertex
        out.graph = detail::from_edges(7,
            {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {5, 4}, {3, 6}, {6, 4}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}};
        out.expected.deletion = {0};
        break;
    }
    case ConfigKind::DoubleThreeTwo: {
        // hub 0 with 3_2-neighbors 1 and 2; their 2-neighbors run to
        // chain blocks, the hub's third neighbor 7 leans on one block
        out.graph = detail::from_edges(26,
            {{0, 1}, {0, 2}, {0, 7}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                {3, 8}, {4, 9}, {5, 14}, {6, 15}, {7, 20}, {7, 21},
                {8, 9}, {8, 10}, {10, 11}, {11, 9}, {8, 12}, {12, 13}, {13, 9},
                {14, 15}, {14, 16}, {16, 17}, {17, 15}, {14, 18}, {18, 19}, {19, 15},
                {20, 21}, {20, 22}, {22, 23}, {23, 21}, {20, 24}, {24, 25}, {25, 21}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"x1", 3}, {"y1", 4},
            {"x2", 5}, {"y2", 6}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::ThreeTwoAndThreeOnePlus: {
        // 0 adjacent to the 3_2-vertex 1 and the 3_1+-vertex 2, whose
        // 2_1-neighbor 5 continues to 6
        out.graph = detail::from_edges(28,
            {{0, 1}, {0, 2}, {0, 7}, {1, 3}, {1, 4}, {2, 5}, {2, 8}, {5, 6}, {6, 8},
                {3, 9}, {4, 10}, {7, 15}, {7, 16}, {8, 22}, {8, 23},
                {9, 10}, {9, 11}, {11, 12}, {12, 10}, {9, 13}, {13, 14}, {14, 10},
                {15, 21}, {21, 16}, {15, 17}, {17, 18}, {18, 16}, {15, 19}, {19, 20},
                {20, 16},
                {22, 23}, {22, 24}, {24, 25}, {25, 23}, {22, 26}, {26, 27}, {27, 23}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"x2", 5}, {"x2p", 6}};
        out.expected.deletion = {5};
        break;
    }
    case ConfigKind::FourWithTwoOneAndTwoSmall: {
        // 4-vertex 0 with the 2_1-neighbor 1, the 2_0-neighbor 3, the
        // 3_2-neighbor 4 and the 3-vertex 7 as the small fourth
        out.graph = detail::from_edges(26,
            {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {0, 7},
                {2, 8}, {3, 9}, {5, 14}, {6, 15}, {7, 20}, {7, 21},
                {8, 9}, {8, 10}, {10, 11}, {11, 9}, {8, 12}, {12, 13}, {13, 9},
                {14, 15}, {14, 16}, {16, 17}, {17, 15}, {14, 18}, {18, 19}, {19, 15},
                {20, 21}, {20, 22}, {22, 23}, {23, 21}, {20, 24}, {24, 25}, {25, 21}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 3}, {"v3", 4}, {"v4", 7},
            {"x1", 2}};
        out.expected.deletion = {1};
        break;
    }
    case ConfigKind::FourWithTwoTwoOnes: {
        // 4-vertex 0 with 2_1-neighbors 1 and 2 and the 2-vertex 3 as
        // third neighbor; see tests for the uniqueness check
        out.graph = detail::from_edges(26,
            {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 11},
                {5, 7}, {6, 7}, {7, 4}, {7, 8}, {4, 9}, {9, 10}, {10, 8}, {4, 12},
                {12, 13}, {13, 8}, {8, 11}, {11, 14}, {14, 15}, {15, 16}, {16, 17},
                {15, 18}, {18, 17}, {15, 19}, {19, 17}, {17, 20}, {20, 21}, {21, 14},
                {14, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 16}});
        out.expected.kind = kind;
        out.expected.witness = {{"v", 0}, {"v1", 1}, {"v2", 2}, {"v3", 3}, {"x1", 5},
            {"x2", 6}};
        out.expected.deletion = {1};
        break;
    }
    }
    // hints are position dependent; recompute them the same way the
    // detector does
    if (auto found = detect_configuration(out.graph, kind))
        out.expected.recolor_hints = found->recolor_hints;
    return out;
}

}  // namespace inj

#endif
