#ifndef INJCOLOR_TEST_UTIL_HPP
#define INJCOLOR_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"

namespace testutil {

inline inj::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    inj::Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline inj::Graph path(int n)
{
    inj::Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

inline inj::Graph cycle(int n)
{
    inj::Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline inj::Graph complete(int n)
{
    inj::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

inline inj::Graph star(int leaves)
{
    inj::Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

inline inj::Graph random_graph(int n, int m, std::uint64_t seed, int max_degree = 1000)
{
    std::mt19937_64 rng(seed);
    inj::Graph g(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = 0;
    while (g.num_edges() < m && attempts++ < 50 * (m + 1)) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v))
            continue;
        if (g.degree(u) >= max_degree || g.degree(v) >= max_degree)
            continue;
        g.add_edge(u, v);
    }
    return g;
}

/// Independent statement of the sees relation: line-graph distance
/// exactly two, or both edges inside one triangle.
inline bool sees_oracle(const inj::Graph& g, inj::EdgeId e, inj::EdgeId f)
{
    auto [eu, ev] = g.edge_ends(e);
    auto [fu, fv] = g.edge_ends(f);
    auto adjacent = [&](inj::EdgeId a, inj::EdgeId b) {
        auto [au, av] = g.edge_ends(a);
        auto [bu, bv] = g.edge_ends(b);
        return au == bu || au == bv || av == bu || av == bv;
    };
    bool share = adjacent(e, f);
    if (share) {
        // common triangle: the two edges span three vertices that are
        // pairwise adjacent
        std::vector<inj::VertexId> verts{eu, ev};
        if (fu != eu && fu != ev)
            verts.push_back(fu);
        if (fv != eu && fv != ev)
            verts.push_back(fv);
        if (verts.size() != 3)
            return false;
        return g.has_edge(verts[0], verts[1]) && g.has_edge(verts[0], verts[2])
            && g.has_edge(verts[1], verts[2]);
    }
    // distance exactly 2 in the line graph: not adjacent, but some
    // edge is adjacent to both
    for (inj::EdgeId h : g.edges()) {
        if (h == e || h == f)
            continue;
        if (adjacent(h, e) && adjacent(h, f))
            return true;
    }
    return false;
}

/// Minimal k admitting a valid coloring, by plain enumeration of all
/// k^m assignments. Usable for m <= 8.
inline int chi_enumeration(const inj::Graph& g)
{
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m == 0)
        return 0;
    inj::ConflictGraph cg(g);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (cg.conflict(edges[i], edges[j]))
                pairs.push_back({i, j});
    for (int k = 1; k <= m; ++k) {
        std::vector<int> a(m, 0);  // base-k counter
        while (true) {
            bool good = true;
            for (auto [i, j] : pairs)
                if (a[i] == a[j]) {
                    good = false;
                    break;
                }
            if (good)
                return k;
            int pos = 0;
            while (pos < m && ++a[pos] == k)
                a[pos++] = 0;
            if (pos == m)
                break;
        }
    }
    return m;
}

}  // namespace testutil

#endif
