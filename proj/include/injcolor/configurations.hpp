#ifndef INJCOLOR_CONFIGURATIONS_HPP
#define INJCOLOR_CONFIGURATIONS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "injcolor/graph.hpp"

namespace inj {

/// The reducible patterns, in detection priority order: the degree-1
/// peeling step first, then the forbidden local structures in the
/// order their reductions are applied.
enum class ConfigKind {
    DegreeOne,                  ///< vertex of degree <= 1
    ThreeTwoPoorTriple,         ///< 3-vertex with three poor 3-neighbors
    PoorBesidePoor,             ///< 3_1- or 3_2-vertex beside a poor 3-vertex
    ThreeTwoBesideTwoOne,       ///< 3_2-vertex beside a 2_1-vertex
    TrianglePendant,            ///< triangle with two 2-corners, apex condition broken
    AllSmallNeighbors,          ///< vertex with no 3+-neighbor
    DoubleThreeTwo,             ///< 3-vertex with two 3_2-neighbors
    ThreeTwoAndThreeOnePlus,    ///< 3-vertex with a 3_2- and a 3_1+-neighbor
    FourWithTwoOneAndTwoSmall,  ///< 4-vertex: 2_1-nbr, two {2_0,3_2}-nbrs, small fourth
    FourWithTwoTwoOnes,         ///< 4-vertex: two 2_1-nbrs, third is a 2 or poor 3
};

inline constexpr int kNumConfigKinds = 10;

inline const char* kind_name(ConfigKind k)
{
    switch (k) {
    case ConfigKind::DegreeOne: return "degree-one";
    case ConfigKind::ThreeTwoPoorTriple: return "three-poor-neighbors";
    case ConfigKind::PoorBesidePoor: return "poor-beside-poor";
    case ConfigKind::ThreeTwoBesideTwoOne: return "three-two-beside-two-one";
    case ConfigKind::TrianglePendant: return "triangle-pendant";
    case ConfigKind::AllSmallNeighbors: return "all-small-neighbors";
    case ConfigKind::DoubleThreeTwo: return "double-three-two";
    case ConfigKind::ThreeTwoAndThreeOnePlus: return "three-two-and-three-one-plus";
    case ConfigKind::FourWithTwoOneAndTwoSmall: return "four-with-two-one-and-two-small";
    case ConfigKind::FourWithTwoTwoOnes: return "four-with-two-two-ones";
    }
    return "?";
}

inline std::optional<ConfigKind> kind_from_name(const std::string& s)
{
    for (int i = 0; i < kNumConfigKinds; ++i) {
        auto k = static_cast<ConfigKind>(i);
        if (s == kind_name(k))
            return k;
    }
    return std::nullopt;
}

/// A detected reducible pattern: named witness vertices, the vertices
/// removed before recursing, and the edges the extension step is
/// allowed to recolor.
struct Configuration {
    ConfigKind kind;
    std::vector<std::pair<std::string, VertexId>> witness;
    std::vector<VertexId> deletion;
    std::vector<EdgeId> recolor_hints;

    std::optional<VertexId> role(const std::string& name) const
    {
        for (const auto& [n, v] : witness)
            if (n == name)
                return v;
        return std::nullopt;
    }

    std::vector<VertexId> witness_vertices() const
    {
        std::vector<VertexId> out;
        for (const auto& [n, v] : witness)
            out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

namespace detail {

struct ClassTable {
    explicit ClassTable(const Graph& g) : table(g.vertex_capacity())
    {
        for (VertexId v : g.vertices())
            table[v] = classify(g, v);
    }
    const VertexClass& operator[](VertexId v) const { return table[v]; }
    std::vector<VertexClass> table;
};

using ConfigFilter = std::function<bool(const Configuration&)>;

inline bool accept_all(const Configuration&) { return true; }

/// Edges incident to the deletion set (these become uncolored), then
/// every light edge of g within line-graph distance 2 of them. The
/// lemma proofs recolor exactly such light edges, per the erase-last
/// observation for light edges.
inline std::vector<EdgeId> light_hints_for(const Graph& g,
    const std::vector<VertexId>& deletion)
{
    std::vector<char> missing(g.edge_capacity(), false);
    std::vector<EdgeId> frontier;
    for (VertexId v : deletion)
        for (auto [w, e] : g.incidence(v))
            if (!missing[e]) {
                missing[e] = true;
                frontier.push_back(e);
            }
    std::vector<int> dist(g.edge_capacity(), -1);
    std::queue<EdgeId> q;
    for (EdgeId e : frontier) {
        dist[e] = 0;
        q.push(e);
    }
    while (!q.empty()) {
        EdgeId e = q.front();
        q.pop();
        if (dist[e] == 2)
            continue;
        auto [u, v] = g.edge_ends(e);
        for (VertexId a : {u, v})
            for (auto [b, f] : g.incidence(a))
                if (dist[f] < 0) {
                    dist[f] = dist[e] + 1;
                    q.push(f);
                }
    }
    std::vector<EdgeId> hints;
    for (EdgeId e : g.edges())
        if (dist[e] > 0 && !missing[e] && is_light(g, e))
            hints.push_back(e);
    return hints;
}

inline void finish_hints(const Graph& g, Configuration& cfg)
{
    auto more = light_hints_for(g, cfg.deletion);
    cfg.recolor_hints.insert(cfg.recolor_hints.end(), more.begin(), more.end());
    std::sort(cfg.recolor_hints.begin(), cfg.recolor_hints.end());
    cfg.recolor_hints.erase(
        std::unique(cfg.recolor_hints.begin(), cfg.recolor_hints.end()),
        cfg.recolor_hints.end());
}

/// The unique degree-2 neighbor of a 2_1- or 3_1-vertex.
inline VertexId two_neighbor_of(const Graph& g, VertexId v)
{
    for (VertexId w : g.neighbors(v))
        if (g.degree(w) == 2)
            return w;
    return -1;
}

inline std::optional<Configuration> detect_degree_one(const Graph& g,
    const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) > 1)
            continue;
        Configuration cfg;
        cfg.kind = ConfigKind::DegreeOne;
        cfg.witness = {{"v", v}};
        cfg.deletion = {v};
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_three_poor_triple(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3)
            continue;
        std::vector<VertexId> poor;
        for (VertexId w : g.neighbors(v))
            if (cls[w].poor)
                poor.push_back(w);
        if (poor.size() != 3)
            continue;
        Configuration cfg;
        cfg.kind = ConfigKind::ThreeTwoPoorTriple;
        cfg.witness = {{"v", v}, {"v1", poor[0]}, {"v2", poor[1]}, {"v3", poor[2]}};
        cfg.deletion = {poor[0]};
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_poor_beside_poor(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        const auto& c = cls[v];
        if (!(c.is(3, 1) || c.is(3, 2)))
            continue;
        for (VertexId w : g.neighbors(v)) {
            if (!cls[w].poor)
                continue;
            Configuration cfg;
            cfg.kind = ConfigKind::PoorBesidePoor;
            cfg.witness = {{"v", v}, {"w", w}};
            cfg.deletion = {w};
            finish_hints(g, cfg);
            if (ok(cfg))
                return cfg;
        }
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_three_two_beside_two_one(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (!cls[v].is_three_two())
            continue;
        for (VertexId w : g.neighbors(v)) {
            if (!cls[w].is_two_one())
                continue;
            Configuration cfg;
            cfg.kind = ConfigKind::ThreeTwoBesideTwoOne;
            cfg.witness = {{"v", v}, {"w", w}};
            cfg.deletion = {w};
            finish_hints(g, cfg);
            if (ok(cfg))
                return cfg;
        }
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_triangle_pendant(const Graph& g,
    const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        auto nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            if (g.degree(nbrs[i]) != 2)
                continue;
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.degree(nbrs[j]) != 2)
                    continue;
                if (!g.has_edge(nbrs[i], nbrs[j]))
                    continue;
                // triangle v,v1,v2 with both corners of degree 2;
                // reducible unless d(v)=4 with all other neighbors 3+
                VertexId bad = -1;
                for (VertexId u : nbrs)
                    if (u != nbrs[i] && u != nbrs[j] && g.degree(u) < 3)
                        bad = u;
                if (g.degree(v) == 4 && bad < 0)
                    continue;
                Configuration cfg;
                cfg.kind = ConfigKind::TrianglePendant;
                cfg.witness = {{"v", v}, {"v1", nbrs[i]}, {"v2", nbrs[j]}};
                if (bad >= 0)
                    cfg.witness.push_back({"u", bad});
                cfg.deletion = {nbrs[i]};
                finish_hints(g, cfg);
                if (ok(cfg))
                    return cfg;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_all_small_neighbors(const Graph& g,
    const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        bool small = true;
        for (VertexId w : g.neighbors(v))
            if (g.degree(w) >= 3) {
                small = false;
                break;
            }
        if (!small)
            continue;
        Configuration cfg;
        cfg.kind = ConfigKind::AllSmallNeighbors;
        cfg.witness = {{"v", v}};
        int i = 1;
        for (VertexId w : g.neighbors(v))
            cfg.witness.push_back({"v" + std::to_string(i++), w});
        cfg.deletion = {v};
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_double_three_two(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3)
            continue;
        std::vector<VertexId> heavy;
        for (VertexId w : g.neighbors(v))
            if (cls[w].is_three_two())
                heavy.push_back(w);
        if (heavy.size() < 2)
            continue;
        VertexId v1 = heavy[0], v2 = heavy[1];
        std::vector<VertexId> ones, twos;
        for (VertexId x : g.neighbors(v1))
            if (g.degree(x) == 2)
                ones.push_back(x);
        for (VertexId x : g.neighbors(v2))
            if (g.degree(x) == 2)
                twos.push_back(x);
        Configuration cfg;
        cfg.kind = ConfigKind::DoubleThreeTwo;
        cfg.witness = {{"v", v}, {"v1", v1}, {"v2", v2}, {"x1", ones[0]},
            {"y1", ones[1]}, {"x2", twos[0]}, {"y2", twos[1]}};
        cfg.deletion = {v1};
        // the proof frees v2's edge to its first 2-neighbor
        if (auto e = g.find_edge(v2, twos[0]))
            cfg.recolor_hints.push_back(*e);
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_three_two_and_three_one_plus(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3)
            continue;
        VertexId v1 = -1, v2 = -1;
        for (VertexId w : g.neighbors(v)) {
            if (v1 < 0 && cls[w].is_three_two())
                v1 = w;
            if (v2 < 0 && cls[w].three_one_plus)
                v2 = w;
        }
        if (v1 < 0 || v2 < 0)
            continue;
        VertexId x2 = two_neighbor_of(g, v2);        // the 2_1-vertex
        VertexId x2p = two_neighbor_of(g, x2);       // its 2-neighbor
        Configuration cfg;
        cfg.kind = ConfigKind::ThreeTwoAndThreeOnePlus;
        cfg.witness = {{"v", v}, {"v1", v1}, {"v2", v2}, {"x2", x2}, {"x2p", x2p}};
        cfg.deletion = {x2};
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_four_with_two_one_and_two_small(
    const Graph& g, const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 4)
            continue;
        auto nbrs = g.neighbors(v);
        for (VertexId v1 : nbrs) {
            if (!cls[v1].is_two_one())
                continue;
            for (VertexId v4 : nbrs) {
                if (v4 == v1 || g.degree(v4) > 3)
                    continue;
                std::vector<VertexId> rest;
                for (VertexId w : nbrs)
                    if (w != v1 && w != v4)
                        rest.push_back(w);
                bool small = true;
                for (VertexId w : rest)
                    if (!(cls[w].is_two_zero() || cls[w].is_three_two()))
                        small = false;
                if (!small)
                    continue;
                // the reduction prefers the branch with a 2_0 among v2,v3
                VertexId v2 = rest[0], v3 = rest[1];
                if (!cls[v2].is_two_zero() && cls[v3].is_two_zero())
                    std::swap(v2, v3);
                VertexId x1 = two_neighbor_of(g, v1);
                Configuration cfg;
                cfg.kind = ConfigKind::FourWithTwoOneAndTwoSmall;
                cfg.witness = {{"v", v}, {"v1", v1}, {"v2", v2}, {"v3", v3},
                    {"v4", v4}, {"x1", x1}};
                if (cls[v2].is_two_zero()) {
                    cfg.deletion = {v1};
                } else {
                    // both v2 and v3 are 3_2: drop v2, free v-v3 and v1-x1
                    cfg.deletion = {v2};
                    if (auto e = g.find_edge(v, v3))
                        cfg.recolor_hints.push_back(*e);
                    if (auto e = g.find_edge(v1, x1))
                        cfg.recolor_hints.push_back(*e);
                }
                finish_hints(g, cfg);
                if (ok(cfg))
                    return cfg;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_four_with_two_two_ones(const Graph& g,
    const ClassTable& cls, const ConfigFilter& ok)
{
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 4)
            continue;
        auto nbrs = g.neighbors(v);
        std::vector<VertexId> ones;
        for (VertexId w : nbrs)
            if (cls[w].is_two_one())
                ones.push_back(w);
        if (ones.size() < 2)
            continue;
        VertexId v1 = ones[0], v2 = ones[1];
        VertexId v3 = -1;
        for (VertexId w : nbrs) {
            if (w == v1 || w == v2)
                continue;
            if (g.degree(w) == 2 || cls[w].poor) {
                v3 = w;
                break;
            }
        }
        if (v3 < 0)
            continue;
        VertexId x1 = two_neighbor_of(g, v1);
        VertexId x2 = two_neighbor_of(g, v2);
        Configuration cfg;
        cfg.kind = ConfigKind::FourWithTwoTwoOnes;
        cfg.witness = {{"v", v}, {"v1", v1}, {"v2", v2}, {"v3", v3}, {"x1", x1},
            {"x2", x2}};
        cfg.deletion = {v1};
        if (auto e = g.find_edge(v2, x2))
            cfg.recolor_hints.push_back(*e);
        finish_hints(g, cfg);
        if (ok(cfg))
            return cfg;
    }
    return std::nullopt;
}

inline std::optional<Configuration> detect_kind(const Graph& g, const ClassTable& cls,
    ConfigKind kind, const ConfigFilter& ok)
{
    switch (kind) {
    case ConfigKind::DegreeOne: return detect_degree_one(g, ok);
    case ConfigKind::ThreeTwoPoorTriple: return detect_three_poor_triple(g, cls, ok);
    case ConfigKind::PoorBesidePoor: return detect_poor_beside_poor(g, cls, ok);
    case ConfigKind::ThreeTwoBesideTwoOne:
        return detect_three_two_beside_two_one(g, cls, ok);
    case ConfigKind::TrianglePendant: return detect_triangle_pendant(g, ok);
    case ConfigKind::AllSmallNeighbors: return detect_all_small_neighbors(g, ok);
    case ConfigKind::DoubleThreeTwo: return detect_double_three_two(g, cls, ok);
    case ConfigKind::ThreeTwoAndThreeOnePlus:
        return detect_three_two_and_three_one_plus(g, cls, ok);
    case ConfigKind::FourWithTwoOneAndTwoSmall:
        return detect_four_with_two_one_and_two_small(g, cls, ok);
    case ConfigKind::FourWithTwoTwoOnes:
        return detect_four_with_two_two_ones(g, cls, ok);
    }
    return std::nullopt;
}

}  // namespace detail

/// First match of a single kind's predicate, scanning vertices in
/// ascending id order. Degree conditions are measured in g itself.
inline std::optional<Configuration> detect_configuration(const Graph& g, ConfigKind kind)
{
    detail::ClassTable cls(g);
    return detail::detect_kind(g, cls, kind, detail::accept_all);
}

/// Every match of a kind, for uniqueness checks. Two matches are
/// considered the same when their witness vertex sets coincide.
inline std::vector<Configuration> enumerate_configurations(const Graph& g,
    ConfigKind kind)
{
    detail::ClassTable cls(g);
    std::vector<Configuration> out;
    std::vector<std::vector<VertexId>> seen;
    while (true) {
        auto next = detail::detect_kind(g, cls, kind, [&](const Configuration& c) {
            auto w = c.witness_vertices();
            return std::find(seen.begin(), seen.end(), w) == seen.end();
        });
        if (!next)
            break;
        seen.push_back(next->witness_vertices());
        out.push_back(std::move(*next));
    }
    return out;
}

/// Scans the kinds in priority order and returns the first match.
///
/// While any degree-<=1 vertex exists only DegreeOne can fire, so the
/// structural detectors below it always run on a graph that equals its
/// own core; their degree conditions therefore agree with the core
/// graph's ones.
inline std::optional<Configuration> find_reducible(const Graph& g)
{
    if (auto c = detail::detect_degree_one(g, detail::accept_all))
        return c;
    detail::ClassTable cls(g);
    for (int i = 1; i < kNumConfigKinds; ++i) {
        auto kind = static_cast<ConfigKind>(i);
        if (auto c = detail::detect_kind(g, cls, kind, detail::accept_all))
            return c;
    }
    return std::nullopt;
}

/// First configuration (in priority order) with a witness vertex
/// within the given distance of center; used to explain charge
/// deficiencies.
inline std::optional<Configuration> find_reducible_near(const Graph& g, VertexId center,
    int radius)
{
    std::vector<int> dist(g.vertex_capacity(), -1);
    std::queue<VertexId> q;
    dist[center] = 0;
    q.push(center);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (dist[v] == radius)
            continue;
        for (VertexId w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    auto near = [&](const Configuration& c) {
        for (VertexId v : c.witness_vertices())
            if (v < static_cast<int>(dist.size()) && dist[v] >= 0)
                return true;
        return false;
    };
    detail::ClassTable cls(g);
    for (int i = 0; i < kNumConfigKinds; ++i) {
        auto kind = static_cast<ConfigKind>(i);
        if (auto c = detail::detect_kind(g, cls, kind, near))
            return c;
    }
    return std::nullopt;
}

}  // namespace inj

#endif
