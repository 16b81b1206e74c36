#ifndef INJCOLOR_GRAPH_HPP
#define INJCOLOR_GRAPH_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inj {

using VertexId = int;
using EdgeId = int;

/// Simple undirected graph with stable ids.
///
/// Vertices and edges keep their ids across deletions (records are
/// tombstoned, never reused), so structures derived from a graph --
/// core graphs, conflict graphs, partial colorings -- stay valid while
/// a working copy is reduced.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) { add_vertices(n); }

    VertexId add_vertex()
    {
        vertices_.push_back(VertexRec{true, {}});
        ++alive_vertices_;
        return static_cast<VertexId>(vertices_.size()) - 1;
    }

    void add_vertices(int n)
    {
        for (int i = 0; i < n; ++i)
            add_vertex();
    }

    EdgeId add_edge(VertexId u, VertexId v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (find_edge(u, v))
            throw std::invalid_argument(
                "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        EdgeId e = static_cast<EdgeId>(edges_.size());
        edges_.push_back(EdgeRec{u, v, true});
        vertices_[u].adj.push_back({v, e});
        vertices_[v].adj.push_back({u, e});
        ++alive_edges_;
        return e;
    }

    void remove_edge(EdgeId e)
    {
        check_edge(e);
        auto& rec = edges_[e];
        rec.alive = false;
        detach(rec.u, e);
        detach(rec.v, e);
        --alive_edges_;
    }

    /// Removes v and every edge incident to it. The id stays reserved.
    void remove_vertex(VertexId v)
    {
        check_vertex(v);
        auto adj = vertices_[v].adj;  // copy: remove_edge edits the list
        for (auto [w, e] : adj)
            remove_edge(e);
        vertices_[v].alive = false;
        --alive_vertices_;
    }

    int num_vertices() const { return alive_vertices_; }
    int num_edges() const { return alive_edges_; }

    /// One past the largest id ever handed out (dead ids included).
    int vertex_capacity() const { return static_cast<int>(vertices_.size()); }
    int edge_capacity() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(VertexId v) const
    {
        return v >= 0 && v < vertex_capacity() && vertices_[v].alive;
    }

    bool has_edge_id(EdgeId e) const
    {
        return e >= 0 && e < edge_capacity() && edges_[e].alive;
    }

    int degree(VertexId v) const
    {
        check_vertex(v);
        return static_cast<int>(vertices_[v].adj.size());
    }

    /// Neighbor vertex ids, ascending.
    std::vector<VertexId> neighbors(VertexId v) const
    {
        check_vertex(v);
        std::vector<VertexId> out;
        out.reserve(vertices_[v].adj.size());
        for (auto [w, e] : vertices_[v].adj)
            out.push_back(w);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Incident (neighbor, edge) pairs in insertion order.
    const std::vector<std::pair<VertexId, EdgeId>>& incidence(VertexId v) const
    {
        check_vertex(v);
        return vertices_[v].adj;
    }

    std::pair<VertexId, VertexId> edge_ends(EdgeId e) const
    {
        check_edge(e);
        return {edges_[e].u, edges_[e].v};
    }

    bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const
    {
        check_vertex(u);
        check_vertex(v);
        const auto& a = vertices_[u].adj;
        const auto& b = vertices_[v].adj;
        const auto& shorter = a.size() <= b.size() ? a : b;
        VertexId target = a.size() <= b.size() ? v : u;
        for (auto [w, e] : shorter)
            if (w == target)
                return e;
        return std::nullopt;
    }

    /// Alive vertex ids, ascending.
    std::vector<VertexId> vertices() const
    {
        std::vector<VertexId> out;
        out.reserve(alive_vertices_);
        for (VertexId v = 0; v < vertex_capacity(); ++v)
            if (vertices_[v].alive)
                out.push_back(v);
        return out;
    }

    /// Alive edge ids, ascending.
    std::vector<EdgeId> edges() const
    {
        std::vector<EdgeId> out;
        out.reserve(alive_edges_);
        for (EdgeId e = 0; e < edge_capacity(); ++e)
            if (edges_[e].alive)
                out.push_back(e);
        return out;
    }

    int max_degree() const
    {
        int d = 0;
        for (VertexId v = 0; v < vertex_capacity(); ++v)
            if (vertices_[v].alive)
                d = std::max(d, static_cast<int>(vertices_[v].adj.size()));
        return d;
    }

    int min_degree() const
    {
        int d = -1;
        for (VertexId v = 0; v < vertex_capacity(); ++v)
            if (vertices_[v].alive) {
                int dv = static_cast<int>(vertices_[v].adj.size());
                if (d < 0 || dv < d)
                    d = dv;
            }
        return d < 0 ? 0 : d;
    }

private:
    struct VertexRec {
        bool alive = false;
        std::vector<std::pair<VertexId, EdgeId>> adj;
    };
    struct EdgeRec {
        VertexId u = -1, v = -1;
        bool alive = false;
    };

    void check_vertex(VertexId v) const
    {
        if (!(v >= 0 && v < vertex_capacity() && vertices_[v].alive))
            throw std::out_of_range("unknown vertex id " + std::to_string(v));
    }

    void check_edge(EdgeId e) const
    {
        if (!(e >= 0 && e < edge_capacity() && edges_[e].alive))
            throw std::out_of_range("unknown edge id " + std::to_string(e));
    }

    void detach(VertexId v, EdgeId e)
    {
        auto& adj = vertices_[v].adj;
        adj.erase(std::remove_if(adj.begin(), adj.end(),
                      [e](const auto& p) { return p.second == e; }),
            adj.end());
    }

    std::vector<VertexRec> vertices_;
    std::vector<EdgeRec> edges_;
    int alive_vertices_ = 0;
    int alive_edges_ = 0;
};

/// The source graph with its degree-1 vertices removed in a single
/// pass. Ids are shared with the source, so no translation tables are
/// needed; `removed` lists what was dropped.
struct CoreGraph {
    Graph graph;
    std::vector<VertexId> removed;
};

inline int degree(const Graph& g, VertexId v) { return g.degree(v); }

inline CoreGraph derive_core(const Graph& g)
{
    CoreGraph core{g, {}};
    for (VertexId v : g.vertices())
        if (g.degree(v) == 1)
            core.removed.push_back(v);
    for (VertexId v : core.removed)
        core.graph.remove_vertex(v);
    return core;
}

/// Degree-based vertex vocabulary, always measured in the graph it was
/// computed from. A vertex of degree k with j neighbors of degree 2 is
/// a "k_j" vertex; a 3_1 whose 2-neighbor has a 2-neighbor of its own
/// is "3_1+"; 3_1+ and 3_2 vertices are "poor".
struct VertexClass {
    int degree = 0;
    int two_neighbors = 0;     ///< neighbors of degree exactly 2
    bool three_one_plus = false;
    bool poor = false;

    bool is(int k, int j) const { return degree == k && two_neighbors == j; }
    bool is_two_zero() const { return is(2, 0); }
    bool is_two_one() const { return is(2, 1); }
    bool is_three_two() const { return is(3, 2); }
};

inline VertexClass classify(const Graph& h, VertexId v)
{
    VertexClass c;
    c.degree = h.degree(v);
    for (VertexId w : h.neighbors(v))
        if (h.degree(w) == 2)
            ++c.two_neighbors;
    if (c.degree == 3 && c.two_neighbors == 1) {
        for (VertexId w : h.neighbors(v)) {
            if (h.degree(w) != 2)
                continue;
            // the unique 2-neighbor; 3_1+ iff it is itself a 2_1 vertex
            int wj = 0;
            for (VertexId x : h.neighbors(w))
                if (h.degree(x) == 2)
                    ++wj;
            c.three_one_plus = (wj == 1);
        }
    }
    c.poor = c.three_one_plus || c.is_three_two();
    return c;
}

inline VertexClass classify(const CoreGraph& h, VertexId v) { return classify(h.graph, v); }

inline bool is_light(const Graph& g, EdgeId e)
{
    auto [u, v] = g.edge_ends(e);
    return g.degree(u) == 2 && g.degree(v) == 2;
}

}  // namespace inj

#endif
