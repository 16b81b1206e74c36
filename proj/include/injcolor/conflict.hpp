#ifndef INJCOLOR_CONFLICT_HPP
#define INJCOLOR_CONFLICT_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcolor/graph.hpp"

namespace inj {

/// Two edges see each other iff a third edge joins an endpoint of one
/// to an endpoint of the other. This single rule covers both cases of
/// the definition: line-graph distance exactly two, and two edges of a
/// common triangle.
inline bool sees(const Graph& g, EdgeId e, EdgeId f)
{
    if (e == f)
        throw std::invalid_argument("sees: identical edges");
    auto [eu, ev] = g.edge_ends(e);
    auto [fu, fv] = g.edge_ends(f);
    for (VertexId a : {eu, ev}) {
        for (auto [b, h] : g.incidence(a)) {
            if (h == e || h == f)
                continue;
            if (b == fu || b == fv)
                return true;
        }
    }
    return false;
}

/// Conflict structure over the edges of a source graph: one node per
/// edge, adjacency = the sees relation. Node ids are the source edge
/// ids. Immutable once built.
class ConflictGraph {
public:
    explicit ConflictGraph(const Graph& g)
        : adj_(g.edge_capacity()), is_node_(g.edge_capacity(), false)
    {
        nodes_ = g.edges();
        for (EdgeId e : nodes_)
            is_node_[e] = true;
        // two-hop enumeration: every seeing pair is witnessed by the
        // joining edge, so walk each edge (x,y) and pair the other
        // edges at x with the other edges at y
        for (EdgeId h : nodes_) {
            auto [x, y] = g.edge_ends(h);
            for (auto [xv, e] : g.incidence(x)) {
                if (e == h)
                    continue;
                for (auto [yv, f] : g.incidence(y)) {
                    if (f == h || f == e)
                        continue;
                    adj_[e].push_back(f);
                    adj_[f].push_back(e);
                }
            }
        }
        for (auto& lst : adj_) {
            std::sort(lst.begin(), lst.end());
            lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        }
    }

    const std::vector<EdgeId>& nodes() const { return nodes_; }
    int num_nodes() const { return static_cast<int>(nodes_.size()); }

    bool has_node(EdgeId e) const
    {
        return e >= 0 && e < static_cast<int>(is_node_.size()) && is_node_[e];
    }

    /// F(e): the edges that see e.
    const std::vector<EdgeId>& conflicts(EdgeId e) const
    {
        check_node(e);
        return adj_[e];
    }

    bool conflict(EdgeId e, EdgeId f) const
    {
        check_node(e);
        check_node(f);
        const auto& lst = adj_[e];
        return std::binary_search(lst.begin(), lst.end(), f);
    }

    int num_conflicts() const
    {
        long long total = 0;
        for (EdgeId e : nodes_)
            total += static_cast<long long>(adj_[e].size());
        return static_cast<int>(total / 2);
    }

private:
    void check_node(EdgeId e) const
    {
        if (!has_node(e))
            throw std::out_of_range("unknown conflict node " + std::to_string(e));
    }

    std::vector<std::vector<EdgeId>> adj_;
    std::vector<char> is_node_;
    std::vector<EdgeId> nodes_;
};

inline ConflictGraph build_conflict_graph(const Graph& g) { return ConflictGraph(g); }

/// Partial edge coloring with colors 1..k; 0 means unassigned.
class Coloring {
public:
    Coloring() = default;
    Coloring(int k, int edge_capacity) : k_(k), color_(edge_capacity, 0) {}

    int k() const { return k_; }

    int get(EdgeId e) const
    {
        if (e < 0 || e >= static_cast<int>(color_.size()))
            return 0;
        return color_[e];
    }

    bool is_colored(EdgeId e) const { return get(e) != 0; }

    /// Colors must be positive; values above k are storable so that
    /// validation can report them as out of range.
    void set(EdgeId e, int color)
    {
        if (color < 1)
            throw std::invalid_argument("colors are positive integers");
        ensure(e);
        if (color_[e] == 0)
            ++assigned_;
        color_[e] = color;
    }

    void erase(EdgeId e)
    {
        if (e >= 0 && e < static_cast<int>(color_.size()) && color_[e] != 0) {
            color_[e] = 0;
            --assigned_;
        }
    }

    int assigned() const { return assigned_; }

    /// Largest color actually used.
    int colors_used() const
    {
        int m = 0;
        for (int c : color_)
            m = std::max(m, c);
        return m;
    }

private:
    void ensure(EdgeId e)
    {
        if (e < 0)
            throw std::out_of_range("negative edge id");
        if (e >= static_cast<int>(color_.size()))
            color_.resize(e + 1, 0);
    }

    int k_ = 0;
    std::vector<int> color_;
    int assigned_ = 0;
};

/// Colors of 1..k not blocked by F(e) under the current partial
/// coloring.
inline std::vector<int> available_colors(const ConflictGraph& cg, const Coloring& col,
    EdgeId e)
{
    std::vector<char> blocked(col.k() + 1, false);
    for (EdgeId f : cg.conflicts(e)) {
        int c = col.get(f);
        if (c >= 1 && c <= col.k())
            blocked[c] = true;
    }
    std::vector<int> out;
    for (int c = 1; c <= col.k(); ++c)
        if (!blocked[c])
            out.push_back(c);
    return out;
}

struct ValidationReport {
    bool total = false;
    std::vector<EdgeId> uncolored;
    std::vector<std::pair<EdgeId, int>> out_of_range;
    std::vector<std::pair<EdgeId, EdgeId>> conflicts;  ///< same-colored seeing pairs

    bool valid() const
    {
        return total && out_of_range.empty() && conflicts.empty();
    }
};

inline ValidationReport validate(const ConflictGraph& cg, const Coloring& col)
{
    ValidationReport rep;
    for (EdgeId e : cg.nodes()) {
        int c = col.get(e);
        if (c == 0)
            rep.uncolored.push_back(e);
        else if (c > col.k())
            rep.out_of_range.push_back({e, c});
    }
    rep.total = rep.uncolored.empty();
    for (EdgeId e : cg.nodes()) {
        int ce = col.get(e);
        if (ce == 0)
            continue;
        for (EdgeId f : cg.conflicts(e)) {
            if (f <= e)
                continue;
            if (col.get(f) == ce)
                rep.conflicts.push_back({e, f});
        }
    }
    return rep;
}

}  // namespace inj

#endif
