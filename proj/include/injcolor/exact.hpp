#ifndef INJCOLOR_EXACT_HPP
#define INJCOLOR_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"

namespace inj {

enum class SearchOutcome { Found, None, Budget };

struct KColorResult {
    SearchOutcome outcome = SearchOutcome::None;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

namespace detail {

/// DSATUR backtracking over the conflict graph, with the standard
/// symmetry break: a fresh color may only enter as (max used)+1, so
/// the first node always takes color 1.
class DsaturSearch {
public:
    DsaturSearch(const ConflictGraph& cg, int k, std::uint64_t budget)
        : cg_(cg), k_(k), budget_(budget)
    {
        const auto& nodes = cg.nodes();
        n_ = static_cast<int>(nodes.size());
        id_.assign(nodes.begin(), nodes.end());
        dense_.assign(nodes.empty() ? 0 : nodes.back() + 1, -1);
        for (int i = 0; i < n_; ++i)
            dense_[id_[i]] = i;
        adj_.resize(n_);
        for (int i = 0; i < n_; ++i)
            for (EdgeId f : cg.conflicts(id_[i]))
                adj_[i].push_back(dense_[f]);
        color_.assign(n_, 0);
        neighbor_count_.assign(n_, std::vector<int>(k + 1, 0));
        saturation_.assign(n_, 0);
    }

    SearchOutcome run()
    {
        return paint(0, 0);
    }

    std::uint64_t nodes_expanded() const { return nodes_; }

    Coloring result() const
    {
        Coloring col(k_, dense_.empty() ? 0 : static_cast<int>(dense_.size()));
        for (int i = 0; i < n_; ++i)
            col.set(id_[i], color_[i]);
        return col;
    }

private:
    SearchOutcome paint(int assigned, int max_used)
    {
        if (assigned == n_)
            return SearchOutcome::Found;
        int v = pick();
        int limit = std::min(max_used + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            if (neighbor_count_[v][c] > 0)
                continue;
            if (++nodes_ > budget_)
                return SearchOutcome::Budget;
            assign(v, c);
            SearchOutcome sub = paint(assigned + 1, std::max(max_used, c));
            if (sub != SearchOutcome::None)
                return sub;
            unassign(v, c);
        }
        return SearchOutcome::None;
    }

    // max saturation, then max conflict degree, then smallest node id
    int pick() const
    {
        int best = -1;
        for (int i = 0; i < n_; ++i) {
            if (color_[i] != 0)
                continue;
            if (best < 0 || saturation_[i] > saturation_[best]
                || (saturation_[i] == saturation_[best]
                    && adj_[i].size() > adj_[best].size()))
                best = i;
        }
        return best;
    }

    void assign(int v, int c)
    {
        color_[v] = c;
        for (int w : adj_[v])
            if (neighbor_count_[w][c]++ == 0)
                ++saturation_[w];
    }

    void unassign(int v, int c)
    {
        color_[v] = 0;
        for (int w : adj_[v])
            if (--neighbor_count_[w][c] == 0)
                --saturation_[w];
    }

    const ConflictGraph& cg_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int n_ = 0;
    std::vector<EdgeId> id_;
    std::vector<int> dense_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbor_count_;
    std::vector<int> saturation_;
};

/// Greedily grown clique in the conflict graph; its size lower-bounds
/// the chromatic number.
inline int clique_lower_bound(const ConflictGraph& cg)
{
    const auto& nodes = cg.nodes();
    if (nodes.empty())
        return 0;
    EdgeId start = nodes.front();
    for (EdgeId e : nodes)
        if (cg.conflicts(e).size() > cg.conflicts(start).size())
            start = e;
    std::vector<EdgeId> clique{start};
    while (true) {
        EdgeId best = -1;
        for (EdgeId e : nodes) {
            if (std::find(clique.begin(), clique.end(), e) != clique.end())
                continue;
            bool all = true;
            for (EdgeId c : clique)
                if (!cg.conflict(e, c)) {
                    all = false;
                    break;
                }
            if (all && (best < 0 || cg.conflicts(e).size() > cg.conflicts(best).size()))
                best = e;
        }
        if (best < 0)
            break;
        clique.push_back(best);
    }
    return static_cast<int>(clique.size());
}

/// DSATUR greedy (no backtracking); returns a valid coloring with an
/// unbounded palette.
inline Coloring greedy_upper_bound(const ConflictGraph& cg, int edge_capacity)
{
    const auto& nodes = cg.nodes();
    int n = static_cast<int>(nodes.size());
    Coloring col(n == 0 ? 0 : n, edge_capacity);  // n colors always suffice
    std::vector<char> done(edge_capacity, false);
    for (int step = 0; step < n; ++step) {
        EdgeId best = -1;
        int best_sat = -1;
        for (EdgeId e : nodes) {
            if (done[e])
                continue;
            std::vector<char> seen(n + 2, false);
            int sat = 0;
            for (EdgeId f : cg.conflicts(e)) {
                int c = col.get(f);
                if (c > 0 && !seen[c]) {
                    seen[c] = true;
                    ++sat;
                }
            }
            if (best < 0 || sat > best_sat
                || (sat == best_sat
                    && cg.conflicts(e).size() > cg.conflicts(best).size()))
                best = e, best_sat = sat;
        }
        std::vector<char> blocked(n + 2, false);
        for (EdgeId f : cg.conflicts(best)) {
            int c = col.get(f);
            if (c > 0)
                blocked[c] = true;
        }
        int c = 1;
        while (blocked[c])
            ++c;
        col.set(best, c);
        done[best] = true;
    }
    return col;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Decision form: a valid total coloring of the conflict graph with at
/// most k colors, a certified "none exists", or a budget timeout --
/// never conflating the last two.
inline KColorResult color_with_k(const ConflictGraph& cg, int k,
    std::uint64_t budget = kDefaultSearchBudget)
{
    if (k < 1)
        throw std::invalid_argument("color_with_k: k must be >= 1");
    detail::DsaturSearch search(cg, k, budget);
    KColorResult res;
    res.outcome = search.run();
    res.nodes = search.nodes_expanded();
    if (res.outcome == SearchOutcome::Found)
        res.coloring = search.result();
    return res;
}

struct ExactResult {
    bool exact = true;     ///< false when the node budget ran out
    int chi = 0;           ///< exact value, or best upper bound when !exact
    int lower_bound = 0;
    int upper_bound = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Exact injective chromatic index: clique lower bound, greedy upper
/// bound, then descending decision searches. Deterministic for a given
/// graph.
inline ExactResult chi_injective_exact(const Graph& g,
    std::uint64_t budget = kDefaultSearchBudget)
{
    auto t0 = std::chrono::steady_clock::now();
    ConflictGraph cg(g);
    ExactResult res;
    if (cg.num_nodes() == 0) {
        res.chi = 0;
        res.witness = Coloring(0, g.edge_capacity());
        return res;
    }
    int lb = std::max(1, detail::clique_lower_bound(cg));
    Coloring greedy = detail::greedy_upper_bound(cg, g.edge_capacity());
    int ub = greedy.colors_used();
    res.witness = greedy;
    res.lower_bound = lb;
    res.upper_bound = ub;

    std::uint64_t used = 0;
    while (ub > lb) {
        KColorResult step = color_with_k(cg, ub - 1, budget - std::min(budget, used));
        used += step.nodes;
        if (step.outcome == SearchOutcome::Found) {
            res.witness = *step.coloring;
            ub = step.coloring->colors_used();
            res.upper_bound = ub;
        } else if (step.outcome == SearchOutcome::None) {
            lb = ub;  // ub-1 impossible, so ub is optimal
            res.lower_bound = lb;
        } else {
            res.exact = false;
            break;
        }
    }
    if (res.exact)
        res.lower_bound = res.upper_bound = ub;
    res.chi = ub;
    res.nodes = used;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace inj

#endif
