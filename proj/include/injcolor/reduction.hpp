#ifndef INJCOLOR_REDUCTION_HPP
#define INJCOLOR_REDUCTION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "injcolor/configurations.hpp"
#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"
#include "injcolor/mad.hpp"

namespace inj {

/// Input fails the theorem hypotheses.
struct IneligibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An extension the reduction argument guarantees did not go through;
/// always a bug, never a property of the input.
struct ProofContractError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ExtensionResult {
    std::optional<Coloring> coloring;
    int level = -1;  ///< deepening level that succeeded: 0, 1 or 2
    std::uint64_t nodes = 0;
};

namespace detail {

/// Exhaustive backtracking over the open edges; everything else stays
/// fixed. Light edges are put off until only light edges remain, which
/// is what makes the hint sets from the lemma proofs sufficient.
class ExtendSearch {
public:
    ExtendSearch(const Graph& g, const ConflictGraph& cg, int k)
        : g_(g), cg_(cg), k_(k)
    {
    }

    std::optional<Coloring> run(const Coloring& base, const std::vector<EdgeId>& open,
        std::uint64_t& nodes)
    {
        work_ = base;
        for (EdgeId e : open)
            work_.erase(e);
        open_ = open;
        done_.assign(open.size(), false);
        nodes_ = 0;
        bool found = dfs(0);
        nodes += nodes_;
        if (found)
            return work_;
        return std::nullopt;
    }

private:
    bool dfs(size_t assigned)
    {
        if (assigned == open_.size())
            return true;
        int pick = pick_edge();
        EdgeId e = open_[pick];
        done_[pick] = true;
        std::vector<char> blocked(k_ + 1, false);
        for (EdgeId f : cg_.conflicts(e)) {
            int c = work_.get(f);
            if (c >= 1 && c <= k_)
                blocked[c] = true;
        }
        for (int c = 1; c <= k_; ++c) {
            if (blocked[c])
                continue;
            ++nodes_;
            work_.set(e, c);
            if (dfs(assigned + 1))
                return true;
            work_.erase(e);
        }
        done_[pick] = false;
        return false;
    }

    // fewest available colors first; light edges only once nothing
    // else is open
    int pick_edge() const
    {
        int best = -1, best_avail = -1;
        bool best_light = true;
        for (size_t i = 0; i < open_.size(); ++i) {
            if (done_[i])
                continue;
            EdgeId e = open_[i];
            bool light = is_light(g_, e);
            std::vector<char> blocked(k_ + 1, false);
            int avail = k_;
            for (EdgeId f : cg_.conflicts(e)) {
                int c = work_.get(f);
                if (c >= 1 && c <= k_ && !blocked[c]) {
                    blocked[c] = true;
                    --avail;
                }
            }
            if (best < 0 || (best_light && !light)
                || (best_light == light && avail < best_avail)) {
                best = static_cast<int>(i);
                best_avail = avail;
                best_light = light;
            }
        }
        return best;
    }

    const Graph& g_;
    const ConflictGraph& cg_;
    int k_;
    Coloring work_;
    std::vector<EdgeId> open_;
    std::vector<char> done_;
    std::uint64_t nodes_ = 0;
};

inline std::vector<EdgeId> line_ball(const Graph& g, const std::vector<EdgeId>& seeds,
    int radius)
{
    std::vector<int> dist(g.edge_capacity(), -1);
    std::queue<EdgeId> q;
    for (EdgeId e : seeds)
        if (dist[e] < 0) {
            dist[e] = 0;
            q.push(e);
        }
    while (!q.empty()) {
        EdgeId e = q.front();
        q.pop();
        if (dist[e] == radius)
            continue;
        auto [u, v] = g.edge_ends(e);
        for (VertexId a : {u, v})
            for (auto [b, f] : g.incidence(a))
                if (dist[f] < 0) {
                    dist[f] = dist[e] + 1;
                    q.push(f);
                }
    }
    std::vector<EdgeId> out;
    for (EdgeId e : g.edges())
        if (dist[e] >= 0)
            out.push_back(e);
    return out;
}

}  // namespace detail

/// Completes a partial coloring on the missing edges, deepening the
/// set of recolorable edges only as needed: first nothing extra, then
/// the hint edges, finally everything within line-graph distance 2 of
/// the missing set. Each level is searched exhaustively.
inline ExtensionResult extend_coloring(const Graph& g, const ConflictGraph& cg,
    const Coloring& partial, const std::vector<EdgeId>& missing,
    const std::vector<EdgeId>& recolor_hints, int k)
{
    ExtensionResult res;
    detail::ExtendSearch search(g, cg, k);

    auto attempt = [&](std::vector<EdgeId> open, int level) -> bool {
        std::sort(open.begin(), open.end());
        open.erase(std::unique(open.begin(), open.end()), open.end());
        auto col = search.run(partial, open, res.nodes);
        if (col) {
            res.coloring = std::move(col);
            res.level = level;
            return true;
        }
        return false;
    };

    if (attempt(missing, 0))
        return res;

    std::vector<EdgeId> with_hints = missing;
    for (EdgeId e : recolor_hints)
        if (g.has_edge_id(e))
            with_hints.push_back(e);
    if (attempt(with_hints, 1))
        return res;

    if (attempt(detail::line_ball(g, missing, 2), 2))
        return res;
    return res;  // level 2 exhausted: no extension exists
}

struct ReductionStep {
    Configuration config;
    int extension_level = -1;
};

struct ConstructiveResult {
    Coloring coloring;
    int colors_used = 0;
    std::vector<ReductionStep> steps;
};

/// Runs the minimal-counterexample argument forwards: repeatedly
/// detect a reducible configuration, delete its vertices, and after
/// the recursion extend the smaller coloring across the missing edges
/// with 7 colors.
inline ConstructiveResult color_constructive_traced(const Graph& g)
{
    auto elig = is_eligible(g);
    if (!elig.eligible)
        throw IneligibleError("graph is not eligible: max degree "
            + std::to_string(elig.max_degree) + ", mad " + to_string(elig.mad));

    struct Stage {
        Graph graph;  // state the configuration was found in
        Configuration config;
    };
    std::vector<Stage> stages;
    Graph work = g;
    while (work.num_edges() > 0) {
        auto cfg = find_reducible(work);
        if (!cfg)
            throw ProofContractError(
                "no reducible configuration in an eligible graph with edges");
        stages.push_back({work, *cfg});
        for (VertexId v : cfg->deletion)
            work.remove_vertex(v);
    }

    ConstructiveResult res;
    res.coloring = Coloring(7, g.edge_capacity());
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const Graph& stage = it->graph;
        std::vector<EdgeId> missing;
        for (VertexId v : it->config.deletion)
            for (auto [w, e] : stage.incidence(v))
                missing.push_back(e);
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());

        ConflictGraph cg(stage);
        auto ext = extend_coloring(stage, cg, res.coloring, missing,
            it->config.recolor_hints, 7);
        if (!ext.coloring)
            throw ProofContractError(std::string("extension failed for configuration ")
                + kind_name(it->config.kind));
        res.coloring = std::move(*ext.coloring);
        res.steps.push_back({it->config, ext.level});
    }
    res.colors_used = res.coloring.colors_used();
    return res;
}

inline Coloring color_constructive(const Graph& g)
{
    return color_constructive_traced(g).coloring;
}

}  // namespace inj

#endif
