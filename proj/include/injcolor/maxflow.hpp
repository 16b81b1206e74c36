#ifndef INJCOLOR_MAXFLOW_HPP
#define INJCOLOR_MAXFLOW_HPP

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace inj::detail {

/// Dinic max-flow on integer capacities. Small and exact; the graphs
/// handed to it have a few hundred nodes at most.
class Dinic {
public:
    explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int from, int to, long long cap)
    {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    long long max_flow(int s, int t)
    {
        long long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0)
                total += f;
        }
        return total;
    }

    /// Call after max_flow: nodes still reachable from s in the
    /// residual network (the source side of a minimum cut).
    std::vector<bool> min_cut_side(int s) const
    {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    q.push(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        long long cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long limit)
    {
        if (v == t)
            return limit;
        for (int& a = it_[v]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap > 0 && level_[arc.to] == level_[v] + 1) {
                long long f = dfs(arc.to, t, std::min(limit, arc.cap));
                if (f > 0) {
                    arc.cap -= f;
                    arcs_[a ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace inj::detail

#endif
