#ifndef INJCOLOR_MAD_HPP
#define INJCOLOR_MAD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "injcolor/graph.hpp"
#include "injcolor/maxflow.hpp"
#include "injcolor/rational.hpp"

namespace inj {

/// Exact maximum average degree together with a vertex subset that
/// attains it.
struct DensityWitness {
    Rational mad;
    std::vector<VertexId> witness;
};

namespace detail {

inline long long rfloor(const Rational& r)
{
    long long n = r.numerator(), d = r.denominator();
    long long q = n / d;
    if (n % d != 0 && (n < 0))
        --q;
    return q;
}

/// Simplest rational strictly inside (a, b), by continued fractions.
/// Keeps probe denominators small through the whole binary search, so
/// scaled flow capacities never overflow.
inline Rational simplest_between(const Rational& a, const Rational& b)
{
    long long fa = rfloor(a);
    Rational next_int(fa + 1);
    if (a < next_int && next_int < b)
        return next_int;
    // no integer strictly inside: a and b share the integer part fa
    Rational fa_r(fa);
    if (a == fa_r) {
        // interval (fa, b) with b <= fa+1: answer is fa + 1/m
        Rational width = b - fa_r;
        long long m = rfloor(Rational(width.denominator(), width.numerator())) + 1;
        return fa_r + Rational(1, m);
    }
    Rational inner = simplest_between(Rational(1) / (b - fa_r), Rational(1) / (a - fa_r));
    return fa_r + Rational(1) / inner;
}

inline long long count_induced_edges(const Graph& g, const std::vector<VertexId>& subset)
{
    std::vector<char> in(g.vertex_capacity(), false);
    for (VertexId v : subset)
        in[v] = true;
    long long cnt = 0;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.edge_ends(e);
        if (in[u] && in[v])
            ++cnt;
    }
    return cnt;
}

}  // namespace detail

/// Exact mad(G) = max over nonempty S of 2|E(G[S])|/|S|, via the
/// min-cut characterization of the densest subgraph: a guess g is
/// beaten iff the cut of the usual source/sink network drops below
/// m*n. Any two achievable densities p/q, p'/q' with q, q' <= n differ
/// by at least 1/n^2, so once the search interval is narrower than
/// that, the best subset found so far is optimal.
inline DensityWitness mad_exact(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("mad_exact: empty graph");
    long long m = g.num_edges();
    std::vector<VertexId> ids = g.vertices();
    if (m == 0)
        return {Rational(0), {ids.front()}};

    std::vector<int> dense(g.vertex_capacity(), -1);
    for (int i = 0; i < n; ++i)
        dense[ids[i]] = i;

    Rational lo(m, n);                        // density of the whole graph
    std::vector<VertexId> witness = ids;
    Rational hi = Rational(g.max_degree(), 2) + 1;  // any subset density < hi
    Rational eps(1, static_cast<long long>(n) * n + 1);

    while (hi - lo >= eps) {
        Rational guess = detail::simplest_between(lo, hi);
        long long a = guess.numerator(), b = guess.denominator();

        int s = n, t = n + 1;
        detail::Dinic net(n + 2);
        for (int i = 0; i < n; ++i) {
            net.add_edge(s, i, m * b);
            net.add_edge(i, t, m * b + 2 * a - static_cast<long long>(g.degree(ids[i])) * b);
        }
        for (EdgeId e : g.edges()) {
            auto [u, v] = g.edge_ends(e);
            net.add_edge(dense[u], dense[v], b);
            net.add_edge(dense[v], dense[u], b);
        }
        long long flow = net.max_flow(s, t);
        if (flow < m * static_cast<long long>(n) * b) {
            auto side = net.min_cut_side(s);
            std::vector<VertexId> subset;
            for (int i = 0; i < n; ++i)
                if (side[i])
                    subset.push_back(ids[i]);
            long long es = detail::count_induced_edges(g, subset);
            lo = Rational(es, static_cast<long long>(subset.size()));
            witness = std::move(subset);
        } else {
            hi = guess;
        }
    }
    return {2 * lo, witness};
}

/// Exhaustive oracle over all nonempty vertex subsets; capped at 20
/// vertices.
inline DensityWitness mad_bruteforce(const Graph& g)
{
    int n = g.num_vertices();
    if (n < 1)
        throw std::invalid_argument("mad_bruteforce: empty graph");
    if (n > 20)
        throw std::invalid_argument("mad_bruteforce: graph too large (n > 20)");
    std::vector<VertexId> ids = g.vertices();
    std::vector<int> dense(g.vertex_capacity(), -1);
    for (int i = 0; i < n; ++i)
        dense[ids[i]] = i;
    std::vector<std::uint32_t> adj(n, 0);
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.edge_ends(e);
        adj[dense[u]] |= 1u << dense[v];
        adj[dense[v]] |= 1u << dense[u];
    }
    long long best_e = 0, best_s = 1;  // single vertex: density 0
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long edges2 = 0;
        for (std::uint32_t rest = mask; rest;) {
            int i = __builtin_ctz(rest);
            rest &= rest - 1;
            edges2 += __builtin_popcount(adj[i] & mask);
        }
        long long e = edges2 / 2;
        long long s = __builtin_popcount(mask);
        if (e * best_s > best_e * s) {  // e/s > best
            best_e = e;
            best_s = s;
            best_mask = mask;
        }
    }
    std::vector<VertexId> witness;
    for (int i = 0; i < n; ++i)
        if (best_mask & (1u << i))
            witness.push_back(ids[i]);
    return {Rational(2 * best_e, best_s), witness};
}

struct EligibilityReport {
    int max_degree = 0;
    Rational mad;
    std::vector<VertexId> witness;
    bool eligible = false;
};

/// Theorem hypotheses: maximum degree at most 4 and mad strictly below
/// 8/3, both checked exactly.
inline EligibilityReport is_eligible(const Graph& g)
{
    EligibilityReport rep;
    rep.max_degree = g.max_degree();
    if (g.num_vertices() == 0) {
        rep.mad = Rational(0);
        rep.eligible = true;
        return rep;
    }
    auto dw = mad_exact(g);
    rep.mad = dw.mad;
    rep.witness = std::move(dw.witness);
    rep.eligible = rep.max_degree <= 4 && rep.mad < kEightThirds;
    return rep;
}

}  // namespace inj

#endif
