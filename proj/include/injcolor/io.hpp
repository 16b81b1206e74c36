#ifndef INJCOLOR_IO_HPP
#define INJCOLOR_IO_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"

namespace inj {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_)
    {
    }
};

/// Edge-list document: a header "p inj <n> <m>", then m lines
/// "e <u> <v>" with 1-based endpoints. Lines starting with "c" are
/// comments.
inline Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;  // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "inj" || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p inj <n> <m>'");
            g.add_vertices(n);
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw ParseError(lineno, "edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range 1.."
                    + std::to_string(n));
            if (u == v)
                throw ParseError(lineno, "loop edge");
            if (g.has_edge(u - 1, v - 1))
                throw ParseError(lineno, "duplicate edge");
            if (++seen > m)
                throw ParseError(lineno, "more edges than declared");
            g.add_edge(u - 1, v - 1);
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    if (n < 0)
        throw ParseError(lineno, "missing header");
    if (seen != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found "
            + std::to_string(seen));
    return g;
}

/// Canonical emission: alive vertices renumbered 1..n in id order,
/// edges sorted.
inline std::string emit_edge_list(const Graph& g)
{
    auto ids = g.vertices();
    std::vector<int> renum(g.vertex_capacity(), 0);
    for (size_t i = 0; i < ids.size(); ++i)
        renum[ids[i]] = static_cast<int>(i) + 1;
    std::vector<std::pair<int, int>> edges;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.edge_ends(e);
        int a = renum[u], b = renum[v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "p inj " << ids.size() << " " << edges.size() << "\n";
    for (auto [a, b] : edges)
        os << "e " << a << " " << b << "\n";
    return os.str();
}

/// Coloring document: one line "<u> <v> <color>" per edge, unordered
/// pair match against the graph's 1-based numbering.
inline Coloring parse_coloring(const Graph& g, const std::string& text, int k)
{
    auto ids = g.vertices();
    Coloring col(k, g.edge_capacity());
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first == "c")
            continue;
        int u, v, c;
        std::istringstream ls2(line);
        if (!(ls2 >> u >> v >> c))
            throw ParseError(lineno, "malformed coloring line");
        if (u < 1 || u > static_cast<int>(ids.size()) || v < 1
            || v > static_cast<int>(ids.size()))
            throw ParseError(lineno, "vertex index out of range");
        auto e = g.find_edge(ids[u - 1], ids[v - 1]);
        if (!e)
            throw ParseError(lineno, "no such edge " + std::to_string(u) + "-"
                + std::to_string(v));
        if (col.is_colored(*e))
            throw ParseError(lineno, "edge colored twice");
        if (c < 1)
            throw ParseError(lineno, "colors are positive integers");
        col.set(*e, c);
    }
    return col;
}

inline std::string emit_coloring(const Graph& g, const Coloring& col)
{
    auto ids = g.vertices();
    std::vector<int> renum(g.vertex_capacity(), 0);
    for (size_t i = 0; i < ids.size(); ++i)
        renum[ids[i]] = static_cast<int>(i) + 1;
    std::vector<std::tuple<int, int, int>> lines;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.edge_ends(e);
        int a = renum[u], b = renum[v];
        lines.push_back({std::min(a, b), std::max(a, b), col.get(e)});
    }
    std::sort(lines.begin(), lines.end());
    std::ostringstream os;
    for (auto [a, b, c] : lines)
        os << a << " " << b << " " << c << "\n";
    return os.str();
}

}  // namespace inj

#endif
