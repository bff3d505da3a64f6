#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udcount/error.hpp"

namespace udcount {

using vertex_id = std::uint32_t;
using arc_id = std::uint32_t;

struct arc {
    vertex_id tail;
    vertex_id head;

    friend bool operator==(const arc&, const arc&) = default;
};

/// Loopless directed multigraph on vertices 0..n-1. The id of an arc is its
/// index in `arcs()`; parallel and antiparallel arcs are distinct.
class digraph {
public:
    digraph() = default;

    digraph(std::size_t vertex_count, std::vector<arc> arcs)
        : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const auto& a = arcs_[i];
            if (a.tail >= vertex_count_ || a.head >= vertex_count_)
                throw invalid_input("arc " + std::to_string(i) + " references a vertex outside 0.." +
                                    std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
            if (a.tail == a.head)
                throw invalid_input("arc " + std::to_string(i) + " is a loop on vertex " +
                                    std::to_string(a.tail));
        }
    }

    /// Vertex count inferred as 1 + max endpoint.
    static digraph from_arcs(std::vector<arc> arcs) {
        std::size_t n = 0;
        for (const auto& a : arcs) n = std::max<std::size_t>(n, std::max(a.tail, a.head) + std::size_t{1});
        return digraph(n, std::move(arcs));
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::span<const arc> arcs() const noexcept { return arcs_; }
    const arc& operator[](arc_id id) const { return arcs_.at(id); }

    friend bool operator==(const digraph&, const digraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<arc> arcs_;
};

struct edge {
    vertex_id a;
    vertex_id b;

    vertex_id other(vertex_id v) const noexcept { return v == a ? b : a; }
};

/// Undirected loopless multigraph; edge id = index.
class undirected_graph {
public:
    undirected_graph() = default;

    undirected_graph(std::size_t vertex_count, std::vector<edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if (e.a >= vertex_count_ || e.b >= vertex_count_)
                throw invalid_input("edge " + std::to_string(i) + " references a vertex out of range");
            if (e.a == e.b)
                throw invalid_input("edge " + std::to_string(i) + " is a loop on vertex " + std::to_string(e.a));
        }
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const edge> edges() const noexcept { return edges_; }

private:
    std::size_t vertex_count_ = 0;
    std::vector<edge> edges_;
};

/// Undirected multigraph underlying a digraph, with incidence lists.
/// Edge i comes from arc i.
struct underlying_multigraph {
    std::size_t vertex_count = 0;
    std::vector<edge> edges;
    std::vector<std::vector<arc_id>> incidence;

    explicit underlying_multigraph(const digraph& g) : vertex_count(g.vertex_count()), incidence(g.vertex_count()) {
        edges.reserve(g.arc_count());
        for (arc_id i = 0; i < g.arc_count(); ++i) {
            const auto& a = g[i];
            edges.push_back({a.tail, a.head});
            incidence[a.tail].push_back(i);
            incidence[a.head].push_back(i);
        }
    }
};

// ----------------------------------------------------------------------------
// Edge-list text format
// ----------------------------------------------------------------------------

struct parse_options {
    /// Remove loop arcs instead of rejecting them.
    bool strip_loops = false;
    /// Receives one message per stripped loop when non-null.
    std::vector<std::string>* warnings = nullptr;
};

namespace detail {

inline vertex_id parse_vertex(std::string_view token, std::size_t line_no) {
    vertex_id v = 0;
    if (token.empty()) throw parse_error(line_no, "expected `<tail> <head>` separated by a single space");
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || p != token.data() + token.size())
        throw parse_error(line_no, "vertex id `" + std::string(token) + "` is not a non-negative integer");
    return v;
}

/// Calls `on_pair(line_no, u, v, rest)` for every non-comment, non-blank line.
/// `rest` is whatever follows the second token after a single space, or empty.
template <typename F>
void for_each_record(std::string_view text, bool allow_third, F&& on_pair) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        if (line.front() == '#') continue;

        auto sp1 = line.find(' ');
        if (sp1 == std::string_view::npos)
            throw parse_error(line_no, "expected `<tail> <head>` separated by a single space");
        std::string_view first = line.substr(0, sp1);
        std::string_view after = line.substr(sp1 + 1);
        std::string_view second = after;
        std::string_view rest;
        auto sp2 = after.find(' ');
        if (sp2 != std::string_view::npos) {
            if (!allow_third) throw parse_error(line_no, "unexpected trailing content `" + std::string(after.substr(sp2)) + "`");
            second = after.substr(0, sp2);
            rest = after.substr(sp2 + 1);
        }
        on_pair(line_no, parse_vertex(first, line_no), parse_vertex(second, line_no), rest);
    }
}

}  // namespace detail

/// Parses the edge-list format: one `<tail> <head>` per line, `#` comment
/// lines and blank lines ignored. Arc ids follow line order.
inline digraph parse_digraph(std::string_view text, const parse_options& opts = {}) {
    std::vector<arc> arcs;
    detail::for_each_record(text, false, [&](std::size_t line_no, vertex_id u, vertex_id v, std::string_view) {
        if (u == v) {
            if (!opts.strip_loops) throw parse_error(line_no, "loop arc " + std::to_string(u) + " -> " + std::to_string(v) + " is not allowed");
            if (opts.warnings)
                opts.warnings->push_back("line " + std::to_string(line_no) + ": removed loop on vertex " + std::to_string(u));
            return;
        }
        arcs.push_back({u, v});
    });
    return digraph::from_arcs(std::move(arcs));
}

/// Same format read as undirected edges.
inline undirected_graph parse_undirected(std::string_view text) {
    std::vector<edge> edges;
    std::size_t n = 0;
    detail::for_each_record(text, false, [&](std::size_t line_no, vertex_id u, vertex_id v, std::string_view) {
        if (u == v) throw parse_error(line_no, "loop edge on vertex " + std::to_string(u) + " is not allowed");
        edges.push_back({u, v});
        n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    });
    return undirected_graph(n, std::move(edges));
}

inline std::string serialize(const digraph& g) {
    std::string out;
    for (const auto& a : g.arcs()) {
        out += std::to_string(a.tail);
        out += ' ';
        out += std::to_string(a.head);
        out += '\n';
    }
    return out;
}

inline std::string serialize(const undirected_graph& u) {
    std::string out;
    for (const auto& e : u.edges()) out += std::to_string(e.a) + ' ' + std::to_string(e.b) + '\n';
    return out;
}

// ----------------------------------------------------------------------------
// Connected components
// ----------------------------------------------------------------------------

/// Induced subdigraph on one connected component, with dense local ids.
struct component {
    digraph graph;
    std::vector<vertex_id> original_vertex;  // local vertex -> input vertex
    std::vector<arc_id> original_arc;        // local arc -> input arc
};

/// Components of the underlying multigraph, ordered by smallest input vertex.
/// Local vertex ids preserve input order; so do local arc ids.
inline std::vector<component> connected_components(const digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : g.arcs()) {
        auto ra = find(a.tail), rb = find(a.head);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp_of_root(n, none);
    std::vector<std::size_t> local(n);
    std::vector<component> out;
    for (vertex_id v = 0; v < n; ++v) {
        auto r = find(v);
        if (comp_of_root[r] == none) {
            comp_of_root[r] = out.size();
            out.emplace_back();
        }
        auto& c = out[comp_of_root[r]];
        local[v] = c.original_vertex.size();
        c.original_vertex.push_back(v);
    }

    std::vector<std::vector<arc>> arcs(out.size());
    for (arc_id i = 0; i < g.arc_count(); ++i) {
        const auto& a = g[i];
        auto c = comp_of_root[find(a.tail)];
        arcs[c].push_back({static_cast<vertex_id>(local[a.tail]), static_cast<vertex_id>(local[a.head])});
        out[c].original_arc.push_back(i);
    }
    for (std::size_t c = 0; c < out.size(); ++c)
        out[c].graph = digraph(out[c].original_vertex.size(), std::move(arcs[c]));
    return out;
}

inline bool is_connected(const digraph& g) { return connected_components(g).size() <= 1; }

/// Disjoint union; vertices of `b` are shifted by a.vertex_count(), arcs of
/// `b` follow those of `a`.
inline digraph disjoint_union(const digraph& a, const digraph& b) {
    std::vector<arc> arcs(a.arcs().begin(), a.arcs().end());
    const auto shift = static_cast<vertex_id>(a.vertex_count());
    for (const auto& x : b.arcs()) arcs.push_back({x.tail + shift, x.head + shift});
    return digraph(a.vertex_count() + b.vertex_count(), std::move(arcs));
}

}  // namespace udcount
