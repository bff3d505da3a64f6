#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "udcount/digraph.hpp"

namespace udcount {

enum class block_kind : std::uint8_t { bridge, cycle, other };

inline const char* to_string(block_kind k) {
    switch (k) {
        case block_kind::bridge: return "bridge";
        case block_kind::cycle: return "cycle";
        case block_kind::other: return "other-2-connected";
    }
    return "?";
}

struct block {
    std::size_t id = 0;
    std::vector<arc_id> edges;       // ascending
    std::vector<vertex_id> vertices; // ascending
    block_kind kind = block_kind::other;
};

/// Block / cut-vertex decomposition of an undirected multigraph. Parallel
/// edges are never bridges: two of them between the same pair form a
/// 2-cycle block.
struct block_decomposition {
    std::vector<block> blocks;
    std::vector<vertex_id> cut_vertices;                 // ascending
    std::vector<std::vector<std::size_t>> blocks_of_vertex;  // vertex -> block ids, ascending
    std::vector<std::size_t> block_of_edge;

    bool is_cut_vertex(vertex_id v) const { return blocks_of_vertex[v].size() > 1; }

    /// Cut vertices of one block, i.e. its neighbours in the block-cut tree.
    std::vector<vertex_id> cut_vertices_of(std::size_t block_id) const {
        std::vector<vertex_id> out;
        for (auto v : blocks[block_id].vertices)
            if (is_cut_vertex(v)) out.push_back(v);
        return out;
    }
};

/// Hopcroft-Tarjan biconnected components with an explicit stack. Tree edges
/// are skipped by edge id rather than by parent vertex, which is what makes
/// parallel edges count as back edges.
inline block_decomposition biconnected_blocks(const underlying_multigraph& u) {
    const std::size_t n = u.vertex_count;
    constexpr std::uint32_t unvisited = static_cast<std::uint32_t>(-1);
    constexpr arc_id no_edge = static_cast<arc_id>(-1);

    std::vector<std::uint32_t> disc(n, unvisited), low(n, 0);
    std::vector<arc_id> edge_stack;
    std::uint32_t clock = 0;

    struct frame {
        vertex_id v;
        arc_id parent_edge;
        std::size_t next;
    };
    std::vector<frame> frames;

    block_decomposition out;
    out.block_of_edge.assign(u.edges.size(), 0);

    auto emit_block = [&](arc_id last) {
        block b;
        b.id = out.blocks.size();
        while (true) {
            arc_id e = edge_stack.back();
            edge_stack.pop_back();
            b.edges.push_back(e);
            if (e == last) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        for (auto e : b.edges) {
            b.vertices.push_back(u.edges[e].a);
            b.vertices.push_back(u.edges[e].b);
            out.block_of_edge[e] = b.id;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        if (b.edges.size() == 1)
            b.kind = block_kind::bridge;
        else if (b.edges.size() == b.vertices.size())
            b.kind = block_kind::cycle;  // 2-connected with |E| = |V|
        else
            b.kind = block_kind::other;
        out.blocks.push_back(std::move(b));
    };

    for (vertex_id root = 0; root < n; ++root) {
        if (disc[root] != unvisited) continue;
        disc[root] = low[root] = clock++;
        frames.push_back({root, no_edge, 0});
        while (!frames.empty()) {
            auto& f = frames.back();
            const vertex_id v = f.v;
            if (f.next < u.incidence[v].size()) {
                arc_id e = u.incidence[v][f.next++];
                if (e == f.parent_edge) continue;
                vertex_id w = u.edges[e].other(v);
                if (disc[w] == unvisited) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = clock++;
                    frames.push_back({w, e, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const arc_id pe = f.parent_edge;
            frames.pop_back();
            if (frames.empty()) break;
            const vertex_id p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) emit_block(pe);
        }
    }

    out.blocks_of_vertex.assign(n, {});
    for (const auto& b : out.blocks)
        for (auto v : b.vertices) out.blocks_of_vertex[v].push_back(b.id);
    for (vertex_id v = 0; v < n; ++v)
        if (out.blocks_of_vertex[v].size() > 1) out.cut_vertices.push_back(v);
    return out;
}

inline block_decomposition biconnected_blocks(const digraph& g) {
    return biconnected_blocks(underlying_multigraph(g));
}

}  // namespace udcount
