#pragma once

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "udcount/bigint.hpp"
#include "udcount/blocks.hpp"
#include "udcount/digraph.hpp"

namespace udcount {

/// Arcs of an oriented cactus split into bridge arcs and cycle blocks.
/// Bridge arcs are pooled: only their total count matters.
struct cactus_skeleton {
    std::vector<arc_id> graft_arcs;
    std::vector<std::vector<arc_id>> directed_cycles;   // arcs in walk order
    std::vector<std::vector<arc_id>> undirected_cycles; // arcs in walk order
};

/// Names the first block that disqualifies a recognizer.
struct block_report {
    std::size_t block_id = 0;
    block_kind kind = block_kind::other;
    std::vector<arc_id> arcs;
    std::string reason;
};

namespace detail {

inline void require_connected(const digraph& g, const char* what) {
    if (!is_connected(g))
        throw invalid_input(std::string(what) + " needs a connected digraph; split it into components first");
}

/// Walks a cycle block once; returns its arcs in walk order and whether they
/// are all oriented the same way along the walk.
inline std::pair<std::vector<arc_id>, bool> walk_cycle(const digraph& g, const underlying_multigraph& u,
                                                        const block& b, const std::vector<std::size_t>& block_of_edge) {
    std::vector<arc_id> order;
    order.reserve(b.edges.size());
    const arc_id first = b.edges.front();
    vertex_id at = g[first].tail;
    arc_id via = first;
    bool all_forward = true, all_backward = true;
    for (std::size_t step = 0; step < b.edges.size(); ++step) {
        order.push_back(via);
        const bool forward = g[via].tail == at;
        all_forward &= forward;
        all_backward &= !forward;
        at = u.edges[via].other(at);
        if (step + 1 == b.edges.size()) break;
        arc_id next = via;
        for (arc_id e : u.incidence[at])
            if (e != via && block_of_edge[e] == b.id) {
                next = e;
                break;
            }
        via = next;
    }
    return {std::move(order), all_forward || all_backward};
}

}  // namespace detail

/// Succeeds iff every block of the underlying multigraph is a bridge or a
/// simple cycle. Cycle blocks are directed when all arcs follow one rotation.
inline std::variant<cactus_skeleton, block_report> recognize_cactus(const digraph& g) {
    detail::require_connected(g, "cactus recognition");
    const underlying_multigraph u(g);
    const auto bd = biconnected_blocks(u);
    cactus_skeleton sk;
    for (const auto& b : bd.blocks) {
        switch (b.kind) {
            case block_kind::bridge:
                sk.graft_arcs.push_back(b.edges.front());
                break;
            case block_kind::cycle: {
                auto [order, directed] = detail::walk_cycle(g, u, b, bd.block_of_edge);
                (directed ? sk.directed_cycles : sk.undirected_cycles).push_back(std::move(order));
                break;
            }
            case block_kind::other:
                return block_report{b.id, b.kind, b.edges,
                                    "block with " + std::to_string(b.edges.size()) + " edges on " +
                                        std::to_string(b.vertices.size()) + " vertices is not a simple cycle"};
        }
    }
    std::sort(sk.graft_arcs.begin(), sk.graft_arcs.end());
    return sk;
}

/// 2^(bridge arcs) * prod over directed cycles (2^k - 1) * prod over the
/// other cycles (2^k - 2).
inline big_int count_cactus(const cactus_skeleton& sk) {
    big_int r = pow2(sk.graft_arcs.size());
    for (const auto& c : sk.directed_cycles) r *= pow2(c.size()) - 1;
    for (const auto& c : sk.undirected_cycles) r *= pow2(c.size()) - 2;
    return r;
}

}  // namespace udcount
