#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udcount/digraph.hpp"

// Deterministic instance generators. Draws use raw mt19937_64 output (not
// std distributions) so a seed yields the same graph on every platform.

namespace udcount::generate {

enum class kind { cactus, sp, random, tournament, bidirected_cycle };

inline kind parse_kind(std::string_view s) {
    if (s == "cactus") return kind::cactus;
    if (s == "sp") return kind::sp;
    if (s == "random") return kind::random;
    if (s == "tournament") return kind::tournament;
    if (s == "bidirected-cycle") return kind::bidirected_cycle;
    throw invalid_input("unknown generator `" + std::string(s) +
                        "` (expected cactus, sp, random, tournament or bidirected-cycle)");
}

class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    bool coin() { return (engine_() >> 63) != 0; }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

namespace detail {
inline arc oriented(rng& r, vertex_id a, vertex_id b) { return r.coin() ? arc{a, b} : arc{b, a}; }

inline void require_size(std::size_t size) {
    if (size < 1) throw invalid_input("generator size must be at least 1");
}
}  // namespace detail

/// Oriented cactus with exactly `arcs` arcs: bridges and cycles of length
/// 2..8 hung off random existing vertices. About a third of the cycles are
/// made directed.
inline digraph cactus(std::size_t arcs, std::uint64_t seed) {
    detail::require_size(arcs);
    rng r(seed);
    std::vector<arc> out;
    vertex_id n = 1;
    while (out.size() < arcs) {
        const std::size_t remaining = arcs - out.size();
        const vertex_id anchor = static_cast<vertex_id>(r.below(n));
        if (remaining >= 2 && r.chance(3, 5)) {
            const std::size_t len = 2 + r.below(std::min<std::size_t>(remaining, 8) - 1);
            std::vector<vertex_id> ring{anchor};
            for (std::size_t i = 1; i < len; ++i) ring.push_back(n++);
            const bool directed = r.chance(1, 3);
            const bool reverse = r.coin();
            for (std::size_t i = 0; i < len; ++i) {
                vertex_id a = ring[i], b = ring[(i + 1) % len];
                if (directed)
                    out.push_back(reverse ? arc{b, a} : arc{a, b});
                else
                    out.push_back(detail::oriented(r, a, b));
            }
        } else {
            out.push_back(detail::oriented(r, anchor, n++));
        }
    }
    return digraph(n, std::move(out));
}

/// Oriented series-parallel multigraph with exactly `arcs` arcs. Blocks of
/// up to 40 arcs are grown from random series/parallel splits between an
/// existing vertex and a fresh one, so blocks meet only at single vertices.
inline digraph sp(std::size_t arcs, std::uint64_t seed) {
    detail::require_size(arcs);
    rng r(seed);
    std::vector<arc> out;
    vertex_id n = 1;
    struct task {
        std::size_t edges;
        vertex_id a;
        vertex_id b;
    };
    std::vector<task> work;
    while (out.size() < arcs) {
        const std::size_t remaining = arcs - out.size();
        const std::size_t block = 1 + r.below(std::min<std::size_t>(remaining, 40));
        const vertex_id anchor = static_cast<vertex_id>(r.below(n));
        work.push_back({block, anchor, n++});
        while (!work.empty()) {
            task t = work.back();
            work.pop_back();
            if (t.edges == 1) {
                out.push_back(detail::oriented(r, t.a, t.b));
                continue;
            }
            const std::size_t left = 1 + r.below(t.edges - 1);
            if (r.coin()) {
                const vertex_id mid = n++;
                work.push_back({t.edges - left, mid, t.b});
                work.push_back({left, t.a, mid});
            } else {
                work.push_back({t.edges - left, t.a, t.b});
                work.push_back({left, t.a, t.b});
            }
        }
    }
    return digraph(n, std::move(out));
}

/// `arcs` arcs between uniformly chosen distinct endpoints on
/// max(2, arcs/2 + 1) vertices. Not necessarily connected.
inline digraph random(std::size_t arcs, std::uint64_t seed) {
    detail::require_size(arcs);
    rng r(seed);
    const std::size_t n = std::max<std::size_t>(2, arcs / 2 + 1);
    std::vector<arc> out;
    while (out.size() < arcs) {
        auto a = static_cast<vertex_id>(r.below(n));
        auto b = static_cast<vertex_id>(r.below(n - 1));
        if (b >= a) ++b;
        out.push_back({a, b});
    }
    return digraph(n, std::move(out));
}

/// Transitive tournament on `vertices` vertices under a random ranking:
/// each pair is oriented from the lower-ranked to the higher-ranked vertex.
/// (Cyclic tournaments do not have n! update digraphs; the directed
/// 3-cycle already has 7.)
inline digraph tournament(std::size_t vertices, std::uint64_t seed) {
    detail::require_size(vertices);
    rng r(seed);
    std::vector<vertex_id> rank(vertices);
    for (vertex_id i = 0; i < vertices; ++i) rank[i] = i;
    for (std::size_t i = vertices; i > 1; --i) std::swap(rank[i - 1], rank[r.below(i)]);
    std::vector<arc> out;
    for (vertex_id i = 0; i < vertices; ++i)
        for (vertex_id j = i + 1; j < vertices; ++j) out.push_back(rank[i] < rank[j] ? arc{i, j} : arc{j, i});
    return digraph(vertices, std::move(out));
}

/// Arcs i -> i+1 and i+1 -> i around a ring; two vertices give one 2-cycle.
inline digraph bidirected_cycle(std::size_t vertices) {
    detail::require_size(vertices);
    std::vector<arc> out;
    if (vertices == 2) {
        out = {{0, 1}, {1, 0}};
    } else if (vertices > 2) {
        for (vertex_id i = 0; i < vertices; ++i) {
            auto j = static_cast<vertex_id>((i + 1) % vertices);
            out.push_back({i, j});
            out.push_back({j, i});
        }
    }
    return digraph(vertices, std::move(out));
}

inline digraph make(kind k, std::size_t size, std::uint64_t seed) {
    switch (k) {
        case kind::cactus: return cactus(size, seed);
        case kind::sp: return sp(size, seed);
        case kind::random: return random(size, seed);
        case kind::tournament: return tournament(size, seed);
        case kind::bidirected_cycle: return bidirected_cycle(size);
    }
    throw invalid_input("unknown generator");
}

}  // namespace udcount::generate
