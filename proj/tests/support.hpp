#pragma once

// Independent reference implementations used only by the tests. These avoid
// the library's validity/closure code paths and work straight from the
// definitions, so they are slow and meant for tiny graphs.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "udcount.hpp"

namespace oracle {

using namespace udcount;

/// Labelings induced by all ordered partitions of V (as rank functions
/// V -> {0..n-1}; equal ranks share a part). The set of distinct labelings is
/// exactly the set of valid labelings, so its size is #UD. n <= 7.
inline std::set<std::vector<bool>> schedule_labelings(const digraph& g) {
    const std::size_t n = g.vertex_count();
    std::set<std::vector<bool>> out;
    std::vector<std::size_t> rank(n, 0);
    while (true) {
        std::vector<bool> minus(g.arc_count());
        for (arc_id i = 0; i < g.arc_count(); ++i) minus[i] = rank[g[i].tail] < rank[g[i].head];
        out.insert(std::move(minus));
        std::size_t k = 0;
        while (k < n && ++rank[k] == n) rank[k++] = 0;
        if (k == n) break;
    }
    return out;
}

inline std::uint64_t count_by_schedules(const digraph& g) { return schedule_labelings(g).size(); }

/// Closure over (vertex, used-a-minus-arc) states of the reversed-negative
/// graph described by `minus`, by naive repeated relaxation.
struct signed_closure {
    std::size_t n;
    // reach[s][v][b]: a walk of >= 1 arc from s to v exists, b = some minus arc used
    std::vector<std::vector<std::array<bool, 2>>> reach;

    signed_closure(const digraph& g, const std::vector<bool>& minus) : n(g.vertex_count()) {
        reach.assign(n, std::vector<std::array<bool, 2>>(n, {false, false}));
        struct e { vertex_id t, h; bool m; };
        std::vector<e> es;
        for (arc_id i = 0; i < g.arc_count(); ++i)
            es.push_back(minus[i] ? e{g[i].head, g[i].tail, true} : e{g[i].tail, g[i].head, false});
        for (auto& x : es) reach[x.t][x.h][x.m] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < n; ++s)
                for (auto& x : es)
                    for (int b = 0; b < 2; ++b)
                        if (reach[s][x.t][b]) {
                            int nb = b | x.m;
                            if (!reach[s][x.h][nb]) reach[s][x.h][nb] = changed = true;
                        }
        }
    }

    /// A closed walk through a minus arc exists.
    bool valid() const {
        for (std::size_t v = 0; v < n; ++v)
            if (reach[v][v][1]) return false;
        return true;
    }

    /// 0 = plus, 1 = minus, 2 = none (for a valid labeling).
    int status(vertex_id s, vertex_id t) const {
        if (reach[s][t][1]) return 1;
        if (reach[s][t][0]) return 0;
        return 2;
    }
};

/// Class index of (forward status, backward status) in canonical order, or
/// nullopt for an impossible pair.
inline std::optional<std::size_t> class_index(int fwd, int bwd) {
    static constexpr int table[3][3] = {{0, -1, 1}, {-1, -1, 2}, {3, 4, 5}};
    const int c = table[fwd][bwd];
    if (c < 0) return std::nullopt;
    return static_cast<std::size_t>(c);
}

/// Valid labelings per class for (g, alpha, beta), straight from the
/// definitions. m <= ~14.
inline std::array<std::uint64_t, 6> class_counts(const digraph& g, vertex_id alpha, vertex_id beta) {
    std::array<std::uint64_t, 6> out{};
    const std::size_t m = g.arc_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<bool> minus(m);
        for (std::size_t i = 0; i < m; ++i) minus[i] = (mask >> i) & 1;
        signed_closure c(g, minus);
        if (!c.valid()) continue;
        auto k = class_index(c.status(alpha, beta), c.status(beta, alpha));
        if (!k) throw std::logic_error("impossible class in a valid labeling");
        ++out[*k];
    }
    return out;
}

inline std::uint64_t count_valid(const digraph& g) {
    std::uint64_t t = 0;
    for (auto c : class_counts(g, 0, g.vertex_count() > 1 ? 1 : 0)) t += c;
    return t;
}

inline std::array<std::uint64_t, 6> counts_of(const class_vector& v) {
    std::array<std::uint64_t, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = static_cast<std::uint64_t>(v.counts()[i]);
    return out;
}

/// Naive acyclic-orientation count: try every orientation and test by
/// repeated sink removal.
inline std::uint64_t acyclic_orientations(const undirected_graph& u) {
    const std::size_t m = u.edge_count();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<bool> alive(u.vertex_count(), true);
        bool progress = true;
        std::size_t left = u.vertex_count();
        while (progress && left) {
            progress = false;
            for (vertex_id v = 0; v < u.vertex_count(); ++v) {
                if (!alive[v]) continue;
                bool sink = true;
                for (std::size_t i = 0; i < m; ++i) {
                    auto e = u.edges()[i];
                    vertex_id t = (mask >> i) & 1 ? e.b : e.a, h = (mask >> i) & 1 ? e.a : e.b;
                    if (t == v && alive[h]) sink = false;
                }
                if (sink) {
                    alive[v] = false;
                    --left;
                    progress = true;
                }
            }
        }
        count += left == 0;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Composition-table regeneration from small witnesses.

/// A valid labeling of a small oss-graph with terminals 0 and 1.
struct witness {
    digraph g;
    std::vector<bool> minus;
};

/// Witnesses for each class: every multidigraph on terminals {0,1} plus up to
/// two inner vertices with 1..3 arcs, and each of its valid labelings. At
/// most `per_class` are kept per class, spread over the enumeration order.
inline std::array<std::vector<witness>, 6> class_witnesses(std::size_t per_class) {
    std::vector<arc> pairs;
    for (vertex_id a = 0; a < 4; ++a)
        for (vertex_id b = 0; b < 4; ++b)
            if (a != b) pairs.push_back({a, b});
    std::array<std::vector<witness>, 6> all;
    std::vector<std::size_t> pick;
    auto visit = [&] {
        std::vector<arc> arcs;
        vertex_id n = 2;
        for (auto i : pick) {
            arcs.push_back(pairs[i]);
            n = std::max<vertex_id>(n, std::max(pairs[i].tail, pairs[i].head) + 1);
        }
        // inner vertex 3 without vertex 2 is a relabeled duplicate
        bool uses2 = false;
        for (auto& x : arcs) uses2 |= x.tail == 2 || x.head == 2;
        if (n == 4 && !uses2) return;
        digraph g(n, arcs);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
            std::vector<bool> minus(arcs.size());
            for (std::size_t i = 0; i < arcs.size(); ++i) minus[i] = (mask >> i) & 1;
            signed_closure c(g, minus);
            if (!c.valid()) continue;
            auto k = class_index(c.status(0, 1), c.status(1, 0));
            all[*k].push_back({g, minus});
        }
    };
    // multisets of arcs of size 1..3
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        pick = {i};
        visit();
        for (std::size_t j = i; j < pairs.size(); ++j) {
            pick = {i, j};
            visit();
            for (std::size_t k = j; k < pairs.size(); ++k) {
                pick = {i, j, k};
                visit();
            }
        }
    }
    std::array<std::vector<witness>, 6> out;
    for (std::size_t c = 0; c < 6; ++c) {
        const auto& w = all[c];
        if (w.size() <= per_class) {
            out[c] = w;
            continue;
        }
        for (std::size_t i = 0; i < per_class; ++i) out[c].push_back(w[i * w.size() / per_class]);
    }
    return out;
}

enum class join { series, parallel };

/// Series: beta of `a` is identified with alpha of `b`; the result's beta is
/// the beta of `b`. Parallel: both terminals are identified. Returns the
/// joined witness and its beta id.
inline std::pair<witness, vertex_id> compose(const witness& a, const witness& b, join how) {
    const auto na = static_cast<vertex_id>(a.g.vertex_count());
    std::vector<vertex_id> map(b.g.vertex_count());
    vertex_id next = na;
    vertex_id beta = 1;
    if (how == join::series) {
        map[0] = 1;
        map[1] = next++;
        beta = map[1];
    } else {
        map[0] = 0;
        map[1] = 1;
    }
    for (vertex_id v = 2; v < map.size(); ++v) map[v] = next++;
    std::vector<arc> arcs(a.g.arcs().begin(), a.g.arcs().end());
    std::vector<bool> minus = a.minus;
    for (arc_id i = 0; i < b.g.arc_count(); ++i) {
        arcs.push_back({map[b.g[i].tail], map[b.g[i].head]});
        minus.push_back(b.minus[i]);
    }
    return {{digraph(next, std::move(arcs)), std::move(minus)}, beta};
}

/// Per cell: -2 never observed, -1 composition always invalid, 0..5 class.
struct regenerated_table {
    std::array<std::array<int, 6>, 6> cell;
    std::vector<std::string> conflicts;
};

inline regenerated_table regenerate(join how, std::size_t per_class = 16) {
    const auto w = class_witnesses(per_class);
    regenerated_table t;
    for (auto& row : t.cell) row.fill(-2);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (const auto& x : w[i])
                for (const auto& y : w[j]) {
                    auto [z, beta] = compose(x, y, how);
                    signed_closure c(z.g, z.minus);
                    int r = -1;
                    if (c.valid()) {
                        auto k = class_index(c.status(0, beta), c.status(beta, 0));
                        r = k ? static_cast<int>(*k) : -3;
                    }
                    if (t.cell[i][j] == -2) {
                        t.cell[i][j] = r;
                    } else if (t.cell[i][j] != r) {
                        t.conflicts.push_back("cell " + std::to_string(i) + "," + std::to_string(j));
                    }
                }
    return t;
}

inline int encode(const std::optional<ss_class>& c) { return c ? static_cast<int>(index_of(*c)) : -1; }

}  // namespace oracle

namespace fixtures {

using namespace udcount;

/// Cactus with blocks: graft arcs (1 + 3), directed cycles of length 3 and
/// 5, one non-directed 4-cycle. 2^4 * 7 * 31 * 14 = 48608.
inline digraph cactus16() {
    return digraph(14, {{0, 1}, {1, 2}, {2, 0},                      // directed triangle
                        {2, 3},                                      // graft
                        {3, 4}, {4, 5}, {5, 6}, {3, 6},              // 4-cycle, not directed
                        {5, 7}, {7, 8}, {9, 7},                      // grafts
                        {8, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 8}});  // directed 5-cycle
}

/// Oriented sp-graph with 216 update digraphs: a diamond (18), two bridges
/// (x4) and a 2-cycle (x3).
inline digraph osp216() {
    return digraph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {5, 4}, {0, 6}, {6, 0}});
}

/// Triangle 0->1->2->0 plus the chord 2->1.
inline digraph forbidden_cycle() { return digraph(3, {{0, 1}, {1, 2}, {2, 0}, {2, 1}}); }

inline digraph directed_cycle(std::size_t n) {
    std::vector<arc> a;
    for (vertex_id i = 0; i < n; ++i) a.push_back({i, static_cast<vertex_id>((i + 1) % n)});
    return digraph(n, std::move(a));
}

inline digraph k4() { return digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace fixtures
