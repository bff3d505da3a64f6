#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "udcount/bigint.hpp"
#include "udcount/blocks.hpp"
#include "udcount/cactus.hpp"
#include "udcount/class_vector.hpp"
#include "udcount/digraph.hpp"

namespace udcount {

enum class sp_node_kind : std::uint8_t { leaf, series, parallel, free };

inline const char* to_string(sp_node_kind k) {
    switch (k) {
        case sp_node_kind::leaf: return "leaf";
        case sp_node_kind::series: return "s";
        case sp_node_kind::parallel: return "p";
        case sp_node_kind::free: return "f";
    }
    return "?";
}

struct sp_node {
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    sp_node_kind kind = sp_node_kind::leaf;
    /// Label: the endpoint pair for leaf/s/p nodes; for an f-node the two
    /// identified vertices (one from each child).
    vertex_id first = 0;
    vertex_id second = 0;
    std::size_t left = none;
    std::size_t right = none;
    arc_id arc = 0;                                 // leaves only
    orientation orient = orientation::forward;      // leaves only
};

/// Binary decomposition tree stored bottom-up: every child index is smaller
/// than its parent's, so a forward scan visits children first.
class sp_tree {
public:
    std::size_t add_leaf(arc_id a, vertex_id first, vertex_id second, orientation o = orientation::forward) {
        sp_node n;
        n.kind = sp_node_kind::leaf;
        n.first = first;
        n.second = second;
        n.arc = a;
        n.orient = o;
        return push(n);
    }

    /// Series node labelled (first, second); `left` must contain `first`.
    std::size_t add_series(std::size_t left, std::size_t right, vertex_id first, vertex_id second) {
        return push_inner(sp_node_kind::series, left, right, first, second);
    }

    std::size_t add_parallel(std::size_t left, std::size_t right, vertex_id first, vertex_id second) {
        return push_inner(sp_node_kind::parallel, left, right, first, second);
    }

    /// Free composition joining `at_left` of the left child with `at_right`
    /// of the right child. Endpoints are inherited from the left child.
    std::size_t add_free(std::size_t left, std::size_t right, vertex_id at_left, vertex_id at_right) {
        return push_inner(sp_node_kind::free, left, right, at_left, at_right);
    }

    void set_root(std::size_t r) { root_ = r; }
    std::size_t root() const noexcept { return root_; }
    std::span<const sp_node> nodes() const noexcept { return nodes_; }
    const sp_node& operator[](std::size_t i) const { return nodes_.at(i); }
    std::size_t size() const noexcept { return nodes_.size(); }
    bool empty() const noexcept { return nodes_.empty(); }

private:
    std::size_t push(const sp_node& n) {
        nodes_.push_back(n);
        root_ = nodes_.size() - 1;
        return root_;
    }

    std::size_t push_inner(sp_node_kind k, std::size_t left, std::size_t right, vertex_id first, vertex_id second) {
        if (left >= nodes_.size() || right >= nodes_.size() || left == right)
            throw invalid_input("sp-tree children must be distinct existing nodes");
        sp_node n;
        n.kind = k;
        n.first = first;
        n.second = second;
        n.left = left;
        n.right = right;
        return push(n);
    }

    std::vector<sp_node> nodes_;
    std::size_t root_ = sp_node::none;
};

struct sp_evaluation {
    class_vector root_vector;
    big_int total;
    /// Endpoints the root vector refers to.
    vertex_id alpha = 0;
    vertex_id beta = 0;
    /// Per-node vectors relative to each node's endpoints (only when requested).
    std::vector<class_vector> node_vectors;
};

namespace detail {

struct aligned {
    class_vector vec;
    vertex_id other;  // endpoint opposite the requested one
};

/// Returns `v` re-expressed so that `start` is its first endpoint.
inline std::optional<aligned> align_from(const class_vector& v, std::pair<vertex_id, vertex_id> ends, vertex_id start) {
    if (ends.first == start) return aligned{v, ends.second};
    if (ends.second == start) return aligned{swap_endpoints(v), ends.first};
    return std::nullopt;
}

}  // namespace detail

/// Bottom-up evaluation of the six-class vectors. Children of s- and
/// p-nodes are re-oriented to the parent's label before composing.
inline sp_evaluation evaluate_sp(const sp_tree& tree, bool keep_node_vectors = false) {
    if (tree.empty()) throw invalid_input("empty sp-tree");
    const auto nodes = tree.nodes();
    const std::size_t n = nodes.size();
    std::vector<class_vector> vec(n);
    std::vector<std::pair<vertex_id, vertex_id>> ends(n);
    std::vector<std::unordered_set<vertex_id>> verts(n);

    auto malformed = [](std::size_t i, const std::string& why) {
        return invalid_input("malformed sp-tree at node " + std::to_string(i) + ": " + why);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto& nd = nodes[i];
        if (nd.kind != sp_node_kind::leaf && (nd.left >= i || nd.right >= i))
            throw malformed(i, "children must precede their parent");
        switch (nd.kind) {
            case sp_node_kind::leaf:
                if (nd.first == nd.second) throw malformed(i, "leaf endpoints coincide");
                vec[i] = leaf_vector(nd.orient);
                ends[i] = {nd.first, nd.second};
                verts[i] = {nd.first, nd.second};
                break;
            case sp_node_kind::series: {
                auto l = detail::align_from(vec[nd.left], ends[nd.left], nd.first);
                if (!l) throw malformed(i, "left child does not end at the series node's first endpoint");
                auto r = detail::align_from(vec[nd.right], ends[nd.right], l->other);
                if (!r || r->other != nd.second || l->other == nd.first || l->other == nd.second)
                    throw malformed(i, "children do not meet at a middle vertex");
                vec[i] = compose_series(l->vec, r->vec);
                ends[i] = {nd.first, nd.second};
                break;
            }
            case sp_node_kind::parallel: {
                auto l = detail::align_from(vec[nd.left], ends[nd.left], nd.first);
                auto r = detail::align_from(vec[nd.right], ends[nd.right], nd.first);
                if (!l || !r || l->other != nd.second || r->other != nd.second)
                    throw malformed(i, "children do not share the parallel node's endpoints");
                vec[i] = compose_parallel(l->vec, r->vec);
                ends[i] = {nd.first, nd.second};
                break;
            }
            case sp_node_kind::free:
                if (!verts[nd.left].contains(nd.first) || !verts[nd.right].contains(nd.second))
                    throw malformed(i, "free composition vertices do not belong to their children");
                vec[i] = compose_free(vec[nd.left], vec[nd.right].total());
                ends[i] = ends[nd.left];
                break;
        }
        if (nd.kind != sp_node_kind::leaf) {
            // Small-to-large merge of vertex sets.
            auto& a = verts[nd.left];
            auto& b = verts[nd.right];
            if (a.size() < b.size()) std::swap(a, b);
            a.insert(b.begin(), b.end());
            verts[i] = std::move(a);
            std::unordered_set<vertex_id>().swap(b);
            if (!keep_node_vectors) {
                vec[nd.left] = class_vector{};
                vec[nd.right] = class_vector{};
            }
        }
    }

    const std::size_t r = tree.root();
    if (r >= n) throw invalid_input("sp-tree has no root");
    sp_evaluation out;
    out.root_vector = vec[r];
    out.total = out.root_vector.total();
    out.alpha = ends[r].first;
    out.beta = ends[r].second;
    if (keep_node_vectors) out.node_vectors = std::move(vec);
    return out;
}

struct sp_options {
    /// When set, series reductions are taken in a pseudo-random order.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

/// Series/parallel reduction of one 2-connected block down to a single
/// edge, recording the ttsp-tree. Returns the root node, or nullopt when the
/// block is irreducible.
class block_reducer {
public:
    block_reducer(const digraph& g, sp_tree& tree, const sp_options& opts) : g_(g), tree_(tree), opts_(opts) {}

    std::optional<std::size_t> reduce(const block& b) {
        edges_.clear();
        by_pair_.clear();
        live_ = 0;
        local_.clear();
        inc_.clear();
        deg_.clear();
        for (auto v : b.vertices) {
            local_.emplace(v, static_cast<std::uint32_t>(inc_.size()));
            inc_.emplace_back();
            deg_.push_back(0);
        }
        for (arc_id a : b.edges) add(g_[a].tail, g_[a].head, tree_.add_leaf(a, g_[a].tail, g_[a].head));

        std::vector<vertex_id> work;
        for (auto v : b.vertices)
            if (deg_[local_.at(v)] == 2) work.push_back(v);
        std::mt19937_64 rng(opts_.shuffle_seed.value_or(0));
        if (opts_.shuffle_seed) std::shuffle(work.begin(), work.end(), rng);
        std::deque<vertex_id> queue(work.begin(), work.end());

        while (live_ > 1 && !queue.empty()) {
            vertex_id v;
            if (opts_.shuffle_seed) {
                std::size_t k = static_cast<std::size_t>(rng() % queue.size());
                v = queue[k];
                queue[k] = queue.back();
                queue.pop_back();
            } else {
                v = queue.front();
                queue.pop_front();
            }
            const auto lv = local_.at(v);
            if (deg_[lv] != 2) continue;

            auto& inc = inc_[lv];
            std::erase_if(inc, [&](std::uint32_t e) { return !edges_[e].live; });
            const std::uint32_t e1 = inc[0], e2 = inc[1];
            const vertex_id x = other(e1, v), y = other(e2, v);
            kill(e1);
            kill(e2);
            const std::size_t s = tree_.add_series(edges_[e1].node, edges_[e2].node, x, y);
            add(x, y, s);
            for (auto w : {x, y})
                if (deg_[local_.at(w)] == 2) queue.push_back(w);
        }
        if (live_ != 1) return std::nullopt;
        for (const auto& e : edges_)
            if (e.live) return e.node;
        return std::nullopt;
    }

private:
    struct virtual_edge {
        vertex_id a;
        vertex_id b;
        std::size_t node;
        bool live;
    };

    static std::uint64_t key(vertex_id a, vertex_id b) {
        return (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    }

    vertex_id other(std::uint32_t e, vertex_id v) const { return edges_[e].a == v ? edges_[e].b : edges_[e].a; }

    void kill(std::uint32_t e) {
        auto& ve = edges_[e];
        ve.live = false;
        --live_;
        --deg_[local_.at(ve.a)];
        --deg_[local_.at(ve.b)];
        by_pair_.erase(key(ve.a, ve.b));
    }

    /// Adds an edge, merging it into an existing parallel edge if any.
    void add(vertex_id a, vertex_id b, std::size_t node) {
        auto k = key(a, b);
        if (auto it = by_pair_.find(k); it != by_pair_.end()) {
            auto& ve = edges_[it->second];
            ve.node = tree_.add_parallel(ve.node, node, ve.a, ve.b);
            return;
        }
        const auto id = static_cast<std::uint32_t>(edges_.size());
        edges_.push_back({a, b, node, true});
        by_pair_.emplace(k, id);
        ++live_;
        for (auto v : {a, b}) {
            auto lv = local_.at(v);
            inc_[lv].push_back(id);
            ++deg_[lv];
        }
    }

    const digraph& g_;
    sp_tree& tree_;
    const sp_options& opts_;
    std::vector<virtual_edge> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> by_pair_;
    std::unordered_map<vertex_id, std::uint32_t> local_;
    std::vector<std::vector<std::uint32_t>> inc_;
    std::vector<std::size_t> deg_;
    std::size_t live_ = 0;
};

}  // namespace detail

/// Builds an sp-tree for a connected digraph whose 2-connected blocks are all
/// series-parallel. Blocks are reduced independently; bridges become leaves;
/// block trees are then chained with f-nodes in breadth-first order over the
/// block-cut tree, starting from the first non-bridge block.
inline std::variant<sp_tree, block_report> recognize_sp(const digraph& g, const sp_options& opts = {}) {
    detail::require_connected(g, "series-parallel recognition");
    if (g.arc_count() == 0) throw invalid_input("series-parallel decomposition needs at least one arc");

    const underlying_multigraph u(g);
    const auto bd = biconnected_blocks(u);
    sp_tree tree;
    detail::block_reducer reducer(g, tree, opts);

    std::vector<std::size_t> root_of(bd.blocks.size());
    for (const auto& b : bd.blocks) {
        if (b.kind == block_kind::bridge) {
            const arc_id a = b.edges.front();
            root_of[b.id] = tree.add_leaf(a, g[a].tail, g[a].head);
            continue;
        }
        auto r = reducer.reduce(b);
        if (!r)
            return block_report{b.id, b.kind, b.edges,
                                "2-connected block with " + std::to_string(b.edges.size()) + " edges on " +
                                    std::to_string(b.vertices.size()) +
                                    " vertices is not series-parallel reducible"};
        root_of[b.id] = *r;
    }

    std::size_t start = 0;
    for (const auto& b : bd.blocks)
        if (b.kind != block_kind::bridge) {
            start = b.id;
            break;
        }

    std::vector<bool> seen(bd.blocks.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t current = root_of[start];
    while (!queue.empty()) {
        const auto bid = queue.front();
        queue.pop_front();
        for (auto v : bd.blocks[bid].vertices) {
            if (!bd.is_cut_vertex(v)) continue;
            for (auto other : bd.blocks_of_vertex[v]) {
                if (seen[other]) continue;
                seen[other] = true;
                current = tree.add_free(current, root_of[other], v, v);
                queue.push_back(other);
            }
        }
    }
    tree.set_root(current);
    return tree;
}

/// Indented text dump, one node per line, children below their parent.
/// `names` maps tree vertex ids to printed ids when non-empty.
inline std::string dump_sp(const sp_tree& tree, const sp_evaluation& eval, std::span<const vertex_id> names = {}) {
    auto name = [&](vertex_id v) { return std::to_string(names.empty() ? v : names[v]); };
    std::string out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{tree.root(), 0}};
    while (!stack.empty()) {
        auto [i, depth] = stack.back();
        stack.pop_back();
        const auto& nd = tree[i];
        out.append(2 * depth, ' ');
        out += to_string(nd.kind);
        out += " (" + name(nd.first) + "," + name(nd.second) + ")";
        if (nd.kind == sp_node_kind::leaf)
            out += std::string(" arc=") + std::to_string(nd.arc) +
                   (nd.orient == orientation::forward ? " forward" : " backward");
        if (i < eval.node_vectors.size()) {
            const auto& v = eval.node_vectors[i];
            out += " total=" + to_decimal(v.total()) + " vector=(";
            for (std::size_t k = 0; k < 6; ++k) out += (k ? "," : "") + to_decimal(v.counts()[k]);
            out += ")";
        }
        out += '\n';
        if (nd.kind != sp_node_kind::leaf) {
            stack.push_back({nd.right, depth + 1});
            stack.push_back({nd.left, depth + 1});
        }
    }
    return out;
}

}  // namespace udcount
