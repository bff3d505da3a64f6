#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "udcount/bigint.hpp"
#include "udcount/class_vector.hpp"
#include "udcount/digraph.hpp"
#include "udcount/validity.hpp"

// Exhaustive oracles. Everything here enumerates the full 2^m space and
// shares no code path with the cactus or series-parallel counters.

namespace udcount {

/// Shared cap on exhaustive enumeration.
struct brute_limits {
    std::size_t max_arcs = 24;
};

namespace detail {

inline void check_cap(std::size_t arcs, const brute_limits& limits) {
    if (arcs > limits.max_arcs || arcs >= 64) throw cap_exceeded(arcs, std::min<std::size_t>(limits.max_arcs, 63));
}

/// Transitive closure of the reversed-negative graph for one labeling mask,
/// as 64-bit adjacency rows. Requires at most 64 vertices.
class closure_kernel {
public:
    explicit closure_kernel(const digraph& g) : g_(g), reach_(g.vertex_count()) {}

    static bool fits(const digraph& g) { return g.vertex_count() <= 64; }

    /// Bit i of `minus_mask` set means arc i is minus.
    void run(std::uint64_t minus_mask) {
        mask_ = minus_mask;
        std::fill(reach_.begin(), reach_.end(), 0);
        const auto arcs = g_.arcs();
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if ((minus_mask >> i) & 1U)
                reach_[arcs[i].head] |= bit(arcs[i].tail);
            else
                reach_[arcs[i].tail] |= bit(arcs[i].head);
        }
        const std::size_t n = reach_.size();
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t via = reach_[k];
            const std::uint64_t kb = bit(k);
            for (std::size_t i = 0; i < n; ++i)
                if (reach_[i] & kb) reach_[i] |= via;
        }
    }

    /// No minus arc (reversed: head -> tail) closes a cycle.
    bool valid() const {
        const auto arcs = g_.arcs();
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (((mask_ >> i) & 1U) && (reach_[arcs[i].tail] & bit(arcs[i].head))) return false;
        return true;
    }

    path_status status(vertex_id from, vertex_id to) const {
        if (!(reach_[from] & bit(to))) return path_status::none;
        const auto arcs = g_.arcs();
        const std::uint64_t from_set = reach_[from] | bit(from);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (!((mask_ >> i) & 1U)) continue;
            vertex_id u = arcs[i].head, v = arcs[i].tail;  // reversed orientation
            if ((from_set & bit(u)) && (v == to || (reach_[v] & bit(to)))) return path_status::minus;
        }
        return path_status::plus;
    }

private:
    static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

    const digraph& g_;
    std::vector<std::uint64_t> reach_;
    std::uint64_t mask_ = 0;
};

inline big_int count_connected_brute(const digraph& g) {
    const std::uint64_t total = std::uint64_t{1} << g.arc_count();
    std::uint64_t valid = 0;
    if (closure_kernel::fits(g)) {
        closure_kernel k(g);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            k.run(mask);
            valid += k.valid();
        }
    } else {
        for (std::uint64_t mask = 0; mask < total; ++mask) valid += is_valid(g, labeling::from_mask(g.arc_count(), mask)).valid;
    }
    return big_int(valid);
}

/// Acyclicity by repeated source peeling over a chosen subset of arcs.
class acyclicity_tester {
public:
    acyclicity_tester(std::size_t vertex_count, std::vector<arc> arcs) : arcs_(std::move(arcs)) {
        // Compress to vertices touched by some arc.
        std::vector<vertex_id> ids(vertex_count, std::numeric_limits<vertex_id>::max());
        n_ = 0;
        for (auto& a : arcs_) {
            for (auto* v : {&a.tail, &a.head}) {
                if (ids[*v] == std::numeric_limits<vertex_id>::max()) ids[*v] = static_cast<vertex_id>(n_++);
                *v = ids[*v];
            }
        }
        if (n_ <= 64)
            pred_.resize(n_);
        else
            indeg_.resize(n_), out_.resize(n_);
    }

    /// Bit i of `keep` set means arc i is present.
    bool acyclic(std::uint64_t keep) {
        if (n_ <= 64) return acyclic_small(keep);
        return acyclic_large(keep);
    }

private:
    bool acyclic_small(std::uint64_t keep) {
        std::fill(pred_.begin(), pred_.end(), 0);
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            if ((keep >> i) & 1U) pred_[arcs_[i].head] |= std::uint64_t{1} << arcs_[i].tail;
        std::uint64_t remaining = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        while (remaining) {
            std::uint64_t sources = 0;
            for (std::uint64_t r = remaining; r; r &= r - 1) {
                auto v = static_cast<std::size_t>(std::countr_zero(r));
                if (!(pred_[v] & remaining)) sources |= std::uint64_t{1} << v;
            }
            if (!sources) return false;
            remaining &= ~sources;
        }
        return true;
    }

    bool acyclic_large(std::uint64_t keep) {
        std::fill(indeg_.begin(), indeg_.end(), 0);
        for (auto& o : out_) o.clear();
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            if (!((keep >> i) & 1U)) continue;
            out_[arcs_[i].tail].push_back(arcs_[i].head);
            ++indeg_[arcs_[i].head];
        }
        std::vector<vertex_id> ready;
        for (vertex_id v = 0; v < n_; ++v)
            if (indeg_[v] == 0) ready.push_back(v);
        std::size_t peeled = 0;
        while (!ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++peeled;
            for (auto w : out_[v])
                if (--indeg_[w] == 0) ready.push_back(w);
        }
        return peeled == n_;
    }

    std::vector<arc> arcs_;
    std::size_t n_ = 0;
    std::vector<std::uint64_t> pred_;
    std::vector<std::size_t> indeg_;
    std::vector<std::vector<vertex_id>> out_;
};

}  // namespace detail

/// Number of valid labelings by exhaustive enumeration of every connected
/// component, multiplied together. The cap applies per component.
inline big_int count_valid_brute(const digraph& g, const brute_limits& limits = {}) {
    big_int product = 1;
    for (const auto& c : connected_components(g)) {
        detail::check_cap(c.graph.arc_count(), limits);
        product *= detail::count_connected_brute(c.graph);
    }
    return product;
}

/// Valid labelings of (g, alpha, beta) per class, enumerating all 2^m labelings.
inline class_vector class_vector_brute(const digraph& g, vertex_id alpha, vertex_id beta,
                                       const brute_limits& limits = {}) {
    if (alpha == beta || alpha >= g.vertex_count() || beta >= g.vertex_count())
        throw invalid_input("class vector needs two distinct endpoints inside the digraph");
    detail::check_cap(g.arc_count(), limits);
    std::array<std::uint64_t, 6> counts{};
    const std::uint64_t total = std::uint64_t{1} << g.arc_count();
    if (detail::closure_kernel::fits(g)) {
        detail::closure_kernel k(g);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            k.run(mask);
            if (!k.valid()) continue;
            auto c = make_ss_class(k.status(alpha, beta), k.status(beta, alpha));
            if (!c) throw verification_failure("valid labeling realized an impossible class");
            ++counts[index_of(*c)];
        }
    } else {
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            auto lab = labeling::from_mask(g.arc_count(), mask);
            if (is_valid(g, lab)) ++counts[index_of(classify(g, lab, alpha, beta))];
        }
    }
    class_vector v;
    for (auto c : all_ss_classes) v[c] = counts[index_of(c)];
    return v;
}

// ----------------------------------------------------------------------------
// Feedback arc sets
// ----------------------------------------------------------------------------

struct arc_subset {
    std::vector<arc_id> members;  // ascending, unique
};

inline bool is_fas(const digraph& g, const arc_subset& f) {
    std::vector<bool> removed(g.arc_count(), false);
    for (auto a : f.members) {
        if (a >= g.arc_count()) throw invalid_input("arc id " + std::to_string(a) + " is not an arc of the digraph");
        removed[a] = true;
    }
    std::vector<arc> kept;
    for (arc_id i = 0; i < g.arc_count(); ++i)
        if (!removed[i]) kept.push_back(g[i]);
    // Peel with the large-graph path so this works for any arc count.
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    std::vector<std::vector<vertex_id>> out(g.vertex_count());
    for (const auto& a : kept) {
        out[a.tail].push_back(a.head);
        ++indeg[a.head];
    }
    std::vector<vertex_id> ready;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t peeled = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++peeled;
        for (auto w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return peeled == g.vertex_count();
}

inline arc_subset plus_arcs(const labeling& lab) {
    arc_subset f;
    for (arc_id i = 0; i < lab.arc_count(); ++i)
        if (lab[i] == sign::plus) f.members.push_back(i);
    return f;
}

inline labeling labeling_with_plus_set(std::size_t arc_count, const arc_subset& f) {
    labeling lab(arc_count, sign::minus);
    for (auto a : f.members) lab[a] = sign::plus;
    return lab;
}

struct fas_census {
    big_int fas;
    big_int minimal_fas;
    big_int minimum_fas;
    std::size_t minimum_size = 0;
};

/// Counts FAS, minimal FAS and minimum-cardinality FAS over all 2^m subsets.
/// A FAS is minimal iff dropping any single member breaks the FAS property.
inline fas_census census_fas(const digraph& g, const brute_limits& limits = {}) {
    const std::size_t m = g.arc_count();
    detail::check_cap(m, limits);
    const std::uint64_t total = std::uint64_t{1} << m;
    const std::uint64_t all = total - 1;
    detail::acyclicity_tester t(g.vertex_count(), {g.arcs().begin(), g.arcs().end()});

    std::vector<bool> fas(total);
    for (std::uint64_t f = 0; f < total; ++f) fas[f] = t.acyclic(all & ~f);

    fas_census out;
    std::uint64_t n_fas = 0, n_minimal = 0, n_minimum = 0;
    std::size_t best = m + 1;
    for (std::uint64_t f = 0; f < total; ++f) {
        if (!fas[f]) continue;
        ++n_fas;
        bool minimal = true;
        for (std::uint64_t r = f; r && minimal; r &= r - 1)
            if (fas[f & ~(r & (~r + 1))]) minimal = false;
        n_minimal += minimal;
        auto size = static_cast<std::size_t>(std::popcount(f));
        if (size < best) {
            best = size;
            n_minimum = 0;
        }
        if (size == best) ++n_minimum;
    }
    out.fas = n_fas;
    out.minimal_fas = n_minimal;
    out.minimum_fas = n_minimum;
    out.minimum_size = best;
    return out;
}

// ----------------------------------------------------------------------------
// Acyclic orientations and the reduction to counting valid labelings
// ----------------------------------------------------------------------------

/// Orientations of `u` yielding an acyclic digraph, over all 2^|E| choices.
inline big_int count_acyclic_orientations(const undirected_graph& u, const brute_limits& limits = {}) {
    const std::size_t m = u.edge_count();
    detail::check_cap(m, limits);
    // Arc i is edge i as given, arc m+i its reversal; each orientation keeps one of the pair.
    std::vector<arc> both;
    for (const auto& e : u.edges()) both.push_back({e.a, e.b});
    for (const auto& e : u.edges()) both.push_back({e.b, e.a});
    if (2 * m > 64) throw cap_exceeded(m, 32);
    detail::acyclicity_tester t(u.vertex_count(), both);

    const std::uint64_t total = std::uint64_t{1} << m;
    const std::uint64_t all = total - 1;
    std::uint64_t count = 0;
    for (std::uint64_t flip = 0; flip < total; ++flip) {
        std::uint64_t keep = (all & ~flip) | (m == 0 ? 0 : flip << m);
        count += t.acyclic(keep);
    }
    return big_int(count);
}

/// Orients every edge from the smaller to the larger vertex id. The result
/// is acyclic and its valid labelings correspond one-to-one with the
/// acyclic orientations of `u`.
inline digraph orient_by_order(const undirected_graph& u) {
    std::vector<arc> arcs;
    arcs.reserve(u.edge_count());
    for (const auto& e : u.edges()) arcs.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
    return digraph(u.vertex_count(), std::move(arcs));
}

}  // namespace udcount
