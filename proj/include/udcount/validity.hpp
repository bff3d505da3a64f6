#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udcount/digraph.hpp"

namespace udcount {

enum class sign : std::uint8_t { plus, minus };

inline char to_char(sign s) { return s == sign::plus ? '+' : '-'; }

/// Total map arc id -> {plus, minus}. `size()` is the number of plus labels.
class labeling {
public:
    labeling() = default;
    explicit labeling(std::vector<sign> labels) : labels_(std::move(labels)) {}
    labeling(std::size_t arc_count, sign fill) : labels_(arc_count, fill) {}

    /// Bit i of `mask` set means arc i is minus.
    static labeling from_mask(std::size_t arc_count, std::uint64_t mask) {
        std::vector<sign> l(arc_count);
        for (std::size_t i = 0; i < arc_count; ++i) l[i] = (mask >> i) & 1U ? sign::minus : sign::plus;
        return labeling(std::move(l));
    }

    std::size_t arc_count() const noexcept { return labels_.size(); }
    sign operator[](arc_id a) const { return labels_.at(a); }
    sign& operator[](arc_id a) { return labels_.at(a); }
    std::size_t size() const {
        return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), sign::plus));
    }
    const std::vector<sign>& labels() const noexcept { return labels_; }

    friend bool operator==(const labeling&, const labeling&) = default;
    friend auto operator<=>(const labeling&, const labeling&) = default;

private:
    std::vector<sign> labels_;
};

struct signed_arc {
    vertex_id tail;
    vertex_id head;
    sign label;
};

/// The digraph with every minus arc flipped; arcs keep their ids and labels.
struct reversed_negative_graph {
    std::size_t vertex_count = 0;
    std::vector<signed_arc> arcs;
};

inline reversed_negative_graph reversed_negative(const digraph& g, const labeling& lab) {
    if (lab.arc_count() != g.arc_count())
        throw invalid_input("labeling covers " + std::to_string(lab.arc_count()) + " arcs, digraph has " +
                            std::to_string(g.arc_count()));
    reversed_negative_graph rg{g.vertex_count(), {}};
    rg.arcs.reserve(g.arc_count());
    for (arc_id i = 0; i < g.arc_count(); ++i) {
        const auto& a = g[i];
        if (lab[i] == sign::plus)
            rg.arcs.push_back({a.tail, a.head, sign::plus});
        else
            rg.arcs.push_back({a.head, a.tail, sign::minus});
    }
    return rg;
}

namespace detail {

inline std::vector<std::vector<arc_id>> out_lists(const reversed_negative_graph& rg) {
    std::vector<std::vector<arc_id>> out(rg.vertex_count);
    for (arc_id i = 0; i < rg.arcs.size(); ++i) out[rg.arcs[i].tail].push_back(i);
    return out;
}

/// Iterative Tarjan; returns the SCC index of every vertex.
inline std::vector<std::uint32_t> scc_ids(const reversed_negative_graph& rg,
                                          const std::vector<std::vector<arc_id>>& out) {
    const std::size_t n = rg.vertex_count;
    constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<vertex_id> stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::pair<vertex_id, std::size_t>> call;
    std::uint32_t clock = 0, comps = 0;

    for (vertex_id s = 0; s < n; ++s) {
        if (index[s] != unset) continue;
        call.push_back({s, 0});
        index[s] = low[s] = clock++;
        stack.push_back(s);
        on_stack[s] = true;
        while (!call.empty()) {
            auto& [v, it] = call.back();
            if (it < out[v].size()) {
                vertex_id w = rg.arcs[out[v][it++]].head;
                if (index[w] == unset) {
                    index[w] = low[w] = clock++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const vertex_id done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                vertex_id w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != done);
                ++comps;
            }
        }
    }
    return comp;
}

}  // namespace detail

struct validity_result {
    bool valid = true;
    /// Forbidden cycle as arc ids, in traversal order of the reversed-negative
    /// graph; empty when valid.
    std::vector<arc_id> witness;

    explicit operator bool() const noexcept { return valid; }
};

/// A labeling is invalid iff some minus arc of the reversed-negative graph has
/// both endpoints in one strongly connected component.
inline validity_result is_valid(const digraph& g, const labeling& lab) {
    const auto rg = reversed_negative(g, lab);
    const auto out = detail::out_lists(rg);
    const auto comp = detail::scc_ids(rg, out);

    for (arc_id i = 0; i < rg.arcs.size(); ++i) {
        const auto& a = rg.arcs[i];
        if (a.label != sign::minus || comp[a.tail] != comp[a.head]) continue;

        // Close the cycle with a BFS path head -> tail inside the SCC.
        const auto c = comp[a.tail];
        constexpr arc_id none = static_cast<arc_id>(-1);
        std::vector<arc_id> via(rg.vertex_count, none);
        std::vector<bool> seen(rg.vertex_count, false);
        std::deque<vertex_id> q{a.head};
        seen[a.head] = true;
        while (!q.empty() && !seen[a.tail]) {
            vertex_id v = q.front();
            q.pop_front();
            for (arc_id e : out[v]) {
                vertex_id w = rg.arcs[e].head;
                if (comp[w] != c || seen[w]) continue;
                seen[w] = true;
                via[w] = e;
                q.push_back(w);
            }
        }
        std::vector<arc_id> path;
        for (vertex_id v = a.tail; v != a.head; v = rg.arcs[via[v]].tail) path.push_back(via[v]);
        validity_result r{false, {i}};
        r.witness.insert(r.witness.end(), path.rbegin(), path.rend());
        return r;
    }
    return {};
}

struct reachability {
    bool reachable = false;
    bool via_negative = false;
};

/// Path existence src -> dst in `rg`, and whether some such path uses a minus
/// arc. BFS over (vertex, seen-minus) states. A path has at least one arc.
inline reachability negreach(const reversed_negative_graph& rg, vertex_id src, vertex_id dst) {
    const auto out = detail::out_lists(rg);
    std::vector<std::array<bool, 2>> seen(rg.vertex_count, {false, false});
    std::deque<std::pair<vertex_id, int>> q;
    for (arc_id e : out.at(src)) {
        int b = rg.arcs[e].label == sign::minus ? 1 : 0;
        vertex_id w = rg.arcs[e].head;
        if (!seen[w][b]) {
            seen[w][b] = true;
            q.push_back({w, b});
        }
    }
    while (!q.empty()) {
        auto [v, b] = q.front();
        q.pop_front();
        for (arc_id e : out[v]) {
            int nb = b | (rg.arcs[e].label == sign::minus ? 1 : 0);
            vertex_id w = rg.arcs[e].head;
            if (!seen[w][nb]) {
                seen[w][nb] = true;
                q.push_back({w, nb});
            }
        }
    }
    return {seen.at(dst)[0] || seen[dst][1], seen[dst][1]};
}

// ----------------------------------------------------------------------------
// Six-class partition relative to endpoints (alpha, beta)
// ----------------------------------------------------------------------------

/// Path status in one direction: `none` = no path, `plus` = paths exist and
/// all are positive, `minus` = some path is negative.
enum class path_status : std::uint8_t { plus, minus, none };

/// The six realizable (alpha->beta, beta->alpha) pairs, in canonical order.
enum class ss_class : std::uint8_t { plus_plus, plus_none, minus_none, none_plus, none_minus, none_none };

inline constexpr std::array<ss_class, 6> all_ss_classes{ss_class::plus_plus,  ss_class::plus_none,
                                                        ss_class::minus_none, ss_class::none_plus,
                                                        ss_class::none_minus, ss_class::none_none};

inline constexpr std::size_t index_of(ss_class c) noexcept { return static_cast<std::size_t>(c); }

/// Maps a direction pair to its class; nullopt for the three pairs that only
/// invalid labelings produce.
inline constexpr std::optional<ss_class> make_ss_class(path_status fwd, path_status bwd) noexcept {
    using P = path_status;
    if (fwd == P::plus && bwd == P::plus) return ss_class::plus_plus;
    if (fwd == P::plus && bwd == P::none) return ss_class::plus_none;
    if (fwd == P::minus && bwd == P::none) return ss_class::minus_none;
    if (fwd == P::none && bwd == P::plus) return ss_class::none_plus;
    if (fwd == P::none && bwd == P::minus) return ss_class::none_minus;
    if (fwd == P::none && bwd == P::none) return ss_class::none_none;
    return std::nullopt;
}

/// Short ASCII key, `0` standing for "no path": "++", "+0", "-0", "0+", "0-", "00".
inline constexpr std::string_view key(ss_class c) noexcept {
    constexpr std::array<std::string_view, 6> keys{"++", "+0", "-0", "0+", "0-", "00"};
    return keys[index_of(c)];
}

inline constexpr path_status status_of(reachability r) noexcept {
    return !r.reachable ? path_status::none : r.via_negative ? path_status::minus : path_status::plus;
}

inline ss_class classify(const digraph& g, const labeling& lab, vertex_id alpha, vertex_id beta) {
    if (alpha == beta) throw invalid_input("classify needs two distinct endpoints");
    if (alpha >= g.vertex_count() || beta >= g.vertex_count())
        throw invalid_input("classify endpoint out of range");
    if (!is_valid(g, lab)) throw invalid_input("classify needs a valid labeling");
    const auto rg = reversed_negative(g, lab);
    auto c = make_ss_class(status_of(negreach(rg, alpha, beta)), status_of(negreach(rg, beta, alpha)));
    if (!c) throw invalid_input("labeling realizes an impossible class; it cannot be valid");
    return *c;
}

// ----------------------------------------------------------------------------
// Block-sequential update schedules
// ----------------------------------------------------------------------------

/// Ordered partition of the vertex set; parts are updated in order.
struct update_schedule {
    std::vector<std::vector<vertex_id>> parts;
};

/// Arc (i, j) is minus iff i's part comes strictly before j's.
inline labeling schedule_to_labeling(const digraph& g, const update_schedule& b) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> part_of(g.vertex_count(), unset);
    for (std::size_t p = 0; p < b.parts.size(); ++p) {
        if (b.parts[p].empty()) throw invalid_input("schedule part " + std::to_string(p) + " is empty");
        for (auto v : b.parts[p]) {
            if (v >= g.vertex_count())
                throw invalid_input("schedule mentions vertex " + std::to_string(v) + " outside the digraph");
            if (part_of[v] != unset) throw invalid_input("vertex " + std::to_string(v) + " appears twice in the schedule");
            part_of[v] = p;
        }
    }
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (part_of[v] == unset) throw invalid_input("vertex " + std::to_string(v) + " is missing from the schedule");

    labeling lab(g.arc_count(), sign::plus);
    for (arc_id i = 0; i < g.arc_count(); ++i)
        if (part_of[g[i].tail] < part_of[g[i].head]) lab[i] = sign::minus;
    return lab;
}

// ----------------------------------------------------------------------------
// Text formats
// ----------------------------------------------------------------------------

/// One `<tail> <head> <+|->` line per arc, in arc-id order.
inline std::string format_labeling(const digraph& g, const labeling& lab) {
    std::string out;
    for (arc_id i = 0; i < g.arc_count(); ++i)
        out += std::to_string(g[i].tail) + ' ' + std::to_string(g[i].head) + ' ' + to_char(lab[i]) + '\n';
    return out;
}

/// Parses a labeling and checks that its lines match the arcs of `g` in order.
inline labeling parse_labeling(std::string_view text, const digraph& g) {
    std::vector<sign> labels;
    detail::for_each_record(text, true, [&](std::size_t line_no, vertex_id u, vertex_id v, std::string_view rest) {
        const std::size_t i = labels.size();
        if (i >= g.arc_count()) throw parse_error(line_no, "more labels than arcs (" + std::to_string(g.arc_count()) + ")");
        if (g[i].tail != u || g[i].head != v)
            throw parse_error(line_no, "label line names " + std::to_string(u) + " -> " + std::to_string(v) + " but arc " +
                                           std::to_string(i) + " is " + std::to_string(g[i].tail) + " -> " +
                                           std::to_string(g[i].head));
        if (rest == "+")
            labels.push_back(sign::plus);
        else if (rest == "-")
            labels.push_back(sign::minus);
        else
            throw parse_error(line_no, "label must be `+` or `-`, got `" + std::string(rest) + "`");
    });
    if (labels.size() != g.arc_count())
        throw parse_error(0, "labeling has " + std::to_string(labels.size()) + " lines, digraph has " +
                                 std::to_string(g.arc_count()) + " arcs");
    return labeling(std::move(labels));
}

/// One part per line, space-separated vertex ids; file order = update order.
inline update_schedule parse_schedule(std::string_view text) {
    update_schedule b;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;
        std::vector<vertex_id> part;
        while (!line.empty()) {
            auto sp = line.find(' ');
            part.push_back(detail::parse_vertex(line.substr(0, sp), line_no));
            line = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
        }
        b.parts.push_back(std::move(part));
    }
    return b;
}

}  // namespace udcount
