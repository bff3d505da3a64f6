#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "udcount/brute.hpp"
#include "udcount/cactus.hpp"
#include "udcount/digraph.hpp"
#include "udcount/sp.hpp"

namespace udcount {

enum class method { automatic, brute, cactus, sp };

inline const char* to_string(method m) {
    switch (m) {
        case method::automatic: return "auto";
        case method::brute: return "brute";
        case method::cactus: return "cactus";
        case method::sp: return "sp";
    }
    return "?";
}

inline method parse_method(std::string_view s) {
    if (s == "auto") return method::automatic;
    if (s == "brute") return method::brute;
    if (s == "cactus") return method::cactus;
    if (s == "sp") return method::sp;
    throw invalid_input("unknown method `" + std::string(s) + "` (expected auto, brute, cactus or sp)");
}

struct count_options {
    method requested = method::automatic;
    brute_limits limits{};
    /// Re-count with the exhaustive oracle when within the cap and compare.
    bool verify_brute = false;
    /// Keep sp-trees and per-node vectors for dumping.
    bool keep_trees = false;
};

struct component_record {
    std::size_t index = 0;
    method used = method::brute;
    big_int count;
    std::size_t vertices = 0;
    std::size_t arcs = 0;
    std::vector<vertex_id> original_vertex;
    /// sp method only; endpoints in input vertex ids.
    std::optional<class_vector> vector;
    std::optional<std::pair<vertex_id, vertex_id>> endpoints;
    std::optional<big_int> brute_count;
    double elapsed_ms = 0;
    std::optional<sp_tree> tree;
    std::optional<sp_evaluation> evaluation;
};

/// Per-component results; `total` is their product.
struct count_report {
    std::vector<component_record> components;
    big_int total = 1;
};

/// A forced method failed on one component.
class method_failure : public method_inapplicable {
public:
    method_failure(std::size_t component, method m, block_report report)
        : method_inapplicable("component " + std::to_string(component) + ": method " + to_string(m) +
                              " does not apply (block " + std::to_string(report.block_id) + ": " + report.reason + ")"),
          component_(component), method_(m), report_(std::move(report)) {}

    std::size_t component() const noexcept { return component_; }
    method which() const noexcept { return method_; }
    const block_report& report() const noexcept { return report_; }

private:
    std::size_t component_;
    method method_;
    block_report report_;
};

namespace detail {

inline bool count_with_cactus(const digraph& g, component_record& rec) {
    auto r = recognize_cactus(g);
    if (auto* sk = std::get_if<cactus_skeleton>(&r)) {
        rec.count = count_cactus(*sk);
        rec.used = method::cactus;
        return true;
    }
    return false;
}

inline bool count_with_sp(const digraph& g, const component& c, component_record& rec, bool keep) {
    if (g.arc_count() == 0) {
        rec.count = 1;
        rec.used = method::sp;
        return true;
    }
    auto r = recognize_sp(g);
    auto* tree = std::get_if<sp_tree>(&r);
    if (!tree) return false;
    auto ev = evaluate_sp(*tree, keep);
    rec.count = ev.total;
    rec.used = method::sp;
    rec.vector = ev.root_vector;
    rec.endpoints = std::pair{c.original_vertex[ev.alpha], c.original_vertex[ev.beta]};
    if (keep) {
        rec.tree = std::move(*tree);
        rec.evaluation = std::move(ev);
    }
    return true;
}

inline block_report failure_report(const digraph& g, method m) {
    if (m == method::cactus) return std::get<block_report>(recognize_cactus(g));
    return std::get<block_report>(recognize_sp(g));
}

}  // namespace detail

/// Splits `g` into connected components and counts each one. `automatic`
/// tries the cactus formula, then the series-parallel decomposition, then
/// exhaustive enumeration.
inline count_report count_update_digraphs(const digraph& g, const count_options& opts = {}) {
    count_report report;
    const auto comps = connected_components(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        const auto& h = c.graph;
        component_record rec;
        rec.index = i;
        rec.vertices = h.vertex_count();
        rec.arcs = h.arc_count();
        rec.original_vertex = c.original_vertex;
        const auto t0 = std::chrono::steady_clock::now();

        switch (opts.requested) {
            case method::automatic:
                if (detail::count_with_cactus(h, rec)) break;
                if (detail::count_with_sp(h, c, rec, opts.keep_trees)) break;
                rec.count = count_valid_brute(h, opts.limits);
                rec.used = method::brute;
                break;
            case method::brute:
                rec.count = count_valid_brute(h, opts.limits);
                rec.used = method::brute;
                break;
            case method::cactus:
                if (!detail::count_with_cactus(h, rec)) throw method_failure(i, method::cactus, detail::failure_report(h, method::cactus));
                break;
            case method::sp:
                if (!detail::count_with_sp(h, c, rec, opts.keep_trees)) throw method_failure(i, method::sp, detail::failure_report(h, method::sp));
                break;
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

        if (opts.verify_brute && rec.used != method::brute && h.arc_count() <= opts.limits.max_arcs) {
            rec.brute_count = count_valid_brute(h, opts.limits);
            if (*rec.brute_count != rec.count)
                throw verification_failure("component " + std::to_string(i) + ": " + to_string(rec.used) + " counted " +
                                           to_decimal(rec.count) + " but exhaustive enumeration found " +
                                           to_decimal(*rec.brute_count));
            if (rec.vector && rec.endpoints) {
                auto local = [&](vertex_id orig) {
                    return static_cast<vertex_id>(std::find(c.original_vertex.begin(), c.original_vertex.end(), orig) -
                                                  c.original_vertex.begin());
                };
                auto bv = class_vector_brute(h, local(rec.endpoints->first), local(rec.endpoints->second), opts.limits);
                if (bv != *rec.vector) throw verification_failure("component " + std::to_string(i) + ": class vector mismatch");
            }
        }
        report.total *= rec.count;
        report.components.push_back(std::move(rec));
    }
    return report;
}

/// Family of a connected digraph, most specific first.
enum class family { trivial, cactus, sp, general };

inline const char* to_string(family f) {
    switch (f) {
        case family::trivial: return "trivial";
        case family::cactus: return "cactus";
        case family::sp: return "sp";
        case family::general: return "general";
    }
    return "?";
}

inline family detect_family(const digraph& connected) {
    if (connected.arc_count() == 0) return family::trivial;
    if (std::holds_alternative<cactus_skeleton>(recognize_cactus(connected))) return family::cactus;
    if (std::holds_alternative<sp_tree>(recognize_sp(connected))) return family::sp;
    return family::general;
}

}  // namespace udcount
