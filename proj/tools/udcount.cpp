// udcount: command-line front end for counting update digraphs.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "udcount.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace udcount;

enum exit_code : int { ok = 0, bad_input = 1, inapplicable = 2, over_cap = 3, mismatch = 4 };

struct global_flags {
    std::string method = "auto";
    std::size_t brute_cap = brute_limits{}.max_arcs;
    bool verify_brute = false;
    bool json = false;
    std::uint64_t seed = 1;
    bool strip_loops = false;
    bool undirected = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open `" + path + "`");
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot write `" + path + "`");
    out << text;
}

digraph load_digraph(const std::string& path, const global_flags& flags) {
    std::vector<std::string> warnings;
    parse_options opts{flags.strip_loops, &warnings};
    auto g = parse_digraph(read_input(path), opts);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
}

json vector_json(const class_vector& v) {
    json j = json::object();
    for (auto c : all_ss_classes) j[std::string(key(c))] = to_decimal(v[c]);
    return j;
}

std::string vector_text(const class_vector& v) {
    std::string s;
    for (auto c : all_ss_classes) s += (s.empty() ? "" : " ") + std::string(key(c)) + ":" + to_decimal(v[c]);
    return s;
}

// ---------------------------------------------------------------------------

int run_count(const std::string& file, bool dump_tree, const global_flags& flags) {
    const brute_limits limits{flags.brute_cap};
    if (flags.undirected) {
        auto u = parse_undirected(read_input(file));
        auto orientations = count_acyclic_orientations(u, limits);
        count_options opts;
        opts.limits = limits;
        auto reduced = count_update_digraphs(orient_by_order(u), opts);
        if (flags.json) {
            json j;
            j["acyclic_orientations"] = to_decimal(orientations);
            j["reduced_update_digraphs"] = to_decimal(reduced.total);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "acyclic orientations: " << orientations << '\n'
                      << "update digraphs of the ordered reduction: " << reduced.total << '\n';
        }
        return orientations == reduced.total ? ok : mismatch;
    }

    const auto g = load_digraph(file, flags);
    count_options opts;
    opts.requested = parse_method(flags.method);
    opts.limits = limits;
    opts.verify_brute = flags.verify_brute;
    opts.keep_trees = dump_tree;
    const auto report = count_update_digraphs(g, opts);

    if (flags.json) {
        json j;
        j["total"] = to_decimal(report.total);
        j["digits"] = to_decimal(report.total).size();
        j["brute_cap"] = flags.brute_cap;
        j["components"] = json::array();
        for (const auto& c : report.components) {
            json r;
            r["index"] = c.index;
            r["method"] = to_string(c.used);
            r["vertices"] = c.vertices;
            r["arcs"] = c.arcs;
            r["count"] = to_decimal(c.count);
            if (c.vector) r["class_vector"] = vector_json(*c.vector);
            if (c.endpoints) r["endpoints"] = {c.endpoints->first, c.endpoints->second};
            if (c.brute_count) r["brute_count"] = to_decimal(*c.brute_count);
            r["elapsed_ms"] = c.elapsed_ms;
            if (dump_tree && c.tree) r["sp_tree"] = dump_sp(*c.tree, *c.evaluation, c.original_vertex);
            j["components"].push_back(std::move(r));
        }
        std::cout << j.dump(2) << '\n';
        return ok;
    }

    for (const auto& c : report.components) {
        std::cout << "component " << c.index << ": method=" << to_string(c.used) << " vertices=" << c.vertices
                  << " arcs=" << c.arcs << " count=" << c.count;
        if (c.endpoints) std::cout << " endpoints=(" << c.endpoints->first << "," << c.endpoints->second << ")";
        if (c.vector) std::cout << " vector=[" << vector_text(*c.vector) << "]";
        if (c.brute_count) std::cout << " brute=" << *c.brute_count;
        std::cout << '\n';
        if (dump_tree && c.tree) std::cout << dump_sp(*c.tree, *c.evaluation, c.original_vertex);
    }
    std::cout << "total: " << report.total << '\n';
    return ok;
}

int run_validate(const std::string& graph_file, const std::string& labeling_file, const global_flags& flags) {
    const auto g = load_digraph(graph_file, flags);
    const auto lab = parse_labeling(read_input(labeling_file), g);
    const auto res = is_valid(g, lab);
    if (flags.json) {
        json j;
        j["valid"] = res.valid;
        if (!res.valid) {
            j["witness"] = json::array();
            for (auto a : res.witness)
                j["witness"].push_back({{"arc", a}, {"tail", g[a].tail}, {"head", g[a].head}, {"label", std::string(1, to_char(lab[a]))}});
        }
        std::cout << j.dump(2) << '\n';
        return ok;
    }
    std::cout << (res.valid ? "valid" : "invalid") << '\n';
    if (!res.valid) {
        std::cout << "forbidden cycle:";
        for (auto a : res.witness) std::cout << ' ' << a << ':' << g[a].tail << "->" << g[a].head << to_char(lab[a]);
        std::cout << '\n';
    }
    return ok;
}

int run_reduce_ao(const std::string& file, const std::string& out) {
    const auto u = parse_undirected(read_input(file));
    write_output(out, serialize(orient_by_order(u)));
    return ok;
}

int run_generate(const std::string& kind_name, std::size_t size, const std::string& out, const global_flags& flags) {
    const auto k = generate::parse_kind(kind_name);
    const auto g = generate::make(k, size, flags.seed);
    std::string text = "# generated: " + kind_name + " size=" + std::to_string(size);
    if (k != generate::kind::bidirected_cycle) text += " seed=" + std::to_string(flags.seed);
    text += '\n' + serialize(g);
    write_output(out, text);
    return ok;
}

int run_census(const std::string& file, const global_flags& flags) {
    const auto g = load_digraph(file, flags);
    const brute_limits limits{flags.brute_cap};
    const auto census = census_fas(g, limits);
    const auto ud = count_valid_brute(g, limits);
    const bool lower = census.minimal_fas < ud;
    const bool upper = ud <= census.fas;
    if (flags.json) {
        json j;
        j["fas"] = to_decimal(census.fas);
        j["minimal_fas"] = to_decimal(census.minimal_fas);
        j["minimum_fas"] = to_decimal(census.minimum_fas);
        j["minimum_fas_size"] = census.minimum_size;
        j["update_digraphs"] = to_decimal(ud);
        j["lower_bound_holds"] = lower;
        j["upper_bound_holds"] = upper;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "#MFAS=" << census.minimal_fas << " < #UD=" << ud << " <= #FAS=" << census.fas << '\n'
                  << "minimum FAS: " << census.minimum_fas << " of size " << census.minimum_size << '\n'
                  << "bounds: " << (lower && upper ? "hold" : "VIOLATED") << '\n';
    }
    return lower && upper ? ok : mismatch;
}

int run_classify(const std::string& file, const global_flags& flags) {
    const auto g = load_digraph(file, flags);
    const auto comps = connected_components(g);
    json j = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& h = comps[i].graph;
        const auto fam = detect_family(h);
        const auto bd = biconnected_blocks(h);
        std::size_t bridges = 0, cycles = 0, others = 0;
        for (const auto& b : bd.blocks)
            (b.kind == block_kind::bridge ? bridges : b.kind == block_kind::cycle ? cycles : others)++;
        if (flags.json) {
            j.push_back({{"index", i},
                         {"family", to_string(fam)},
                         {"vertices", h.vertex_count()},
                         {"arcs", h.arc_count()},
                         {"bridges", bridges},
                         {"cycle_blocks", cycles},
                         {"other_blocks", others},
                         {"cut_vertices", bd.cut_vertices.size()}});
        } else {
            std::cout << "component " << i << ": " << to_string(fam) << " vertices=" << h.vertex_count()
                      << " arcs=" << h.arc_count() << " bridges=" << bridges << " cycle-blocks=" << cycles
                      << " other-blocks=" << others << '\n';
        }
    }
    if (flags.json) std::cout << j.dump(2) << '\n';
    return ok;
}

/// Machine-readable description of a failed recognition, in input ids.
json failure_json(const method_failure& f, const std::string& file, const global_flags& flags) {
    json j;
    j["component"] = f.component();
    j["method"] = to_string(f.which());
    json b;
    b["id"] = f.report().block_id;
    b["kind"] = to_string(f.report().kind);
    b["edges"] = json::array();
    try {
        const auto comps = connected_components(load_digraph(file, flags));
        const auto& c = comps.at(f.component());
        for (auto a : f.report().arcs) {
            const auto& x = c.graph[a];
            b["edges"].push_back({c.original_vertex[x.tail], c.original_vertex[x.head]});
        }
    } catch (const std::exception&) {
    }
    j["block"] = std::move(b);
    return j;
}

int report_error(const char* kind, int code, const std::string& message, const global_flags& flags, json extra = {}) {
    if (flags.json) {
        json j;
        j["error"] = kind;
        j["message"] = message;
        j["exit_code"] = code;
        if (!extra.is_null()) j["detail"] = std::move(extra);
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << "error: " << message << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of update digraphs (valid +/- arc labelings)."};
    app.require_subcommand(1);
    global_flags flags;
    app.add_option("--method", flags.method, "Counting method: auto, brute, cactus or sp")
        ->check(CLI::IsMember({"auto", "brute", "cactus", "sp"}));
    app.add_option("--brute-cap", flags.brute_cap, "Largest arc count enumerated exhaustively")->check(CLI::Range(0, 63));
    app.add_flag("--verify-brute", flags.verify_brute, "Cross-check fast methods with exhaustive enumeration");
    app.add_flag("--json", flags.json, "Machine-readable output");
    app.add_option("--seed", flags.seed, "Generator seed");
    app.add_flag("--strip-loops", flags.strip_loops, "Drop loop arcs with a warning instead of rejecting them");
    app.add_flag("--undirected", flags.undirected, "Read the input as an undirected edge list");

    std::string file, second_file, out, kind;
    std::size_t size = 0;
    bool dump_tree = false;

    auto* count = app.add_subcommand("count", "Count valid labelings, component by component");
    count->add_option("graph", file, "Edge-list file (- for stdin)")->required();
    count->add_flag("--dump-tree", dump_tree, "Print sp-trees with per-node vectors");

    auto* validate = app.add_subcommand("validate", "Check a labeling; print a forbidden cycle if invalid");
    validate->add_option("graph", file)->required();
    validate->add_option("labeling", second_file)->required();

    auto* reduce = app.add_subcommand("reduce-ao", "Orient an undirected graph by vertex order");
    reduce->add_option("graph", file)->required();
    reduce->add_option("-o,--output", out, "Output file (default stdout)");

    auto* gen = app.add_subcommand("generate", "Emit a generated instance");
    gen->add_option("kind", kind, "cactus, sp, random, tournament or bidirected-cycle")->required();
    gen->add_option("size", size, "Arcs for cactus/sp/random, vertices for tournament/bidirected-cycle")->required();
    gen->add_option("-o,--output", out, "Output file (default stdout)");

    auto* census = app.add_subcommand("census", "FAS, minimal FAS and update digraph counts with bounds check");
    census->add_option("graph", file)->required();

    auto* classify = app.add_subcommand("classify", "Detect the graph family of each component");
    classify->add_option("graph", file)->required();

    for (auto* sub : {count, validate, reduce, gen, census, classify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : bad_input;
    }

    try {
        if (*count) return run_count(file, dump_tree, flags);
        if (*validate) return run_validate(file, second_file, flags);
        if (*reduce) return run_reduce_ao(file, out);
        if (*gen) return run_generate(kind, size, out, flags);
        if (*census) return run_census(file, flags);
        if (*classify) return run_classify(file, flags);
    } catch (const method_failure& e) {
        return report_error("method-inapplicable", inapplicable, e.what(), flags, failure_json(e, file, flags));
    } catch (const method_inapplicable& e) {
        return report_error("method-inapplicable", inapplicable, e.what(), flags);
    } catch (const cap_exceeded& e) {
        return report_error("cap-exceeded", over_cap, e.what(), flags);
    } catch (const verification_failure& e) {
        return report_error("verification-failed", mismatch, e.what(), flags);
    } catch (const error& e) {
        return report_error("invalid-input", bad_input, e.what(), flags);
    }
    return ok;
}
