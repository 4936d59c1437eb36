// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cutspec/cycle_spectrum.hpp"
#include "cutspec/error.hpp"
#include "cutspec/io.hpp"
#include "cutspec/iso_engine.hpp"
#include "cutspec/line_graph.hpp"

namespace {

using namespace cutspec;

constexpr int exit_ok = 0;
constexpr int exit_not_isomorphic = 1;
constexpr int exit_usage = 2;

// Above this many edges the cut spectrum is capped at two levels unless the
// user asks otherwise.
constexpr std::size_t auto_cap_edges = 64;
constexpr std::size_t line_invariant_warn_edges = 200;

enum class Format { Human, Machine };

struct Settings {
    std::optional<std::size_t> max_levels;
    bool with_line_invariant = false;
    std::size_t brute_force_limit = 10;
    Format format = Format::Human;
};

std::optional<std::size_t> effective_cap(const Settings& s, const Graph& g)
{
    if (s.max_levels)
        return s.max_levels;
    if (g.m() > auto_cap_edges)
        return 2;
    return std::nullopt;
}

InvariantOptions invariant_options(const Settings& s, const Graph& g)
{
    InvariantOptions o;
    o.level_cap = effective_cap(s, g);
    o.with_line_invariant = s.with_line_invariant;
    if (s.with_line_invariant && g.m() > line_invariant_warn_edges)
        std::cerr << "warning: line invariant on " << g.m() << " edges may take a long time\n";
    return o;
}

std::string ids_of(const EdgeSet& s)
{
    std::string out;
    s.for_each([&](EdgeId e) { out += (out.empty() ? "" : " ") + std::to_string(raw(e)); });
    return out.empty() ? "-" : out;
}

std::string ids_of(const std::vector<VertexId>& vs)
{
    std::string out;
    for (auto v : vs)
        out += (out.empty() ? "" : " ") + std::to_string(raw(v));
    return out;
}

void print_summary(const Graph& g)
{
    std::cout << "n = " << g.n() << ", m = " << g.m() << ", degrees " << degree_vector(g) << '\n';
}

void print_invariant(const IntegralInvariant& inv, const std::string& indent = "")
{
    std::cout << indent << "mode: " << to_string(inv.mode) << '\n';
    std::cout << indent << "IS levels: " << inv.level_count() << " (" << to_string(inv.cut.reason) << ")\n";
    std::cout << indent << "IS: " << inv.cut.total.rle() << '\n';
    for (std::size_t l = 0; l < inv.cut.per_level.size(); ++l)
        std::cout << indent << "IS level " << l << ": " << inv.cut.per_level[l].rle() << '\n';
    if (inv.cycle)
        std::cout << indent << "IC: " << inv.cycle->rle() << '\n';
    if (inv.line)
        std::cout << indent << "IL: " << inv.line->rle() << '\n';
}

int run_invariant(const Settings& s, const std::string& path)
{
    const auto g = load_graph(path);
    const auto inv = integral_invariant(g, invariant_options(s, g));
    if (s.format == Format::Machine) {
        std::cout << invariant_report(g, inv).dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    print_invariant(inv);
    std::cout << "integral: " << inv.rle() << '\n';
    return exit_ok;
}

int run_compare(const Settings& s, const std::string& first, const std::string& second)
{
    const auto g = load_graph(first);
    const auto h = load_graph(second);
    CompareOptions opts;
    opts.invariants = invariant_options(s, g.m() >= h.m() ? g : h);
    opts.brute_force_limit = s.brute_force_limit;
    const auto v = compare_graphs(g, h, opts);
    if (s.format == Format::Machine) {
        std::cout << verdict_report(v).dump(2) << '\n';
    } else {
        std::cout << "verdict: " << to_string(v.outcome) << '\n';
        if (v.witness)
            std::cout << "witness: " << v.witness->detail << '\n';
        if (v.bijection)
            std::cout << "bijection: " << ids_of(*v.bijection) << '\n';
        if (v.witness && v.witness->component <= Component::DegreeSequence)
            return exit_not_isomorphic;
        std::cout << "first:\n";
        print_invariant(v.first, "  ");
        std::cout << "second:\n";
        print_invariant(v.second, "  ");
    }
    return v.outcome == Outcome::NotIsomorphic ? exit_not_isomorphic : exit_ok;
}

int run_cycles(const Settings& s, const std::string& path)
{
    const auto g = load_graph(path);
    const auto cs = isometric_cycles(g);
    const auto counts = cycle_count_invariants(g, cs);
    if (s.format == Format::Machine) {
        nlohmann::json j;
        j["graph"] = graph_summary(g);
        for (const auto& c : cs) {
            std::vector<std::uint32_t> e;
            c.edges().for_each([&](EdgeId x) { e.push_back(raw(x)); });
            std::vector<std::uint32_t> v;
            for (auto x : c.vertices())
                v.push_back(raw(x));
            j["cycles"].push_back({{"edges", e}, {"vertices", v}});
        }
        j["per_edge"] = counts.per_edge;
        j["per_vertex"] = counts.per_vertex;
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    std::cout << cs.size() << " isometric cycles, lengths " << length_histogram(counts) << "\nedges:\n";
    for (std::size_t k = 0; k < cs.size(); ++k)
        std::cout << "cycle " << k + 1 << ": " << ids_of(cs[k].edges()) << '\n';
    std::cout << "vertices:\n";
    for (std::size_t k = 0; k < cs.size(); ++k)
        std::cout << "cycle " << k + 1 << ": " << ids_of(cs[k].vertices()) << '\n';
    return exit_ok;
}

void print_table(const Graph& g, const Spectrum& sp)
{
    const auto w = spectrum_edge_weights(sp);
    for (std::size_t r = 0; r < sp.rows(); ++r) {
        std::cout << 'e' << r + 1 << " (" << raw(g.edge(edge_at(r)).u) << ',' << raw(g.edge(edge_at(r)).v) << "):";
        for (std::size_t l = 0; l < sp.level_count(); ++l)
            std::cout << (l ? " | " : " ") << ids_of(sp.cell(edge_at(r), l));
        std::cout << "  weight " << w.total[r] << '\n';
    }
}

int run_spectrum(const Settings& s, const std::string& path, bool cycle_side)
{
    const auto g = load_graph(path);
    const Spectrum sp = cycle_side ? build_cycle_spectrum(g, s.max_levels ? s.max_levels : base_level_only).spectrum
                                   : build_cut_spectrum(g, effective_cap(s, g));
    const auto w = spectrum_edge_weights(sp);
    const auto z = vertex_weights(g, w.total);
    if (s.format == Format::Machine) {
        nlohmann::json j;
        j["graph"] = graph_summary(g);
        j["kind"] = cycle_side ? "cycle" : "cut";
        j["level_count"] = sp.level_count();
        j["termination"] = std::string(to_string(sp.reason()));
        for (std::size_t l = 0; l < sp.level_count(); ++l) {
            nlohmann::json column = nlohmann::json::array();
            for (const auto& c : sp.column(l)) {
                std::vector<std::uint32_t> e;
                c.for_each([&](EdgeId x) { e.push_back(raw(x)); });
                column.push_back(e);
            }
            j["levels"].push_back(column);
        }
        j["edge_weights"] = w.total;
        j["vertex_weights"] = z;
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    std::cout << (cycle_side ? "cycle" : "cut") << " spectrum, " << sp.level_count() << " levels ("
              << to_string(sp.reason()) << ")\n";
    print_table(g, sp);
    std::cout << "vertex weights:";
    for (auto x : z)
        std::cout << ' ' << x;
    std::cout << '\n';
    return exit_ok;
}

int run_orbits(const Settings& s, const std::string& path)
{
    const auto g = load_graph(path);
    const auto p = vertex_orbit_partition(g, invariant_options(s, g));
    if (s.format == Format::Machine) {
        nlohmann::json j;
        j["graph"] = graph_summary(g);
        for (const auto& c : p.classes) {
            std::vector<std::uint32_t> v;
            for (auto x : c.vertices)
                v.push_back(raw(x));
            j["classes"].push_back({{"vertices", v}, {"signature", c.signature}});
        }
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    std::cout << p.classes.size() << " classes\n";
    for (const auto& c : p.classes)
        std::cout << "{" << ids_of(c.vertices) << "}\n";
    return exit_ok;
}

int run_linegraph(const Settings& s, const std::string& path)
{
    const auto g = load_graph(path);
    const auto lg = line_graph(g);
    const auto c = classify_line_cycles(g);
    const bool identity = c.line_cycles.size() == c.source_cycle_count + c.k3() + c.k4();
    if (s.format == Format::Machine) {
        nlohmann::json j;
        j["graph"] = graph_summary(g);
        j["line_graph"] = graph_summary(lg.graph);
        j["line_cycles"] = c.line_cycles.size();
        j["cycle_images"] = c.cycle_images.size();
        j["triples"] = c.k3();
        j["double_cycles"] = c.k4();
        j["source_cycles"] = c.source_cycle_count;
        j["identity_holds"] = identity;
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    std::cout << "line graph: n = " << lg.graph.n() << ", m = " << lg.graph.m() << '\n'
              << "isometric line cycles: " << c.line_cycles.size() << '\n'
              << "  cycle images: " << c.cycle_images.size() << '\n'
              << "  triples: " << c.k3() << '\n'
              << "  double cycles: " << c.k4() << '\n'
              << c.line_cycles.size() << " = " << c.source_cycle_count << " + " << c.k3() << " + " << c.k4()
              << (identity ? " holds" : " FAILS") << '\n'
              << "IL: " << line_invariant_of(g, c.line_cycles).rle() << '\n';
    return exit_ok;
}

int run_tree(const Settings& s, const std::string& path)
{
    const auto g = load_graph(path);
    const auto inv = tree_invariant(g);
    if (s.format == Format::Machine) {
        IntegralInvariant wrapped;
        wrapped.mode = InvariantMode::Tree;
        wrapped.cut = inv;
        std::cout << invariant_report(g, wrapped).dump(2) << '\n';
        return exit_ok;
    }
    print_summary(g);
    std::cout << "levels: " << inv.level_count << '\n' << "IS: " << inv.total.rle() << '\n';
    for (std::size_t l = 0; l < inv.per_level.size(); ++l)
        std::cout << "IS level " << l << ": " << inv.per_level[l].rle() << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Edge-cut and cycle spectrum invariants for graph isomorphism"};
    app.require_subcommand(1);

    Settings s;
    std::size_t max_levels = 0;
    std::string format = "human";
    app.add_option("--max-levels", max_levels, "Cap on cut-spectrum levels (default: none, or 2 above 64 edges)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--with-line-invariant", s.with_line_invariant, "Also compute the line-graph invariant");
    app.add_option("--brute-force-limit", s.brute_force_limit, "Largest n for exhaustive confirmation");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));

    std::string first;
    std::string second;
    bool cycle_side = false;
    const auto one_file = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("graph", first, "Graph file (.grf or edge list)")->required();
        sub->fallthrough();
        return sub;
    };
    auto* invariant = one_file("invariant", "Print the integral invariant");
    auto* compare = app.add_subcommand("compare", "Compare two graphs");
    compare->add_option("first", first)->required();
    compare->add_option("second", second)->required();
    compare->fallthrough();
    auto* cycles = one_file("cycles", "List isometric cycles");
    auto* spectrum = one_file("spectrum", "Dump the cut or cycle spectrum table");
    spectrum->add_flag("--cycle", cycle_side, "Cycle spectrum instead of cut spectrum");
    auto* orbits = one_file("orbits", "Candidate vertex orbits");
    auto* linegraph = one_file("linegraph", "Line-graph cycle classification");
    auto* tree = one_file("tree", "Cut spectrum of a tree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (app.count("--max-levels"))
        s.max_levels = max_levels;
    s.format = format == "machine" ? Format::Machine : Format::Human;

    try {
        if (invariant->parsed())
            return run_invariant(s, first);
        if (compare->parsed())
            return run_compare(s, first, second);
        if (cycles->parsed())
            return run_cycles(s, first);
        if (spectrum->parsed())
            return run_spectrum(s, first, cycle_side);
        if (orbits->parsed())
            return run_orbits(s, first);
        if (linegraph->parsed())
            return run_linegraph(s, first);
        if (tree->parsed())
            return run_tree(s, first);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
