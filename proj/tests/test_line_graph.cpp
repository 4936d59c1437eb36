// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "cutspec/error.hpp"
#include "cutspec/line_graph.hpp"
#include "fixtures.hpp"

using namespace cutspec;

TEST_CASE("line graph construction")
{
    const auto g17 = fixtures::g17();
    const auto l17 = line_graph(g17);
    CHECK(l17.graph.n() == 10);
    CHECK(l17.graph.m() == 24);

    const auto lp = line_graph(fixtures::petersen());
    CHECK(lp.graph.n() == 15);
    CHECK(lp.graph.m() == 30);

    CHECK(line_graph(fixtures::complete(3)).graph == fixtures::complete(3));
}

TEST_CASE("line graph adjacency is the base cut pattern")
{
    for (const auto& [name, g] : fixtures::biconnected_fixtures()) {
        CAPTURE(name);
        const auto lg = line_graph(g);
        const auto cuts = base_edge_cuts(g);
        std::size_t expected_m = 0;
        for (auto d : g.degrees())
            expected_m += d * (d - 1) / 2;
        CHECK(lg.graph.m() == expected_m);
        for (std::size_t i = 0; i < g.m(); ++i)
            for (std::size_t j = 0; j < g.m(); ++j)
                if (i != j)
                    CHECK(lg.graph.edge_between(vertex_at(i), vertex_at(j)).has_value() ==
                          cuts[edge_at(i)].contains(edge_at(j)));
    }
}

TEST_CASE("classification of line cycles")
{
    SUBCASE("octahedron")
    {
        const auto c = classify_line_cycles(fixtures::g18());
        CHECK(c.line_cycles.size() == 47);
        CHECK(c.cycle_images.size() == 11);
        CHECK(c.k3() == 24);
        CHECK(c.k4() == 12);
    }
    SUBCASE("Petersen")
    {
        const auto c = classify_line_cycles(fixtures::petersen());
        CHECK(c.line_cycles.size() == 22);
        CHECK(c.cycle_images.size() == 12);
        CHECK(c.k3() == 10);
        CHECK(c.k4() == 0);
    }
    SUBCASE("identity holds on the larger fixtures")
    {
        for (const auto& g : {fixtures::g20(), fixtures::g28(), fixtures::g17(), fixtures::prism()}) {
            const auto c = classify_line_cycles(g);
            CHECK(c.line_cycles.size() == c.source_cycle_count + c.k3() + c.k4());
        }
        CHECK(classify_line_cycles(fixtures::g20()).line_cycles.size() == 75);
        CHECK(classify_line_cycles(fixtures::g28()).line_cycles.size() == 50);
    }
    SUBCASE("triangle")
    {
        const auto c = classify_line_cycles(fixtures::complete(3));
        CHECK(c.line_cycles.size() == 1);
        CHECK(c.cycle_images.size() == 1);
        CHECK(c.k3() == 0);
    }
}

TEST_CASE("triples per vertex")
{
    const auto g = fixtures::g18();
    const auto c = classify_line_cycles(g);
    for (std::size_t v = 0; v < g.n(); ++v) {
        const auto cut = g.central_cut(vertex_at(v));
        std::size_t inside = 0;
        for (const auto& t : c.triples)
            inside += t.is_subset_of(cut) ? 1 : 0;
        const auto d = g.degree(vertex_at(v));
        CHECK(inside == d * (d - 1) * (d - 2) / 6);
    }
}

TEST_CASE("digital invariant")
{
    CHECK(digital_invariant_IL(fixtures::g17()).rle() == "(3×6, 7×9) & (18, 3×24, 2×36)");
    CHECK(digital_invariant_IL(fixtures::g18()).rle() == "(12×13) & (6×52)");
    CHECK(digital_invariant_IL(fixtures::g23()).rle() == "(3, 4×4, 4×5, 7×7) & (4×14, 4×16, 2×28)");
    CHECK(digital_invariant_IL(fixtures::petersen()).rle() == "(15×6) & (10×18)");
}
