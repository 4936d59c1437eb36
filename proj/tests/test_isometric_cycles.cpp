// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cutspec/error.hpp"
#include "cutspec/gf2.hpp"
#include "cutspec/isometric_cycles.hpp"
#include "fixtures.hpp"

using namespace cutspec;

namespace {

std::set<std::vector<EdgeId>> as_keys(const std::vector<EdgeSet>& v)
{
    std::set<std::vector<EdgeId>> out;
    for (const auto& s : v)
        out.insert(s.ids());
    return out;
}

std::set<std::vector<EdgeId>> as_keys(const CycleSet& cs) { return as_keys(cs.edge_sets()); }

std::vector<EdgeSet> g6_sets(const Graph& g, std::initializer_list<std::initializer_list<std::uint32_t>> sets)
{
    std::vector<EdgeSet> out;
    for (auto s : sets)
        out.push_back(fixtures::g6_reference_set(g, s));
    return out;
}

std::vector<EdgeSet> plain_sets(const Graph& g, std::initializer_list<std::initializer_list<std::uint32_t>> sets)
{
    std::vector<EdgeSet> out;
    for (auto s : sets)
        out.push_back(EdgeSet::of(g.m(), s));
    return out;
}

}  // namespace

TEST_CASE("wave labels")
{
    const auto k3 = fixtures::complete(3);
    CHECK(wave_labels(k3, VertexId{1}, VertexId{2}) == std::vector<std::uint32_t>{1, 2, 3});
    const auto path_like = fixtures::cycle(6);
    CHECK(wave_labels(path_like, VertexId{1}, VertexId{2}) == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(wave_labels(path_like, VertexId{1}, VertexId{3}), Error);
}

TEST_CASE("per-direction candidates on the seven-vertex example")
{
    const auto g = fixtures::g6();
    const auto e13 = g.edge_id(1, 4);
    const auto first = as_keys(g6_sets(g, {{5, 8, 13}, {1, 3, 8, 13}, {1, 2, 9, 13}, {6, 8, 12, 13}, {10, 11, 12, 13}}));
    const auto second = as_keys(g6_sets(g, {{5, 8, 13}, {4, 5, 9, 13}, {1, 2, 9, 13}, {10, 11, 12, 13}, {5, 7, 10, 13}}));
    const auto a = as_keys(wave_candidates(g, g.edge(e13).u, g.edge(e13).v));
    const auto b = as_keys(wave_candidates(g, g.edge(e13).v, g.edge(e13).u));
    CHECK(((a == first && b == second) || (a == second && b == first)));

    std::vector<EdgeSet> through;
    for (const auto& c : cycles_through_edge(g, e13))
        through.push_back(c.edges());
    CHECK(as_keys(through) == as_keys(g6_sets(g, {{5, 8, 13}, {1, 2, 9, 13}, {10, 11, 12, 13}})));

    through.clear();
    for (const auto& c : cycles_through_edge(g, g.edge_id(1, 6)))
        through.push_back(c.edges());
    CHECK(as_keys(through) == as_keys(g6_sets(g, {{1, 3, 5}, {1, 2, 9, 13}})));
}

TEST_CASE("all isometric cycles of the seven-vertex example")
{
    const auto g = fixtures::g6();
    const auto cs = isometric_cycles(g);
    CHECK(as_keys(cs) == as_keys(g6_sets(g, {{1, 3, 5}, {2, 3, 4}, {4, 8, 9}, {5, 6, 12}, {5, 8, 13}, {6, 7, 11},
                                             {7, 8, 10}, {1, 2, 9, 13}, {10, 11, 12, 13}})));

    const auto counts = cycle_count_invariants(g, cs);
    const std::vector<std::uint64_t> by_reference{2, 2, 2, 2, 3, 2, 2, 3, 2, 2, 2, 2, 3};
    for (std::size_t r = 0; r < 13; ++r) {
        const auto& [a, b] = fixtures::g6_reference_edges()[r];
        CHECK(counts.per_edge[index_of(g.edge_id(a, b))] == by_reference[r]);
    }
    CHECK(counts.per_vertex == std::vector<std::uint64_t>{5, 3, 3, 5, 3, 3, 7});
    CHECK(length_histogram(counts) == "(7×3, 2×4)");
}

TEST_CASE("Petersen graph")
{
    const auto g = fixtures::petersen();
    const auto cs = isometric_cycles(g);
    CHECK(as_keys(cs) == as_keys(plain_sets(g, {{1, 2, 4, 6, 8},
                                                {1, 2, 5, 10, 14},
                                                {1, 3, 4, 7, 11},
                                                {1, 3, 5, 12, 13},
                                                {2, 3, 10, 11, 15},
                                                {2, 3, 8, 9, 12},
                                                {4, 5, 6, 9, 13},
                                                {4, 5, 7, 14, 15},
                                                {6, 7, 9, 11, 12},
                                                {6, 7, 8, 10, 15},
                                                {8, 9, 10, 13, 14},
                                                {11, 12, 13, 14, 15}})));
    CHECK(length_histogram(cycle_count_invariants(g, cs)) == "(12×5)");
    CHECK(cs[0].vertices() == std::vector<VertexId>{VertexId{1}, VertexId{2}, VertexId{3}, VertexId{4}, VertexId{5}});
}

TEST_CASE("complete graphs give only triangles")
{
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto cs = isometric_cycles(fixtures::complete(n));
        CHECK(cs.size() == n * (n - 1) * (n - 2) / 6);
        for (const auto& c : cs)
            CHECK(c.length() == 3);
    }
}

TEST_CASE("K5 with edges removed")
{
    CHECK(as_keys(isometric_cycles(fixtures::k5_without({10}))) ==
          as_keys(plain_sets(fixtures::k5_without({10}),
                             {{1, 2, 5}, {1, 3, 6}, {1, 4, 7}, {2, 3, 8}, {2, 4, 9}, {5, 6, 8}, {5, 7, 9}})));
    // Canonical ids shift after deletions; compare by endpoints instead.
    const auto k5 = fixtures::complete(5);
    const auto translate = [&](const Graph& g, std::initializer_list<std::uint32_t> k5_ids) {
        EdgeSet s(g.m());
        for (auto id : k5_ids) {
            const auto& e = k5.edge(static_cast<EdgeId>(id));
            s.insert(*g.edge_between(e.u, e.v));
        }
        return s;
    };
    const auto two = fixtures::k5_without({10, 2});
    CHECK(as_keys(isometric_cycles(two)) ==
          as_keys(std::vector<EdgeSet>{translate(two, {1, 3, 6}), translate(two, {1, 4, 7}),
                                       translate(two, {3, 4, 8, 9}), translate(two, {5, 6, 8}),
                                       translate(two, {5, 7, 9})}));
    const auto three = fixtures::k5_without({10, 2, 7});
    CHECK(as_keys(isometric_cycles(three)) ==
          as_keys(std::vector<EdgeSet>{translate(three, {1, 3, 6}), translate(three, {1, 4, 5, 9}),
                                       translate(three, {3, 4, 8, 9}), translate(three, {5, 6, 8})}));
}

TEST_CASE("worked examples with many cycles")
{
    CHECK(isometric_cycles(fixtures::example_ten()).size() == 32);
    CHECK(isometric_cycles(fixtures::example_twelve()).size() == 56);
}

TEST_CASE("metric check")
{
    const auto k4 = fixtures::complete(4);
    CHECK(is_isometric(k4, EdgeSet::of(6, {1, 2, 4})));
    // The square 1-2-3-4 has a diagonal.
    const auto square = EdgeSet::of(6, {raw(k4.edge_id(1, 2)), raw(k4.edge_id(2, 3)), raw(k4.edge_id(3, 4)),
                                        raw(k4.edge_id(1, 4))});
    CHECK_FALSE(is_isometric(k4, square));
    // A hexagon with one long chord: the hexagon itself is not isometric,
    // the two quadrilaterals are.
    const auto g = fixtures::make(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 4}});
    CHECK_FALSE(is_isometric(g, EdgeSet::of(7, {1, 3, 4, 5, 6, 7})));
    CHECK(is_isometric(g, fixtures::set_of(g, {1, 2, 4, 5})));

    const auto bad = fixtures::set_of(fixtures::petersen(), {1, 2});
    try {
        (void)is_isometric(fixtures::petersen(), bad);
        FAIL("expected NotACycle");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACycle);
    }
}

TEST_CASE("cycle walk")
{
    const auto g = fixtures::petersen();
    const auto c = Cycle::from_edges(g, fixtures::set_of(g, {1, 2, 5, 10, 14}));
    CHECK(c.length() == 5);
    CHECK(c.walk().front() == VertexId{1});
    CHECK(c.walk()[1] == VertexId{2});
    // Two disjoint triangles are not one cycle.
    const auto two = fixtures::make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK_THROWS_AS(Cycle::from_edges(two, EdgeSet::full(6)), Error);
}

TEST_CASE("isometric cycles span the cycle space")
{
    for (const auto& [name, g] : fixtures::biconnected_fixtures()) {
        CAPTURE(name);
        const auto cs = isometric_cycles(g);
        CHECK(gf2_rank(cs.edge_sets()) == g.m() - g.n() + 1);
        CHECK(cs.size() >= g.m() - g.n() + 1);
        EdgeSet sum(g.m());
        const DistanceMatrix d(g);
        for (const auto& c : cs) {
            CHECK(is_isometric(g, c.edges(), d));
            sum ^= c.edges();
        }
        CHECK(is_quasicycle(g, sum));
    }
}

TEST_CASE("candidate guard")
{
    WaveOptions tight;
    tight.candidate_limit = 2;
    CHECK_THROWS_AS(isometric_cycles(fixtures::complete(6), tight), Error);
}
