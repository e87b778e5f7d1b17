#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <chroma/canonical.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/error.hpp>
#include <chroma/families.hpp>
#include <chroma/graph.hpp>

using namespace chroma;

namespace {

auto k4_minus_edge() -> Graph
{
    Graph g = make_complete(4);
    g.remove_edge(0, 1);
    return g;
}

auto key(const Graph & g) -> std::string
{
    return canonical_form(g).key;
}

} // namespace

TEST_CASE("graph6 parsing")
{
    Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    CHECK(k4 == make_complete(4));

    Graph e = parse_graph6("A_");
    CHECK(e.order() == 2);
    CHECK(e.size() == 1);
    CHECK(e.adjacent(0, 1));

    Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
}

TEST_CASE("graph6 emission")
{
    CHECK(emit_graph6(make_complete(1)) == "@");
    CHECK(emit_graph6(make_complete(4)) == "C~");
    // Upper triangle, column order: 01 02 12 03 13 23 04 14 24 34 for C5 0-1-2-3-4-0.
    CHECK(emit_graph6(make_cycle(5)) == "Dhc");
    CHECK(emit_graph6(make_petersen()).size() == 1 + 8);
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), Error);
    CHECK_THROWS_AS(parse_graph6("C"), Error);     // missing body
    CHECK_THROWS_AS(parse_graph6("C~~"), Error);   // too long
    CHECK_THROWS_AS(parse_graph6("A`"), Error);    // padding bit set
    CHECK_THROWS_AS(parse_graph6("C\x7f"), Error); // byte out of range
}

TEST_CASE("graph6 round trip for every graph up to order 6 and random graphs up to 8")
{
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            Graph g = oracle::graph_from_code(n, code);
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
        }
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        Graph g = oracle::random_graph(rng, 7 + t % 2, 0.5);
        REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("chromatic number examples")
{
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    Graph grotzsch = make_grotzsch();
    CHECK(grotzsch.order() == 11);
    CHECK(chromatic_number(grotzsch) == 4);
    CHECK(! has_colouring(grotzsch, 3));
}

TEST_CASE("chromatic number agrees with naive search")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Graph g = oracle::random_graph(rng, 1 + t % 7, 0.45);
        REQUIRE(chromatic_number(g) == oracle::naive_chromatic_number(g));
    }
}

TEST_CASE("contraction")
{
    auto c = contract_vertices(k4_minus_edge(), 0, 1);
    REQUIRE(std::holds_alternative<Graph>(c));
    CHECK(std::get<Graph>(c) == make_complete(3));

    CHECK(std::holds_alternative<Loop>(contract_vertices(make_complete(3), 0, 1)));

    auto e = contract_vertices(make_empty(3), 0, 2);
    REQUIRE(std::holds_alternative<Graph>(e));
    CHECK(std::get<Graph>(e) == make_empty(2));

    CHECK_THROWS_AS(contract_vertices(make_empty(3), 0, 3), Error);
    CHECK_THROWS_AS(contract_vertices(make_empty(3), 1, 1), Error);
}

TEST_CASE("contraction keeps the smaller label and shifts the rest down")
{
    // Path 0-1-2-3-4; merge 1 and 3: new vertex 1 sees 0, 2 and 4 (relabelled 3).
    auto c = contract_vertices(make_path(5), 3, 1);
    REQUIRE(std::holds_alternative<Graph>(c));
    Graph h = std::get<Graph>(c);
    CHECK(h.order() == 4);
    CHECK(h == Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}}));
}

TEST_CASE("edge deletion")
{
    Graph k3 = make_complete(3);
    CHECK(isomorphic(delete_edge(k3, 0, 1), make_path(3)));
    CHECK(isomorphic(delete_edge(make_cycle(4), 0, 1), make_path(4)));
    CHECK(delete_edge(make_complete(4), 0, 1) == k4_minus_edge());
    CHECK_THROWS_AS(delete_edge(make_path(3), 0, 2), Error);
}

TEST_CASE("2-induced subgraphs")
{
    CHECK(is_2_induced(make_cycle(6), bit(0) | bit(1)));
    CHECK(! is_2_induced(make_complete(4), bit(0) | bit(1) | bit(2)));

    // K23 with a pendant on a degree-2 vertex; F is the pendant alone.
    Graph g = make_complete_bipartite(2, 3);
    Graph h(6);
    for (auto [u, v] : g.edges())
        h.add_edge(u, v);
    h.add_edge(2, 5);
    CHECK(h.degree(5) == 1);
    CHECK(is_2_induced(h, bit(5)));
    // Two vertices of the same class share both opposite vertices.
    CHECK(! is_2_induced(h, bit(2) | bit(3)));
}

TEST_CASE("2-induced agrees with the definition")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t) {
        Graph g = oracle::random_graph(rng, 6, 0.4);
        VertexSet f = rng() & low_bits(6);
        bool expected = true;
        for (int v = 0; v < 6; ++v)
            if (! ((f >> v) & 1) && std::popcount(g.neighbours(v) & f) > 1)
                expected = false;
        REQUIRE(is_2_induced(g, f) == expected);
    }
}

TEST_CASE("shortest odd cycle")
{
    CHECK(shortest_odd_cycle(make_cycle(7)) == 7);
    CHECK(! shortest_odd_cycle(make_complete_bipartite(2, 3)).has_value());
    CHECK(shortest_odd_cycle(make_petersen()) == 5);
    CHECK(shortest_odd_cycle(make_complete(4)) == 3);
    CHECK(shortest_odd_cycle(make_grotzsch()) == 5);
}

TEST_CASE("shortest odd cycle is absent exactly when a 2-colouring exists")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        Graph g = oracle::random_graph(rng, 2 + t % 8, 0.25);
        REQUIRE(shortest_odd_cycle(g).has_value() == ! two_colouring(g).has_value());
        REQUIRE(two_colouring(g).has_value() == (oracle::naive_count(g, 2) > 0));
    }
}

TEST_CASE("criticality")
{
    CHECK(is_vertex_critical(make_complete(4), 4));
    CHECK(is_edge_critical(make_complete(4), 4));
    Graph pendant = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(! is_vertex_critical(pendant, 4));
    CHECK(! is_edge_critical(pendant, 4));

    // The Moser spindle is 4-chromatic; deleting any vertex or edge leaves a 3-colourable graph.
    Graph moser = make_moser_spindle();
    CHECK(moser.order() == 7);
    CHECK(moser.size() == 11);
    REQUIRE(chromatic_number(moser) == 4);
    bool vertex_critical = true, edge_critical = true;
    for (int v = 0; v < 7; ++v)
        vertex_critical &= oracle::naive_chromatic_number(moser.without_vertex(v)) == 3;
    for (auto [u, v] : moser.edges())
        edge_critical &= oracle::naive_chromatic_number(delete_edge(moser, u, v)) == 3;
    CHECK(is_vertex_critical(moser, 4) == vertex_critical);
    CHECK(is_edge_critical(moser, 4) == edge_critical);

    CHECK_THROWS_AS(is_vertex_critical(make_cycle(5), 4), Error);
}

TEST_CASE("twins")
{
    CHECK(has_twins(make_complete_bipartite(2, 3)));
    CHECK(! has_twins(make_cycle(5)));
    CHECK(has_twins(make_complete(4)));
    CHECK(are_twins(make_complete(4), 0, 3));
}

TEST_CASE("canonical form examples")
{
    Graph c5 = make_cycle(5);
    Graph c5b = oracle::relabel(c5, {2, 4, 1, 3, 0});
    CHECK(c5 != c5b);
    CHECK(key(c5) == key(c5b));

    Graph k33_minus_matching = make_complete_bipartite(3, 3);
    for (int i = 0; i < 3; ++i)
        k33_minus_matching.remove_edge(i, 3 + i);
    CHECK(key(make_cycle(6)) == key(k33_minus_matching));

    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(key(make_cycle(6)) != key(two_triangles));

    CHECK_THROWS_AS(canonical_form(make_empty(13)), Error);
}

TEST_CASE("canonical form matches brute-force isomorphism on random pairs")
{
    std::mt19937_64 rng(2024);
    int same = 0;
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        int m_cap = n * (n - 1) / 2;
        // Same edge count keeps the pairs hard.
        int m = m_cap ? static_cast<int>(rng() % (m_cap + 1)) : 0;
        auto draw = [&] {
            std::vector<std::pair<int, int>> all;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    all.emplace_back(i, j);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(m);
            return Graph::from_edges(n, all);
        };
        Graph a = draw();
        Graph b = t % 3 == 0 ? [&] {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            return oracle::relabel(a, perm);
        }()
                             : draw();
        bool expected = oracle::brute_isomorphic(a, b);
        same += expected;
        REQUIRE((key(a) == key(b)) == expected);
        REQUIRE(isomorphic(a, b) == expected);
    }
    CHECK(same > 150);
}

TEST_CASE("canonical graph is a relabelling with the canonical key")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        Graph g = oracle::random_graph(rng, 1 + t % 9, 0.5);
        Graph c = canonical_graph(g);
        REQUIRE(emit_graph6(c) == key(g));
        REQUIRE(key(c) == key(g));
    }
}

TEST_CASE("contracting non-adjacent vertices never lowers the chromatic number")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_connected(n)) {
            int chi = chromatic_number(g);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v))
                        continue;
                    auto c = contract_vertices(g, u, v);
                    REQUIRE(std::holds_alternative<Graph>(c));
                    REQUIRE(chromatic_number(std::get<Graph>(c)) >= chi);
                }
        }
}

TEST_CASE("families")
{
    CHECK(key(make_theta(2, 2, 2)) == key(make_complete_bipartite(2, 3)));
    CHECK(make_k4_with_trees({{}, {}, {}, {}}) == make_complete(4));
    CHECK(make_cycle(3) == make_complete(3));
    CHECK(make_theta(1, 2, 3).order() == 2 + 0 + 1 + 2);
    CHECK_THROWS_AS(make_theta(1, 1, 2), Error);
    CHECK_THROWS_AS(make_theta(3, 2, 2), Error);
    CHECK(make_k4_with_trees({{{0, 1}}, {}, {{0}}, {}}).order() == 7);
}

TEST_CASE("leaf-pruned core")
{
    CHECK(leaf_pruned_core(make_path(6)).order() == 0);
    Graph star = make_complete_bipartite(1, 4);
    CHECK(leaf_pruned_core(star).order() == 0);

    Graph k4_path = append_tree(make_complete(4), 0, {{0, 1, 2}});
    CHECK(key(leaf_pruned_core(k4_path)) == key(make_complete(4)));

    Graph c5_pendant = append_tree(make_cycle(5), 2, {{0}});
    CHECK(key(leaf_pruned_core(c5_pendant)) == key(make_cycle(5)));

    CHECK_THROWS_AS(leaf_pruned_core(make_empty(2)), Error);
}

TEST_CASE("leaf-pruned core has minimum degree at least 2 or is empty")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 500; ++t) {
        Graph g = oracle::random_graph(rng, 2 + t % 9, 0.3);
        if (! g.connected())
            continue;
        Graph core = leaf_pruned_core(g);
        REQUIRE((core.order() == 0 || core.min_degree() >= 2));
    }
}
