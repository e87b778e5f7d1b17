#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <chroma/canonical.hpp>
#include <chroma/chromatic.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/error.hpp>
#include <chroma/families.hpp>
#include <chroma/verify.hpp>

#include <set>

using namespace chroma;

namespace {

auto brute_keys(int n) -> std::set<std::uint64_t>
{
    return oracle::brute_connected_classes(n);
}

} // namespace

TEST_CASE("enumeration examples")
{
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK_THROWS_AS(enumerate_connected(0), Error);
    CHECK_THROWS_AS(enumerate_connected(10), Error);
}

TEST_CASE("enumeration matches the brute-force generator up to order 6")
{
    for (int n = 1; n <= 6; ++n) {
        auto expected = brute_keys(n);
        auto graphs = enumerate_connected(n);
        REQUIRE(graphs.size() == expected.size());
        std::set<std::uint64_t> found;
        for (const auto & g : graphs) {
            REQUIRE(g.connected());
            found.insert(oracle::brute_canonical(g));
        }
        REQUIRE(found == expected);
    }
}

TEST_CASE("enumeration counts match orbit counting up to order 8")
{
    auto connected = oracle::burnside_connected_counts(8);
    for (int n = 1; n <= 8; ++n) {
        auto keys = enumerate_keys(n);
        REQUIRE(BigInt(keys.size()) == connected[n]);
        REQUIRE(std::is_sorted(keys.begin(), keys.end(), graph6_order_less));
        REQUIRE(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
    }
    EnumerationOptions all;
    all.connected = false;
    for (int n = 1; n <= 7; ++n)
        REQUIRE(BigInt(enumerate_keys(n, all).size()) == oracle::burnside_graph_count(n));
}

TEST_CASE("hereditary filter")
{
    EnumerationOptions tf;
    tf.hereditary = [](const Graph & g) { return ! has_triangle(g); };
    for (int n = 1; n <= 7; ++n) {
        std::size_t expected = 0;
        for (const auto & g : enumerate_connected(n))
            expected += ! has_triangle(g);
        REQUIRE(enumerate_keys(n, tf).size() == expected);
    }
}

TEST_CASE("K4 with trees")
{
    CHECK(is_k4_with_trees(make_complete(4)));
    CHECK(is_k4_with_trees(append_tree(make_complete(4), 1, {{0, 1, 2}})));
    CHECK(! is_k4_with_trees(make_wheel(5)));
    CHECK(! is_k4_with_trees(make_cycle(5)));
    CHECK_THROWS_AS(is_k4_with_trees(make_empty(4)), Error);

    // Counts grow with the number of rooted-tree decorations.
    for (int n = 4; n <= 8; ++n) {
        std::size_t expected = 0;
        for (const auto & g : enumerate_connected(n))
            expected += is_k4_with_trees(g);
        REQUIRE(k4_with_trees_keys(n).size() == expected);
    }
}

TEST_CASE("theorem check on order 4 and 5")
{
    TheoremOptions o;
    o.n_max = 4;
    auto r = verify_theorem_main(o);
    CHECK(r.passed());
    CHECK(r.equality_witnesses == std::vector<std::string>{"C~"});

    o.n_max = 5;
    o.xs = {4};
    r = verify_theorem_main(o);
    CHECK(r.passed());
    for (const auto & w : r.equality_witnesses)
        CHECK(canonical_form(leaf_pruned_core(parse_graph6(w))) == canonical_form(make_complete(4)));
    CHECK(r.equality_witnesses.size() == 2);
}

TEST_CASE("theorem check up to order 7 with independent witness count")
{
    TheoremOptions o;
    o.n_max = 7;
    auto r = verify_theorem_main(o);
    CHECK(r.passed());
    std::size_t expected = 0;
    std::uint64_t instances = 0;
    for (int n = 4; n <= 7; ++n)
        for (const auto & g : enumerate_connected(n)) {
            bool four = oracle::naive_chromatic_number(g) == 4;
            instances += four;
            if (four && is_k4_with_trees(g))
                ++expected;
        }
    CHECK(r.equality_witnesses.size() == expected);
    CHECK(r.instances_checked == instances * o.xs.size());
}

TEST_CASE("reports do not depend on the worker count")
{
    TheoremOptions o;
    o.n_max = 7;
    o.workers = 1;
    auto one = verify_theorem_main(o).to_json().dump();
    o.workers = 4;
    auto four = verify_theorem_main(o).to_json().dump();
    CHECK(one == four);
    CHECK(verify_claim_2induced(7, {3}, 1).to_json().dump() == verify_claim_2induced(7, {3}, 3).to_json().dump());
}

TEST_CASE("theorem check validates its options")
{
    TheoremOptions o;
    o.n_max = 10;
    CHECK_THROWS_AS(verify_theorem_main(o), Error);
    o.n_max = 6;
    o.xs = {3};
    CHECK_THROWS_AS(verify_theorem_main(o), Error);
}

TEST_CASE("rational samples are reported, not asserted")
{
    TheoremOptions o;
    o.n_max = 6;
    o.sample_rational = true;
    auto r = verify_theorem_main(o);
    CHECK(r.passed());
    CHECK(r.details["rational_samples"]["points"].get<int>() > 0);
    CHECK(r.details["rational_samples"]["above_bound"].get<int>() == 0);
}

TEST_CASE("triangle-free floor")
{
    auto r = smallest_triangle_free_4chromatic(8);
    CHECK(r.passed());
    CHECK(r.equality_witnesses.empty());
    CHECK(r.details["positive_control"]["passed"].get<bool>());
    Graph g = make_grotzsch();
    CHECK(! has_triangle(g));
    CHECK(oracle::naive_count(g, 3) == 0);
    CHECK_THROWS_AS(smallest_triangle_free_4chromatic(10), Error);
}

TEST_CASE("census")
{
    auto k4 = four_critical_census(4);
    CHECK(k4 == std::vector<std::string>{"C~"});

    auto r = census_report(7);
    CHECK(r.passed());
    CHECK(r.details["at_most_7"].get<int>() == 4);
    auto members = four_critical_census(7);
    CHECK(members.size() == 4);
    for (const auto & key : members) {
        Graph g = parse_graph6(key);
        CHECK(g.min_degree() >= 3);
        CHECK(is_2_connected(g));
        CHECK(is_vertex_critical(g, 4));
        CHECK(is_edge_critical(g, 4));
    }
    // Vertex-critical graphs form a superset.
    auto vertex = four_vertex_critical_graphs(7);
    CHECK(vertex.size() >= members.size());
    for (const auto & key : members)
        CHECK(std::find(vertex.begin(), vertex.end(), key) != vertex.end());
    CHECK_THROWS_AS(census_report(9), Error);
}

TEST_CASE("census members are vertex-critical by independent deletion checks")
{
    for (const auto & key : four_critical_census(7)) {
        Graph g = parse_graph6(key);
        for (int v = 0; v < g.order(); ++v)
            REQUIRE(oracle::naive_chromatic_number(g.without_vertex(v)) == 3);
    }
}

TEST_CASE("2-induced claim")
{
    auto r = verify_claim_2induced(4, {3});
    CHECK(r.passed());
    auto m = verify_claim_2induced(7, {3, 5});
    CHECK(m.passed());
    CHECK(m.instances_checked > 0);
    // The Moser spindle is among the graphs covered.
    auto vertex = four_vertex_critical_graphs(7);
    CHECK(std::find(vertex.begin(), vertex.end(), canonical_form(make_moser_spindle()).key) != vertex.end());
    CHECK_THROWS_AS(verify_claim_2induced(6, {2}), Error);
}

TEST_CASE("report JSON layout")
{
    TheoremOptions o;
    o.n_max = 5;
    auto j = verify_theorem_main(o).to_json();
    CHECK(j.contains("scope"));
    CHECK(j["status"] == "pass");
    CHECK(j["runtime_ms"] == 0);
    CHECK(j["violations"].is_array());
    CHECK(j["equality_witnesses"].is_array());
}
