#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <chroma/chromatic.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/error.hpp>
#include <chroma/families.hpp>
#include <chroma/list_colouring.hpp>

#include <map>

using namespace chroma;

namespace {

// Colourings from [y+1] avoiding forbidden colours, counted naively.
auto naive_avoid(const Graph & g, const std::vector<ColourSet> & forbidden, int y) -> std::uint64_t
{
    std::vector<std::function<bool(int, int)>> allowed;
    for (int v = 0; v < g.order(); ++v)
        allowed.push_back([&forbidden](int u, int c) { return ! ((forbidden[u] >> (c - 1)) & 1); });
    return oracle::naive_count_with(g, y + 1, allowed);
}

auto naive_lists(const Graph & g, const ListAssignment & l) -> std::uint64_t
{
    std::vector<std::function<bool(int, int)>> allowed;
    for (int v = 0; v < g.order(); ++v)
        allowed.push_back([&l](int u, int c) { return (l.lists[u] >> (c - 1)) & 1; });
    return oracle::naive_count_with(g, l.palette, allowed);
}

auto singletons(std::initializer_list<int> colours) -> std::vector<ColourSet>
{
    std::vector<ColourSet> out;
    for (int c : colours)
        out.push_back(colour_bit(c));
    return out;
}

auto bipartite_lists(const Graph & g, int m, std::vector<ColourSet> lists) -> ListAssignment
{
    return {m, std::move(lists), default_bipartition(g)};
}

} // namespace

TEST_CASE("counting list colourings")
{
    Graph k2 = make_complete(2);
    CHECK(count_list_colourings(k2, {1, {colour_bit(1), colour_bit(1)}, std::nullopt}) == 0);
    CHECK(count_list_colourings(Graph(1), {9, {colour_set({2, 5, 9})}, std::nullopt}) == 3);

    // K23 lists: [4]\{1} on the degree-3 side, [4]\{4} on the degree-2 side.
    Graph k23 = make_complete_bipartite(2, 3);
    ColourSet all = colour_set({1, 2, 3, 4});
    ListAssignment l{4, {}, std::nullopt};
    for (int v = 0; v < 5; ++v)
        l.lists.push_back(all & ~colour_bit(k23.degree(v) == 3 ? 1 : 4));
    CHECK(count_list_colourings(k23, l) == 77);
    CHECK(naive_lists(k23, l) == 77);
}

TEST_CASE("list counting and enumeration agree with naive search")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + t % 6, m = 1 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.5);
        ListAssignment l{m, {}, std::nullopt};
        for (int v = 0; v < n; ++v)
            l.lists.push_back(rng() & low_bits(m));
        auto expected = naive_lists(g, l);
        REQUIRE(count_list_colourings(g, l) == expected);
        auto all = enumerate_list_colourings(g, l);
        REQUIRE(all.size() == expected);
        REQUIRE(std::is_sorted(all.begin(), all.end()));
        for (const auto & c : all)
            REQUIRE((is_proper(g, c) && respects(l, c)));
    }
}

TEST_CASE("compression of a single set")
{
    CHECK(compress_set(colour_set({2}), 1, 2) == colour_set({1}));
    CHECK(compress_set(colour_set({1, 2}), 1, 2) == colour_set({1, 2}));
    CHECK(compress_set(colour_set({3}), 1, 2) == colour_set({3}));
}

TEST_CASE("compression uses the opposite orientation on the minus side")
{
    Graph k2 = make_complete(2);
    ListAssignment l{2, {colour_set({2}), colour_set({1, 2})}, Bipartition{bit(0), bit(1)}};
    auto c = compress(l, 1, 2);
    CHECK(c.lists[0] == colour_set({1}));
    CHECK(c.lists[1] == colour_set({1, 2}));

    ListAssignment minus{2, {colour_set({1, 2}), colour_set({1})}, Bipartition{bit(0), bit(1)}};
    CHECK(compress(minus, 1, 2).lists[1] == colour_set({2}));

    CHECK_THROWS_AS(compress({2, {colour_set({1}), colour_set({1})}, std::nullopt}, 1, 2), Error);
    CHECK_THROWS_AS(compress(l, 1, 1), Error);
}

TEST_CASE("compression preserves list sizes and never lowers the count")
{
    std::mt19937_64 rng(43);
    int strict = 0;
    for (int t = 0; t < 2000; ++t) {
        Graph g;
        do
            g = oracle::random_graph(rng, 2 + t % 6, 0.5);
        while (! two_colouring(g));
        int m = 2 + static_cast<int>(rng() % 4);
        std::vector<ColourSet> lists;
        for (int v = 0; v < g.order(); ++v)
            lists.push_back(rng() & low_bits(m));
        auto l = bipartite_lists(g, m, lists);
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                auto c = compress(l, i, j);
                for (int v = 0; v < g.order(); ++v)
                    REQUIRE(std::popcount(c.lists[v]) == std::popcount(l.lists[v]));
                auto before = count_list_colourings(g, l), after = count_list_colourings(g, c);
                REQUIRE(after >= before);
                strict += after > before;
            }
    }
    CHECK(strict > 0);
}

TEST_CASE("Kempe swap trivial cases")
{
    Graph c4 = make_cycle(4);
    auto l = bipartite_lists(c4, 4, std::vector<ColourSet>(4, colour_set({1, 2, 3, 4})));
    Colouring c{3, 4, 3, 4};
    CHECK(kempe_swap_map(c4, l, 1, 2, c) == c);
    // Full lists: compression changes nothing, so the map is the identity.
    Colouring d{1, 2, 1, 2};
    CHECK(compression_support(l, 1, 2) == 0);
    CHECK(kempe_swap_map(c4, l, 1, 2, d) == d);

    Colouring bad{1, 1, 2, 2};
    CHECK_THROWS_AS(kempe_swap_map(c4, l, 1, 2, bad), Error);
}

TEST_CASE("Kempe swap on C4 lands in the compressed lists and is an involution")
{
    Graph c4 = make_cycle(4);
    int checked = 0;
    // All lists over [3] on C4, every ordered pair (i, j).
    for (std::uint32_t code = 0; code < (1u << 12); ++code) {
        std::vector<ColourSet> lists;
        for (int v = 0; v < 4; ++v)
            lists.push_back((code >> (3 * v)) & 7);
        auto l = bipartite_lists(c4, 3, lists);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j)
                    continue;
                auto compressed = compress(l, i, j);
                VertexSet support = compression_support(l, i, j);
                std::set<Colouring> images;
                for (const auto & c : enumerate_list_colourings(c4, l)) {
                    auto image = kempe_swap_map(c4, l, i, j, c);
                    REQUIRE(is_proper(c4, image));
                    REQUIRE(respects(compressed, image));
                    REQUIRE(kempe_swap(c4, support, i, j, image) == c);
                    images.insert(image);
                    ++checked;
                }
                REQUIRE(images.size() == count_list_colourings(c4, l));
            }
    }
    CHECK(checked > 0);
}

TEST_CASE("segment assignment")
{
    Graph star = make_complete_bipartite(1, 2);
    std::vector<int> sizes{2, 2, 2};
    auto l = extremal_assignment(star, sizes, 3, Bipartition{bit(0), bit(1) | bit(2)});
    CHECK(l.lists[0] == colour_set({1, 2}));
    CHECK(l.lists[1] == colour_set({2, 3}));
    CHECK(l.lists[2] == colour_set({2, 3}));

    Graph c6 = make_cycle(6);
    std::vector<int> full(6, 4);
    for (auto s : extremal_assignment(c6, full, 4).lists)
        CHECK(s == colour_set({1, 2, 3, 4}));

    std::vector<int> too_big{5, 1};
    CHECK_THROWS_AS(extremal_assignment(make_complete(2), too_big, 4), Error);
}

TEST_CASE("segment assignment is maximal on P4 with 2-lists from [4]")
{
    Graph p4 = make_path(4);
    std::vector<int> sizes(4, 2);
    auto best = count_list_colourings(p4, extremal_assignment(p4, sizes, 4));
    std::vector<ColourSet> pairs;
    for (ColourSet s = 0; s < 16; ++s)
        if (std::popcount(s) == 2)
            pairs.push_back(s);
    REQUIRE(pairs.size() == 6);
    BigInt maximum = 0;
    for (auto a : pairs)
        for (auto b : pairs)
            for (auto c : pairs)
                for (auto d : pairs) {
                    ListAssignment l{4, {a, b, c, d}, std::nullopt};
                    auto count = count_list_colourings(p4, l);
                    REQUIRE(count <= best);
                    maximum = std::max(maximum, count);
                }
    CHECK(maximum == best);
}

TEST_CASE("compression to a fixpoint gives the segment assignment")
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 300; ++t) {
        Graph g;
        do
            g = oracle::random_graph(rng, 2 + t % 6, 0.5);
        while (! two_colouring(g));
        int m = 2 + static_cast<int>(rng() % 4);
        std::vector<int> sizes;
        std::vector<ColourSet> lists;
        for (int v = 0; v < g.order(); ++v) {
            ColourSet s = rng() & low_bits(m);
            lists.push_back(s);
            sizes.push_back(std::popcount(s));
        }
        auto l = bipartite_lists(g, m, lists);
        auto fix = compress_to_fixpoint(l);
        REQUIRE(fix == extremal_assignment(g, sizes, m, l.bipartition));
    }
}

TEST_CASE("list polynomial examples")
{
    CHECK(list_chromatic_polynomial(Graph(1), {singletons({1}), std::nullopt}) == IntPolynomial{0, 1});
    CHECK(list_chromatic_polynomial(make_complete(3), {singletons({1, 2, 3}), std::nullopt})
            == IntPolynomial{-4, 5, -3, 1});
    ForbiddenAssignment p2{{colour_set({1, 2}), colour_set({3, 4})}, std::nullopt};
    CHECK(list_chromatic_polynomial(make_path(2), p2) == IntPolynomial{4, -3, 1});
    CHECK(list_chromatic_polynomial(Contraction{Loop{}}, p2).is_zero());
}

TEST_CASE("list polynomial agrees with avoid-counting")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + t % 6;
        Graph g = oracle::random_graph(rng, n, 0.5);
        int labels = 1 + static_cast<int>(rng() % 4);
        ForbiddenAssignment f{{}, std::nullopt};
        for (int v = 0; v < n; ++v)
            f.forbidden.push_back(rng() & low_bits(labels));
        auto p = list_chromatic_polynomial(g, f);
        REQUIRE(p.degree() == n);
        REQUIRE(p.is_monic());
        int lo = std::max(0, f.max_label() - 1);
        for (int y = lo; y <= lo + 4; ++y)
            REQUIRE(p.evaluate(BigInt(y)) == naive_avoid(g, f.concrete(y), y));
    }
}

TEST_CASE("top label tracks y + 1")
{
    // {1} and {4 = y + 1} at the ends of P2.
    ForbiddenAssignment f{{colour_set({1}), colour_set({4})}, 4};
    CHECK(f.concrete(3) == std::vector<ColourSet>{colour_set({1}), colour_set({4})});
    CHECK(f.concrete(5) == std::vector<ColourSet>{colour_set({1}), colour_set({6})});
    CHECK_THROWS_AS(f.concrete(1), Error);
    for (int y = 3; y <= 6; ++y)
        CHECK(list_chromatic_polynomial(make_path(2), f).evaluate(BigInt(y)) == naive_avoid(make_path(2), f.concrete(y), y));
}

TEST_CASE("path recurrences")
{
    CHECK(path_A(1) == IntPolynomial{0, 1});
    CHECK(path_B(1) == IntPolynomial{-1, 1});
    CHECK(path_A(4) == IntPolynomial{2, -5, 6, -3, 1});
    CHECK(path_B(6) == IntPolynomial{13, -38, 51, -40, 20, -6, 1});
    CHECK(path_C_hat(2) == IntPolynomial{4, -3, 1});
    CHECK(path_C_hat(5) == IntPolynomial{-13, 33, -34, 19, -6, 1});
    CHECK_THROWS_AS(path_A(0), Error);
    CHECK_THROWS_AS(path_C_hat(1), Error);
    for (int n = 1; n <= 6; ++n) {
        REQUIRE(path_A(n) == list_chromatic_polynomial(make_path(n), path_forbidden(n, 'A')));
        REQUIRE(path_B(n) == list_chromatic_polynomial(make_path(n), path_forbidden(n, 'B')));
    }
}

TEST_CASE("C-hat bounds the true count")
{
    for (int n = 2; n <= 8; ++n)
        for (int y = 2; y <= 6; ++y) {
            auto f = path_forbidden(n, 'C');
            if (y + 1 < f.max_label())
                continue;
            REQUIRE(path_C_hat(n).evaluate(BigInt(y)) >= naive_avoid(make_path(n), f.concrete(y), y));
        }
}

TEST_CASE("inclusion-exclusion")
{
    Graph k3 = make_complete(3);
    std::vector<Pin> pins{{0, 1}, {1, 2}, {2, 3}};
    CHECK(inclusion_exclusion_count(k3, pins, 3) == 11);
    CHECK(inclusion_exclusion_count(k3, {}, 3) == count_colourings(k3, 4));

    // C5 with c_i = c_{i+2} for two indices, e.g. colours 1,2,1,2,3.
    Graph c5 = make_cycle(5);
    std::vector<Pin> c5_pins{{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 3}};
    IntPolynomial bound{-16, 31, -28, 15, -5, 1};
    for (int y = 3; y <= 5; ++y) {
        auto value = inclusion_exclusion_count(c5, c5_pins, y);
        REQUIRE(value == naive_avoid(c5, singletons({1, 2, 1, 2, 3}), y));
        REQUIRE(value == bound.evaluate(BigInt(y)));
    }

    auto family = subsets_avoiding_pair(3, 0, 1);
    CHECK(family.size() == 6);
    for (auto s : family)
        CHECK((s & 3u) != 3u);
}

TEST_CASE("inclusion-exclusion with singleton pins equals the avoid-count")
{
    std::mt19937_64 rng(59);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 5;
        Graph g = oracle::random_graph(rng, n, 0.5);
        int y = 2 + static_cast<int>(rng() % 3);
        std::vector<Pin> pins;
        std::vector<ColourSet> forbidden;
        for (int v = 0; v < n; ++v) {
            int c = 1 + static_cast<int>(rng() % (y + 1));
            pins.push_back({v, c});
            forbidden.push_back(colour_bit(c));
        }
        REQUIRE(inclusion_exclusion_count(g, pins, y) == naive_avoid(g, forbidden, y));
    }
}

TEST_CASE("closed-form propositions at y = 3")
{
    std::vector<int> ys{3};
    std::map<ClosedFormCase, int> expected{
            {ClosedFormCase::K3, 11},
            {ClosedFormCase::K23, 77},
            {ClosedFormCase::C5, 68},
            {ClosedFormCase::C4LeafA, 99},
            {ClosedFormCase::C4LeafB, 67},
    };
    for (auto [c, value] : expected) {
        auto report = closed_form_check(c, ys);
        INFO(to_string(c));
        CHECK(report.passed());
        CHECK(closed_form_bound(c).evaluate(BigInt(3)) == value);
        CHECK(report.details["y=3"]["maximum"].get<int>() == value);
    }
    CHECK(closed_form_bound(ClosedFormCase::C4LeafA).evaluate(BigInt(3)) == 243 - 324 + 270 - 117 + 30 - 3);
    CHECK_THROWS_AS(closed_form_check(ClosedFormCase::K3, std::vector<int>{2}), Error);
}

TEST_CASE("closed-form bounds as stated")
{
    CHECK(closed_form_bound(ClosedFormCase::K3) == IntPolynomial{-4, 5, -3, 1});
    CHECK(closed_form_bound(ClosedFormCase::K23) == IntPolynomial{-13, 36, -38, 21, -6, 1});
    CHECK(closed_form_bound(ClosedFormCase::C5) == IntPolynomial{-16, 31, -28, 15, -5, 1});
    CHECK(closed_form_bound(ClosedFormCase::C4LeafA) == IntPolynomial{-3, 10, -13, 10, -4, 1});
    CHECK(closed_form_bound(ClosedFormCase::C4LeafB) == IntPolynomial{-11, 23, -23, 14, -5, 1});
}
