#include <chroma/list_colouring.hpp>
#include <chroma/canonical.hpp>

#include <algorithm>
#include <array>
#include <unordered_map>

namespace chroma {

auto colour_set(std::initializer_list<int> colours) -> ColourSet
{
    ColourSet s = 0;
    for (int c : colours) {
        if (c < 1 || c > max_colour)
            throw Error(Errc::out_of_range, "colour " + std::to_string(c) + " outside [64]");
        s |= colour_bit(c);
    }
    return s;
}

auto colours_of(ColourSet s) -> std::vector<int>
{
    std::vector<int> r;
    for (; s; s &= s - 1)
        r.push_back(std::countr_zero(s) + 1);
    return r;
}

auto ForbiddenAssignment::max_label() const -> int
{
    int best = 0;
    for (auto s : forbidden)
        if (s)
            best = std::max(best, 64 - std::countl_zero(s));
    return best;
}

auto ForbiddenAssignment::concrete(int y) const -> std::vector<ColourSet>
{
    if (y < 0 || y + 1 > max_colour)
        throw Error(Errc::out_of_range, "palette size y + 1 must lie in [1, 64]");
    if (y + 1 < max_label())
        throw Error(Errc::out_of_range, "labels up to " + std::to_string(max_label())
                + " do not fit distinctly in [" + std::to_string(y + 1) + "]");
    std::vector<ColourSet> result;
    for (auto s : forbidden) {
        ColourSet c = 0;
        for (int label : colours_of(s)) {
            int colour = (top_label && label == *top_label) ? y + 1 : label;
            if (colour > y + 1)
                throw Error(Errc::out_of_range, "forbidden label " + std::to_string(label)
                        + " does not fit the palette [" + std::to_string(y + 1) + "]");
            c |= colour_bit(colour);
        }
        result.push_back(c);
    }
    return result;
}

auto ForbiddenAssignment::to_lists(int y) const -> ListAssignment
{
    ListAssignment l;
    l.palette = y + 1;
    ColourSet all = low_bits(y + 1);
    for (auto s : concrete(y))
        l.lists.push_back(all & ~s);
    return l;
}

auto is_proper(const Graph & g, const Colouring & c) -> bool
{
    if (static_cast<int>(c.size()) != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

auto respects(const ListAssignment & lists, const Colouring & c) -> bool
{
    if (c.size() != lists.lists.size())
        return false;
    for (std::size_t v = 0; v < c.size(); ++v)
        if (c[v] < 1 || c[v] > max_colour || ! (lists.lists[v] & colour_bit(c[v])))
            return false;
    return true;
}

namespace {
    void check_lists(const Graph & g, const ListAssignment & lists)
    {
        if (static_cast<int>(lists.lists.size()) != g.order())
            throw Error(Errc::invalid_argument, "list assignment has " + std::to_string(lists.lists.size())
                    + " lists for a graph of order " + std::to_string(g.order()));
    }

    struct ListCounter {
        const Graph & g;
        std::array<ColourSet, max_vertices> avail{};

        auto run(VertexSet left) -> std::uint64_t
        {
            if (! left)
                return 1;
            int best = -1, best_size = max_colour + 1;
            for (VertexSet m = left; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int s = std::popcount(avail[v]);
                if (s < best_size) {
                    best = v;
                    best_size = s;
                }
            }
            if (best_size == 0)
                return 0;
            if (std::popcount(left) == 1)
                return static_cast<std::uint64_t>(best_size);

            std::uint64_t total = 0;
            VertexSet nbrs = g.neighbours(best) & left;
            for (ColourSet cs = avail[best]; cs; cs &= cs - 1) {
                ColourSet c = cs & -cs;
                std::array<ColourSet, max_vertices> saved = avail;
                for (VertexSet m = nbrs; m; m &= m - 1)
                    avail[std::countr_zero(m)] &= ~c;
                std::uint64_t sub = run(left & ~bit(best));
                avail = saved;
                if (__builtin_add_overflow(total, sub, &total))
                    throw Error(Errc::out_of_range, "list colouring count exceeds 64 bits");
            }
            return total;
        }
    };

    void enumerate_into(const Graph & g, const ListAssignment & lists, int v, Colouring & current,
            std::vector<Colouring> & out)
    {
        if (v == g.order()) {
            out.push_back(current);
            return;
        }
        for (ColourSet cs = lists.lists[v]; cs; cs &= cs - 1) {
            int c = std::countr_zero(cs) + 1;
            bool ok = true;
            for (VertexSet m = g.neighbours(v) & low_bits(v); m && ok; m &= m - 1)
                ok = current[std::countr_zero(m)] != c;
            if (! ok)
                continue;
            current[v] = c;
            enumerate_into(g, lists, v + 1, current, out);
        }
        current[v] = 0;
    }
}

auto count_list_colourings(const Graph & g, const ListAssignment & lists) -> BigInt
{
    check_lists(g, lists);
    ListCounter c{g};
    for (int v = 0; v < g.order(); ++v)
        c.avail[v] = lists.lists[v];
    return BigInt(c.run(g.vertices()));
}

auto enumerate_list_colourings(const Graph & g, const ListAssignment & lists) -> std::vector<Colouring>
{
    check_lists(g, lists);
    std::vector<Colouring> out;
    Colouring current(g.order(), 0);
    enumerate_into(g, lists, 0, current, out);
    return out;
}

auto compress_set(ColourSet s, int i, int j) -> ColourSet
{
    if ((s & colour_bit(j)) && ! (s & colour_bit(i)))
        return (s | colour_bit(i)) & ~colour_bit(j);
    return s;
}

auto compress(const ListAssignment & lists, int i, int j) -> ListAssignment
{
    if (! lists.bipartition)
        throw Error(Errc::invalid_argument, "compression needs an explicit bipartition");
    if (i == j)
        throw Error(Errc::invalid_argument, "compression needs distinct colours");
    if (i < 1 || j < 1 || i > lists.palette || j > lists.palette)
        throw Error(Errc::out_of_range, "compression colours must lie in the palette");

    ListAssignment result = lists;
    for (std::size_t v = 0; v < lists.lists.size(); ++v) {
        if ((lists.bipartition->plus >> v) & 1)
            result.lists[v] = compress_set(lists.lists[v], i, j);
        else if ((lists.bipartition->minus >> v) & 1)
            result.lists[v] = compress_set(lists.lists[v], j, i);
    }
    return result;
}

auto compress_to_fixpoint(const ListAssignment & lists) -> ListAssignment
{
    ListAssignment current = lists;
    int m = lists.palette;
    for (int round = 0; round <= m * m; ++round) {
        ListAssignment before = current;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                current = compress(current, i, j);
        if (current == before)
            return current;
    }
    throw Error(Errc::internal, "compression did not reach a fixpoint within m^2 rounds");
}

auto compression_support(const ListAssignment & lists, int i, int j) -> VertexSet
{
    ListAssignment compressed = compress(lists, i, j);
    VertexSet changed = 0;
    for (std::size_t v = 0; v < lists.lists.size(); ++v)
        if (compressed.lists[v] != lists.lists[v])
            changed |= bit(static_cast<int>(v));
    return changed;
}

auto kempe_swap(const Graph & g, VertexSet touched, int i, int j, const Colouring & c) -> Colouring
{
    if (! is_proper(g, c))
        throw Error(Errc::invalid_argument, "colouring is not proper");
    VertexSet ij = 0;
    for (int v = 0; v < g.order(); ++v)
        if (c[v] == i || c[v] == j)
            ij |= bit(v);

    Colouring result = c;
    VertexSet left = ij;
    while (left) {
        VertexSet comp = g.component_of(std::countr_zero(left), ij);
        left &= ~comp;
        if (! (comp & touched))
            continue;
        for (VertexSet m = comp; m; m &= m - 1) {
            int v = std::countr_zero(m);
            result[v] = c[v] == i ? j : i;
        }
    }
    return result;
}

auto kempe_swap_map(const Graph & g, const ListAssignment & lists, int i, int j, const Colouring & c) -> Colouring
{
    check_lists(g, lists);
    if (! is_proper(g, c))
        throw Error(Errc::invalid_argument, "colouring is not proper");
    if (! respects(lists, c))
        throw Error(Errc::invalid_argument, "colouring does not respect the lists");
    return kempe_swap(g, compression_support(lists, i, j), i, j, c);
}

auto default_bipartition(const Graph & g) -> Bipartition
{
    auto plus = two_colouring(g);
    if (! plus)
        throw Error(Errc::invalid_argument, "graph is not bipartite");
    return {*plus, g.vertices() & ~*plus};
}

auto extremal_assignment(const Graph & g, std::span<const int> sizes, int m,
        std::optional<Bipartition> bipartition) -> ListAssignment
{
    if (static_cast<int>(sizes.size()) != g.order())
        throw Error(Errc::invalid_argument, "one list size per vertex is required");
    if (m < 0 || m > max_colour)
        throw Error(Errc::out_of_range, "palette size must lie in [0, 64]");
    Bipartition b = bipartition ? *bipartition : default_bipartition(g);

    ListAssignment result;
    result.palette = m;
    result.bipartition = b;
    for (int v = 0; v < g.order(); ++v) {
        int k = sizes[v];
        if (k < 0 || k > m)
            throw Error(Errc::invalid_argument, "list size " + std::to_string(k) + " exceeds palette " + std::to_string(m));
        ColourSet initial = low_bits(k);
        result.lists.push_back(((b.plus >> v) & 1) ? initial : initial << (m - k));
    }
    return result;
}

namespace {
    using Memo = std::unordered_map<std::string, IntPolynomial>;

    auto list_poly(const Graph & g, const std::vector<ColourSet> & forb, Memo & memo) -> IntPolynomial;

    auto connected_list_poly(const Graph & g, const std::vector<ColourSet> & forb, Memo & memo) -> IntPolynomial
    {
        if (g.order() == 1)
            return IntPolynomial{1 - std::popcount(forb[0]), 1};

        auto key = canonical_form(g, forb).key;
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        // Cut at a minimum-degree vertex so pendant pieces split off early.
        int u = 0;
        for (int v = 1; v < g.order(); ++v)
            if (g.degree(v) < g.degree(u))
                u = v;
        int w = -1;
        for (VertexSet m = g.neighbours(u); m; m &= m - 1) {
            int x = std::countr_zero(m);
            if (w < 0 || g.degree(x) < g.degree(w))
                w = x;
        }

        Graph minus = delete_edge(g, u, w);
        Graph merged = std::get<Graph>(contract_vertices(minus, u, w));
        int keep = std::min(u, w), gone = std::max(u, w);
        std::vector<ColourSet> merged_forb = forb;
        merged_forb[keep] = forb[u] | forb[w];
        merged_forb.erase(merged_forb.begin() + gone);

        IntPolynomial result = list_poly(minus, forb, memo) - list_poly(merged, merged_forb, memo);
        memo.emplace(std::move(key), result);
        return result;
    }

    auto list_poly(const Graph & g, const std::vector<ColourSet> & forb, Memo & memo) -> IntPolynomial
    {
        if (g.order() == 0)
            return IntPolynomial::constant(1);
        auto parts = g.components();
        if (parts.size() == 1)
            return connected_list_poly(g, forb, memo);
        IntPolynomial result = IntPolynomial::constant(1);
        for (auto c : parts) {
            std::vector<ColourSet> sub;
            for (VertexSet m = c; m; m &= m - 1)
                sub.push_back(forb[std::countr_zero(m)]);
            result *= connected_list_poly(g.induced(c), sub, memo);
        }
        return result;
    }
}

auto list_chromatic_polynomial(const Graph & g, const ForbiddenAssignment & forbidden) -> IntPolynomial
{
    if (g.order() > max_list_polynomial_order)
        throw Error(Errc::out_of_range, "list_chromatic_polynomial supports at most "
                + std::to_string(max_list_polynomial_order) + " vertices");
    if (static_cast<int>(forbidden.forbidden.size()) != g.order())
        throw Error(Errc::invalid_argument, "forbidden assignment size does not match the graph");
    Memo memo;
    return list_poly(g, forbidden.forbidden, memo);
}

auto list_chromatic_polynomial(const Contraction & g, const ForbiddenAssignment & forbidden) -> IntPolynomial
{
    if (std::holds_alternative<Loop>(g))
        return {};
    return list_chromatic_polynomial(std::get<Graph>(g), forbidden);
}

auto count_avoiding(const Graph & g, const ForbiddenAssignment & forbidden, int y) -> BigInt
{
    return count_list_colourings(g, forbidden.to_lists(y));
}

auto path_A(int n) -> IntPolynomial
{
    if (n < 1)
        throw Error(Errc::invalid_argument, "path_A needs n >= 1");
    IntPolynomial a{0, 1}, b{-1, 1};
    for (int k = 2; k <= n; ++k) {
        IntPolynomial next_a = a + IntPolynomial{-1, 1} * b;
        IntPolynomial next_b = a + IntPolynomial{-2, 1} * b;
        a = std::move(next_a);
        b = std::move(next_b);
    }
    return a;
}

auto path_B(int n) -> IntPolynomial
{
    if (n < 1)
        throw Error(Errc::invalid_argument, "path_B needs n >= 1");
    IntPolynomial a{0, 1}, b{-1, 1};
    for (int k = 2; k <= n; ++k) {
        IntPolynomial next_a = a + IntPolynomial{-1, 1} * b;
        IntPolynomial next_b = a + IntPolynomial{-2, 1} * b;
        a = std::move(next_a);
        b = std::move(next_b);
    }
    return b;
}

auto path_C_hat(int n) -> IntPolynomial
{
    if (n < 2)
        throw Error(Errc::invalid_argument, "path_C_hat needs n >= 2");
    IntPolynomial c{4, -3, 1};
    for (int k = 3; k <= n; ++k)
        c = path_B(k - 1) + IntPolynomial{-2, 1} * c;
    return c;
}

auto path_forbidden(int n, char kind) -> ForbiddenAssignment
{
    if (n < 1 || (kind == 'C' && n < 2))
        throw Error(Errc::invalid_argument, "path too short for this forbidden pattern");
    ForbiddenAssignment f;
    f.top_label = 4;
    for (int i = 1; i <= n; ++i)
        f.forbidden.push_back(colour_bit(i % 2 == 1 ? 1 : 4));
    if (kind == 'B' || kind == 'C')
        f.forbidden[0] = colour_set({1, 2});
    if (kind == 'C')
        f.forbidden[n - 1] = n % 2 == 1 ? colour_set({1, 2}) : colour_set({3, 4});
    return f;
}

auto inclusion_exclusion_count(const Graph & g, std::span<const Pin> pins, int y,
        std::optional<std::vector<std::uint32_t>> family) -> BigInt
{
    if (pins.size() > 24)
        throw Error(Errc::out_of_range, "at most 24 pins are supported");
    if (y + 1 > max_colour || y < 0)
        throw Error(Errc::out_of_range, "palette size y + 1 must lie in [1, 64]");
    for (const auto & p : pins) {
        if (p.vertex < 0 || p.vertex >= g.order())
            throw Error(Errc::out_of_range, "pinned vertex out of range");
        if (p.colour < 1 || p.colour > y + 1)
            throw Error(Errc::out_of_range, "pinned colour outside [y + 1]");
    }

    std::vector<std::uint32_t> subsets;
    if (family)
        subsets = *family;
    else
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << pins.size()); ++s)
            subsets.push_back(s);

    ListAssignment base;
    base.palette = y + 1;
    base.lists.assign(g.order(), low_bits(y + 1));

    BigInt total = 0;
    for (auto s : subsets) {
        ListAssignment pinned = base;
        for (std::size_t p = 0; p < pins.size(); ++p)
            if ((s >> p) & 1)
                pinned.lists[pins[p].vertex] &= colour_bit(pins[p].colour);
        BigInt sigma = count_list_colourings(g, pinned);
        if (std::popcount(s) % 2 == 0)
            total += sigma;
        else
            total -= sigma;
    }
    return total;
}

auto subsets_avoiding_pair(int k, int a, int b) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> r;
    std::uint32_t both = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s)
        if ((s & both) != both)
            r.push_back(s);
    return r;
}

} // namespace chroma
