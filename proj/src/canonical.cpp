#include <chroma/canonical.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace chroma {

namespace {
    constexpr int N = max_canonical_order;

    using Cells = std::array<int, N>;
    using Code = unsigned __int128;

    // Individualization-refinement search. Every leaf is a discrete ordered
    // partition; the canonical labelling is the leaf with the smallest
    // adjacency code. Branches on twins of an already-tried vertex are
    // skipped: the transposition of twins is an automorphism fixing the path.
    struct Search {
        int n = 0;
        std::array<std::uint16_t, N> adj{};
        std::array<std::uint16_t, N> twins{};
        Code best = 0;
        bool have_best = false;
        std::array<int, N> best_order{};

        void refine(Cells & cell, int & k) const
        {
            while (true) {
                std::array<std::array<std::uint8_t, N>, N> count{};
                for (int v = 0; v < n; ++v)
                    for (unsigned m = adj[v]; m; m &= m - 1)
                        ++count[v][cell[std::countr_zero(m)]];

                std::array<int, N> order{};
                std::iota(order.begin(), order.begin() + n, 0);
                auto less = [&](int a, int b) {
                    if (cell[a] != cell[b])
                        return cell[a] < cell[b];
                    return std::lexicographical_compare(count[a].begin(), count[a].begin() + k,
                            count[b].begin(), count[b].begin() + k);
                };
                std::sort(order.begin(), order.begin() + n, less);

                Cells next{};
                int id = 0;
                for (int i = 0; i < n; ++i) {
                    if (i > 0 && less(order[i - 1], order[i]))
                        ++id;
                    next[order[i]] = id;
                }
                if (id + 1 == k)
                    return;
                cell = next;
                k = id + 1;
            }
        }

        void leaf(const Cells & cell)
        {
            std::array<int, N> order{};
            for (int v = 0; v < n; ++v)
                order[cell[v]] = v;
            Code code = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
            if (! have_best || code < best) {
                best = code;
                best_order = order;
                have_best = true;
            }
        }

        void run(Cells cell, int k)
        {
            refine(cell, k);
            if (k == n) {
                leaf(cell);
                return;
            }

            std::array<int, N> size{};
            for (int v = 0; v < n; ++v)
                ++size[cell[v]];
            int target = 0;
            while (size[target] < 2)
                ++target;

            unsigned tried = 0;
            for (int v = 0; v < n; ++v) {
                if (cell[v] != target || (twins[v] & tried))
                    continue;
                tried |= 1u << v;
                Cells next = cell;
                for (int w = 0; w < n; ++w) {
                    if (cell[w] > target)
                        ++next[w];
                    else if (cell[w] == target && w != v)
                        next[w] = target + 1;
                }
                run(next, k + 1);
            }
        }
    };

    auto search(const Graph & g, std::span<const std::uint64_t> labels) -> Search
    {
        if (g.order() > N)
            throw Error(Errc::out_of_range, "canonical form supports at most " + std::to_string(N)
                    + " vertices, got " + std::to_string(g.order()));

        Search s;
        s.n = g.order();
        for (int v = 0; v < s.n; ++v)
            s.adj[v] = static_cast<std::uint16_t>(g.neighbours(v));

        auto label = [&](int v) { return labels.empty() ? std::uint64_t{0} : labels[v]; };
        for (int u = 0; u < s.n; ++u)
            for (int v = 0; v < s.n; ++v)
                if (u != v && label(u) == label(v) && are_twins(g, u, v))
                    s.twins[u] |= static_cast<std::uint16_t>(1u << v);

        std::vector<std::uint64_t> distinct;
        for (int v = 0; v < s.n; ++v)
            distinct.push_back(label(v));
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        Cells cell{};
        for (int v = 0; v < s.n; ++v)
            cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), label(v)) - distinct.begin());

        if (s.n == 0)
            return s;
        s.run(cell, static_cast<int>(distinct.size()));
        return s;
    }

    auto relabelled(const Graph & g, const Search & s) -> Graph
    {
        std::array<int, N> position{};
        for (int i = 0; i < s.n; ++i)
            position[s.best_order[i]] = i;
        Graph result(s.n);
        for (auto [u, v] : g.edges())
            result.add_edge(position[u], position[v]);
        return result;
    }
}

auto canonical_form(const Graph & g) -> CanonicalForm
{
    auto s = search(g, {});
    return {emit_graph6(relabelled(g, s))};
}

auto canonical_form(const Graph & g, std::span<const std::uint64_t> labels) -> CanonicalForm
{
    if (static_cast<int>(labels.size()) != g.order())
        throw Error(Errc::invalid_argument, "one label per vertex is required");
    auto s = search(g, labels);
    std::string key = emit_graph6(relabelled(g, s));
    key.push_back('|');
    char buf[20];
    for (int i = 0; i < s.n; ++i) {
        std::snprintf(buf, sizeof buf, "%llx,", static_cast<unsigned long long>(labels[s.best_order[i]]));
        key += buf;
    }
    return {key};
}

auto canonical_graph(const Graph & g) -> Graph
{
    return relabelled(g, search(g, {}));
}

auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace chroma
