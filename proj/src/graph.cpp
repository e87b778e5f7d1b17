#include <chroma/graph.hpp>

#include <algorithm>
#include <array>
#include <queue>

namespace chroma {

namespace {
    void check_vertex(const Graph & g, int v)
    {
        if (v < 0 || v >= g.order())
            throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " out of range for graph of order "
                    + std::to_string(g.order()));
    }
}

Graph::Graph(int n)
{
    if (n < 0 || n > max_vertices)
        throw Error(Errc::out_of_range, "graph order must be in [0, 64], got " + std::to_string(n));
    _adj.assign(n, 0);
}

auto Graph::from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::size() const noexcept -> int
{
    int total = 0;
    for (auto m : _adj)
        total += std::popcount(m);
    return total / 2;
}

auto Graph::min_degree() const -> int
{
    int best = order() == 0 ? 0 : max_vertices;
    for (auto m : _adj)
        best = std::min(best, std::popcount(m));
    return best;
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (auto m : _adj)
        best = std::max(best, std::popcount(m));
    return best;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v)
        throw Error(Errc::invalid_argument, "loops are not allowed");
    _adj[u] |= bit(v);
    _adj[v] |= bit(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    _adj[u] &= ~bit(v);
    _adj[v] &= ~bit(u);
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < order(); ++u)
        for (VertexSet m = _adj[u] & ~low_bits(u + 1); m; m &= m - 1)
            result.emplace_back(u, std::countr_zero(m));
    return result;
}

auto Graph::induced(VertexSet keep) const -> Graph
{
    keep &= vertices();
    std::array<int, max_vertices> label{};
    int next = 0;
    for (VertexSet m = keep; m; m &= m - 1)
        label[std::countr_zero(m)] = next++;

    Graph result(next);
    for (VertexSet m = keep; m; m &= m - 1) {
        int u = std::countr_zero(m);
        VertexSet row = 0;
        for (VertexSet n = _adj[u] & keep; n; n &= n - 1)
            row |= bit(label[std::countr_zero(n)]);
        result._adj[label[u]] = row;
    }
    return result;
}

auto Graph::without_vertex(int v) const -> Graph
{
    check_vertex(*this, v);
    return induced(vertices() & ~bit(v));
}

auto Graph::component_of(int v, VertexSet within) const -> VertexSet
{
    VertexSet seen = bit(v), frontier = bit(v);
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet m = frontier; m; m &= m - 1)
            next |= _adj[std::countr_zero(m)];
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

auto Graph::components() const -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet left = vertices();
    while (left) {
        auto c = component_of(std::countr_zero(left), left);
        result.push_back(c);
        left &= ~c;
    }
    return result;
}

auto Graph::connected() const -> bool
{
    return order() == 0 || component_of(0, vertices()) == vertices();
}

auto parse_graph6(std::string_view text) -> Graph
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        throw Error(Errc::parse_error, "graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error(Errc::parse_error, std::string("graph6: invalid character '") + c + "'");

    long n;
    std::size_t pos;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    }
    else {
        if (text.size() >= 2 && text[1] == 126)
            throw Error(Errc::out_of_range, "graph6: order exceeds 64");
        if (text.size() < 4)
            throw Error(Errc::parse_error, "graph6: truncated order header");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        if (n < 63)
            throw Error(Errc::parse_error, "graph6: non-canonical order header");
        pos = 4;
    }
    if (n > max_vertices)
        throw Error(Errc::out_of_range, "graph6: order " + std::to_string(n) + " exceeds 64");

    long bits = n * (n - 1) / 2;
    std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected)
        throw Error(Errc::parse_error, "graph6: expected " + std::to_string(expected) + " data bytes, got "
                + std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    for (; k < static_cast<long>(expected) * 6; ++k) {
        int byte = text[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw Error(Errc::parse_error, "graph6: nonzero padding bits");
    }
    return g;
}

auto emit_graph6(const Graph & g) -> std::string
{
    int n = g.order();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

namespace {
    // Decides k-colourability by DSATUR-ordered backtracking. New colours are
    // only opened in increasing order, which removes colour-permutation symmetry.
    struct ColourSearch {
        const Graph & g;
        int k;
        std::array<int, max_vertices> colour{};
        std::array<std::uint64_t, max_vertices> seen{};

        auto search(VertexSet uncoloured, int used) -> bool
        {
            if (! uncoloured)
                return true;

            int best = -1, best_sat = -1, best_deg = -1;
            for (VertexSet m = uncoloured; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int sat = std::popcount(seen[v]);
                int deg = std::popcount(g.neighbours(v) & uncoloured);
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = v;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            if (best_sat >= k)
                return false;

            int limit = std::min(k, used + 1);
            for (int c = 0; c < limit; ++c) {
                if ((seen[best] >> c) & 1)
                    continue;
                colour[best] = c;
                std::array<std::uint64_t, max_vertices> saved;
                VertexSet nbrs = g.neighbours(best) & uncoloured;
                for (VertexSet m = nbrs; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    saved[w] = seen[w];
                    seen[w] |= std::uint64_t{1} << c;
                }
                bool ok = search(uncoloured & ~bit(best), std::max(used, c + 1));
                for (VertexSet m = nbrs; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    seen[w] = saved[w];
                }
                if (ok)
                    return true;
            }
            return false;
        }
    };
}

auto has_colouring(const Graph & g, int k) -> bool
{
    if (g.order() == 0)
        return true;
    if (k <= 0)
        return false;
    if (k >= g.order())
        return true;
    if (k == 1)
        return g.size() == 0;
    if (k == 2)
        return two_colouring(g).has_value();
    ColourSearch s{g, k};
    return s.search(g.vertices(), 0);
}

auto chromatic_number(const Graph & g) -> int
{
    int k = 0;
    while (! has_colouring(g, k))
        ++k;
    return k;
}

auto contract_vertices(const Graph & g, int u, int v) -> Contraction
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v)
        throw Error(Errc::invalid_argument, "cannot contract a vertex with itself");
    if (g.adjacent(u, v))
        return Loop{};

    int keep = std::min(u, v), gone = std::max(u, v);
    Graph merged = g;
    for (VertexSet m = g.neighbours(gone); m; m &= m - 1)
        merged.add_edge(keep, std::countr_zero(m));
    return merged.without_vertex(gone);
}

auto delete_edge(const Graph & g, int u, int v) -> Graph
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (! g.adjacent(u, v))
        throw Error(Errc::invalid_argument, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is absent");
    Graph result = g;
    result.remove_edge(u, v);
    return result;
}

auto is_2_induced(const Graph & g, VertexSet subset) -> bool
{
    subset &= g.vertices();
    for (VertexSet m = g.vertices() & ~subset; m; m &= m - 1)
        if (std::popcount(g.neighbours(std::countr_zero(m)) & subset) > 1)
            return false;
    return true;
}

auto shortest_odd_cycle(const Graph & g) -> std::optional<int>
{
    // A shortest odd closed walk through the BFS root is an odd cycle; an edge
    // joining two vertices at equal depth closes a walk of length 2d + 1.
    int best = max_vertices + 1;
    int n = g.order();
    for (int s = 0; s < n; ++s) {
        std::array<int, max_vertices> dist;
        dist.fill(-1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            for (VertexSet m = g.neighbours(u); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
                else if (dist[w] == dist[u])
                    best = std::min(best, 2 * dist[u] + 1);
            }
        }
    }
    if (best > max_vertices)
        return std::nullopt;
    return best;
}

auto two_colouring(const Graph & g) -> std::optional<VertexSet>
{
    VertexSet plus = 0, assigned = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((assigned >> s) & 1)
            continue;
        plus |= bit(s);
        assigned |= bit(s);
        std::queue<int> q;
        q.push(s);
        while (! q.empty()) {
            int u = q.front();
            q.pop();
            bool u_plus = (plus >> u) & 1;
            for (VertexSet m = g.neighbours(u); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if ((assigned >> w) & 1) {
                    if (bool((plus >> w) & 1) == u_plus)
                        return std::nullopt;
                    continue;
                }
                assigned |= bit(w);
                if (! u_plus)
                    plus |= bit(w);
                q.push(w);
            }
        }
    }
    return plus;
}

auto has_triangle(const Graph & g) -> bool
{
    for (auto [u, v] : g.edges())
        if (g.neighbours(u) & g.neighbours(v))
            return true;
    return false;
}

auto is_cycle(const Graph & g) -> bool
{
    if (g.order() < 3 || ! g.connected())
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

auto is_tree(const Graph & g) -> bool
{
    return g.order() >= 1 && g.connected() && g.size() == g.order() - 1;
}

auto is_2_connected(const Graph & g) -> bool
{
    if (g.order() < 3 || ! g.connected())
        return false;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet rest = g.vertices() & ~bit(v);
        if (g.component_of(std::countr_zero(rest), rest) != rest)
            return false;
    }
    return true;
}

auto is_vertex_critical(const Graph & g, int k) -> bool
{
    if (chromatic_number(g) != k)
        throw Error(Errc::invalid_argument, "graph is not " + std::to_string(k) + "-chromatic");
    for (int v = 0; v < g.order(); ++v)
        if (! has_colouring(g.without_vertex(v), k - 1))
            return false;
    return true;
}

auto is_edge_critical(const Graph & g, int k) -> bool
{
    if (chromatic_number(g) != k)
        throw Error(Errc::invalid_argument, "graph is not " + std::to_string(k) + "-chromatic");
    for (auto [u, v] : g.edges())
        if (! has_colouring(delete_edge(g, u, v), k - 1))
            return false;
    return true;
}

auto are_twins(const Graph & g, int u, int v) -> bool
{
    return u != v && (g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u));
}

auto has_twins(const Graph & g) -> bool
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (are_twins(g, u, v))
                return true;
    return false;
}

auto leaf_pruned_core(const Graph & g) -> Graph
{
    if (! g.connected())
        throw Error(Errc::invalid_argument, "leaf_pruned_core requires a connected graph");
    VertexSet left = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet m = left; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (std::popcount(g.neighbours(v) & left) <= 1) {
                left &= ~bit(v);
                changed = true;
            }
        }
    }
    return g.induced(left);
}

} // namespace chroma
