#include <chroma/families.hpp>

namespace chroma {

auto make_cycle(int n) -> Graph
{
    if (n < 3)
        throw Error(Errc::invalid_argument, "a cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

auto make_path(int n) -> Graph
{
    if (n < 1)
        throw Error(Errc::invalid_argument, "a path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto make_complete(int k) -> Graph
{
    if (k < 1)
        throw Error(Errc::invalid_argument, "complete graph needs at least 1 vertex");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_edge(i, j);
    return g;
}

auto make_empty(int n) -> Graph
{
    return Graph(n);
}

auto make_complete_bipartite(int a, int b) -> Graph
{
    if (a < 1 || b < 1)
        throw Error(Errc::invalid_argument, "both sides of a complete bipartite graph must be nonempty");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g.add_edge(i, a + j);
    return g;
}

auto make_theta(int r1, int r2, int r3) -> Graph
{
    if (r1 < 1 || r1 > r2 || r2 > r3 || r2 < 2)
        throw Error(Errc::invalid_argument, "theta parameters need 1 <= r1 <= r2 <= r3 and r2 >= 2");
    Graph g(r1 + r2 + r3 - 1);
    int next = 2;
    for (int r : {r1, r2, r3}) {
        int prev = 0;
        for (int step = 1; step < r; ++step) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

auto append_tree(const Graph & host, int root, const RootedTree & tree) -> Graph
{
    int base = host.order();
    Graph g(base + tree.extra_vertices());
    for (auto [u, v] : host.edges())
        g.add_edge(u, v);
    for (int i = 0; i < tree.extra_vertices(); ++i) {
        int p = tree.parent[i];
        if (p < 0 || p > i)
            throw Error(Errc::invalid_argument, "tree parent indices must satisfy 0 <= parent[i] <= i");
        g.add_edge(p == 0 ? root : base + p - 1, base + i);
    }
    return g;
}

auto make_k4_with_trees(const std::vector<RootedTree> & trees) -> Graph
{
    if (trees.size() != 4)
        throw Error(Errc::invalid_argument, "exactly four rooted trees are required");
    Graph g = make_complete(4);
    for (int v = 0; v < 4; ++v)
        g = append_tree(g, v, trees[v]);
    return g;
}

auto make_wheel(int rim) -> Graph
{
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

auto make_petersen() -> Graph
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

auto make_moser_spindle() -> Graph
{
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
}

auto make_grotzsch() -> Graph
{
    // Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10.
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(5 + i, 10);
    }
    return g;
}

} // namespace chroma
