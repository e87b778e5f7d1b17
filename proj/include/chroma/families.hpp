#pragma once

#include <chroma/graph.hpp>

#include <vector>

namespace chroma {

auto make_cycle(int n) -> Graph;
auto make_path(int n) -> Graph;
auto make_complete(int k) -> Graph;
auto make_empty(int n) -> Graph;
auto make_complete_bipartite(int a, int b) -> Graph;

/// Two degree-3 vertices (0 and 1) joined by internally disjoint paths of
/// r1 <= r2 <= r3 edges.
auto make_theta(int r1, int r2, int r3) -> Graph;

/// parent[i] is the parent of tree node i + 1; node 0 is the root, which is
/// identified with a vertex of the host graph. Requires parent[i] <= i.
struct RootedTree {
    std::vector<int> parent;

    auto extra_vertices() const -> int { return static_cast<int>(parent.size()); }
};

auto make_k4_with_trees(const std::vector<RootedTree> & trees) -> Graph;

/// Grows `tree` from vertex `root` of `host`.
auto append_tree(const Graph & host, int root, const RootedTree & tree) -> Graph;

auto make_wheel(int rim) -> Graph;
auto make_petersen() -> Graph;
auto make_moser_spindle() -> Graph;
auto make_grotzsch() -> Graph;

} // namespace chroma
