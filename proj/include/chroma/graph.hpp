#pragma once

#include <chroma/error.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace chroma {

using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr auto bit(int v) -> VertexSet { return VertexSet{1} << v; }

inline constexpr auto low_bits(int n) -> VertexSet
{
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Simple undirected graph on vertices 0..n-1, one neighbour mask per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static auto from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;

    auto order() const noexcept -> int { return static_cast<int>(_adj.size()); }
    auto size() const noexcept -> int;
    auto vertices() const noexcept -> VertexSet { return low_bits(order()); }

    auto neighbours(int v) const -> VertexSet { return _adj[v]; }
    auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1; }
    auto degree(int v) const -> int { return std::popcount(_adj[v]); }
    auto min_degree() const -> int;
    auto max_degree() const -> int;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    auto edges() const -> std::vector<std::pair<int, int>>;

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    auto induced(VertexSet keep) const -> Graph;
    auto without_vertex(int v) const -> Graph;

    auto components() const -> std::vector<VertexSet>;
    auto connected() const -> bool;
    auto component_of(int v, VertexSet within) const -> VertexSet;

    auto operator==(const Graph &) const -> bool = default;

private:
    std::vector<VertexSet> _adj;
};

/// Marks the contraction of two adjacent vertices; any colouring count of it is zero.
struct Loop {
    auto operator==(const Loop &) const -> bool = default;
};

using Contraction = std::variant<Graph, Loop>;

auto parse_graph6(std::string_view text) -> Graph;
auto emit_graph6(const Graph & g) -> std::string;

auto has_colouring(const Graph & g, int k) -> bool;
auto chromatic_number(const Graph & g) -> int;

/// Merges v into u. The surviving vertex takes the smaller label and labels
/// above the removed one shift down by one.
auto contract_vertices(const Graph & g, int u, int v) -> Contraction;
auto delete_edge(const Graph & g, int u, int v) -> Graph;

auto is_2_induced(const Graph & g, VertexSet subset) -> bool;
auto shortest_odd_cycle(const Graph & g) -> std::optional<int>;
auto two_colouring(const Graph & g) -> std::optional<VertexSet>;
auto has_triangle(const Graph & g) -> bool;
auto is_cycle(const Graph & g) -> bool;
auto is_tree(const Graph & g) -> bool;
auto is_2_connected(const Graph & g) -> bool;

auto is_vertex_critical(const Graph & g, int k) -> bool;
auto is_edge_critical(const Graph & g, int k) -> bool;

auto has_twins(const Graph & g) -> bool;
auto are_twins(const Graph & g, int u, int v) -> bool;

auto leaf_pruned_core(const Graph & g) -> Graph;

} // namespace chroma
