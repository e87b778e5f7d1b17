#pragma once

#include <chroma/graph.hpp>

#include <functional>
#include <string>
#include <vector>

namespace chroma {

/// Largest order enumerated without the long-runtime opt-in; one more with it.
inline constexpr int max_enumeration_order = 9;

struct EnumerationOptions {
    bool connected = true;
    /// Opt-in for order 10, which takes hours.
    bool allow_long = false;
    /// Property closed under taking induced subgraphs; checked level by level,
    /// which prunes the generation tree. Empty means every graph.
    std::function<bool(const Graph &)> hereditary;
};

/// Canonical graph6 keys of all graphs on n vertices (one per isomorphism
/// class), sorted. Built by adding a vertex to each graph on n - 1 vertices
/// in every possible way and deduplicating by canonical form; for connected
/// graphs the new vertex gets a nonempty neighbourhood, which suffices
/// because every connected graph has a vertex whose removal keeps it connected.
auto enumerate_keys(int n, const EnumerationOptions & options = {}) -> std::vector<std::string>;

auto enumerate_graphs(int n, const EnumerationOptions & options = {}) -> std::vector<Graph>;

auto enumerate_connected(int n, bool allow_long = false) -> std::vector<Graph>;

} // namespace chroma
