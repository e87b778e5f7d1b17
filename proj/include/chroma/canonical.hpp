#pragma once

#include <chroma/graph.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace chroma {

inline constexpr int max_canonical_order = 12;

/// Isomorphism-class key. For unlabelled graphs the key is the graph6 string
/// of the canonical relabelling, so it decodes back to a representative.
struct CanonicalForm {
    std::string key;

    auto operator<=>(const CanonicalForm &) const = default;
};

auto canonical_form(const Graph & g) -> CanonicalForm;

/// As above, but vertices additionally carry labels that isomorphisms must
/// preserve. Used for memoizing list-colouring subproblems.
auto canonical_form(const Graph & g, std::span<const std::uint64_t> labels) -> CanonicalForm;

/// Canonical relabelling of `g` (the graph encoded by its unlabelled key).
auto canonical_graph(const Graph & g) -> Graph;

auto isomorphic(const Graph & a, const Graph & b) -> bool;

} // namespace chroma
