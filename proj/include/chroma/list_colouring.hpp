#pragma once

#include <chroma/graph.hpp>
#include <chroma/polynomial.hpp>
#include <chroma/report.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace chroma {

/// Set of colours from [64]; colour c occupies bit c - 1.
using ColourSet = std::uint64_t;

inline constexpr int max_colour = 64;

inline constexpr auto colour_bit(int c) -> ColourSet { return ColourSet{1} << (c - 1); }

auto colour_set(std::initializer_list<int> colours) -> ColourSet;
auto colours_of(ColourSet s) -> std::vector<int>;

struct Bipartition {
    VertexSet plus = 0;
    VertexSet minus = 0;

    auto operator==(const Bipartition &) const -> bool = default;
};

/// Allowed colours per vertex, drawn from the palette [m].
struct ListAssignment {
    int palette = 0;
    std::vector<ColourSet> lists;
    std::optional<Bipartition> bipartition;

    auto operator==(const ListAssignment &) const -> bool = default;
};

/// Forbidden colours per vertex. Labels are abstract positions in [y + 1];
/// `top_label`, when set, names the label that stands for y + 1 itself.
struct ForbiddenAssignment {
    std::vector<ColourSet> forbidden;
    std::optional<int> top_label;

    auto max_label() const -> int;
    /// Forbidden sets over the concrete palette [y + 1]. Needs y + 1 >= max_label()
    /// so that distinct labels stay distinct colours.
    auto concrete(int y) const -> std::vector<ColourSet>;
    /// Complementary list assignment over [y + 1].
    auto to_lists(int y) const -> ListAssignment;
};

/// colouring[v] is the colour of v, from 1 upward.
using Colouring = std::vector<int>;

auto is_proper(const Graph & g, const Colouring & c) -> bool;
auto respects(const ListAssignment & lists, const Colouring & c) -> bool;

/// Number of L-colourings, by backtracking on the most constrained vertex.
auto count_list_colourings(const Graph & g, const ListAssignment & lists) -> BigInt;

/// Every L-colouring, in lexicographic order of the vertex sequence.
auto enumerate_list_colourings(const Graph & g, const ListAssignment & lists) -> std::vector<Colouring>;

/// C_ij(S): trade j for i when j is present and i is not.
auto compress_set(ColourSet s, int i, int j) -> ColourSet;

/// C_ij on V+ and C_ji on V-; needs an explicit bipartition.
auto compress(const ListAssignment & lists, int i, int j) -> ListAssignment;

/// Applies every ij-compression with i < j in lexicographic order until
/// nothing changes.
auto compress_to_fixpoint(const ListAssignment & lists) -> ListAssignment;

/// Swaps i and j on every ij-Kempe component of c that meets `touched`.
/// Applying it twice with the same set gives c back.
auto kempe_swap(const Graph & g, VertexSet touched, int i, int j, const Colouring & c) -> Colouring;

/// Vertices whose list changes under compress(lists, i, j).
auto compression_support(const ListAssignment & lists, int i, int j) -> VertexSet;

/// kempe_swap on the compression support, for an L-colouring c.
auto kempe_swap_map(const Graph & g, const ListAssignment & lists, int i, int j, const Colouring & c) -> Colouring;

/// Initial segments of [m] on V+, terminal segments on V-. Without an explicit
/// bipartition the lowest vertex of each component goes to V+.
auto extremal_assignment(const Graph & g, std::span<const int> sizes, int m,
        std::optional<Bipartition> bipartition = std::nullopt) -> ListAssignment;

auto default_bipartition(const Graph & g) -> Bipartition;

inline constexpr int max_list_polynomial_order = 10;

/// Q_{G,L'}(y) by deletion-contraction, merging forbidden sets on contraction.
auto list_chromatic_polynomial(const Graph & g, const ForbiddenAssignment & forbidden) -> IntPolynomial;
/// Zero for a loop.
auto list_chromatic_polynomial(const Contraction & g, const ForbiddenAssignment & forbidden) -> IntPolynomial;

/// Brute-force count of (y + 1)-colourings avoiding the forbidden colours.
auto count_avoiding(const Graph & g, const ForbiddenAssignment & forbidden, int y) -> BigInt;

/// Path list polynomials: alternating singleton forbidden colours {1}, {y+1},
/// ...; B also forbids {1, 2} at the first vertex. C-hat bounds the variant
/// with two forbidden colours at both ends.
auto path_A(int n) -> IntPolynomial;
auto path_B(int n) -> IntPolynomial;
auto path_C_hat(int n) -> IntPolynomial;

/// Forbidden assignment on P_n used for A_n (kind 'A'), B_n ('B') and C_n ('C'),
/// with label 4 standing for y + 1.
auto path_forbidden(int n, char kind) -> ForbiddenAssignment;

struct Pin {
    int vertex;
    int colour;
};

/// Sum over I in `family` of (-1)^|I| times the number of (y + 1)-colourings
/// in which every pin in I holds. Family members are bitmasks over pin
/// indices; the default is every subset.
auto inclusion_exclusion_count(const Graph & g, std::span<const Pin> pins, int y,
        std::optional<std::vector<std::uint32_t>> family = std::nullopt) -> BigInt;

/// Subsets of [k] that do not contain both a and b.
auto subsets_avoiding_pair(int k, int a, int b) -> std::vector<std::uint32_t>;

enum class ClosedFormCase {
    K3,
    K23,
    C5,
    C4LeafA,
    C4LeafB,
};

auto to_string(ClosedFormCase c) -> std::string;
auto closed_form_graph(ClosedFormCase c) -> Graph;
auto closed_form_bound(ClosedFormCase c) -> IntPolynomial;

/// Exhaustive maximisation of Q_{G,L'}(y) over forbidden assignments of the
/// case's shape, checked against the bound polynomial and the extremal
/// configurations.
auto closed_form_check(ClosedFormCase c, std::span<const int> ys) -> VerificationReport;

} // namespace chroma
