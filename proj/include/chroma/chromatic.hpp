#pragma once

#include <chroma/graph.hpp>
#include <chroma/polynomial.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace chroma {

/// Number of proper colourings with palette [x], by backtracking over a
/// breadth-first vertex order. Colours not yet used anywhere are
/// interchangeable, so they are explored once and weighted by their number.
/// This is the counting oracle the polynomial engines are checked against.
auto count_colourings(const Graph & g, std::uint64_t x) -> BigInt;

/// Chromatic polynomial P_G(x), by memoized deletion-contraction (sparse
/// graphs) or addition-contraction (dense graphs). Order at most 12.
auto chromatic_polynomial(const Graph & g) -> IntPolynomial;

inline constexpr int max_polynomial_order = 12;

/// Concurrent map from canonical key to chromatic polynomial. Values are
/// idempotent, so racing writers store identical entries.
class PolynomialCache {
public:
    auto find(const std::string & key) const -> std::optional<IntPolynomial>;
    void store(const std::string & key, const IntPolynomial & value);
    auto size() const -> std::size_t;
    void clear();

private:
    mutable std::shared_mutex _mutex;
    std::unordered_map<std::string, IntPolynomial> _map;
};

auto chromatic_cache() -> PolynomialCache &;

auto falling_factorial(const BigInt & x, int k) -> BigInt;

/// x^(k falling) * (x - 1)^(n - k): the colouring count of a k-clique with
/// trees grown from its vertices.
auto tomescu_bound(int k, int n, const BigInt & x) -> BigInt;

/// The bound above as a polynomial in x.
auto tomescu_bound_polynomial(int k, int n) -> IntPolynomial;

/// Q_{C_n}(y) = y^n + (-1)^n y.
auto closed_form_cycle(int n) -> IntPolynomial;

/// Colourings of a path with r edges whose endpoints carry fixed colours,
/// drawn from y + 1 colours; a polynomial in y.
auto path_fixed_endpoints(int r, bool same_colour) -> IntPolynomial;

/// Shifted chromatic polynomial of the theta graph with path lengths r1 <= r2 <= r3.
auto theta_polynomial(int r1, int r2, int r3) -> IntPolynomial;

} // namespace chroma
