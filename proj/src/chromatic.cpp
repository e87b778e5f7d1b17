#include <chroma/chromatic.hpp>
#include <chroma/canonical.hpp>

#include <array>
#include <mutex>
#include <queue>

namespace chroma {

namespace {
    struct Overflow {};

    // unsigned 128-bit arithmetic that throws instead of wrapping
    struct U128 {
        unsigned __int128 v = 0;

        U128() = default;
        U128(std::uint64_t x) : v(x) {}

        friend auto operator+(U128 a, U128 b) -> U128
        {
            U128 r;
            if (__builtin_add_overflow(a.v, b.v, &r.v))
                throw Overflow{};
            return r;
        }

        friend auto operator*(U128 a, U128 b) -> U128
        {
            U128 r;
            if (__builtin_mul_overflow(a.v, b.v, &r.v))
                throw Overflow{};
            return r;
        }

        auto operator+=(U128 o) -> U128 & { return *this = *this + o; }

        auto to_big() const -> BigInt
        {
            BigInt hi = static_cast<std::uint64_t>(v >> 64);
            return (hi << 64) + BigInt(static_cast<std::uint64_t>(v));
        }
    };

    auto to_big(const U128 & v) -> BigInt { return v.to_big(); }
    auto to_big(const BigInt & v) -> BigInt { return v; }

    template <typename Num>
    struct Counter {
        const Graph & g;
        std::uint64_t x;
        int n;
        std::array<int, max_vertices> order{};
        std::array<VertexSet, max_vertices> earlier{};
        std::array<int, max_vertices> colour{};

        Counter(const Graph & graph, std::uint64_t palette) :
            g(graph), x(palette), n(graph.order())
        {
            VertexSet placed = 0;
            int next = 0;
            for (int s = 0; s < n; ++s) {
                if ((placed >> s) & 1)
                    continue;
                std::queue<int> q;
                q.push(s);
                placed |= bit(s);
                while (! q.empty()) {
                    int v = q.front();
                    q.pop();
                    order[next++] = v;
                    for (VertexSet m = g.neighbours(v) & ~placed; m; m &= m - 1) {
                        int w = std::countr_zero(m);
                        placed |= bit(w);
                        q.push(w);
                    }
                }
            }
            VertexSet before = 0;
            for (int i = 0; i < n; ++i) {
                earlier[order[i]] = g.neighbours(order[i]) & before;
                before |= bit(order[i]);
            }
        }

        auto run(int i, int used) -> Num
        {
            int v = order[i];
            std::uint64_t blocked = 0;
            for (VertexSet m = earlier[v]; m; m &= m - 1)
                blocked |= std::uint64_t{1} << colour[std::countr_zero(m)];
            std::uint64_t fresh = x > static_cast<std::uint64_t>(used) ? x - used : 0;

            if (i == n - 1)
                return Num(static_cast<std::uint64_t>(used - std::popcount(blocked))) + Num(fresh);

            Num total = Num(std::uint64_t{0});
            for (int c = 0; c < used; ++c) {
                if ((blocked >> c) & 1)
                    continue;
                colour[v] = c;
                total += run(i + 1, used);
            }
            if (fresh > 0) {
                colour[v] = used;
                total += Num(fresh) * run(i + 1, used + 1);
            }
            return total;
        }
    };

    auto shortest_cycle_edge(const Graph & g) -> std::pair<int, int>
    {
        std::pair<int, int> best{-1, -1};
        int best_len = max_vertices + 1;
        for (auto [u, v] : g.edges()) {
            VertexSet seen = bit(u), frontier = bit(u);
            int dist = 0;
            bool found = false;
            while (frontier && ! found && dist + 2 < best_len) {
                VertexSet next = 0;
                for (VertexSet m = frontier; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    next |= g.neighbours(w) & ~(w == u ? bit(v) : 0);
                }
                next &= ~seen;
                ++dist;
                if ((next >> v) & 1)
                    found = true;
                seen |= next;
                frontier = next;
            }
            if (found && dist + 1 < best_len) {
                best_len = dist + 1;
                best = {u, v};
            }
        }
        if (best.first < 0)
            best = g.edges().front();
        return best;
    }

    auto best_non_edge(const Graph & g) -> std::pair<int, int>
    {
        std::pair<int, int> best{-1, -1};
        int best_common = -1;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v))
                    continue;
                int common = std::popcount(g.neighbours(u) & g.neighbours(v));
                if (common > best_common) {
                    best_common = common;
                    best = {u, v};
                }
            }
        return best;
    }

    auto is_clique(const Graph & g, VertexSet s) -> bool
    {
        for (VertexSet m = s; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((g.neighbours(v) & s) != (s & ~bit(v)))
                return false;
        }
        return true;
    }

    auto polynomial_of(const Graph & g) -> IntPolynomial;

    auto connected_polynomial(Graph g) -> IntPolynomial
    {
        // Peel simplicial vertices: a vertex whose neighbourhood is a clique
        // contributes a factor (x - deg) and never disconnects the rest.
        IntPolynomial factor = IntPolynomial::constant(1);
        bool peeled = true;
        while (peeled && g.order() > 0) {
            peeled = false;
            for (int v = g.order() - 1; v >= 0; --v)
                if (is_clique(g, g.neighbours(v))) {
                    factor *= IntPolynomial::linear_root(g.degree(v));
                    g = g.without_vertex(v);
                    peeled = true;
                    break;
                }
        }
        if (g.order() == 0)
            return factor;

        auto & cache = chromatic_cache();
        auto key = canonical_form(g).key;
        if (auto hit = cache.find(key))
            return factor * *hit;

        int n = g.order();
        IntPolynomial result;
        if (4 * g.size() <= n * (n - 1)) {
            auto [u, v] = shortest_cycle_edge(g);
            Graph minus = delete_edge(g, u, v);
            result = polynomial_of(minus) - polynomial_of(std::get<Graph>(contract_vertices(minus, u, v)));
        }
        else {
            auto [u, v] = best_non_edge(g);
            Graph plus = g;
            plus.add_edge(u, v);
            result = polynomial_of(plus) + polynomial_of(std::get<Graph>(contract_vertices(g, u, v)));
        }
        cache.store(key, result);
        return factor * result;
    }

    auto polynomial_of(const Graph & g) -> IntPolynomial
    {
        if (g.order() == 0)
            return IntPolynomial::constant(1);
        auto parts = g.components();
        if (parts.size() == 1)
            return connected_polynomial(g);
        IntPolynomial result = IntPolynomial::constant(1);
        for (auto c : parts)
            result *= connected_polynomial(g.induced(c));
        return result;
    }
}

auto count_colourings(const Graph & g, std::uint64_t x) -> BigInt
{
    if (g.order() == 0)
        return 1;
    try {
        Counter<U128> c(g, x);
        return to_big(c.run(0, 0));
    }
    catch (const Overflow &) {
        Counter<BigInt> c(g, x);
        return to_big(c.run(0, 0));
    }
}

auto chromatic_polynomial(const Graph & g) -> IntPolynomial
{
    if (g.order() > max_polynomial_order)
        throw Error(Errc::out_of_range, "chromatic_polynomial supports at most "
                + std::to_string(max_polynomial_order) + " vertices, got " + std::to_string(g.order()));
    return polynomial_of(g);
}

auto PolynomialCache::find(const std::string & key) const -> std::optional<IntPolynomial>
{
    std::shared_lock lock(_mutex);
    auto it = _map.find(key);
    if (it == _map.end())
        return std::nullopt;
    return it->second;
}

void PolynomialCache::store(const std::string & key, const IntPolynomial & value)
{
    std::unique_lock lock(_mutex);
    _map.insert_or_assign(key, value);
}

auto PolynomialCache::size() const -> std::size_t
{
    std::shared_lock lock(_mutex);
    return _map.size();
}

void PolynomialCache::clear()
{
    std::unique_lock lock(_mutex);
    _map.clear();
}

auto chromatic_cache() -> PolynomialCache &
{
    static PolynomialCache cache;
    return cache;
}

auto falling_factorial(const BigInt & x, int k) -> BigInt
{
    if (k < 0)
        throw Error(Errc::invalid_argument, "falling factorial needs k >= 0");
    BigInt r = 1;
    for (int i = 0; i < k; ++i)
        r *= x - i;
    return r;
}

auto tomescu_bound(int k, int n, const BigInt & x) -> BigInt
{
    if (k < 1 || k > n)
        throw Error(Errc::invalid_argument, "bound needs 1 <= k <= n");
    if (x < k)
        throw Error(Errc::invalid_argument, "bound needs x >= k");
    return falling_factorial(x, k) * boost::multiprecision::pow(BigInt(x - 1), static_cast<unsigned>(n - k));
}

auto tomescu_bound_polynomial(int k, int n) -> IntPolynomial
{
    if (k < 1 || k > n)
        throw Error(Errc::invalid_argument, "bound needs 1 <= k <= n");
    IntPolynomial p = IntPolynomial::constant(1);
    for (int i = 0; i < k; ++i)
        p *= IntPolynomial::linear_root(i);
    return p * IntPolynomial::linear_root(1).pow(n - k);
}

auto closed_form_cycle(int n) -> IntPolynomial
{
    if (n < 3)
        throw Error(Errc::invalid_argument, "cycle length must be at least 3");
    return IntPolynomial::monomial(1, n) + IntPolynomial::monomial(n % 2 == 0 ? 1 : -1, 1);
}

auto path_fixed_endpoints(int r, bool same_colour) -> IntPolynomial
{
    if (r < 0)
        throw Error(Errc::invalid_argument, "path length must be nonnegative");
    int sign = r % 2 == 0 ? 1 : -1;
    IntPolynomial numerator = IntPolynomial::monomial(1, r)
        + (same_colour ? IntPolynomial::monomial(sign, 1) : IntPolynomial::constant(-sign));
    return numerator.divide_by_t_plus_one();
}

auto theta_polynomial(int r1, int r2, int r3) -> IntPolynomial
{
    if (r1 < 1 || r1 > r2 || r2 > r3 || r2 < 2)
        throw Error(Errc::invalid_argument, "theta parameters need 1 <= r1 <= r2 <= r3 and r2 >= 2");
    auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    IntPolynomial numerator = IntPolynomial::monomial(1, r1 + r2 + r3)
        + IntPolynomial::monomial(sign(r1 + r2), r3 + 1)
        + IntPolynomial::monomial(sign(r1 + r3), r2 + 1)
        + IntPolynomial::monomial(sign(r2 + r3), r1 + 1)
        + IntPolynomial{0, -1, 1} * BigInt(sign(r1 + r2 + r3));
    return numerator.divide_by_t_plus_one();
}

} // namespace chroma
