#include <chroma/canonical.hpp>
#include <chroma/enumerate.hpp>

#include <algorithm>
#include <unordered_set>

namespace chroma {

namespace {
    auto extend(const std::vector<std::string> & previous, int n, const EnumerationOptions & options)
            -> std::vector<std::string>
    {
        std::unordered_set<std::string> seen;
        VertexSet first = options.connected ? 1 : 0;
        for (const auto & key : previous) {
            Graph base = parse_graph6(key);
            for (VertexSet s = first; s < bit(n - 1); ++s) {
                Graph g(n);
                for (auto [u, v] : base.edges())
                    g.add_edge(u, v);
                for (VertexSet m = s; m; m &= m - 1)
                    g.add_edge(n - 1, std::countr_zero(m));
                if (options.hereditary && ! options.hereditary(g))
                    continue;
                seen.insert(canonical_form(g).key);
            }
        }
        std::vector<std::string> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end());
        return out;
    }
}

auto enumerate_keys(int n, const EnumerationOptions & options) -> std::vector<std::string>
{
    int cap = max_enumeration_order + (options.allow_long ? 1 : 0);
    if (n < 1 || n > cap)
        throw Error(Errc::out_of_range, "enumeration supports 1 <= n <= " + std::to_string(cap)
                + (options.allow_long ? "" : " (10 needs the long-runtime opt-in)"));

    std::vector<std::string> level{emit_graph6(Graph(1))};
    if (options.hereditary && ! options.hereditary(Graph(1)))
        level.clear();
    for (int k = 2; k <= n; ++k)
        level = extend(level, k, options);
    return level;
}

auto enumerate_graphs(int n, const EnumerationOptions & options) -> std::vector<Graph>
{
    std::vector<Graph> out;
    for (const auto & key : enumerate_keys(n, options))
        out.push_back(parse_graph6(key));
    return out;
}

auto enumerate_connected(int n, bool allow_long) -> std::vector<Graph>
{
    EnumerationOptions options;
    options.allow_long = allow_long;
    return enumerate_graphs(n, options);
}

} // namespace chroma
