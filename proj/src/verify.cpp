#include <chroma/canonical.hpp>
#include <chroma/chromatic.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/families.hpp>
#include <chroma/verify.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace chroma {

namespace {
    using Counters = std::map<std::string, std::uint64_t>;

    struct Partial {
        VerificationReport report;
        Counters counters;
    };

    auto fnv1a(const std::string & s) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    // Splits keys into chunks by a fixed hash, runs `work` on each chunk in its
    // own thread and merges the partial results. The merge is order-free, so
    // the outcome does not depend on the worker count.
    template <typename Work>
    auto parallel_map(const std::vector<std::string> & keys, int workers, Work work) -> Partial
    {
        workers = std::max(1, workers);
        std::vector<Partial> parts(workers);
        auto run = [&](int w) {
            for (const auto & key : keys)
                if (workers == 1 || static_cast<int>(fnv1a(key) % workers) == w)
                    work(key, parts[w]);
        };
        if (workers == 1) {
            run(0);
        }
        else {
            std::vector<std::thread> threads;
            std::vector<std::exception_ptr> errors(workers);
            for (int w = 0; w < workers; ++w)
                threads.emplace_back([&, w] {
                    try {
                        run(w);
                    }
                    catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            for (auto & t : threads)
                t.join();
            for (auto & e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        Partial total;
        for (auto & p : parts) {
            total.report.merge(p.report);
            for (auto & [k, v] : p.counters)
                total.counters[k] += v;
        }
        total.report.normalize();
        return total;
    }

    auto is_four_chromatic(const Graph & g) -> bool
    {
        return ! has_colouring(g, 3) && has_colouring(g, 4);
    }

    auto power(const BigInt & base, int e) -> BigInt
    {
        BigInt r = 1;
        for (int i = 0; i < e; ++i)
            r *= base;
        return r;
    }
}

auto is_k4_with_trees(const Graph & g) -> bool
{
    Graph core = leaf_pruned_core(g);
    return core.order() == 4 && core.size() == 6;
}

auto k4_with_trees_keys(int n) -> std::vector<std::string>
{
    if (n < 4 || n > max_canonical_order)
        throw Error(Errc::out_of_range, "K4 with trees needs 4 <= n <= 12");
    std::set<std::string> level{canonical_form(make_complete(4)).key};
    for (int k = 5; k <= n; ++k) {
        std::set<std::string> next;
        for (const auto & key : level) {
            Graph g = parse_graph6(key);
            for (int v = 0; v < g.order(); ++v) {
                Graph h(k);
                for (auto [a, b] : g.edges())
                    h.add_edge(a, b);
                h.add_edge(v, k - 1);
                next.insert(canonical_form(h).key);
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

auto verify_theorem_main(const TheoremOptions & options) -> VerificationReport
{
    if (options.n_max < 1 || options.n_max > max_enumeration_order)
        throw Error(Errc::out_of_range, "theorem check supports n_max <= 9");
    if (options.xs.empty())
        throw Error(Errc::invalid_argument, "at least one x is required");
    for (int x : options.xs)
        if (x < 4 || x > 10)
            throw Error(Errc::out_of_range, "theorem check supports x in [4, 10], got " + std::to_string(x));

    std::vector<int> xs = options.xs;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Rational sample points strictly between integers.
    const std::vector<BigRational> rational_xs = {BigRational(17, 4), BigRational(9, 2), BigRational(21, 4),
            BigRational(13, 2), BigRational(31, 4)};

    VerificationReport report;
    report.scope = "connected 4-chromatic graphs, n <= " + std::to_string(options.n_max) + ", x in {"
            + [&] {
                  std::string s;
                  for (int x : xs)
                      s += (s.empty() ? "" : ",") + std::to_string(x);
                  return s;
              }()
            + "}";

    std::uint64_t rational_points = 0, rational_exceed = 0;
    for (int n = 4; n <= options.n_max; ++n) {
        auto keys = enumerate_keys(n);
        std::vector<BigInt> bounds;
        for (int x : xs)
            bounds.push_back(tomescu_bound(4, n, BigInt(x)));
        IntPolynomial bound_poly = tomescu_bound_polynomial(4, n);

        auto part = parallel_map(keys, options.workers, [&](const std::string & key, Partial & out) {
            Graph g = parse_graph6(key);
            if (! is_four_chromatic(g))
                return;
            ++out.counters["four_chromatic"];
            IntPolynomial p = chromatic_polynomial(g);
            BigInt brute = count_colourings(g, 4);
            if (p.evaluate(BigInt(4)) != brute)
                out.report.add_violation({key, 4, to_string(p.evaluate(BigInt(4))), to_string(brute),
                        "polynomial disagrees with brute-force count"});

            std::size_t equal = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                BigInt lhs = p.evaluate(BigInt(xs[i]));
                ++out.report.instances_checked;
                if (lhs > bounds[i])
                    out.report.add_violation({key, xs[i], to_string(lhs), to_string(bounds[i]), "bound exceeded"});
                equal += lhs == bounds[i];
            }
            bool k4t = is_k4_with_trees(g);
            if (equal != 0 && equal != xs.size())
                out.report.add_violation({key, xs.front(), std::to_string(equal), std::to_string(xs.size()),
                        "equality at some but not all x"});
            if ((equal == xs.size()) != k4t)
                out.report.add_violation({key, xs.front(), equal == xs.size() ? "equality" : "strict",
                        k4t ? "K4 with trees" : "other core", "equality class mismatch"});
            if (equal == xs.size())
                out.report.add_witness(g);

            if (options.sample_rational)
                for (const auto & x : rational_xs) {
                    ++out.counters["rational_points"];
                    BigRational rhs = bound_poly.evaluate(x);
                    if (p.evaluate(x) > rhs)
                        ++out.counters["rational_exceed"];
                }
        });

        // Every K4-with-trees graph of this order must be among the witnesses.
        auto expected = k4_with_trees_keys(n);
        std::set<std::string> found;
        for (const auto & w : part.report.equality_witnesses)
            found.insert(w);
        for (const auto & e : expected)
            if (! found.count(e))
                part.report.add_violation({e, xs.front(), "missing", "witness", "K4 with trees not recorded as equality"});

        nlohmann::ordered_json d;
        d["connected"] = keys.size();
        d["four_chromatic"] = part.counters["four_chromatic"];
        d["witnesses"] = part.report.equality_witnesses.size();
        d["k4_with_trees"] = expected.size();
        report.details["n=" + std::to_string(n)] = std::move(d);
        rational_points += part.counters["rational_points"];
        rational_exceed += part.counters["rational_exceed"];
        report.merge(part.report);
    }
    if (options.sample_rational) {
        nlohmann::ordered_json r;
        r["points"] = rational_points;
        r["above_bound"] = rational_exceed;
        r["x"] = {"17/4", "9/2", "21/4", "13/2", "31/4"};
        report.details["rational_samples"] = std::move(r);
    }
    report.normalize();
    return report;
}

auto four_vertex_critical_graphs(int n_max) -> std::vector<std::string>
{
    if (n_max < 1 || n_max > 8)
        throw Error(Errc::out_of_range, "census supports n_max <= 8");
    std::vector<std::string> out;
    for (int n = 4; n <= n_max; ++n)
        for (const auto & key : enumerate_keys(n)) {
            Graph g = parse_graph6(key);
            if (is_four_chromatic(g) && is_vertex_critical(g, 4))
                out.push_back(key);
        }
    std::sort(out.begin(), out.end(), graph6_order_less);
    return out;
}

auto four_critical_census(int n_max) -> std::vector<std::string>
{
    if (n_max < 1 || n_max > 8)
        throw Error(Errc::out_of_range, "census supports n_max <= 8");
    std::vector<std::string> out;
    for (int n = 4; n <= n_max; ++n)
        for (const auto & key : enumerate_keys(n)) {
            Graph g = parse_graph6(key);
            if (is_four_chromatic(g) && is_edge_critical(g, 4))
                out.push_back(key);
        }
    std::sort(out.begin(), out.end(), graph6_order_less);
    return out;
}

auto census_report(int n_max) -> VerificationReport
{
    VerificationReport report;
    report.scope = "4-critical graphs, n <= " + std::to_string(n_max);
    auto members = four_critical_census(n_max);
    auto vertex_critical = four_vertex_critical_graphs(n_max);
    std::map<int, int> per_order;
    int small = 0;
    for (const auto & key : members) {
        Graph g = parse_graph6(key);
        ++report.instances_checked;
        ++per_order[g.order()];
        small += g.order() <= 7;
        if (g.min_degree() < 3)
            report.add_violation({key, 4, std::to_string(g.min_degree()), "3", "minimum degree below 3"});
        if (! is_2_connected(g))
            report.add_violation({key, 4, "cut vertex", "2-connected", "not 2-connected"});
        if (! is_vertex_critical(g, 4))
            report.add_violation({key, 4, "not vertex-critical", "vertex-critical", "edge-critical but not vertex-critical"});
    }
    std::vector<std::string> vertex_only;
    int vertex_small = 0;
    for (const auto & key : vertex_critical) {
        vertex_small += parse_graph6(key).order() <= 7;
        if (! std::binary_search(members.begin(), members.end(), key, graph6_order_less))
            vertex_only.push_back(key);
    }
    if (n_max >= 7 && small != 4)
        report.add_violation({"", 4, std::to_string(small), "4", "number of 4-critical graphs on at most 7 vertices"});
    report.details["members"] = members;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto [n, c] : per_order)
        counts[std::to_string(n)] = c;
    report.details["per_order"] = std::move(counts);
    if (n_max >= 7) {
        report.details["at_most_7"] = small;
        report.details["vertex_critical_at_most_7"] = vertex_small;
    }
    report.details["vertex_critical_only"] = vertex_only;
    report.normalize();
    return report;
}

auto verify_claim_2induced(int n_max, const std::vector<int> & ys, int workers) -> VerificationReport
{
    if (n_max < 1 || n_max > 8)
        throw Error(Errc::out_of_range, "2-induced check supports n_max <= 8");
    for (int y : ys)
        if (y < 3 || y > 62)
            throw Error(Errc::out_of_range, "2-induced check needs y >= 3");

    VerificationReport report;
    report.scope = "2-induced subgraphs of 4-vertex-critical graphs, n <= " + std::to_string(n_max);
    auto members = four_vertex_critical_graphs(n_max);
    auto part = parallel_map(members, workers, [&](const std::string & key, Partial & out) {
        Graph g = parse_graph6(key);
        int n = g.order();
        for (VertexSet s = 1; s < g.vertices(); ++s) {
            if (! is_2_induced(g, s))
                continue;
            ++out.counters["subsets"];
            Graph rest = g.induced(g.vertices() & ~s);
            for (int y : ys) {
                ++out.report.instances_checked;
                BigInt lhs = count_colourings(rest, static_cast<std::uint64_t>(y + 1));
                BigInt rhs = power(BigInt(y), n - std::popcount(s));
                if (lhs >= rhs)
                    out.report.add_violation({key, y, to_string(lhs), to_string(rhs),
                            "subset mask " + std::to_string(s) + " is not strictly below"});
            }
        }
    });
    report.merge(part.report);
    report.details["graphs"] = members.size();
    report.details["two_induced_subsets"] = part.counters["subsets"];
    report.normalize();
    return report;
}

auto smallest_triangle_free_4chromatic(int n_max, bool allow_long) -> VerificationReport
{
    int cap = max_enumeration_order + (allow_long ? 1 : 0);
    if (n_max < 1 || n_max > cap)
        throw Error(Errc::out_of_range, "triangle-free search supports n_max <= " + std::to_string(cap)
                + (allow_long ? "" : " (10 needs the long-runtime opt-in)"));

    VerificationReport report;
    report.scope = "connected triangle-free graphs, n <= " + std::to_string(n_max);
    EnumerationOptions options;
    options.allow_long = allow_long;
    options.hereditary = [](const Graph & g) { return ! has_triangle(g); };

    for (int n = 1; n <= n_max; ++n) {
        auto keys = enumerate_keys(n, options);
        std::uint64_t bipartite = 0;
        for (const auto & key : keys) {
            Graph g = parse_graph6(key);
            ++report.instances_checked;
            bipartite += two_colouring(g).has_value();
            if (! has_colouring(g, 3))
                report.add_violation({key, 4, std::to_string(chromatic_number(g)), "3", "triangle-free graph needs 4 colours"});
        }
        nlohmann::ordered_json d;
        d["triangle_free"] = keys.size();
        d["bipartite"] = bipartite;
        report.details["n=" + std::to_string(n)] = std::move(d);
    }

    Graph grotzsch = make_grotzsch();
    bool control = grotzsch.order() == 11 && ! has_triangle(grotzsch) && chromatic_number(grotzsch) == 4;
    report.details["positive_control"] = {{"graph6", emit_graph6(grotzsch)}, {"passed", control}};
    if (! control)
        report.add_violation({emit_graph6(grotzsch), 4, std::to_string(chromatic_number(grotzsch)), "4",
                "Groetzsch control is not a triangle-free 4-chromatic graph"});
    report.normalize();
    return report;
}

} // namespace chroma
