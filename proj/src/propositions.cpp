#include <chroma/families.hpp>
#include <chroma/list_colouring.hpp>

#include <functional>
#include <sstream>

namespace chroma {

auto to_string(ClosedFormCase c) -> std::string
{
    switch (c) {
    case ClosedFormCase::K3: return "K3";
    case ClosedFormCase::K23: return "K23";
    case ClosedFormCase::C5: return "C5";
    case ClosedFormCase::C4LeafA: return "C4leaf_a";
    case ClosedFormCase::C4LeafB: return "C4leaf_b";
    }
    throw Error(Errc::invalid_argument, "unknown closed-form case");
}

auto closed_form_graph(ClosedFormCase c) -> Graph
{
    switch (c) {
    case ClosedFormCase::K3: return make_complete(3);
    case ClosedFormCase::K23: return make_complete_bipartite(2, 3);
    case ClosedFormCase::C5: return make_cycle(5);
    case ClosedFormCase::C4LeafA:
    case ClosedFormCase::C4LeafB:
        // v1..v5 are 0..4; the leaf hangs off v1.
        return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    }
    throw Error(Errc::invalid_argument, "unknown closed-form case");
}

auto closed_form_bound(ClosedFormCase c) -> IntPolynomial
{
    switch (c) {
    case ClosedFormCase::K3: return {-4, 5, -3, 1};
    case ClosedFormCase::K23: return {-13, 36, -38, 21, -6, 1};
    case ClosedFormCase::C5: return {-16, 31, -28, 15, -5, 1};
    case ClosedFormCase::C4LeafA: return {-3, 10, -13, 10, -4, 1};
    case ClosedFormCase::C4LeafB: return {-11, 23, -23, 14, -5, 1};
    }
    throw Error(Errc::invalid_argument, "unknown closed-form case");
}

namespace {
    using Assignment = std::vector<ColourSet>;

    auto minimum_sizes(ClosedFormCase c) -> std::vector<int>
    {
        switch (c) {
        case ClosedFormCase::K3: return {1, 1, 1};
        case ClosedFormCase::K23:
        case ClosedFormCase::C5: return {1, 1, 1, 1, 1};
        case ClosedFormCase::C4LeafA: return {0, 1, 1, 1, 1};
        case ClosedFormCase::C4LeafB: return {0, 1, 1, 1, 2};
        }
        return {};
    }

    auto singleton(ColourSet s) -> std::optional<int>
    {
        if (std::popcount(s) != 1)
            return std::nullopt;
        return std::countr_zero(s) + 1;
    }

    auto all_singletons(const Assignment & a) -> std::optional<std::vector<int>>
    {
        std::vector<int> c;
        for (auto s : a) {
            auto x = singleton(s);
            if (! x)
                return std::nullopt;
            c.push_back(*x);
        }
        return c;
    }

    // The stated equality configurations. Only the first three cases name one.
    auto stated_extremal(ClosedFormCase c) -> std::function<bool(const Assignment &)>
    {
        switch (c) {
        case ClosedFormCase::K3:
            return [](const Assignment & a) {
                auto c = all_singletons(a);
                return c && (*c)[0] != (*c)[1] && (*c)[1] != (*c)[2] && (*c)[0] != (*c)[2];
            };
        case ClosedFormCase::K23:
            return [](const Assignment & a) {
                auto c = all_singletons(a);
                if (! c)
                    return false;
                auto & v = *c;
                return v[0] == v[1] && v[2] == v[3] && v[3] == v[4] && v[0] != v[2];
            };
        case ClosedFormCase::C5:
            return [](const Assignment & a) {
                auto c = all_singletons(a);
                if (! c)
                    return false;
                int repeats = 0;
                for (int i = 0; i < 5; ++i) {
                    if ((*c)[i] == (*c)[(i + 1) % 5])
                        return false;
                    repeats += (*c)[i] == (*c)[(i + 2) % 5];
                }
                return repeats == 2;
            };
        default:
            return {};
        }
    }

    auto format(const Assignment & a) -> std::string
    {
        std::ostringstream out;
        out << '[';
        for (std::size_t v = 0; v < a.size(); ++v) {
            out << (v ? ",[" : "[");
            auto cs = colours_of(a[v]);
            for (std::size_t i = 0; i < cs.size(); ++i)
                out << (i ? "," : "") << cs[i];
            out << ']';
        }
        out << ']';
        return out.str();
    }

    struct Counter {
        // One entry per proper colouring: the colour bit held by each vertex.
        std::vector<std::vector<ColourSet>> colourings;

        auto count(const Assignment & a) const -> std::uint64_t
        {
            std::uint64_t total = 0;
            for (const auto & c : colourings) {
                bool ok = true;
                for (std::size_t v = 0; v < a.size() && ok; ++v)
                    ok = ! (a[v] & c[v]);
                total += ok;
            }
            return total;
        }
    };

    auto subsets_of_size(int palette, int lo, int hi) -> std::vector<ColourSet>
    {
        std::vector<ColourSet> r;
        for (ColourSet s = 0; s < (ColourSet{1} << palette); ++s)
            if (std::popcount(s) >= lo && std::popcount(s) <= hi)
                r.push_back(s);
        return r;
    }

    void product(const std::vector<std::vector<ColourSet>> & choices, Assignment & current, std::size_t v,
            const std::function<void(const Assignment &)> & visit)
    {
        if (v == choices.size()) {
            visit(current);
            return;
        }
        for (auto s : choices[v]) {
            current[v] = s;
            product(choices, current, v + 1, visit);
        }
    }

    void for_each(const std::vector<std::vector<ColourSet>> & choices,
            const std::function<void(const Assignment &)> & visit)
    {
        Assignment current(choices.size(), 0);
        product(choices, current, 0, visit);
    }

    constexpr std::uint64_t full_search_limit = 1'000'000;
}

// Forbidding more colours never adds colourings. So once every assignment with
// exactly the minimum list sizes is known, it suffices to check that each
// assignment with one list one larger stays strictly below the bound: any
// larger assignment contains one of those.
auto closed_form_check(ClosedFormCase c, std::span<const int> ys) -> VerificationReport
{
    Graph g = closed_form_graph(c);
    IntPolynomial bound = closed_form_bound(c);
    auto mins = minimum_sizes(c);
    auto stated = stated_extremal(c);
    std::string g6 = emit_graph6(g);
    int n = g.order();

    VerificationReport report;
    report.scope = "closed form " + to_string(c);
    report.details["bound"] = bound.to_string('y');

    for (int y : ys) {
        if (y < 3 || y + 1 > 16)
            throw Error(Errc::out_of_range, "closed-form checks need 3 <= y <= 15");
        int palette = y + 1;
        BigInt bound_value = bound.evaluate(BigInt(y));

        Counter counter;
        ListAssignment full;
        full.palette = palette;
        full.lists.assign(n, low_bits(palette));
        for (const auto & col : enumerate_list_colourings(g, full)) {
            std::vector<ColourSet> bits;
            for (int x : col)
                bits.push_back(colour_bit(x));
            counter.colourings.push_back(std::move(bits));
        }

        auto violation = [&](const std::string & lhs, const std::string & rhs, const std::string & note) {
            report.add_violation({g6, y, lhs, rhs, note});
        };

        // Minimum layer.
        std::vector<std::vector<ColourSet>> choices;
        for (int v = 0; v < n; ++v)
            choices.push_back(subsets_of_size(palette, mins[v], mins[v]));
        std::uint64_t maximum = 0, maximisers = 0, assignments = 0, stated_count = 0;
        std::string example;
        for_each(choices, [&](const Assignment & a) {
            ++assignments;
            std::uint64_t q = counter.count(a);
            if (q > maximum) {
                maximum = q;
                maximisers = 0;
                example = format(a);
            }
            maximisers += q == maximum;
            if (stated) {
                bool is_stated = stated(a);
                stated_count += is_stated;
                if (is_stated && BigInt(q) != bound_value)
                    violation(std::to_string(q), to_string(bound_value), "stated configuration " + format(a) + " misses the bound");
                if (! is_stated && BigInt(q) == bound_value)
                    violation(std::to_string(q), to_string(bound_value), "configuration " + format(a) + " attains the bound outside the stated family");
            }
        });
        if (BigInt(maximum) > bound_value)
            violation(std::to_string(maximum), to_string(bound_value), "maximum exceeds the bound");
        if (BigInt(maximum) < bound_value)
            violation(std::to_string(maximum), to_string(bound_value), "bound not attained");

        // One list enlarged by a colour.
        std::uint64_t larger_max = 0;
        for (int v = 0; v < n; ++v) {
            if (mins[v] + 1 > palette)
                continue;
            auto grown = choices;
            grown[v] = subsets_of_size(palette, mins[v] + 1, mins[v] + 1);
            for_each(grown, [&](const Assignment & a) {
                ++assignments;
                std::uint64_t q = counter.count(a);
                larger_max = std::max(larger_max, q);
                if (BigInt(q) >= bound_value)
                    violation(std::to_string(q), to_string(bound_value), "larger forbidden lists " + format(a) + " reach the bound");
            });
        }

        // Direct search over every admissible assignment when small enough.
        std::uint64_t space = 1;
        for (int v = 0; v < n && space <= full_search_limit; ++v)
            space *= subsets_of_size(palette, mins[v], palette).size();
        bool full_search = space <= full_search_limit;
        if (full_search) {
            std::vector<std::vector<ColourSet>> all;
            for (int v = 0; v < n; ++v)
                all.push_back(subsets_of_size(palette, mins[v], palette));
            std::uint64_t full_max = 0, full_maximisers = 0;
            for_each(all, [&](const Assignment & a) {
                std::uint64_t q = counter.count(a);
                if (q > full_max) {
                    full_max = q;
                    full_maximisers = 0;
                }
                full_maximisers += q == full_max;
            });
            assignments += space;
            if (full_max != maximum || full_maximisers != maximisers)
                violation(std::to_string(full_max), std::to_string(maximum), "direct search disagrees with the layered search");
        }

        report.instances_checked += assignments;
        nlohmann::ordered_json d;
        d["maximum"] = maximum;
        d["bound"] = to_string(bound_value);
        d["maximisers"] = maximisers;
        if (stated)
            d["stated_configurations"] = stated_count;
        d["example_maximiser"] = example;
        d["best_with_larger_list"] = larger_max;
        d["direct_search"] = full_search;
        d["assignments"] = assignments;
        report.details["y=" + std::to_string(y)] = std::move(d);
    }
    report.normalize();
    return report;
}

} // namespace chroma
