#include <chroma/canonical.hpp>
#include <chroma/chromatic.hpp>
#include <chroma/enumerate.hpp>
#include <chroma/families.hpp>
#include <chroma/list_colouring.hpp>
#include <chroma/verify.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace chroma {

namespace {
    using Rng = std::mt19937_64;

    auto uniform(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    auto coin(Rng & rng, double p) -> bool
    {
        return std::bernoulli_distribution(p)(rng);
    }

    auto power(const BigInt & base, int e) -> BigInt
    {
        BigInt r = 1;
        for (int i = 0; i < e; ++i)
            r *= base;
        return r;
    }

    auto q_value(const Graph & g, int y) -> BigInt
    {
        return chromatic_polynomial(g).evaluate(BigInt(y + 1));
    }

    auto random_connected(Rng & rng, int n, double p) -> Graph
    {
        while (true) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng, p))
                        g.add_edge(u, v);
            if (g.connected())
                return g;
        }
    }

    auto random_graph(Rng & rng, int n, double p) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng, p))
                    g.add_edge(u, v);
        return g;
    }

    auto random_tree(Rng & rng, int extra) -> RootedTree
    {
        RootedTree t;
        for (int i = 0; i < extra; ++i)
            t.parent.push_back(uniform(rng, 0, i));
        return t;
    }

    auto with_edge(Graph g, int u, int v) -> Graph
    {
        g.add_edge(u, v);
        return g;
    }

    // G - S is a forest and each of its trees sends exactly one edge to S.
    auto appended_trees(const Graph & g, VertexSet s) -> bool
    {
        VertexSet rest = g.vertices() & ~s;
        VertexSet left = rest;
        while (left) {
            VertexSet comp = g.component_of(std::countr_zero(left), rest);
            left &= ~comp;
            int inside = 0, outward = 0;
            for (VertexSet m = comp; m; m &= m - 1) {
                int v = std::countr_zero(m);
                inside += std::popcount(g.neighbours(v) & comp);
                outward += std::popcount(g.neighbours(v) & s);
            }
            if (inside / 2 != std::popcount(comp) - 1 || outward != 1)
                return false;
        }
        return true;
    }

    // Some pair of vertices shares a colour in every (y + 1)-colouring.
    auto has_forced_pair(const Graph & f, int y) -> bool
    {
        for (int u = 0; u < f.order(); ++u)
            for (int v = u + 1; v < f.order(); ++v)
                if (! f.adjacent(u, v) && count_colourings(with_edge(f, u, v), y + 1) == 0)
                    return true;
        return false;
    }

    auto section_subgraph(Rng & rng) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "subgraph bound: 200 random pairs F in G, y in 2..6";
        std::uint64_t equalities = 0, characterised = 0;
        for (int t = 0; t < 200; ++t) {
            Graph g;
            VertexSet s = 0;
            Graph f;
            if (t % 2 == 0) {
                int n = uniform(rng, 3, 9);
                g = random_connected(rng, n, 0.3 + 0.4 * std::uniform_real_distribution<double>()(rng));
                while (std::popcount(s) < 2)
                    s = std::uniform_int_distribution<VertexSet>(0, g.vertices())(rng) & g.vertices();
                f = g.induced(s);
                for (auto [u, v] : f.edges())
                    if (coin(rng, 0.3))
                        f.remove_edge(u, v);
            }
            else {
                int k = uniform(rng, 3, 5);
                f = random_connected(rng, k, 0.6);
                g = f;
                s = low_bits(k);
                int extra = uniform(rng, 1, 9 - k);
                for (int i = 0; i < extra; ++i) {
                    Graph h(g.order() + 1);
                    for (auto [u, v] : g.edges())
                        h.add_edge(u, v);
                    h.add_edge(uniform(rng, 0, g.order() - 1), g.order());
                    g = h;
                }
                if (coin(rng, 0.4)) {
                    int u = uniform(rng, k, g.order() - 1);
                    int v = uniform(rng, 0, g.order() - 1);
                    if (u != v && ! g.adjacent(u, v))
                        g.add_edge(u, v);
                }
            }

            std::string key = emit_graph6(g);
            int gap = g.order() - f.order();
            bool trees = appended_trees(g, s);
            Graph induced = g.induced(s);
            for (int y = 2; y <= 6; ++y) {
                ++r.instances_checked;
                BigInt qg = q_value(g, y), qf = q_value(f, y);
                BigInt rhs = power(BigInt(y), gap) * qf;
                if (qg > rhs)
                    r.add_violation({key, y + 1, to_string(qg), to_string(rhs), "subgraph bound exceeded"});
                equalities += qg == rhs;
                if (qf > 0 && ! has_forced_pair(f, y)) {
                    ++characterised;
                    bool predicted = q_value(induced, y) == qf && trees;
                    if ((qg == rhs) != predicted)
                        r.add_violation({key, y + 1, to_string(qg), to_string(rhs),
                                predicted ? "appended trees but strict" : "equality without appended trees"});
                }
            }
        }

        // K4 with trees grown at every vertex attains the bound against F = K4.
        for (int t = 0; t < 50; ++t) {
            std::vector<RootedTree> trees;
            int budget = uniform(rng, 0, 5);
            for (int v = 0; v < 4; ++v) {
                int extra = v == 3 ? budget : uniform(rng, 0, budget);
                budget -= extra;
                trees.push_back(random_tree(rng, extra));
            }
            Graph g = make_k4_with_trees(trees);
            for (int y = 2; y <= 6; ++y) {
                ++r.instances_checked;
                BigInt qg = q_value(g, y), rhs = power(BigInt(y), g.order() - 4) * q_value(make_complete(4), y);
                if (qg != rhs)
                    r.add_violation({emit_graph6(g), y + 1, to_string(qg), to_string(rhs), "K4 with trees misses equality"});
            }
        }
        r.details["equalities"] = equalities;
        r.details["characterised"] = characterised;
        return r;
    }

    struct Piece {
        VertexSet vertices = 0;
        std::vector<std::pair<int, int>> edges;
        std::optional<int> shared;
    };

    auto section_decomposition(Rng & rng) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "decomposition bound: 200 random decompositions, y in 1..6";
        for (int t = 0; t < 200; ++t) {
            int budget = uniform(rng, 4, 9);
            std::vector<Piece> pieces;
            std::vector<std::pair<int, int>> extra_edges;
            int used = 0;
            while (used < budget) {
                int k = uniform(rng, 1, std::min(4, budget - used + (pieces.empty() ? 0 : 1)));
                Piece p;
                std::vector<int> vs;
                std::optional<int> attach;
                if (! pieces.empty() && coin(rng, 0.6)) {
                    std::vector<int> candidates;
                    for (int u = 0; u < used; ++u) {
                        bool ok = true;
                        for (const auto & q : pieces)
                            if (((q.vertices >> u) & 1) && q.shared && *q.shared != u)
                                ok = false;
                        if (ok)
                            candidates.push_back(u);
                    }
                    if (! candidates.empty())
                        attach = candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)];
                }
                if (attach) {
                    vs.push_back(*attach);
                    for (auto & q : pieces)
                        if ((q.vertices >> *attach) & 1)
                            q.shared = *attach;
                    p.shared = *attach;
                    for (int i = 1; i < k; ++i)
                        vs.push_back(used++);
                }
                else {
                    k = std::min(k, budget - used);
                    for (int i = 0; i < k; ++i)
                        vs.push_back(used++);
                    if (! pieces.empty())
                        extra_edges.emplace_back(uniform(rng, 0, vs.front() - 1), vs[uniform(rng, 0, k - 1)]);
                }
                for (int v : vs)
                    p.vertices |= bit(v);
                for (std::size_t a = 0; a < vs.size(); ++a)
                    for (std::size_t b = a + 1; b < vs.size(); ++b)
                        if (coin(rng, 0.6))
                            p.edges.emplace_back(vs[a], vs[b]);
                pieces.push_back(std::move(p));
                if (used >= budget)
                    break;
            }

            Graph g(used);
            for (const auto & p : pieces)
                for (auto [u, v] : p.edges)
                    g.add_edge(u, v);
            for (auto [u, v] : extra_edges)
                if (! g.adjacent(u, v))
                    g.add_edge(u, v);
            // Keep G connected with extra edges outside every piece.
            auto comps = g.components();
            for (std::size_t c = 1; c < comps.size(); ++c)
                g.add_edge(std::countr_zero(comps[0]), std::countr_zero(comps[c]));
            if (coin(rng, 0.3)) {
                int u = uniform(rng, 0, used - 1), v = uniform(rng, 0, used - 1);
                if (u != v && ! g.adjacent(u, v))
                    g.add_edge(u, v);
            }

            // Each piece meets the union of the others in at most one vertex.
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                VertexSet others = 0;
                for (std::size_t j = 0; j < pieces.size(); ++j)
                    if (j != i)
                        others |= pieces[j].vertices;
                if (std::popcount(pieces[i].vertices & others) > 1)
                    throw Error(Errc::internal, "decomposition generator broke the overlap rule");
            }

            int n = g.order(), n_sum = 0, rcount = static_cast<int>(pieces.size());
            std::vector<Graph> hs;
            for (const auto & p : pieces) {
                std::vector<int> index(max_vertices, -1);
                int k = 0;
                for (VertexSet m = p.vertices; m; m &= m - 1)
                    index[std::countr_zero(m)] = k++;
                Graph h(k);
                for (auto [u, v] : p.edges)
                    h.add_edge(index[u], index[v]);
                hs.push_back(h);
                n_sum += k;
            }
            std::string key = emit_graph6(g);
            for (int y = 1; y <= 6; ++y) {
                ++r.instances_checked;
                BigInt yb(y);
                BigInt lhs = q_value(g, y) * power(yb + 1, rcount - 1) * power(yb, std::max(0, n_sum - n));
                BigInt rhs = power(yb, std::max(0, n - n_sum)) * power(yb, rcount - 1);
                for (const auto & h : hs)
                    rhs *= q_value(h, y);
                if (lhs > rhs)
                    r.add_violation({key, y + 1, to_string(lhs), to_string(rhs), "decomposition bound exceeded"});
            }
        }
        return r;
    }

    auto section_paths() -> VerificationReport
    {
        VerificationReport r;
        r.scope = "paths with pinned ends: r in 0..7, y in 1..5";
        for (int len = 0; len <= 7; ++len)
            for (int same = 1; same >= (len == 0 ? 1 : 0); --same) {
                IntPolynomial p = path_fixed_endpoints(len, same);
                Graph g = make_path(len + 1);
                for (int y = 1; y <= 5; ++y) {
                    ++r.instances_checked;
                    ListAssignment l;
                    l.palette = y + 1;
                    l.lists.assign(len + 1, low_bits(y + 1));
                    l.lists[0] = colour_bit(1);
                    l.lists[len] &= colour_bit(same ? 1 : 2);
                    BigInt brute = count_list_colourings(g, l);
                    BigInt value = p.evaluate(BigInt(y));
                    if (brute != value)
                        r.add_violation({emit_graph6(g), y + 1, to_string(value), to_string(brute),
                                same ? "pinned path, equal ends" : "pinned path, distinct ends"});
                }
            }
        return r;
    }

    auto section_cycles() -> VerificationReport
    {
        VerificationReport r;
        r.scope = "cycles: n in 3..10";
        for (int n = 3; n <= 10; ++n) {
            ++r.instances_checked;
            Graph c = make_cycle(n);
            IntPolynomial q = shift_to_q(chromatic_polynomial(c));
            if (q != closed_form_cycle(n))
                r.add_violation({emit_graph6(c), 0, q.to_string('y'), closed_form_cycle(n).to_string('y'), "cycle polynomial"});
            for (int y = 1; y <= 3; ++y)
                if (count_colourings(c, y + 1) != closed_form_cycle(n).evaluate(BigInt(y)))
                    r.add_violation({emit_graph6(c), y + 1, to_string(count_colourings(c, y + 1)),
                            to_string(closed_form_cycle(n).evaluate(BigInt(y))), "cycle count"});
        }
        return r;
    }

    auto theta_bound(int n, const BigInt & y) -> BigInt
    {
        return power(y, n) - power(y, n - 1) + power(y, n - 2) + 2 * power(y, n - 3) - power(y, n - 4);
    }

    auto section_theta(const std::vector<int> & ys) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "theta graphs: n <= 10";
        std::uint64_t graphs = 0;
        for (int r1 = 1; r1 <= 9; ++r1)
            for (int r2 = std::max(r1, 2); r1 + 2 * r2 - 1 <= 10; ++r2)
                for (int r3 = r2; r1 + r2 + r3 - 1 <= 10; ++r3) {
                    ++graphs;
                    Graph g = make_theta(r1, r2, r3);
                    int n = g.order();
                    std::string key = emit_graph6(g);
                    IntPolynomial q = theta_polynomial(r1, r2, r3);
                    if (q != shift_to_q(chromatic_polynomial(g)))
                        r.add_violation({key, 0, q.to_string('y'), shift_to_q(chromatic_polynomial(g)).to_string('y'),
                                "theta closed form"});
                    bool k23 = r1 == 2 && r2 == 2 && r3 == 2;
                    for (int y : ys) {
                        if (y < 2)
                            continue;
                        ++r.instances_checked;
                        BigInt yb(y), lhs = q.evaluate(yb), rhs = theta_bound(n, yb);
                        if (lhs > rhs)
                            r.add_violation({key, y + 1, to_string(lhs), to_string(rhs), "theta bound exceeded"});
                        if ((lhs == rhs) != k23)
                            r.add_violation({key, y + 1, to_string(lhs), to_string(rhs),
                                    k23 ? "K23 misses equality" : "equality outside K23"});
                        if (lhs == rhs)
                            r.add_witness(g);
                        // The weaker form, scaled by 9.
                        if (y >= 3 && 9 * lhs >= 9 * power(yb, n) - 4 * power(yb, n - 1))
                            r.add_violation({key, y + 1, to_string(9 * lhs), to_string(9 * power(yb, n) - 4 * power(yb, n - 1)),
                                    "theta bound y^n - 4/9 y^(n-1) not strict"});
                    }
                }
        r.details["theta_graphs"] = graphs;
        r.normalize();
        return r;
    }

    auto section_delta2(const std::vector<int> & ys) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "connected graphs with minimum degree 2, not cycles, n <= 8";
        std::string k23 = canonical_form(make_complete_bipartite(2, 3)).key;
        std::uint64_t graphs = 0, with_triangle = 0;
        for (int n = 4; n <= 8; ++n)
            for (const auto & key : enumerate_keys(n)) {
                Graph g = parse_graph6(key);
                if (g.min_degree() < 2 || is_cycle(g))
                    continue;
                ++graphs;
                bool triangle = has_triangle(g);
                with_triangle += triangle;
                IntPolynomial q = shift_to_q(chromatic_polynomial(g));
                for (int y : ys) {
                    if (y < 3)
                        continue;
                    ++r.instances_checked;
                    BigInt yb(y), lhs = q.evaluate(yb);
                    BigInt rhs = power(yb, n - 4) * (power(yb, 4) - power(yb, 3) + yb * yb + 2 * yb - 1);
                    if (lhs > rhs)
                        r.add_violation({key, y + 1, to_string(lhs), to_string(rhs), "minimum degree 2 bound exceeded"});
                    if ((lhs == rhs) != (key == k23))
                        r.add_violation({key, y + 1, to_string(lhs), to_string(rhs),
                                key == k23 ? "K23 misses equality" : "equality outside K23"});
                    if (lhs == rhs)
                        r.add_witness(g);
                    if (triangle) {
                        BigInt tri = power(yb, n - 4) * (power(yb, 4) - power(yb, 3) + yb - 1);
                        if (lhs > tri)
                            r.add_violation({key, y + 1, to_string(lhs), to_string(tri), "triangle bound exceeded"});
                    }
                }
            }
        r.details["graphs"] = graphs;
        r.details["with_triangle"] = with_triangle;
        r.normalize();
        return r;
    }

    auto section_recurrences() -> VerificationReport
    {
        VerificationReport r;
        r.scope = "path recurrences: table for n <= 6, C-hat bound for n <= 8";
        const std::vector<std::vector<long long>> table_a = {
            {0, 1},
            {1, -1, 1},
            {-1, 3, -2, 1},
            {2, -5, 6, -3, 1},
            {-3, 10, -13, 10, -4, 1},
            {5, -18, 29, -26, 15, -5, 1},
        };
        const std::vector<std::vector<long long>> table_b = {
            {-1, 1},
            {2, -2, 1},
            {-3, 5, -3, 1},
            {5, -10, 9, -4, 1},
            {-8, 20, -22, 14, -5, 1},
            {13, -38, 51, -40, 20, -6, 1},
        };
        auto from = [](const std::vector<long long> & c) {
            std::vector<BigInt> v(c.begin(), c.end());
            return IntPolynomial(std::move(v));
        };
        for (int n = 1; n <= 6; ++n) {
            r.instances_checked += 4;
            Graph p = make_path(n);
            std::string key = emit_graph6(p);
            if (path_A(n) != from(table_a[n - 1]))
                r.add_violation({key, n, path_A(n).to_string('y'), from(table_a[n - 1]).to_string('y'), "A_n table row"});
            if (path_B(n) != from(table_b[n - 1]))
                r.add_violation({key, n, path_B(n).to_string('y'), from(table_b[n - 1]).to_string('y'), "B_n table row"});
            auto qa = list_chromatic_polynomial(p, path_forbidden(n, 'A'));
            auto qb = list_chromatic_polynomial(p, path_forbidden(n, 'B'));
            if (qa != path_A(n))
                r.add_violation({key, n, qa.to_string('y'), path_A(n).to_string('y'), "A_n list polynomial"});
            if (qb != path_B(n))
                r.add_violation({key, n, qb.to_string('y'), path_B(n).to_string('y'), "B_n list polynomial"});
        }
        ++r.instances_checked;
        IntPolynomial c5{-13, 33, -34, 19, -6, 1};
        if (path_C_hat(5) != c5)
            r.add_violation({emit_graph6(make_path(5)), 5, path_C_hat(5).to_string('y'), c5.to_string('y'), "C-hat_5"});
        if (path_C_hat(2) != list_chromatic_polynomial(make_path(2), path_forbidden(2, 'C')))
            r.add_violation({emit_graph6(make_path(2)), 2, path_C_hat(2).to_string('y'), "", "C_2 initial value"});

        // With y = 2 the labels 3 and 4 of an even end would be one colour.
        std::uint64_t skipped = 0;
        for (int n = 2; n <= 8; ++n)
            for (int y = 2; y <= 6; ++y) {
                auto f = path_forbidden(n, 'C');
                if (y + 1 < f.max_label()) {
                    ++skipped;
                    continue;
                }
                ++r.instances_checked;
                BigInt exact = count_avoiding(make_path(n), f, y);
                BigInt hat = path_C_hat(n).evaluate(BigInt(y));
                if (exact > hat)
                    r.add_violation({emit_graph6(make_path(n)), y + 1, to_string(exact), to_string(hat), "C-hat is not an upper bound"});
            }
        r.details["c_hat_pairs_without_room"] = skipped;
        return r;
    }

    auto section_list_polynomial(Rng & rng) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "list polynomials against brute force: 300 random instances, n <= 6";
        for (int t = 0; t < 300; ++t) {
            int n = uniform(rng, 1, 6);
            Graph g = random_graph(rng, n, 0.5);
            int labels = uniform(rng, 1, 4);
            ForbiddenAssignment f;
            f.top_label = labels;
            for (int v = 0; v < n; ++v)
                f.forbidden.push_back(std::uniform_int_distribution<ColourSet>(0, low_bits(labels))(rng));
            IntPolynomial q = list_chromatic_polynomial(g, f);
            std::string key = emit_graph6(g);
            if (q.degree() != n || ! q.is_monic())
                r.add_violation({key, 0, q.to_string('y'), "monic of degree " + std::to_string(n), "list polynomial shape"});
            for (int y = std::max(0, labels - 1); y <= labels + 3; ++y) {
                ++r.instances_checked;
                BigInt brute = count_avoiding(g, f, y), value = q.evaluate(BigInt(y));
                if (brute != value)
                    r.add_violation({key, y + 1, to_string(value), to_string(brute), "list polynomial disagrees with brute force"});
            }
        }
        return r;
    }

    auto section_inclusion_exclusion(Rng & rng) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "inclusion-exclusion over pinned colours";
        for (auto c : {ClosedFormCase::K3, ClosedFormCase::K23, ClosedFormCase::C5, ClosedFormCase::C4LeafA}) {
            Graph g = closed_form_graph(c);
            for (int y = 3; y <= 4; ++y)
                for (int t = 0; t < 100; ++t) {
                    ++r.instances_checked;
                    std::vector<Pin> pins;
                    ForbiddenAssignment f;
                    for (int v = 0; v < g.order(); ++v) {
                        int colour = uniform(rng, 1, y + 1);
                        pins.push_back({v, colour});
                        f.forbidden.push_back(colour_bit(colour));
                    }
                    BigInt ie = inclusion_exclusion_count(g, pins, y), brute = count_avoiding(g, f, y);
                    if (ie != brute)
                        r.add_violation({emit_graph6(g), y + 1, to_string(ie), to_string(brute), "inclusion-exclusion with singleton pins"});
                }
        }

        // Equality pattern on C5: c = 1,2,1,2,3 repeats at two indices.
        Graph c5 = make_cycle(5);
        std::vector<Pin> pattern = {{0, 1}, {1, 2}, {2, 1}, {3, 2}, {4, 3}};
        for (int y = 3; y <= 6; ++y) {
            ++r.instances_checked;
            BigInt ie = inclusion_exclusion_count(c5, pattern, y);
            BigInt bound = closed_form_bound(ClosedFormCase::C5).evaluate(BigInt(y));
            if (ie != bound)
                r.add_violation({emit_graph6(c5), y + 1, to_string(ie), to_string(bound), "C5 equality pattern"});
        }

        // Two alternative pins on the leaf: the family without both is exact.
        Graph leaf = closed_form_graph(ClosedFormCase::C4LeafB);
        for (int y = 3; y <= 4; ++y)
            for (int t = 0; t < 100; ++t) {
                ++r.instances_checked;
                std::vector<Pin> pins;
                ForbiddenAssignment f;
                f.forbidden.push_back(0);
                for (int v = 1; v <= 3; ++v) {
                    int colour = uniform(rng, 1, y + 1);
                    pins.push_back({v, colour});
                    f.forbidden.push_back(colour_bit(colour));
                }
                int a = uniform(rng, 1, y + 1), d = uniform(rng, 1, y);
                if (d >= a)
                    ++d;
                pins.push_back({4, a});
                pins.push_back({4, d});
                f.forbidden.push_back(colour_bit(a) | colour_bit(d));
                auto family = subsets_avoiding_pair(5, 3, 4);
                BigInt restricted = inclusion_exclusion_count(leaf, pins, y, family);
                BigInt full = inclusion_exclusion_count(leaf, pins, y);
                BigInt brute = count_avoiding(leaf, f, y);
                if (restricted != brute || full != brute)
                    r.add_violation({emit_graph6(leaf), y + 1, to_string(restricted), to_string(brute),
                            "restricted family on two leaf pins"});
            }
        return r;
    }

    auto random_bipartite_instance(Rng & rng, Graph & g, ListAssignment & l)
    {
        int n = uniform(rng, 1, 8);
        int m = uniform(rng, 2, 5);
        VertexSet plus = std::uniform_int_distribution<VertexSet>(0, low_bits(n))(rng);
        g = Graph(n);
        double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (((plus >> u) & 1) != ((plus >> v) & 1) && coin(rng, p))
                    g.add_edge(u, v);
        l = ListAssignment{};
        l.palette = m;
        l.bipartition = Bipartition{plus, low_bits(n) & ~plus};
        for (int v = 0; v < n; ++v)
            l.lists.push_back(std::uniform_int_distribution<ColourSet>(0, low_bits(m))(rng));
    }

    auto section_compression(Rng & rng) -> VerificationReport
    {
        VerificationReport r;
        r.scope = "compression monotonicity: 10000 random bipartite instances, n <= 8, m <= 5";
        std::uint64_t strict = 0;
        for (int t = 0; t < 10000; ++t) {
            Graph g;
            ListAssignment l;
            random_bipartite_instance(rng, g, l);
            int i = uniform(rng, 1, l.palette - 1);
            int j = uniform(rng, i + 1, l.palette);
            ListAssignment c = compress(l, i, j);
            ++r.instances_checked;
            BigInt before = count_list_colourings(g, l), after = count_list_colourings(g, c);
            std::string key = emit_graph6(g);
            if (after < before)
                r.add_violation({key, l.palette, to_string(after), to_string(before), "compression lost colourings"});
            strict += after > before;
            for (int v = 0; v < g.order(); ++v)
                if (std::popcount(c.lists[v]) != std::popcount(l.lists[v]))
                    r.add_violation({key, l.palette, "", "", "compression changed a list size"});

            // The fixpoint is the segment assignment with the same sizes.
            ListAssignment fixed = compress_to_fixpoint(l);
            std::vector<int> sizes;
            for (auto s : l.lists)
                sizes.push_back(std::popcount(s));
            if (fixed != extremal_assignment(g, sizes, l.palette, l.bipartition))
                r.add_violation({key, l.palette, "", "", "compression fixpoint is not the segment assignment"});
            if (count_list_colourings(g, fixed) < before)
                r.add_violation({key, l.palette, to_string(count_list_colourings(g, fixed)), to_string(before),
                        "fixpoint lost colourings"});
        }
        r.details["strict_gains"] = strict;
        return r;
    }

    // Exhaustive over every list assignment with palette m. The swap depends
    // on the lists only through which i- or j-coloured vertices have a list
    // that compression changes, and lists at different vertices are
    // independent. So it suffices to range over colourings c and those
    // vertex sets, and then test every list at every vertex against the
    // single image of c. Swapping V+ and V- is the same as swapping i and j,
    // so one orientation is enough.
    auto section_kempe() -> VerificationReport
    {
        VerificationReport r;
        r.scope = "Kempe swaps: every connected bipartite graph n <= 6, every list assignment with m <= 4";
        EnumerationOptions bipartite;
        bipartite.hereditary = [](const Graph & g) { return two_colouring(g).has_value(); };
        std::uint64_t classes = 0;
        for (int n = 2; n <= 6; ++n)
            for (const auto & key : enumerate_keys(n, bipartite)) {
                Graph g = parse_graph6(key);
                Bipartition b = default_bipartition(g);
                for (int m = 2; m <= 4; ++m) {
                    ListAssignment full;
                    full.palette = m;
                    full.lists.assign(n, low_bits(m));
                    full.bipartition = b;
                    auto colourings = enumerate_list_colourings(g, full);
                    for (int i = 1; i <= m; ++i)
                        for (int j = 1; j <= m; ++j) {
                            if (i == j)
                                continue;
                            auto compressed = [&](int v, ColourSet s) {
                                return ((b.plus >> v) & 1) ? compress_set(s, i, j) : compress_set(s, j, i);
                            };
                            for (const auto & c : colourings) {
                                // Lists through c(v), split by whether compression changes them.
                                std::vector<std::vector<ColourSet>> moving(n), still(n);
                                VertexSet ij = 0;
                                for (int v = 0; v < n; ++v) {
                                    if (c[v] == i || c[v] == j)
                                        ij |= bit(v);
                                    for (ColourSet s = 0; s <= low_bits(m); ++s)
                                        if (s & colour_bit(c[v]))
                                            (compressed(v, s) != s ? moving : still)[v].push_back(s);
                                }
                                // Vertices outside the two colour classes keep their colour.
                                ListAssignment rep = full;
                                for (int v = 0; v < n; ++v) {
                                    if ((ij >> v) & 1)
                                        continue;
                                    rep.lists[v] = still[v].empty() ? moving[v].front() : still[v].front();
                                    for (const auto * pool : {&moving[v], &still[v]})
                                        for (auto s : *pool)
                                            if (! (compressed(v, s) & colour_bit(c[v])))
                                                r.add_violation({key, m, std::to_string(c[v]), std::to_string(s),
                                                        "fixed colour leaves the compressed list"});
                                }
                                for (VertexSet sset = ij;; sset = (sset - 1) & ij) {
                                    bool achievable = true;
                                    for (VertexSet mm = ij; mm && achievable; mm &= mm - 1) {
                                        int v = std::countr_zero(mm);
                                        auto & pool = ((sset >> v) & 1) ? moving[v] : still[v];
                                        achievable = ! pool.empty();
                                        if (achievable)
                                            rep.lists[v] = pool.front();
                                    }
                                    if (achievable) {
                                        ++classes;
                                        ++r.instances_checked;
                                        Colouring image = kempe_swap_map(g, rep, i, j, c);
                                        if (! is_proper(g, image))
                                            r.add_violation({key, m, "", "", "swap broke properness"});
                                        if (kempe_swap(g, compression_support(rep, i, j), i, j, image) != c)
                                            r.add_violation({key, m, "", "", "swap is not an involution"});
                                        for (VertexSet mm = ij; mm; mm &= mm - 1) {
                                            int v = std::countr_zero(mm);
                                            for (auto s : ((sset >> v) & 1) ? moving[v] : still[v])
                                                if (! (compressed(v, s) & colour_bit(image[v])))
                                                    r.add_violation({key, m, std::to_string(image[v]), std::to_string(s),
                                                            "image leaves the compressed list"});
                                        }
                                    }
                                    if (sset == 0)
                                        break;
                                }
                            }
                        }
                }
            }
        r.details["colouring_classes"] = classes;
        r.normalize();
        return r;
    }

    auto section_segments() -> VerificationReport
    {
        VerificationReport r;
        r.scope = "segment assignment maximality: P4, list size 2, m = 4";
        Graph p4 = make_path(4);
        std::vector<int> sizes(4, 2);
        ListAssignment best = extremal_assignment(p4, sizes, 4);
        BigInt target = count_list_colourings(p4, best);
        std::vector<ColourSet> pairs;
        for (ColourSet s = 0; s < 16; ++s)
            if (std::popcount(s) == 2)
                pairs.push_back(s);
        BigInt maximum = 0;
        ListAssignment l = best;
        for (auto a : pairs)
            for (auto b : pairs)
                for (auto c : pairs)
                    for (auto d : pairs) {
                        l.lists = {a, b, c, d};
                        ++r.instances_checked;
                        BigInt count = count_list_colourings(p4, l);
                        maximum = std::max(maximum, count);
                        if (count > target)
                            r.add_violation({emit_graph6(p4), 4, to_string(count), to_string(target), "assignment beats the segments"});
                    }
        r.details["segment_count"] = to_string(target);
        r.details["maximum"] = to_string(maximum);
        return r;
    }
}

auto verify_small_lemmas(const std::vector<int> & ys) -> VerificationReport
{
    if (ys.empty())
        throw Error(Errc::invalid_argument, "at least one y is required");
    for (int y : ys)
        if (y < 1 || y > 30)
            throw Error(Errc::out_of_range, "lemma suites support 1 <= y <= 30");

    Rng rng(20240601);
    VerificationReport report;
    report.scope = "lemma suites";
    report.sections.push_back(section_subgraph(rng));
    report.sections.push_back(section_decomposition(rng));
    report.sections.push_back(section_paths());
    report.sections.push_back(section_cycles());
    report.sections.push_back(section_theta(ys));
    report.sections.push_back(section_delta2(ys));
    report.sections.push_back(section_recurrences());
    report.sections.push_back(section_list_polynomial(rng));
    report.sections.push_back(section_inclusion_exclusion(rng));

    // Exhaustive closed-form searches grow fast in y; they run at y <= 4.
    std::vector<int> small;
    for (int y : ys)
        if (y >= 3 && y <= 4)
            small.push_back(y);
    if (small.empty())
        small.push_back(3);
    for (auto c : {ClosedFormCase::K3, ClosedFormCase::K23, ClosedFormCase::C5, ClosedFormCase::C4LeafA,
                 ClosedFormCase::C4LeafB})
        report.sections.push_back(closed_form_check(c, small));

    report.sections.push_back(section_compression(rng));
    report.sections.push_back(section_kempe());
    report.sections.push_back(section_segments());

    for (const auto & s : report.sections)
        report.instances_checked += s.instances_checked;
    return report;
}

} // namespace chroma
