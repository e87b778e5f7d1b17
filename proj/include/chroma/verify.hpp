#pragma once

#include <chroma/graph.hpp>
#include <chroma/report.hpp>

#include <string>
#include <vector>

namespace chroma {

/// True iff repeatedly stripping leaves leaves exactly K4. Throws on a
/// disconnected graph.
auto is_k4_with_trees(const Graph & g) -> bool;

/// Canonical keys of every K4-with-trees graph on n vertices, grown leaf by
/// leaf from K4. Independent of the general enumerator.
auto k4_with_trees_keys(int n) -> std::vector<std::string>;

struct TheoremOptions {
    int n_max = 8;
    std::vector<int> xs = {4, 5, 6, 7, 8};
    int workers = 1;
    /// Evaluate at a few rational x >= 4 too; findings go to details only.
    bool sample_rational = false;
};

/// For every connected 4-chromatic graph with n <= n_max and every x in xs:
/// P(x) <= x(x-1)(x-2)(x-3)(x-1)^(n-4), with equality exactly for K4 with
/// trees, and at all x or none.
auto verify_theorem_main(const TheoremOptions & options) -> VerificationReport;

/// For every connected 4-vertex-critical graph with n <= n_max and every nonempty proper
/// 2-induced vertex set S: fewer than y^(n-|S|) (y+1)-colourings of G - S.
auto verify_claim_2induced(int n_max, const std::vector<int> & ys, int workers = 1) -> VerificationReport;

/// Lemma-level property suites, one section each.
auto verify_small_lemmas(const std::vector<int> & ys) -> VerificationReport;

/// No connected triangle-free graph with n <= n_max is 4-chromatic; the
/// Groetzsch graph is checked as a positive control.
auto smallest_triangle_free_4chromatic(int n_max, bool allow_long = false) -> VerificationReport;

/// Canonical graph6 keys of all connected 4-vertex-critical graphs with
/// n <= n_max, sorted by (order, key).
auto four_vertex_critical_graphs(int n_max) -> std::vector<std::string>;

/// The 4-critical graphs (every edge deletion lowers the chromatic number)
/// with n <= n_max, sorted by (order, key).
auto four_critical_census(int n_max) -> std::vector<std::string>;

/// The census as a report: cardinality for n <= 7, and vertex-criticality,
/// minimum degree and 2-connectivity of every member. Vertex-critical graphs
/// that are not edge-critical are listed in the details.
auto census_report(int n_max) -> VerificationReport;

} // namespace chroma
