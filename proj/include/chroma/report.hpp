#pragma once

#include <chroma/canonical.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chroma {

struct Violation {
    std::string graph6;
    std::int64_t x = 0;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// Outcome of a batch check. Sections nest for aggregate runs.
struct VerificationReport {
    std::string scope;
    std::uint64_t instances_checked = 0;
    std::vector<Violation> violations;
    /// Canonical graph6 strings, kept sorted by (order, canonical form).
    std::vector<std::string> equality_witnesses;
    std::int64_t runtime_ms = 0;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    std::vector<VerificationReport> sections;

    auto passed() const -> bool;

    void add_violation(Violation v) { violations.push_back(std::move(v)); }
    void add_witness(const Graph & g);

    /// Associative, commutative merge of counts, violations and witnesses;
    /// `details` and `sections` are left to the caller.
    void merge(const VerificationReport & other);

    /// Puts witnesses and violations in their deterministic order.
    void normalize();

    auto to_json() const -> nlohmann::ordered_json;
    auto summary() const -> std::string;
};

/// Orders graph6 strings by (vertex count, string).
auto graph6_order_less(const std::string & a, const std::string & b) -> bool;

} // namespace chroma
