#include <chroma/report.hpp>

#include <algorithm>
#include <sstream>
#include <tuple>

namespace chroma {

auto graph6_order_less(const std::string & a, const std::string & b) -> bool
{
    auto order = [](const std::string & s) { return s.empty() ? 0 : parse_graph6(s).order(); };
    return std::make_tuple(order(a), a) < std::make_tuple(order(b), b);
}

auto VerificationReport::passed() const -> bool
{
    if (! violations.empty())
        return false;
    return std::all_of(sections.begin(), sections.end(), [](const auto & s) { return s.passed(); });
}

void VerificationReport::add_witness(const Graph & g)
{
    equality_witnesses.push_back(canonical_form(g).key);
}

void VerificationReport::merge(const VerificationReport & other)
{
    instances_checked += other.instances_checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    equality_witnesses.insert(equality_witnesses.end(), other.equality_witnesses.begin(),
            other.equality_witnesses.end());
    normalize();
}

void VerificationReport::normalize()
{
    std::sort(equality_witnesses.begin(), equality_witnesses.end(), graph6_order_less);
    equality_witnesses.erase(std::unique(equality_witnesses.begin(), equality_witnesses.end()),
            equality_witnesses.end());
    std::stable_sort(violations.begin(), violations.end(), [](const Violation & a, const Violation & b) {
        if (a.graph6 != b.graph6)
            return graph6_order_less(a.graph6, b.graph6);
        return std::tie(a.x, a.note, a.lhs, a.rhs) < std::tie(b.x, b.note, b.lhs, b.rhs);
    });
}

auto VerificationReport::to_json() const -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["scope"] = scope;
    j["status"] = passed() ? "pass" : "fail";
    j["instances_checked"] = instances_checked;
    auto vs = nlohmann::ordered_json::array();
    for (const auto & v : violations) {
        nlohmann::ordered_json e;
        e["graph6"] = v.graph6;
        e["x"] = v.x;
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
        if (! v.note.empty())
            e["note"] = v.note;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    j["equality_witnesses"] = equality_witnesses;
    j["runtime_ms"] = runtime_ms;
    if (! details.empty())
        j["details"] = details;
    if (! sections.empty()) {
        auto ss = nlohmann::ordered_json::array();
        for (const auto & s : sections)
            ss.push_back(s.to_json());
        j["sections"] = std::move(ss);
    }
    return j;
}

auto VerificationReport::summary() const -> std::string
{
    std::ostringstream out;
    auto line = [&](const VerificationReport & r, int depth) {
        out << std::string(depth * 2, ' ') << (r.passed() ? "PASS " : "FAIL ") << r.scope << ": "
            << r.instances_checked << " instances, " << r.violations.size() << " violations, "
            << r.equality_witnesses.size() << " equality witnesses\n";
    };
    line(*this, 0);
    for (const auto & s : sections)
        line(s, 1);
    for (const auto & v : violations)
        out << "  violation " << v.graph6 << " at " << v.x << ": " << v.lhs << " > " << v.rhs
            << (v.note.empty() ? "" : " (" + v.note + ")") << '\n';
    return out.str();
}

} // namespace chroma
