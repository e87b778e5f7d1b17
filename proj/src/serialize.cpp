#include <chroma/serialize.hpp>

namespace chroma {

namespace {
    auto require(const nlohmann::json & j, const char * key) -> const nlohmann::json &
    {
        if (! j.is_object() || ! j.contains(key))
            throw Error(Errc::parse_error, std::string("missing field \"") + key + "\"");
        return j.at(key);
    }

    auto set_to_json(std::uint64_t s) -> nlohmann::ordered_json
    {
        auto a = nlohmann::ordered_json::array();
        for (; s; s &= s - 1)
            a.push_back(std::countr_zero(s) + 1);
        return a;
    }

    auto colours_from_json(const nlohmann::json & j) -> ColourSet
    {
        if (! j.is_array())
            throw Error(Errc::parse_error, "colour list must be an array");
        ColourSet s = 0;
        for (const auto & c : j) {
            if (! c.is_number_integer())
                throw Error(Errc::parse_error, "colours must be integers");
            int v = c.get<int>();
            if (v < 1 || v > max_colour)
                throw Error(Errc::out_of_range, "colour " + std::to_string(v) + " outside [64]");
            s |= colour_bit(v);
        }
        return s;
    }

    auto vertices_to_json(VertexSet s) -> nlohmann::ordered_json
    {
        auto a = nlohmann::ordered_json::array();
        for (; s; s &= s - 1)
            a.push_back(std::countr_zero(s));
        return a;
    }

    auto vertices_from_json(const nlohmann::json & j) -> VertexSet
    {
        if (! j.is_array())
            throw Error(Errc::parse_error, "bipartition side must be an array");
        VertexSet s = 0;
        for (const auto & v : j) {
            if (! v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= max_vertices)
                throw Error(Errc::parse_error, "bipartition vertices must be integers in [0, 64)");
            s |= bit(v.get<int>());
        }
        return s;
    }
}

auto polynomial_to_json(const IntPolynomial & p, char var) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["var"] = std::string(1, var);
    auto cs = nlohmann::ordered_json::array();
    for (const auto & c : p.coeffs())
        cs.push_back(to_string(c));
    j["coeffs"] = std::move(cs);
    return j;
}

auto polynomial_from_json(const nlohmann::json & j) -> IntPolynomial
{
    const auto & cs = require(j, "coeffs");
    if (! cs.is_array())
        throw Error(Errc::parse_error, "\"coeffs\" must be an array");
    std::vector<BigInt> coeffs;
    for (const auto & c : cs) {
        if (c.is_string())
            coeffs.push_back(parse_bigint(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.emplace_back(c.get<long long>());
        else
            throw Error(Errc::parse_error, "coefficients must be decimal strings or integers");
    }
    return IntPolynomial(std::move(coeffs));
}

auto list_assignment_to_json(const ListAssignment & l) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    j["m"] = l.palette;
    auto lists = nlohmann::ordered_json::array();
    for (auto s : l.lists)
        lists.push_back(set_to_json(s));
    j["lists"] = std::move(lists);
    if (l.bipartition)
        j["bipartition"] = {vertices_to_json(l.bipartition->plus), vertices_to_json(l.bipartition->minus)};
    else
        j["bipartition"] = nullptr;
    return j;
}

auto list_assignment_from_json(const nlohmann::json & j) -> ListAssignment
{
    ListAssignment l;
    const auto & m = require(j, "m");
    if (! m.is_number_integer() || m.get<int>() < 0 || m.get<int>() > max_colour)
        throw Error(Errc::parse_error, "\"m\" must be an integer in [0, 64]");
    l.palette = m.get<int>();
    const auto & lists = require(j, "lists");
    if (! lists.is_array())
        throw Error(Errc::parse_error, "\"lists\" must be an array");
    for (const auto & s : lists) {
        ColourSet c = colours_from_json(s);
        if (c & ~low_bits(l.palette))
            throw Error(Errc::out_of_range, "list colour exceeds the palette");
        l.lists.push_back(c);
    }
    if (j.contains("bipartition") && ! j.at("bipartition").is_null()) {
        const auto & b = j.at("bipartition");
        if (! b.is_array() || b.size() != 2)
            throw Error(Errc::parse_error, "\"bipartition\" must be a pair of vertex lists");
        l.bipartition = Bipartition{vertices_from_json(b[0]), vertices_from_json(b[1])};
        if (l.bipartition->plus & l.bipartition->minus)
            throw Error(Errc::invalid_argument, "bipartition sides overlap");
    }
    return l;
}

auto forbidden_to_json(const ForbiddenAssignment & f) -> nlohmann::ordered_json
{
    nlohmann::ordered_json j;
    if (f.top_label)
        j["y_plus_1_label"] = *f.top_label;
    else
        j["y_plus_1_label"] = nullptr;
    auto lists = nlohmann::ordered_json::array();
    for (auto s : f.forbidden)
        lists.push_back(set_to_json(s));
    j["forbidden"] = std::move(lists);
    return j;
}

auto forbidden_from_json(const nlohmann::json & j) -> ForbiddenAssignment
{
    ForbiddenAssignment f;
    const auto & lists = require(j, "forbidden");
    if (! lists.is_array())
        throw Error(Errc::parse_error, "\"forbidden\" must be an array");
    for (const auto & s : lists)
        f.forbidden.push_back(colours_from_json(s));
    if (j.contains("y_plus_1_label") && ! j.at("y_plus_1_label").is_null()) {
        const auto & t = j.at("y_plus_1_label");
        if (! t.is_number_integer() || t.get<int>() < 1 || t.get<int>() > max_colour)
            throw Error(Errc::parse_error, "\"y_plus_1_label\" must be an integer in [1, 64]");
        f.top_label = t.get<int>();
        if (f.max_label() > *f.top_label)
            throw Error(Errc::invalid_argument, "a forbidden label exceeds the y + 1 label");
    }
    return f;
}

} // namespace chroma
