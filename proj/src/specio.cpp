#include "specio.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace frobcx {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    return j;
}

Element element_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Element::scalar(j.get<std::int64_t>());
    if (j.is_array()) {
        std::vector<std::int64_t> coords;
        for (const auto& c : j) {
            if (!c.is_number_integer())
                throw std::invalid_argument(std::string(what) + ": coordinates must be integers");
            coords.push_back(c.get<std::int64_t>());
        }
        return Element(std::move(coords));
    }
    throw std::invalid_argument(std::string(what) + ": expected an integer or an array");
}

json element_to_json(const Element& e) {
    if (e.dim() == 1) return json(e[0]);
    return json(e.coords());
}

json ext_element_to_json(const ExtElement& x) {
    return json{{"lambda", element_to_json(x.lambda)}, {"k", x.k}};
}

json betti_to_json(const BettiVector& v) {
    json out = json::array();
    for (auto [i, c] : v.entries()) out.push_back(json::array({i, c}));
    return out;
}

AffineMonoid monoid_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("monoid spec: expected a JSON object");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("monoid spec: missing 'generators' array");

    const auto& gens = j["generators"];
    std::size_t dim = 1;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1)
            throw std::invalid_argument("monoid spec: 'dim' must be a positive integer");
        dim = j["dim"].get<std::size_t>();
    } else {
        for (const auto& g : gens)
            if (!g.is_number_integer())
                throw std::invalid_argument(
                    "monoid spec: 'dim' is required unless generators are plain integers");
    }

    std::vector<Element> elements;
    for (const auto& g : gens) {
        Element e = element_from_json(g, "monoid spec: generator");
        if (e.dim() != dim)
            throw std::invalid_argument("monoid spec: generator dimension mismatch");
        elements.push_back(std::move(e));
    }
    return AffineMonoid(dim, std::move(elements));
}

template <typename Table, typename GradeStr>
std::string table_tsv_impl(const Table& table, GradeStr&& grade_str) {
    std::ostringstream os;
    os << "grade\ti\tbetti\n";
    for (const auto& [grade, vec] : table.rows)
        for (auto [i, c] : vec.entries())
            os << grade_str(grade) << '\t' << i << '\t' << c << '\n';
    return os.str();
}

template <typename Table, typename GradeJson>
std::string table_json_impl(const Table& table, GradeJson&& grade_json) {
    json out = json::array();
    for (const auto& [grade, vec] : table.rows)
        for (auto [i, c] : vec.entries())
            out.push_back(json{{"grade", grade_json(grade)}, {"i", i}, {"betti", c}});
    return out.dump();
}

}  // namespace

AffineMonoid parse_monoid_spec(const std::string& json_text) {
    return monoid_from_json(parse_json(json_text, "monoid spec"));
}

ExtMonoid parse_extension_spec(const std::string& json_text) {
    json j = parse_json(json_text, "extension spec");
    if (!j.is_object() || !j.contains("base"))
        throw std::invalid_argument("extension spec: missing 'base' monoid spec");
    if (!j.contains("rho"))
        throw std::invalid_argument("extension spec: missing 'rho'");
    if (!j.contains("r") || !j["r"].is_number_integer())
        throw std::invalid_argument("extension spec: missing integer 'r'");

    AffineMonoid base = monoid_from_json(j["base"]);
    Element rho = element_from_json(j["rho"], "extension spec: rho");
    if (rho.dim() != base.dim())
        throw std::invalid_argument("extension spec: rho dimension mismatch");
    return ExtMonoid(std::move(base), std::move(rho), j["r"].get<std::int64_t>());
}

bool looks_like_extension_spec(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    return j.is_object() && j.contains("base");
}

Element parse_cap(const std::string& text, std::size_t dim) {
    json j = parse_json(text, "cap");
    Element cap = element_from_json(j, "cap");
    if (cap.dim() != dim)
        throw std::invalid_argument("cap: dimension mismatch with the monoid spec");
    return cap;
}

std::string table_tsv(const BettiTable& table) {
    return table_tsv_impl(table, [](const Element& g) { return g.str(); });
}

std::string table_tsv(const ExtBettiTable& table) {
    return table_tsv_impl(table, [](const ExtElement& g) { return g.str(); });
}

std::string table_json(const BettiTable& table) {
    return table_json_impl(table, [](const Element& g) { return element_to_json(g); });
}

std::string table_json(const ExtBettiTable& table) {
    return table_json_impl(table, [](const ExtElement& g) { return ext_element_to_json(g); });
}

std::string series_json(const MonoidSeries& series) {
    json out = json::array();
    for (const auto& [key, c] : series.terms)
        out.push_back(json{{"i", key.second}, {"grade", element_to_json(key.first)}, {"coeff", c}});
    return out.dump();
}

std::string series_json(const ExtSeries& series) {
    json out = json::array();
    for (const auto& [key, c] : series.terms)
        out.push_back(
            json{{"i", key.second}, {"grade", ext_element_to_json(key.first)}, {"coeff", c}});
    return out.dump();
}

std::string report_json(const VerificationReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back(json{{"grade", ext_element_to_json(e.grade)},
                               {"direct", betti_to_json(e.direct)},
                               {"predicted", betti_to_json(e.predicted)},
                               {"euler", e.euler},
                               {"equal", e.equal}});
    json out{{"cap", element_to_json(report.cap)},
             {"field", report.field},
             {"grades_checked", report.grades_checked},
             {"mismatches", report.mismatches},
             {"pass", report.pass},
             {"entries", std::move(entries)}};
    return out.dump();
}

std::string report_json(const SuspensionReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries)
        entries.push_back(json{{"lambda", element_to_json(e.lambda)},
                               {"upper", betti_to_json(e.upper)},
                               {"lower", betti_to_json(e.lower)},
                               {"euler_upper", e.euler_upper},
                               {"euler_lower", e.euler_lower},
                               {"equal", e.equal}});
    json out{{"cap", element_to_json(report.cap)},
             {"field", report.field},
             {"grades_checked", report.grades_checked},
             {"mismatches", report.mismatches},
             {"pass", report.pass},
             {"entries", std::move(entries)}};
    return out.dump();
}

}  // namespace frobcx
