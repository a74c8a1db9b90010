#include "symhodge/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace symhodge {

Json poly_to_json(const TriPoly& poly) {
    Json terms = Json::array();
    for (const auto& [m, c] : poly.terms()) {
        Json term;
        term["k"] = m.k;
        term["p"] = m.p;
        term["q"] = m.q;
        term["c"] = c.str();
        terms.push_back(std::move(term));
    }
    return terms;
}

TriPoly poly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    TriPoly poly;
    for (const Json& term : j) {
        const Monomial m{term.at("k").get<int>(), term.at("p").get<int>(),
                         term.at("q").get<int>()};
        poly += TriPoly(Int(term.at("c").get<std::string>()), m);
    }
    return poly;
}

Json presentation_to_json(const ExteriorPresentation& pres) {
    Json j;
    if (!pres.label().empty())
        j["label"] = pres.label();
    Json generators = Json::array();
    for (const GeneratorFamily& f : pres.families()) {
        Json g;
        g["d"] = f.d;
        g["p"] = f.p;
        g["q"] = f.q;
        g["r"] = f.r;
        generators.push_back(std::move(g));
    }
    j["generators"] = std::move(generators);
    return j;
}

ExteriorPresentation presentation_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw std::invalid_argument("presentation JSON must contain a 'generators' array");
    std::string label;
    if (j.contains("label"))
        label = j.at("label").get<std::string>();
    std::vector<GeneratorFamily> families;
    for (const Json& g : j.at("generators")) {
        GeneratorFamily f;
        f.d = g.at("d").get<int>();
        f.p = g.at("p").get<int>();
        f.q = g.at("q").get<int>();
        f.r = g.value("r", 1);
        families.push_back(f);
    }
    return ExteriorPresentation(std::move(families), std::move(label));
}

ExteriorPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read presentation file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("presentation file '" + path + "': " + e.what());
    }
    return presentation_from_json(j);
}

Json table_to_json(const HodgeTable& table) {
    Json j;
    if (table.dim())
        j["dim"] = *table.dim();
    Json entries = Json::array();
    for (const auto& [m, h] : table.numbers()) {
        Json entry;
        entry["k"] = m.k;
        entry["p"] = m.p;
        entry["q"] = m.q;
        entry["h"] = h.str();
        entries.push_back(std::move(entry));
    }
    j["numbers"] = std::move(entries);
    return j;
}

Json series_to_json(const ZSeries& series) {
    Json j;
    j["order"] = series.order();
    Json coeffs = Json::array();
    for (int n = 0; n <= series.order(); ++n)
        coeffs.push_back(poly_to_json(series.coeff(n)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json class_function_to_json(const ClassFunction& cf) {
    Json j;
    j["n"] = cf.n();
    Json classes = Json::array();
    for (std::size_t i = 0; i < cf.class_count(); ++i) {
        const CycleType c = CycleType::from_partition(cf.classes()[i]);
        Json entry;
        entry["cycle_type"] = c.str();
        entry["class_size"] = class_size(c).str();
        entry["poly"] = poly_to_json(cf.value_at(i));
        classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json sym_result_to_json(const SymResult& result) {
    Json j;
    j["n"] = result.n;
    j["method"] = method_name(result.method);
    j["poly"] = poly_to_json(result.poly);
    return j;
}

Json report_to_json(const IdentityReport& report, const std::string& name) {
    Json j;
    j["identity"] = name;
    j["order"] = report.lhs.order();
    j["equal"] = report.equal;
    if (report.first_discrepancy) {
        Json d;
        d["z_power"] = report.first_discrepancy->first;
        d["difference"] = poly_to_json(report.first_discrepancy->second);
        j["first_discrepancy"] = std::move(d);
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["lhs"] = series_to_json(report.lhs);
    j["rhs"] = series_to_json(report.rhs);
    return j;
}

}  // namespace symhodge
