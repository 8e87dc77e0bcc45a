#include "prefcone/instance_io.hpp"

#include <json.hpp>
#include <sstream>

#include "prefcone/errors.hpp"

namespace prefcone {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(const RatVector& v) {
    Json arr = Json::array();
    for (const Rational& x : v) arr.push_back(format_rational(x));
    return arr;
}

Json to_json(const std::vector<RatVector>& vs) {
    Json arr = Json::array();
    for (const RatVector& v : vs) arr.push_back(to_json(v));
    return arr;
}

RatVector vector_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw parse_error(std::string(what) + ": expected an array");
    RatVector v;
    for (const Json& x : arr) {
        if (!x.is_string()) throw parse_error(std::string(what) + ": rationals must be strings");
        v.push_back(parse_rational(x.get<std::string>()));
    }
    return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

SignCone instance_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("instance: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw parse_error("instance: missing integer field 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim <= 0) throw parse_error("instance: 'dim' must be positive");
    if (!j.contains("A") || !j["A"].is_array()) throw parse_error("instance: missing matrix field 'A'");
    RatMatrix a(dim);
    for (const Json& row : j["A"]) {
        RatVector r = vector_from_json(row, "instance.A");
        if (static_cast<int>(r.size()) != dim)
            throw parse_error("instance: a row of 'A' does not have 'dim' entries");
        a.add_row(std::move(r));
    }
    if (!j.contains("cells") || !j["cells"].is_array())
        throw parse_error("instance: missing field 'cells'");
    std::vector<std::string> cells;
    for (const Json& c : j["cells"]) {
        if (!c.is_string()) throw parse_error("instance: cells must be sign strings");
        cells.push_back(c.get<std::string>());
    }
    std::string name = j.value("name", std::string());
    return SignCone::load(dim, std::move(a), cells, std::move(name));
}

std::string instance_to_json(const SignCone& cone) {
    Json j;
    if (!cone.name().empty()) j["name"] = cone.name();
    j["dim"] = cone.dim();
    j["A"] = to_json(cone.matrix().rows);
    Json cells = Json::array();
    for (const Cell& c : cone.cells()) cells.push_back(to_string(c.sign));
    j["cells"] = cells;
    return dump(j);
}

Cortege cortege_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("cortege: invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw parse_error("cortege: expected a nonempty array of vectors");
    std::vector<RatVector> fns;
    for (const Json& row : j) fns.push_back(vector_from_json(row, "cortege"));
    const int dim = static_cast<int>(fns.front().size());
    try {
        return validate_cortege(std::move(fns), dim);
    } catch (const precondition_error& e) {
        throw parse_error(std::string("cortege: ") + e.what());
    }
}

std::string cortege_to_json(const Cortege& c) { return dump(to_json(c.functionals)); }

RatVector point_from_string(const std::string& text, int expected_dim) {
    RatVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    if (static_cast<int>(v.size()) != expected_dim)
        throw parse_error("point '" + text + "' does not have " + std::to_string(expected_dim) +
                          " coordinates");
    return v;
}

std::string point_to_string(const RatVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_rational(v[i]);
    }
    return out;
}

std::string validation_to_json(const SignCone& cone, const ValidationReport& report) {
    Json j;
    if (!cone.name().empty()) j["name"] = cone.name();
    j["asymmetric"] = report.asymmetric;
    if (report.asymmetry_witness) j["asymmetry_witness"] = to_json(*report.asymmetry_witness);
    j["convex"] = report.convex;
    if (report.convexity_witness) {
        j["convexity_witness"] = Json::object();
        j["convexity_witness"]["y"] = to_json(report.convexity_witness->first);
        j["convexity_witness"]["z"] = to_json(report.convexity_witness->second);
    }
    j["pass"] = report.pass();
    return dump(j);
}

namespace {

std::string component_label(const Component& c) {
    std::string label;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (i) label += ',';
        label += to_string(c.cells[i]);
    }
    return label;
}

} // namespace

std::string components_to_json(const SignCone& cone, const ComponentLattice& l,
                               const std::optional<int>& strong, bool relatively_open) {
    Json j;
    if (!cone.name().empty()) j["name"] = cone.name();
    Json comps = Json::array();
    for (std::size_t i = 0; i < l.components.size(); ++i) {
        const Component& c = l.components[i];
        Json cj;
        cj["id"] = i;
        Json cells = Json::array();
        for (const SignVector& s : c.cells) cells.push_back(to_string(s));
        cj["cells"] = cells;
        cj["representative"] = to_json(c.representative);
        cj["lin_hull_dim"] = c.lin_hull.dim();
        cj["lineality_dim"] = c.lineality.dim();
        comps.push_back(std::move(cj));
    }
    j["components"] = comps;
    Json order = Json::array();
    for (const auto& row : l.order) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        order.push_back(std::move(r));
    }
    j["order"] = order;
    Json joins = Json::array();
    for (std::size_t i = 0; i < l.components.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < l.components.size(); ++k)
            row.push_back(join_by_order(l, static_cast<int>(i), static_cast<int>(k)));
        joins.push_back(std::move(row));
    }
    j["join"] = joins;
    Json hasse = Json::array();
    for (const auto& [lo, hi] : l.hasse_edges) hasse.push_back(Json::array({lo, hi}));
    j["hasse"] = hasse;
    if (strong)
        j["strong_positives"] = *strong;
    else
        j["strong_positives"] = nullptr;
    j["relatively_open"] = relatively_open;
    j["laws_verified"] = l.laws_verified;
    return dump(j);
}

std::string components_to_dot(const ComponentLattice& l) {
    std::string out = "digraph components {\n";
    for (std::size_t i = 0; i < l.components.size(); ++i)
        out += "  c" + std::to_string(i) + " [label=\"" + component_label(l.components[i]) + "\"];\n";
    for (const auto& [lo, hi] : l.hasse_edges)
        out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
}

std::string lineality_to_json(const Subspace& l) {
    Json j;
    j["dim"] = l.dim();
    j["basis"] = to_json(l.basis());
    return dump(j);
}

std::string weak_to_json(const WeakAnalysis& analysis, const ComponentLattice& l) {
    Json j;
    j["is_weak"] = analysis.is_weak;
    if (analysis.is_weak) {
        Json chain = Json::array();
        for (int id : analysis.chain) {
            Json e;
            e["component"] = id;
            Json cells = Json::array();
            for (const SignVector& s : l.components[static_cast<std::size_t>(id)].cells)
                cells.push_back(to_string(s));
            e["cells"] = cells;
            chain.push_back(std::move(e));
        }
        j["chain"] = chain;
        j["rest_space"] = Json::object();
        j["rest_space"]["dim"] = analysis.rest_space.dim();
        j["rest_space"]["basis"] = to_json(analysis.rest_space.basis());
        if (!analysis.functionals.empty()) j["functionals"] = to_json(analysis.functionals);
    }
    return dump(j);
}

std::string witness_to_json(const Witness& w) {
    Json j;
    j["pair"] = Json::object();
    j["pair"]["y"] = to_json(w.y);
    j["pair"]["z"] = to_json(w.z);
    j["cortege"] = to_json(w.fn.cortege.functionals);
    j["value"] = format_rational(w.value);
    return dump(j);
}

std::string extension_to_json(const ExtensionResult& r) {
    Json j;
    j["cortege"] = to_json(r.cortege.functionals);
    j["extended"] = Json::parse(instance_to_json(r.extended_cone));
    return dump(j);
}

namespace {

Json to_json(const AxiomCheck& c) {
    Json j;
    j["pass"] = c.pass;
    if (!c.pass) j["counterexample"] = to_json(c.counterexample);
    return j;
}

} // namespace

std::string axiom_report_to_json(const AxiomReport& report) {
    Json j;
    j["asymmetry"] = to_json(report.asymmetry);
    j["transitivity"] = to_json(report.transitivity);
    j["scaling"] = to_json(report.scaling);
    j["translation"] = to_json(report.translation);
    j["mixed_transport"] = to_json(report.mixed_transport);
    j["negative_transitivity"] = to_json(report.negative_transitivity);
    j["pass"] = report.pass();
    return dump(j);
}

} // namespace prefcone
