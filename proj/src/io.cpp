#include "abchrome/io.hpp"

#include <sstream>

namespace abchrome {

using nlohmann::json;

json coloring_to_json(const Coloring& c) {
    return json{{"k", c.k}, {"colors", c.colors}};
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("colors"))
        throw std::invalid_argument(R"(coloring JSON must be {"k": int, "colors": [int,...]})");
    Coloring c;
    c.k = j.at("k").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
    return c;
}

Coloring coloring_from_plain_text(const std::string& text) {
    std::istringstream in(text);
    Coloring c;
    int value;
    while (in >> value) {
        c.colors.push_back(value);
        c.k = std::max(c.k, value);
    }
    if (!in.eof())
        throw std::invalid_argument("plain-text coloring must contain only integers");
    if (c.colors.empty()) throw std::invalid_argument("empty coloring");
    return c;
}

Coloring parse_coloring(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return coloring_from_json(json::parse(text));
        break;
    }
    return coloring_from_plain_text(text);
}

json cycle_to_json(const CycleWitness& w) {
    return json{{"vertices", w.vertices}};
}

json recolor_witness_to_json(const RecolorWitness& w) {
    json repl = json::object();
    for (const auto& [v, col] : w.replacement) repl[std::to_string(v)] = col;
    return json{{"class_color", w.class_color}, {"replacement", repl}};
}

json value_result_to_json(const ValueResult& r, bool stable_timing) {
    json j;
    if (r.exact()) {
        j["value"] = *r.value;
        j["status"] = "exact";
    } else {
        j["value"] = nullptr;
        j["status"] = "budget-exhausted";
    }
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["nodes"] = r.nodes;
    j["millis"] = stable_timing ? 0 : r.millis;
    if (r.witness) j["witness"] = coloring_to_json(*r.witness);
    return j;
}

const char* verdict_name(ConjectureProbe::Verdict v) {
    switch (v) {
        case ConjectureProbe::Verdict::Vacuous: return "vacuous";
        case ConjectureProbe::Verdict::Supported: return "supported";
        case ConjectureProbe::Verdict::Violated: return "violated";
        case ConjectureProbe::Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

json conjecture_to_json(const ConjectureProbe& p, bool stable_timing) {
    json j;
    if (p.girth)
        j["girth"] = *p.girth;
    else
        j["girth"] = "acyclic";
    j["phi"] = value_result_to_json(p.phi, stable_timing);
    j["Ab"] = value_result_to_json(p.ab, stable_timing);
    j["hypothesis"] = p.hypothesis;
    j["verdict"] = verdict_name(p.verdict);
    return j;
}

}  // namespace abchrome
