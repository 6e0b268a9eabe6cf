#pragma once

#include <string>

#include "json.hpp"

#include "abchrome/coloring.hpp"
#include "abchrome/solver.hpp"

namespace abchrome {

// Coloring file format: {"k": int, "colors": [int,...]} with 1-based colors,
// or a plain-text list of whitespace-separated ints (k inferred as the max).
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);
Coloring coloring_from_plain_text(const std::string& text);
Coloring parse_coloring(const std::string& text);  // sniffs JSON vs plain text

nlohmann::json cycle_to_json(const CycleWitness& w);
nlohmann::json recolor_witness_to_json(const RecolorWitness& w);
nlohmann::json value_result_to_json(const ValueResult& r, bool stable_timing = false);
nlohmann::json conjecture_to_json(const ConjectureProbe& p, bool stable_timing = false);

const char* verdict_name(ConjectureProbe::Verdict v);

}  // namespace abchrome
