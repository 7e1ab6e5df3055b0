#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "shtukacrit/affweyl.hpp"
#include "shtukacrit/criteria.hpp"
#include "shtukacrit/isospace.hpp"
#include "shtukacrit/newton.hpp"

namespace shtk::jsonio {

using json = nlohmann::json;

// Scenario container: schema_version 1 plus optional precomposed command
// names (stored verbatim; dispatch is the caller's business).
struct ScenarioFile {
    int schema_version = 1;
    Scenario scenario;
    std::vector<std::string> commands;
};

// All parsers reject unknown keys and report errors with a JSON path.
AlgebraSpec parse_algebra(const json& j, const std::string& path);
ScenarioFile parse_scenario_file(const std::string& bytes);
IsoSpaceSpec parse_isospace(const std::string& bytes);
AffineElement parse_affine_element(const json& j, const std::string& path);
std::vector<AffineElement> parse_tuple(const std::string& bytes);

json verdict_json(const Verdict& v);
json full_report_json(const FullReport& r);
json simple_space_json(const SimpleSpaceReport& r);
json localization_json(const std::vector<LocalSlice>& slices);
json affine_element_json(const AffineElement& e);
json newton_json(const NewtonPoint& nu);

// Canonical emission: objects in sorted key order (the parser's map type),
// rationals already reduced by construction, two-space indent, trailing
// newline.  Byte-identical across runs and thread counts.
std::string dump(const json& j);

} // namespace shtk::jsonio
