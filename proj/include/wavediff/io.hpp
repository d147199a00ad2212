#pragma once

#include <string>

#include <json.hpp>

#include "wavediff/averaging.hpp"
#include "wavediff/closed_form.hpp"
#include "wavediff/measure.hpp"
#include "wavediff/wave.hpp"

namespace wavediff {

// Wave spec file schema:
//   {"dimension": d, "terms": [{"re": _, "im": _, "plane": [d floats], "radial": _}, ...]}
WaveSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const WaveSpec& spec);

// Measure file schema:
//   {"dimension": d, "components": [{"center": [d floats], "radius": _, "mass": _}, ...]}
DiffractionMeasure measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const DiffractionMeasure& mu);

nlohmann::json report_to_json(const ConvergenceReport& report);
nlohmann::json config_to_json(const AveragingConfig& cfg);
nlohmann::json autocorr_to_json(const ClosedAutocorrelation& eta);

// Reads and parses a JSON document; wraps stream failures in InputError and
// leaves nlohmann parse errors (with byte positions) to the caller.
nlohmann::json load_json_file(const std::string& path);

}  // namespace wavediff
