#include "wavediff/io.hpp"

#include <cmath>
#include <fstream>

#include "wavediff/errors.hpp"

namespace wavediff {

using nlohmann::json;

namespace {

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
    return v;
}

std::vector<double> vector_field(const json& j, int dimension, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dimension)
        throw InputError(std::string(what) + " must be an array of length " +
                         std::to_string(dimension));
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(finite_number(v, what));
    return out;
}

}  // namespace

WaveSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw InputError("wave spec: expected a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw InputError("wave spec: missing integer field \"dimension\"");
    int d = j["dimension"].get<int>();
    if (d < 1) throw InputError("wave spec: dimension must be >= 1");

    std::vector<WaveTerm> terms;
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) throw InputError("wave spec: \"terms\" must be an array");
        for (const auto& t : j["terms"]) {
            WaveTerm term;
            term.coeff = {finite_number(t.value("re", json(0.0)), "term re"),
                          finite_number(t.value("im", json(0.0)), "term im")};
            term.plane = t.contains("plane") ? vector_field(t["plane"], d, "term plane")
                                             : std::vector<double>(d, 0.0);
            term.radial = t.contains("radial") ? finite_number(t["radial"], "term radial") : 0.0;
            terms.push_back(std::move(term));
        }
    }
    return WaveSpec(d, std::move(terms));
}

json spec_to_json(const WaveSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.terms()) {
        terms.push_back({{"re", t.coeff.real()},
                         {"im", t.coeff.imag()},
                         {"plane", t.plane},
                         {"radial", t.radial}});
    }
    return {{"dimension", spec.dimension()}, {"terms", terms}};
}

DiffractionMeasure measure_from_json(const json& j) {
    if (!j.is_object()) throw InputError("measure: expected a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw InputError("measure: missing integer field \"dimension\"");
    int d = j["dimension"].get<int>();
    if (d < 1) throw InputError("measure: dimension must be >= 1");

    std::vector<SphericalComponent> components;
    if (j.contains("components")) {
        if (!j["components"].is_array()) throw InputError("measure: \"components\" must be an array");
        for (const auto& c : j["components"]) {
            SphericalComponent comp;
            comp.center = c.contains("center") ? vector_field(c["center"], d, "component center")
                                               : std::vector<double>(d, 0.0);
            comp.radius = c.contains("radius") ? finite_number(c["radius"], "component radius") : 0.0;
            comp.mass = finite_number(c.value("mass", json(0.0)), "component mass");
            components.push_back(std::move(comp));
        }
    }
    return DiffractionMeasure(d, std::move(components));
}

json measure_to_json(const DiffractionMeasure& mu) {
    json components = json::array();
    for (const auto& c : mu.components()) {
        components.push_back({{"center", c.center}, {"radius", c.radius}, {"mass", c.mass}});
    }
    return {{"dimension", mu.dimension()}, {"components", components}};
}

json report_to_json(const ConvergenceReport& report) {
    json values = json::array();
    for (const auto& v : report.values) values.push_back({{"re", v.real()}, {"im", v.imag()}});
    json out = {{"values", values},
                {"extrapolated", {{"re", report.extrapolated.real()}, {"im", report.extrapolated.imag()}}}};
    out["error_estimate"] =
        std::isfinite(report.error_estimate) ? json(report.error_estimate) : json("inf");
    if (!report.std_errors.empty()) out["std_errors"] = report.std_errors;
    return out;
}

json config_to_json(const AveragingConfig& cfg) {
    const char* window = cfg.window == Window::ball ? "ball"
                         : cfg.window == Window::cube ? "cube"
                                                      : "nonneg_interval";
    return {{"window", window},
            {"radii", cfg.radii},
            {"quad_points_radial", cfg.quad_points_radial},
            {"quad_points_angular", cfg.quad_points_angular},
            {"mc_samples", cfg.mc_samples},
            {"rng_seed", cfg.rng_seed},
            {"threads", cfg.threads}};
}

json autocorr_to_json(const ClosedAutocorrelation& eta) {
    json terms = json::array();
    for (const auto& t : eta.terms)
        terms.push_back({{"weight", t.weight}, {"plane", t.plane}, {"radial", t.radial}});
    return {{"dimension", eta.dimension}, {"terms", terms}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return json::parse(in);  // parse_error carries the byte position
}

}  // namespace wavediff
