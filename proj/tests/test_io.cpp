#include <doctest.h>

#include <cmath>

#include "wavediff/errors.hpp"
#include "wavediff/io.hpp"

using namespace wavediff;
using nlohmann::json;

TEST_CASE("wave spec round trip") {
    json j = {{"dimension", 2},
              {"terms", json::array({{{"re", 1.0}, {"im", -0.5}, {"plane", {0.7, 0.0}}, {"radial", 1.2}},
                                     {{"re", 0.25}, {"plane", {0.0, 0.0}}}})}};
    WaveSpec spec = spec_from_json(j);
    REQUIRE(spec.terms().size() == 2);
    CHECK(spec.terms()[0].coeff == Complex{1.0, -0.5});
    CHECK(spec.terms()[0].radial == 1.2);
    CHECK(spec.terms()[1].coeff == Complex{0.25, 0.0});  // im defaults to zero
    CHECK(spec.terms()[1].radial == 0.0);

    WaveSpec back = spec_from_json(spec_to_json(spec));
    REQUIRE(back.terms().size() == spec.terms().size());
    for (std::size_t i = 0; i < back.terms().size(); ++i) {
        CHECK(back.terms()[i].coeff == spec.terms()[i].coeff);
        CHECK(back.terms()[i].plane == spec.terms()[i].plane);
        CHECK(back.terms()[i].radial == spec.terms()[i].radial);
    }
}

TEST_CASE("wave spec validation errors") {
    CHECK_THROWS_AS(spec_from_json(json::array()), InputError);
    CHECK_THROWS_AS(spec_from_json(json{{"terms", json::array()}}), InputError);
    CHECK_THROWS_AS(spec_from_json(json{{"dimension", 0}}), InputError);
    CHECK_THROWS_AS(
        spec_from_json(json{{"dimension", 2},
                            {"terms", json::array({{{"re", 1.0}, {"plane", {1.0}}}})}}),
        InputError);

    // non-finite coefficients are rejected
    json inf = {{"dimension", 1},
                {"terms", json::array({{{"re", std::numeric_limits<double>::infinity()},
                                        {"plane", {0.0}}}})}};
    CHECK_THROWS_AS(spec_from_json(inf), InputError);
}

TEST_CASE("measure round trip and validation") {
    json j = {{"dimension", 2},
              {"components", json::array({{{"center", {1.0, 0.0}}, {"radius", 2.0}, {"mass", 0.5}},
                                          {{"center", {0.0, 0.0}}, {"mass", 1.5}}})}};
    DiffractionMeasure mu = measure_from_json(j);
    REQUIRE(mu.components().size() == 2);
    CHECK(mu.total_mass() == 2.0);

    DiffractionMeasure back = measure_from_json(measure_to_json(mu));
    CHECK(back.total_mass() == mu.total_mass());
    CHECK(back.components().size() == mu.components().size());

    CHECK_THROWS_AS(measure_from_json(json{{"dimension", 2},
                                           {"components", json::array({{{"center", {0.0, 0.0}},
                                                                        {"mass", -1.0}}})}}),
                    InputError);
}

TEST_CASE("reports serialize with finite and infinite error estimates") {
    ConvergenceReport rep;
    rep.values = {{1.0, -2.0}, {0.5, 0.25}};
    rep.extrapolated = rep.values.back();
    rep.error_estimate = 0.125;
    json j = report_to_json(rep);
    CHECK(j["values"].size() == 2);
    CHECK(j["values"][0]["re"] == 1.0);
    CHECK(j["values"][0]["im"] == -2.0);
    CHECK(j["error_estimate"] == 0.125);

    ConvergenceReport single;
    single.values = {{1.0, 0.0}};
    single.extrapolated = single.values.back();
    json js = report_to_json(single);
    CHECK(js["error_estimate"] == "inf");
}

TEST_CASE("missing files raise input errors") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/path/spec.json"), InputError);
}
