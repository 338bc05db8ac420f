#include "zeta/problem.hpp"
#include "zeta/report.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace zeta;
using nlohmann::json;

namespace {

const char* kTorusInput = R"({"kind":"torus","matrix":[[2,1],[1,1]]})";
const char* kPeriodicInput = R"({"kind":"periodic","period":3,"counts":{"1":1,"3":4}})";
const char* kSubshiftInput = R"({"kind":"subshift","pieces":[{"matrix":[[1,1],[1,0]],"sign":1}]})";

json report_json(const char* input_text) {
    const Report report = run(ProblemInput::parse(input_text));
    return json::parse(report.json_text);
}

}  // namespace

TEST_CASE("torus report contents") {
    const Report report = run(ProblemInput::parse(kTorusInput));
    CHECK(report.all_passed);
    const json doc = json::parse(report.json_text);

    CHECK(doc["input"]["kind"] == "torus");
    CHECK(doc["input"]["order"] == 32);
    CHECK(doc["input"]["horizon"] == 60);

    const auto& results = doc["results"];
    CHECK(results["sign_data"]["r"] == 1);
    CHECK(results["sign_data"]["p"] == 0);
    CHECK(results["sign_data"]["sigma"] == 1);
    CHECK(results["nielsen_numbers"][0] == "1");
    CHECK(results["nielsen_numbers"][1] == "5");
    CHECK(results["nielsen_numbers"][2] == "16");
    CHECK(results["nielsen_numbers"][3] == "45");
    CHECK(results["zeta"]["numerator"] == json::array({"1", "-2", "1"}));
    CHECK(results["zeta"]["denominator"] == json::array({"1", "-3", "1"}));
    CHECK(results["zeta_series"][0] == "1");
    CHECK(results["zeta_series"][1] == "1");
    CHECK(results["zeta_series"][2] == "3");
    CHECK(results["zeta_series"][3] == "8");
    CHECK(std::abs(results["growth"]["value"].get<double>() - 2.6180339887) < 1e-4);
    CHECK(std::abs(results["entropy"].get<double>() - 0.9624236501) < 1e-9);

    for (const auto& item : doc["verification"])
        CHECK(item["pass"] == true);
    CHECK(doc["all_passed"] == true);
}

TEST_CASE("periodic report contents") {
    const json doc = report_json(kPeriodicInput);
    CHECK(doc["all_passed"] == true);
    const auto& results = doc["results"];
    CHECK(results["p_coefficients"]["1"] == "1");
    CHECK(results["p_coefficients"]["3"] == "3");
    CHECK(results["factors"] ==
          json::array({{{"d", 1}, {"exponent", "-1"}}, {{"d", 3}, {"exponent", "-1"}}}));
    bool saw_series_identity = false;
    for (const auto& item : doc["verification"]) {
        if (item["name"] == "cyclotomic-series-identity") {
            saw_series_identity = true;
            CHECK(item["pass"] == true);
        }
    }
    CHECK(saw_series_identity);
}

TEST_CASE("subshift report contents") {
    const json doc = report_json(kSubshiftInput);
    CHECK(doc["all_passed"] == true);
    const auto& results = doc["results"];
    CHECK(results["zeta"]["numerator"] == json::array({"1"}));
    CHECK(results["zeta"]["denominator"] == json::array({"1", "-1", "-1"}));
    bool saw_oracle = false;
    for (const auto& item : doc["verification"]) {
        if (item["name"] == "trace-oracle") {
            saw_oracle = true;
            CHECK(item["pass"] == true);
        }
    }
    CHECK(saw_oracle);
    CHECK_FALSE(doc["notes"].empty());
}

TEST_CASE("reports are byte deterministic") {
    for (const char* input : {kTorusInput, kPeriodicInput, kSubshiftInput}) {
        const Report first = run(ProblemInput::parse(input));
        const Report second = run(ProblemInput::parse(input));
        CHECK(first.json_text == second.json_text);
        CHECK(first.all_passed);
    }
}

TEST_CASE("echoed input round trips") {
    for (const char* text :
         {kTorusInput, kPeriodicInput, kSubshiftInput,
          R"({"kind":"homology","matrices":[[[1]],[[2,1],[1,1]],[[1]]],"surface":true,
              "order":12,"horizon":24,"lambda":[{"re":-1.0,"im":0.0}]})"}) {
        const ProblemInput input = ProblemInput::parse(text);
        CHECK(ProblemInput::parse(input.to_json_text()) == input);
    }
}

TEST_CASE("homology report with torsion values") {
    const ProblemInput input = ProblemInput::parse(
        R"({"kind":"homology","matrices":[[[1]],[[2,1],[1,1]],[[1]]],"surface":true,
            "lambda":[{"re":-1.0,"im":0.0},{"re":0.0,"im":1.0}]})");
    const Report report = run(input);
    CHECK(report.all_passed);
    const json doc = json::parse(report.json_text);
    const auto& torsion = doc["results"]["torsion"];
    CHECK(torsion.size() == 2);
    CHECK(std::abs(torsion[0]["direct"].get<double>() - 0.8) < 1e-12);
    CHECK(std::abs(torsion[1]["via_zeta"].get<double>() - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(ProblemInput::parse("not json"), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"nope"})"), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"torus"})"), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"torus","matrix":[[2,1],[1,1]],"x":1})"),
                    std::invalid_argument);
    // determinant constraint
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"torus","matrix":[[2,0],[0,1]]})"),
                    std::invalid_argument);
    // ragged matrix
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"torus","matrix":[[2,1],[1]]})"),
                    std::invalid_argument);
    // missing divisor entry
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"periodic","period":4,"counts":{"1":1}})"),
                    std::invalid_argument);
    // non 0/1 transition entry
    CHECK_THROWS_AS(
        ProblemInput::parse(R"({"kind":"subshift","pieces":[{"matrix":[[2]],"sign":1}]})"),
        std::invalid_argument);
    // bad sign
    CHECK_THROWS_AS(
        ProblemInput::parse(R"({"kind":"subshift","pieces":[{"matrix":[[1]],"sign":0}]})"),
        std::invalid_argument);
    // non-unit holonomy
    CHECK_THROWS_AS(ProblemInput::parse(
                        R"({"kind":"torus","matrix":[[2,1],[1,1]],"lambda":[{"re":2,"im":0}]})"),
                    std::invalid_argument);
    // lambda is not defined for periodic data
    CHECK_THROWS_AS(ProblemInput::parse(
                        R"({"kind":"periodic","period":1,"counts":{"1":1},"lambda":[]})"),
                    std::invalid_argument);
    // range limits
    CHECK_THROWS_AS(ProblemInput::parse(R"({"kind":"torus","matrix":[[2,1],[1,1]],"order":0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        ProblemInput::parse(R"({"kind":"torus","matrix":[[2,1],[1,1]],"order":513})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        ProblemInput::parse(R"({"kind":"torus","matrix":[[2,1],[1,1]],"horizon":10001})"),
        std::invalid_argument);
    // surface flag forces 1x1 end degrees
    CHECK_THROWS_AS(
        ProblemInput::parse(R"({"kind":"homology","matrices":[[[1,0],[0,1]]],"surface":true})"),
        std::invalid_argument);
}

TEST_CASE("domain errors surface from run") {
    // parabolic map passes the schema but is not hyperbolic
    const ProblemInput input =
        ProblemInput::parse(R"({"kind":"torus","matrix":[[1,1],[0,1]]})");
    CHECK_THROWS_AS(run(input), std::domain_error);
}
