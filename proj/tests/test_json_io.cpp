#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "shtukacrit/json_io.hpp"

using namespace shtk;
using jsonio::json;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const invalid_input& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("scenario fixtures parse") {
    auto file = jsonio::parse_scenario_file(fixture("ex6_ram6.json"));
    CHECK(file.schema_version == 1);
    CHECK(file.scenario.algebra.d == 2);
    CHECK(file.scenario.algebra.places.size() == 6);
    CHECK(file.scenario.bounds.legs().size() == 2);
    CHECK(file.scenario.legs.entries.empty());
    CHECK(file.scenario.idele_degree == 1);
}

TEST_CASE("parse errors carry JSON paths") {
    CHECK(error_of([] { jsonio::parse_scenario_file(""); }).find("malformed") !=
          std::string::npos);
    CHECK(error_of([] {
              jsonio::parse_scenario_file(R"({"schema_version":2,"scenario":{}})");
          }).find("/schema_version") == 0);
    CHECK(error_of([&] { jsonio::parse_scenario_file(fixture("bad_sum.json")); })
              .find("/scenario/algebra") == 0);

    std::string unknown = R"({"schema_version":1,"scenario":{"algebra":{"d":2,
      "places":[{"id":"x1"},{"id":"x2"}],
      "invariants":{"x1":"1/2","x2":"1/2"}},
      "legs":[{"i":1,"lambda":[1,0],"placee":"x1"}]}})";
    CHECK(error_of([&] { jsonio::parse_scenario_file(unknown); }).find("/scenario/legs/0") == 0);

    std::string bad_rational = R"({"schema_version":1,"scenario":{"algebra":{"d":2,
      "places":[{"id":"x1"},{"id":"x2"}],
      "invariants":{"x1":"1/0","x2":"1/2"}},
      "legs":[{"i":1,"lambda":[1,-1]}]}})";
    CHECK(error_of([&] { jsonio::parse_scenario_file(bad_rational); })
              .find("/scenario/algebra/invariants/x1") == 0);
}

TEST_CASE("algebra parser normalizes and rejects") {
    json good = json::parse(R"({"d":2,"places":[{"id":"x1"},{"id":"x2"}],
                                "invariants":{"x1":"3/2","x2":"1/2"}})");
    AlgebraSpec spec = jsonio::parse_algebra(good, "/algebra");
    CHECK(spec.invariant_at("x1").rep() == Rational(1, 2)); // normalized into [0,1)

    json unknown_key = good;
    unknown_key["extra"] = 1;
    CHECK_THROWS_AS(jsonio::parse_algebra(unknown_key, "/algebra"), invalid_input);

    json undeclared = json::parse(R"({"d":2,"places":[{"id":"x1"}],
                                      "invariants":{"x1":"1/2","x9":"1/2"}})");
    CHECK_THROWS_AS(jsonio::parse_algebra(undeclared, "/algebra"), invalid_input);
}

TEST_CASE("affine element round trip") {
    AffineElement om = AffineElement::omega(3);
    json j = jsonio::affine_element_json(om);
    CHECK(jsonio::parse_affine_element(j, "/") == om);
    CHECK(j["w"] == json::array({2, 3, 1}));

    CHECK_THROWS_AS(jsonio::parse_affine_element(json::parse(R"({"v":[0,0],"w":[1,1]})"), "/"),
                    invalid_input);
    CHECK_THROWS_AS(jsonio::parse_affine_element(json::parse(R"({"v":[0],"w":[1,2]})"), "/"),
                    invalid_input);
}

TEST_CASE("isospace parser") {
    IsoSpaceSpec spec = jsonio::parse_isospace(fixture("iso_ex2.json"));
    CHECK(spec.algebra.d == 2);
    CHECK(spec.extension.total_degree == 1);
    CHECK(spec.pi_degree_at("z1") == Rational(1));
    CHECK(spec.pi_degree_at("x1") == Rational(0));

    CHECK(error_of([] {
              jsonio::parse_isospace(R"({"algebra":{"d":2,
                "places":[{"id":"x1"},{"id":"x2"}],
                "invariants":{"x1":"1/2","x2":"1/2"}},
                "L":{"degree":1,"places":[
                  {"id":"x1","over":"x1"},{"id":"x2","over":"x2"}]},
                "pi":{"x1":"1/2"}})");
          }).find("Pi not principal") != std::string::npos);
}

TEST_CASE("deterministic dump") {
    json a;
    a["b"] = 1;
    a["a"] = json{{"z", "1/2"}, {"m", json::array({1, 2})}};
    std::string first = jsonio::dump(a);
    CHECK(first == jsonio::dump(a));
    CHECK(first.find("\"a\"") < first.find("\"b\"")); // sorted keys
    CHECK(first.back() == '\n');

    auto file = jsonio::parse_scenario_file(fixture("ex6_ram4.json"));
    FullReport report = full_report(file.scenario);
    std::string out = jsonio::dump(jsonio::full_report_json(report));
    // round trip: the emitted report re-parses
    CHECK(!json::parse(out, nullptr, false).is_discarded());
    CHECK(out == jsonio::dump(jsonio::full_report_json(full_report(file.scenario))));
}
