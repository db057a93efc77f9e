#include "grl/io.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace grl;
using grl::test::q;
using io::json;

TEST_CASE("capacity files round-trip and enforce totality") {
    Capacity c = grl::test::cap(2, {"0", "3/5", "3/5", "1"});
    json j = io::capacity_to_json(c);
    Capacity back = io::capacity_from_json(j);
    CHECK(back == c);

    json missing = j;
    missing["values"].erase("2");
    CHECK_THROWS_AS(io::capacity_from_json(missing), ParseError);

    json stray = j;
    stray["values"]["9"] = "1";
    CHECK_THROWS_AS(io::capacity_from_json(stray), ParseError);

    json negative = j;
    negative["values"]["1"] = "-1/2";
    CHECK_THROWS_AS(io::capacity_from_json(negative), ParseError);

    json garbled = j;
    garbled["values"]["1"] = "0.5";
    CHECK_THROWS_AS(io::capacity_from_json(garbled), ParseError);
}

TEST_CASE("rationals accept integers and p/q strings only") {
    CHECK(io::rational_from_json(json("7/10"), "x") == q("7/10"));
    CHECK(io::rational_from_json(json(3), "x") == 3);
    CHECK_THROWS_AS(io::rational_from_json(json(1.5), "x"), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json::array(), "x"), ParseError);
}

TEST_CASE("alpha capacities round-trip through json") {
    for (const AlphaCapacity& v :
         {AlphaCapacity::lebesgue(), AlphaCapacity::dirac(q("1/2")),
          AlphaCapacity::vanishing_on_bounded(q("2")), AlphaCapacity::distorted_power(q("3/2")),
          AlphaCapacity::sigma_additive({{q("1"), q("2")}},
                                        {{Interval::make(q("0"), q("4"), false, true), q("1/3")}})}) {
        AlphaCapacity back = io::alpha_from_json(io::alpha_to_json(v));
        CHECK(back.kind_name() == v.kind_name());
        // compare by sampling masses
        for (const Interval& cell :
             {Interval::closed(q("0"), q("1")), Interval::point(q("1/2")), Interval::tail(q("3"), false)}) {
            CHECK(back.mass(cell).str() == v.mass(cell).str());
        }
    }
}

TEST_CASE("scenario round-trip reproduces reports bit-exactly") {
    json j = {
        {"space", {{"kind", "finite"}, {"size", 3}}},
        {"mu", {{"values", {{"0", "0"}, {"1", "1/10"}, {"2", "1/2"}, {"3", "3/5"},
                            {"4", "1/2"}, {"5", "3/5"}, {"6", "7/10"}, {"7", "1"}}}}},
        {"nu", {{"kind", "lebesgue"}}},
        {"f", {"1", "2", "3"}},
        {"A", {0, 1, 2}},
        {"assume_nu_zero_at_origin", true},
    };
    Scenario sc = io::scenario_from_json(j);
    GRLReport direct = grl_integrate(sc);
    CHECK(direct.value.exact_value() == q("11/5"));

    Scenario reloaded = io::scenario_from_json(io::scenario_to_json(sc));
    GRLReport again = grl_integrate(reloaded);
    CHECK(io::report_to_json(direct).dump() == io::report_to_json(again).dump());
}

TEST_CASE("interval scenarios parse and validate") {
    auto pair = [](const char* a, const char* b) { return json::array({a, b}); };
    json j = {
        {"space", {{"kind", "interval"}, {"domain", pair("0", "1")}}},
        {"mu", {{"exponent", "2"}}},
        {"nu", {{"kind", "lebesgue"}}},
        {"f", {{"knots", json::array({pair("0", "0"), pair("1", "1")})}}},
        {"A", json::array({pair("0", "1")})},
    };
    Scenario sc = io::scenario_from_json(j);
    CHECK(grl_integrate(sc).value.exact_value() == q("1/3"));

    json bad = j;
    bad["f"]["knots"] = json::array({pair("0", "0")});
    CHECK_THROWS_AS(io::scenario_from_json(bad), DomainError);
    json negative = j;
    negative["f"]["knots"] = json::array({pair("0", "-1"), pair("1", "1")});
    CHECK_THROWS_AS(io::scenario_from_json(negative), ParseError);
    json outside = j;
    outside["A"] = json::array({pair("0", "2")});
    CHECK_THROWS_AS(io::scenario_from_json(outside), DomainError);
}

TEST_CASE("missing scenario fields are reported by name") {
    json j = {{"space", {{"kind", "finite"}, {"size", 1}}}};
    try {
        io::scenario_from_json(j);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("mu") != std::string::npos);
    }
}

TEST_CASE("report json carries value, method, and assumptions") {
    ScenarioFinite sc;
    sc.space = GroundSpace(1);
    sc.mu = Capacity(sc.space, {q("0"), q("1")});
    sc.nu = AlphaCapacity::lebesgue();
    sc.f = {q("1/3")};
    sc.A = 1;
    json j = io::report_to_json(grl_integrate(sc));
    CHECK(j["integrable"] == true);
    CHECK(j["value"] == "1/3");
    CHECK(j["method"] == "closed_form_sigma_additive");
    CHECK(j["diagnostics"]["assumptions"].contains("nu_zero_at_origin"));
}

TEST_CASE("ext values serialize as rational, inf, or decimal-with-error") {
    CHECK(io::ext_value_to_json(ExtValue::exact(q("2/3"))) == "2/3");
    CHECK(io::ext_value_to_json(ExtValue::infinity()) == "inf");
    json a = io::ext_value_to_json(ExtValue::approx(0.5, 1e-9));
    CHECK(a["decimal"] == 0.5);
    CHECK(a["error_bound"] == 1e-9);
}

TEST_CASE("csv fields quote separators and quotes") {
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("a,b") == "\"a,b\"");
    CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(io::csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("suite csv has one row per theorem") {
    theorems::SuiteConfig config;
    config.theorems = {theorems::TheoremId::T1, theorems::TheoremId::T10};
    config.instances_per_theorem = 3;
    config.negative_controls = false;
    std::string csv = io::suite_to_csv(theorems::run_suite(config));
    CHECK(csv.find("id,instances,skipped,passed,failed\n") == 0);
    CHECK(csv.find("T1,3,0,3,0") != std::string::npos);
    CHECK(csv.find("T10,3,0,3,0") != std::string::npos);
}
