#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pointmod/error.hpp"
#include "pointmod/genfun.hpp"
#include "pointmod/io.hpp"

using namespace pointmod;

TEST_SUITE("io") {

TEST_CASE("motive json round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto m = oracle::random_motive(rng, 4, 1000);
        CHECK(motive_from_json(motive_to_json(m)) == m);
        CHECK(motive_from_json(Json::parse(motive_to_json(m).dump())) == m);
        CHECK(motive_from_json(Json(m.to_string())) == m);
    }
    const Motive huge = (Motive::L() * Motive(mpz_class("123456789012345678901234567890")));
    CHECK(motive_from_json(Json::parse(motive_to_json(huge).dump())) == huge);
    CHECK_THROWS_AS(motive_from_json(Json(42.5)), Error);
}

TEST_CASE("series json") {
    const auto j = series_to_json(punctual_series(2));
    REQUIRE(j.size() == 3);
    CHECK(j[1]["degree"] == 1);
    CHECK(motive_from_json(j[2]["motive"]) == punctual_series(2)[2]);
}

TEST_CASE("module json") {
    const Json doc = Json::parse(R"({"n": 3, "field": {"type": "rational"},
        "x": [[0,0,0],[1,0,0],[0,0,0]], "y": [[0,0,0],[0,0,0],["1/1",0,0]]})");
    const auto m = module_from_json(doc);
    CHECK(m.length() == 3);
    CHECK(module_from_json(module_to_json(m)) == m);
    const Json prime = Json::parse(R"({"n": 2, "field": {"type": "prime", "p": 3}, "x": [[0,0],[2,0]], "y": [[0,0],[0,0]]})");
    const auto mp = module_from_json(prime);
    CHECK(mp.field() == Field::prime(3));
    CHECK(module_from_json(module_to_json(mp)) == mp);

    auto code = [](const std::string& text) {
        try {
            module_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code(R"({"n": 2})") == ErrorCode::ParseError);
    CHECK(code(R"({"n": 2, "field": {"type": "rational"}, "x": [[0,1],[0,0]], "y": [[0,0],[1,0]]})") == ErrorCode::NotCommuting);
    CHECK(code(R"({"n": 2, "field": {"type": "rational"}, "x": [[0,1]], "y": [[0,0],[0,0]]})") == ErrorCode::ParseError);
    CHECK(code(R"({"n": 1, "field": {"type": "rational"}, "x": [["a"]], "y": [[0]]})") == ErrorCode::ParseError);
}

TEST_CASE("classification report") {
    const Json doc = Json::parse(R"({"n": 3, "field": {"type": "rational"},
        "x": [[0,0,0],[1,0,0],[0,0,0]], "y": [[0,0,0],[0,0,0],[1,0,0]]})");
    const auto rep = classification_report(module_from_json(doc));
    CHECK(rep["schemaVersion"] == 1);
    CHECK(rep["label"] == "structure sheaf: A/m^2");
    CHECK(rep["r"] == 1);
    CHECK(rep["endDim"] == 3);
    CHECK(rep["powerDims"] == Json::array({3, 2, 0}));
    CHECK(motive_from_json(rep["autMotive"]) == Motive::L_power(2) * (Motive::L() - 1));
    CHECK(Json::parse(rep.dump()) == rep);
}

}  // TEST_SUITE
