#include "lefschetz/driver.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/model_io.hpp"
#include "lefschetz/smooth_model.hpp"

#include <doctest.h>

#include <sstream>

using namespace lefschetz;
using nlohmann::json;

namespace {

json tiny_model() {
    return json::parse(R"({
 "format_version": "1", "genus": 0, "n_max": 1,
 "components": [{"n": 0, "k": 0, "dim": 2, "basis_labels": ["u", "v"]},
                {"n": 1, "k": 0, "dim": 2, "basis_labels": ["p", "q"]}],
 "operators": [
  {"name": "mu_plus_pt", "bidegree": [1, 0], "blocks": [{"from": [0, 0], "to": [1, 0], "matrix": [["1", "0"], ["0", "1/2"]]}]},
  {"name": "mu_minus_pt", "bidegree": [-1, -2], "blocks": []},
  {"name": "mu_plus_C", "bidegree": [1, 2], "blocks": []},
  {"name": "mu_minus_C", "bidegree": [-1, 0], "blocks": []}
 ]})");
}

std::string message_of(const json& j) {
    try {
        model_from_json(j);
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("model_io") {
    TEST_CASE("round trip preserves every block") {
        for (int g = 1; g <= 2; ++g) {
            SmoothModel sm = build_smooth_model(g, 2 * g + 2);
            std::string text = dump_model(sm.module);
            HeisenbergModule back = parse_model(text);
            CHECK(*back.V == *sm.module.V);
            CHECK(*back.HJ == *sm.module.HJ);
            CHECK(back.mu_plus_pt == sm.module.mu_plus_pt);
            CHECK(back.mu_minus_pt == sm.module.mu_minus_pt);
            CHECK(back.mu_plus_C == sm.module.mu_plus_C);
            CHECK(back.mu_minus_C == sm.module.mu_minus_C);
            CHECK(back.aj.size() == sm.module.aj.size());
            for (const auto& [n, op] : sm.module.aj) CHECK(back.aj.at(n) == op);
            CHECK(*back.e == *sm.module.e);
            CHECK(*back.fourier == *sm.module.fourier);
            CHECK(dump_model(back) == text);
        }
    }

    TEST_CASE("truncation is recomputed from n_max") {
        HeisenbergModule m = model_from_json(tiny_model());
        CHECK(m.mu_plus_pt.is_truncated({1, 0}));
        CHECK(!m.mu_plus_pt.is_truncated({0, 0}));
        CHECK(m.mu_plus_pt.block({0, 0}, {1, 0})->operator()(1, 1) == Rational(1, 2));
    }

    TEST_CASE("a 2x3 block on 2x2 components names the block") {
        json j = tiny_model();
        j["operators"][0]["blocks"][0]["matrix"] = json::array({{"1", "0", "0"}, {"0", "1", "0"}});
        try {
            model_from_json(j);
            FAIL("expected a shape error");
        } catch (const ShapeError& e) {
            std::string what = e.what();
            CHECK(what.find("mu_plus_pt") != std::string::npos);
            CHECK(what.find("(0,0)->(1,0)") != std::string::npos);
        }
    }

    TEST_CASE("malformed content is rejected") {
        json j = tiny_model();
        j["operators"][0]["blocks"][0]["matrix"][0][0] = "1/0";
        CHECK_THROWS_AS(model_from_json(j), ParseError);

        j = tiny_model();
        j["operators"][0]["blocks"][0]["matrix"][0][0] = 1;
        CHECK_THROWS_AS(model_from_json(j), ParseError);

        j = tiny_model();
        j["operators"].push_back({{"name", "mu_plus_X"}, {"bidegree", {0, 0}}, {"blocks", json::array()}});
        CHECK(message_of(j).find("unknown operator name") != std::string::npos);

        j = tiny_model();
        j["operators"].erase(3);
        CHECK(message_of(j).find("mu_minus_C is missing") != std::string::npos);

        j = tiny_model();
        j["operators"][1]["bidegree"] = {1, 1};
        CHECK_THROWS_AS(model_from_json(j), ParseError);

        j = tiny_model();
        j["components"][0]["dim"] = 3;
        CHECK_THROWS_AS(model_from_json(j), ParseError);

        j = tiny_model();
        j["format_version"] = "2";
        CHECK_THROWS_AS(model_from_json(j), ParseError);
    }

    TEST_CASE("syntax errors report line and column") {
        std::string text = "{\n  \"format_version\": \"1\",\n  \"genus\": 1,,\n}";
        try {
            parse_model(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(e.column() == 14);
        }
    }

    TEST_CASE("missing files are input errors") {
        std::ostringstream out, err;
        CHECK(cmd_verify("/nonexistent/model.json", {}, out, err) == kExitInputError);
        CHECK(err.str().find("cannot open") != std::string::npos);
    }
}
