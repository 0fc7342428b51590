#include "lefschetz/driver.hpp"
#include "lefschetz/model_io.hpp"
#include "lefschetz/smooth_model.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace lefschetz;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lefschetz_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("driver") {
    TEST_CASE("every check id appears once") {
        SmoothModel sm = build_smooth_model(1, 4);
        Report r = run_checks(sm.module, {});
        std::set<std::string> ids;
        for (const auto& c : r) CHECK(ids.insert(c.check_id).second);
        CHECK(!has_failures(r));
    }

    TEST_CASE("reports are deterministic and independent of parallelism") {
        SmoothModel sm = build_smooth_model(2, 6);
        std::string a = to_json(run_checks(sm.module, {{}, 1})).dump();
        std::string b = to_json(run_checks(sm.module, {{}, 4})).dump();
        std::string c = to_json(run_checks(sm.module, {{}, 4})).dump();
        CHECK(a == b);
        CHECK(b == c);
    }

    TEST_CASE("check filter") {
        SmoothModel sm = build_smooth_model(1, 4);
        Report r = run_checks(sm.module, {{"heisenberg.comm.mu_plus", "grr.ch_"}, 2});
        REQUIRE(r.size() == 4);
        CHECK(r[0].check_id == "heisenberg.comm.mu_plus_pt.mu_plus_C");
        CHECK(r[1].check_id == "heisenberg.comm.mu_plus_pt.mu_minus_pt");
        CHECK(r[2].check_id == "heisenberg.comm.mu_plus_C.mu_minus_C");
        CHECK(r[3].check_id == "grr.ch_independent_of_n");
        CHECK(matches_filter("sl2.triple", {}));
        CHECK(!matches_filter("sl2.triple", {"filtration."}));
    }

    TEST_CASE("gen, verify and report on files") {
        const std::string model = temp_path("g1.json"), report = temp_path("g1_report.json");
        std::ostringstream out, err;
        GenOptions gen;
        gen.genus = 1;
        gen.out = model;
        REQUIRE(cmd_gen(gen, out, err) == kExitPass);
        CHECK(cmd_verify(model, {}, out, err) == kExitPass);
        CHECK(cmd_report(model, report, {}, out, err) == kExitPass);
        std::string first = slurp(report);
        CHECK(cmd_report(model, report, {{}, 3}, out, err) == kExitPass);
        CHECK(slurp(report) == first);
        auto parsed = nlohmann::json::parse(first);
        CHECK(parsed.is_array());
        CHECK(parsed[0].contains("check_id"));
        CHECK(parsed[0].contains("theorem_ref"));
        std::remove(model.c_str());
        std::remove(report.c_str());
    }

    TEST_CASE("perturbed model fails with a witness") {
        const std::string model = temp_path("bad.json");
        std::ostringstream out, err;
        GenOptions gen;
        gen.genus = 1;
        gen.out = model;
        gen.scale = {{"mu_minus_C", Rational(2)}};
        REQUIRE(cmd_gen(gen, out, err) == kExitPass);
        std::ostringstream table;
        CHECK(cmd_verify(model, {}, table, err) == kExitCheckFailure);
        CHECK(table.str().find("heisenberg.comm.mu_minus_C.mu_plus_pt   fail") != std::string::npos);
        CHECK(table.str().find("witness:") != std::string::npos);
        std::remove(model.c_str());
    }

    TEST_CASE("decompose and filtrate") {
        const std::string model = temp_path("g2.json");
        std::ostringstream out, err;
        GenOptions gen;
        gen.genus = 2;
        gen.out = model;
        REQUIRE(cmd_gen(gen, out, err) == kExitPass);
        std::ostringstream dec, fil;
        CHECK(cmd_decompose(model, dec, err) == kExitPass);
        CHECK(dec.str().find("phi on H_4 (dim 16): 0^1 1^4 2^6 3^4 4^1") != std::string::npos);
        CHECK(dec.str().find("D_0=1 D_1=4 D_2=6 D_3=4 D_4=1") != std::string::npos);
        CHECK(cmd_filtrate(model, fil, err) == kExitPass);
        CHECK(fil.str().find("opposite: yes") != std::string::npos);
        std::remove(model.c_str());
    }

    TEST_CASE("unknown scale target is an input error") {
        std::ostringstream out, err;
        GenOptions gen;
        gen.genus = 1;
        gen.scale = {{"nu_minus_C", Rational(2)}};
        CHECK(cmd_gen(gen, out, err) == kExitInputError);
    }
}
