#include "lefschetz/driver.hpp"
#include "lefschetz/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            std::size_t end = item.find(',', start);
            if (end == std::string::npos) end = item.size();
            if (end > start) out.push_back(item.substr(start, end - start));
            start = end + 1;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks of Heisenberg, sl2 and filtration structures on Hilbert schemes of curves"};
    app.require_subcommand(1);

    lefschetz::GenOptions gen;
    std::vector<std::string> scales;
    auto* gen_cmd = app.add_subcommand("gen", "Write the smooth-curve model of a given genus");
    gen_cmd->add_option("--genus", gen.genus, "Genus g >= 1")->required();
    gen_cmd->add_option("--n-max", gen.n_max, "Largest number of points (default 2g+2)");
    gen_cmd->add_option("--out", gen.out, "Output model file (default: standard output)");
    gen_cmd->add_option("--scale", scales, "Scale an operator, NAME:FACTOR (e.g. mu_minus_C:2)");

    std::string model_path, report_path;
    std::vector<std::string> checks;
    int jobs = 1;
    auto add_run_flags = [&](CLI::App* c) {
        c->add_option("model", model_path, "Model file")->required();
        c->add_option("--checks", checks, "Comma-separated check-id prefixes")->delimiter(',');
        c->add_option("--jobs", jobs, "Number of worker threads")->check(CLI::PositiveNumber);
    };
    auto* verify_cmd = app.add_subcommand("verify", "Run all checks on a model file");
    add_run_flags(verify_cmd);
    auto* report_cmd = app.add_subcommand("report", "Run all checks and write a JSON report");
    add_run_flags(report_cmd);
    report_cmd->add_option("--out", report_path, "Report file (default: standard output)");
    auto* decompose_cmd = app.add_subcommand("decompose", "Print lowest weights, phi spectra and the D-grading");
    decompose_cmd->add_option("model", model_path, "Model file")->required();
    auto* filtrate_cmd = app.add_subcommand("filtrate", "Print the weight and D filtrations and their intersections");
    filtrate_cmd->add_option("model", model_path, "Model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : lefschetz::kExitInputError;
    }

    lefschetz::RunOptions run{split_commas(checks), jobs};
    if (*gen_cmd) {
        for (const auto& s : scales) {
            const auto colon = s.find(':');
            if (colon == std::string::npos) {
                std::cerr << "error: --scale expects NAME:FACTOR, got " << s << "\n";
                return lefschetz::kExitInputError;
            }
            try {
                gen.scale.emplace_back(s.substr(0, colon), lefschetz::parse_rational(s.substr(colon + 1)));
            } catch (const lefschetz::ParseError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return lefschetz::kExitInputError;
            }
        }
        return lefschetz::cmd_gen(gen, std::cout, std::cerr);
    }
    if (*verify_cmd) return lefschetz::cmd_verify(model_path, run, std::cout, std::cerr);
    if (*report_cmd) return lefschetz::cmd_report(model_path, report_path, run, std::cout, std::cerr);
    if (*decompose_cmd) return lefschetz::cmd_decompose(model_path, std::cout, std::cerr);
    return lefschetz::cmd_filtrate(model_path, std::cout, std::cerr);
}
