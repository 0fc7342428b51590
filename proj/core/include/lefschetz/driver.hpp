#pragma once

#include "lefschetz/heisenberg.hpp"
#include "lefschetz/report.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitInputError = 2, kExitInternalError = 3 };

struct RunOptions {
    std::vector<std::string> checks;  // check-id prefixes; empty runs everything
    int jobs = 1;
};

// All check groups on one module, in a fixed order independent of `jobs`.
// Groups: heisenberg, structure, mumu, sl2, filtration, and (genus >= 1)
// the Picard-bundle / projective-bundle checks on the smooth model of the
// same genus (grr., bundle.).
Report run_checks(const HeisenbergModule& m, const RunOptions& opts);

bool matches_filter(const std::string& check_id, const std::vector<std::string>& filters);

struct GenOptions {
    int genus = 1;
    int n_max = -1;  // default 2g + 2
    std::string out;  // empty writes to `out` stream
    std::vector<std::pair<std::string, Rational>> scale;  // operator name -> factor
};

// Each command returns an ExitCode and never throws.
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_filtrate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_report(const std::string& path, const std::string& report_path, const RunOptions& opts, std::ostream& out,
               std::ostream& err);

// Scales one named operator of the module in place. Throws ArgumentError for
// unknown names.
void scale_operator(HeisenbergModule& m, const std::string& name, const Rational& factor);

}  // namespace lefschetz
