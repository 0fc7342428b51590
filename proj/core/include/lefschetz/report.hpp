#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace lefschetz {

enum class Status { pass, fail, untested };

std::string to_string(Status s);

struct CheckRecord {
    std::string check_id;
    std::string theorem_ref;  // the identity being checked, in words
    Status status = Status::pass;
    std::string witness;  // basis-label expression of a failing vector
    nlohmann::json details = nlohmann::json::object();
};

using Report = std::vector<CheckRecord>;

nlohmann::json to_json(const CheckRecord& r);
nlohmann::json to_json(const Report& report);
// Plain-text table: one line per check.
std::string render_table(const Report& report);

std::size_t count_status(const Report& report, Status s);
inline bool has_failures(const Report& report) { return count_status(report, Status::fail) > 0; }

}  // namespace lefschetz
