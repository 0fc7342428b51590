#include "lefschetz/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lefschetz {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::untested: return "untested";
    }
    return "unknown";
}

nlohmann::json to_json(const CheckRecord& r) {
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["theorem_ref"] = r.theorem_ref;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.witness);
    j["details"] = r.details;
    return j;
}

nlohmann::json to_json(const Report& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : report) arr.push_back(to_json(r));
    return arr;
}

std::string render_table(const Report& report) {
    std::size_t width = 8;
    for (const auto& r : report) width = std::max(width, r.check_id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(8) << "status"
       << "  identity\n";
    for (const auto& r : report) {
        os << std::setw(static_cast<int>(width)) << r.check_id << "  " << std::setw(8) << to_string(r.status) << "  "
           << r.theorem_ref << "\n";
        if (r.status == Status::fail && !r.witness.empty()) os << std::string(width + 2, ' ') << "witness: " << r.witness << "\n";
    }
    os << count_status(report, Status::pass) << " passed, " << count_status(report, Status::fail) << " failed, "
       << count_status(report, Status::untested) << " untested\n";
    return os.str();
}

std::size_t count_status(const Report& report, Status s) {
    return static_cast<std::size_t>(std::count_if(report.begin(), report.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

}  // namespace lefschetz
