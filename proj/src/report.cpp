#include "moyal/report.hpp"

#include <ostream>

#include "json.hpp"

namespace moyal {

void write_text(std::ostream& os, const SuiteReport& rep) {
    os << "suite: " << rep.suite << " (seed " << rep.seed << ", version "
       << rep.version << ")\n";
    for (const auto& r : rep.records) {
        os << "  [" << status_name(r.status) << "] " << r.id << "  " << r.statement;
        if (r.status == CheckStatus::fail && !r.witness.empty())
            os << "  << " << r.witness;
        os << "\n";
    }
    os << "summary: " << rep.count(CheckStatus::pass) << " pass, "
       << rep.count(CheckStatus::fail) << " fail, " << rep.count(CheckStatus::skip)
       << " skip\n";
}

std::string to_json_string(const SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["version"] = rep.version;
    j["checks"] = nlohmann::json::array();
    for (const auto& r : rep.records) {
        nlohmann::json c;
        c["id"] = r.id;
        c["model"] = r.model;
        c["statement"] = r.statement;
        c["status"] = status_name(r.status);
        if (!r.witness.empty()) c["witness"] = r.witness;
        j["checks"].push_back(c);
    }
    j["summary"] = {{"pass", rep.count(CheckStatus::pass)},
                    {"fail", rep.count(CheckStatus::fail)},
                    {"skip", rep.count(CheckStatus::skip)}};
    return j.dump(2) + "\n";
}

} // namespace moyal
