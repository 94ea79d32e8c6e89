#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace moyal {

inline constexpr const char* kVersion = "0.1.0";

enum class CheckStatus { pass, fail, skip };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skip";
    }
}

struct CheckRecord {
    std::string id;
    std::string model;
    std::string statement;
    CheckStatus status = CheckStatus::skip;
    std::string witness; // serialized offending value on failure
};

struct CheckReport {
    std::string name;
    std::vector<CheckRecord> records;

    explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

    void add(std::string id, std::string model, std::string statement, bool pass,
             std::string witness = {}) {
        records.push_back(CheckRecord{std::move(id), std::move(model),
                                      std::move(statement),
                                      pass ? CheckStatus::pass : CheckStatus::fail,
                                      std::move(witness)});
    }
    void skip(std::string id, std::string model, std::string statement) {
        records.push_back(CheckRecord{std::move(id), std::move(model),
                                      std::move(statement), CheckStatus::skip, {}});
    }
    void merge(const CheckReport& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }
    bool all_pass() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::fail) return false;
        return true;
    }
    size_t count(CheckStatus s) const {
        size_t n = 0;
        for (const auto& r : records)
            if (r.status == s) ++n;
        return n;
    }
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    std::vector<CheckRecord> records;

    size_t count(CheckStatus s) const {
        size_t n = 0;
        for (const auto& r : records)
            if (r.status == s) ++n;
        return n;
    }
    bool all_pass() const { return count(CheckStatus::fail) == 0; }
    int exit_code() const { return all_pass() ? 0 : 1; }
};

void write_text(std::ostream& os, const SuiteReport& rep);
std::string to_json_string(const SuiteReport& rep);

} // namespace moyal
