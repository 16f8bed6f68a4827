#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bq/json_io.hpp"

namespace bq {

struct VerifyConfig {
    json data;  // the parsed config file
    std::optional<uint64_t> seed_override;

    // defaults are compiled in; the file (if readable) replaces them
    static VerifyConfig load(const std::string& path = "");
    static std::string default_path();
    uint64_t seed(const std::string& suite) const;
    int samples(const std::string& key, int fallback) const;
};

struct SuiteResult {
    std::string name;
    std::string status;  // "pass", "fail" or "skipped"
    json transcript = json::array();
    json to_json() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);  // throws UnknownSuite
// "all" or one suite name; suites run concurrently, results in suite_names() order
std::vector<SuiteResult> run_verify(const std::string& which, const VerifyConfig& cfg, unsigned workers = 0);

}  // namespace bq
