#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aw/relcheck.hpp"
#include "aw/uqrep.hpp"

namespace aw {

inline constexpr int kReportFormatVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitGatingFailure = 1, kExitInvalidConfig = 2, kExitIoError = 3 };

const std::vector<std::string> &suite_names();

struct RunConfig {
    RepParams params;
    std::vector<std::string> suites{"all"};
    std::optional<std::string> report_path;
    std::optional<std::string> dot_path;

    // Throws InvalidConfig.
    void validate() const;
    // Concrete suite list in canonical order; "all" expands to every suite
    // applicable at this leg count.
    std::vector<std::string> resolved_suites() const;
    std::vector<std::string> skipped_suites() const;
};

RepParams default_params();
std::vector<int> parse_k_list(const std::string &text);

struct SuiteResult {
    std::string name;
    std::vector<RelationReport> checks;
    double millis = 0;
};

std::vector<SuiteResult> run_suites(const RunConfig &cfg);
bool gating_pass(const std::vector<SuiteResult> &results);

nlohmann::ordered_json report_to_json(const RelationReport &r);
nlohmann::ordered_json build_report(const RunConfig &cfg, const std::vector<SuiteResult> &results);

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_spectrum(const RunConfig &cfg, const std::string &label, int weight, std::ostream &out, std::ostream &err);
int cmd_compass(const RunConfig &cfg, const std::string &out_path, std::ostream &out, std::ostream &err);
int cmd_tables(std::ostream &out);

// Full command-line entry point (subcommands verify, spectrum, compass, tables).
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace aw
