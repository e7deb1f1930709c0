#pragma once

#include <string>
#include <vector>

namespace trislice {

/* Parsed command-line request. order and kmax must be nonnegative, f_max
 * nonnegative and even; family is general|simple, format csv|json. An empty
 * out path sends the table to stdout, anything else is written atomically. */
struct RunConfig {
    std::string command;  // series | closed-form | kernel | oracle | verify
    int order = 12;
    int kmax = 8;
    std::string family = "general";
    int f_max = 6;
    std::string format = "csv";
    std::string out;
};

/* Subcommand bodies. Each validates its config (std::invalid_argument on a
 * bad one), writes one table, and returns the process exit code: 0 on
 * success, 1 when a verification or comparison fails. */
int cmd_series(const RunConfig& cfg);
int cmd_closed_form(const RunConfig& cfg);
int cmd_kernel(const RunConfig& cfg);
int cmd_oracle(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

/* Full argv surface (program name excluded): parses flags, dispatches, and
 * maps errors to exit codes 0 / 1 / 2 as above, with 2 covering usage,
 * resource and I/O errors. */
int run_cli(const std::vector<std::string>& args);

}  // namespace trislice
