#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace deltazeta::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_validation = 2,
    exit_numerical = 3,
};

struct RunConfig {
    std::string model = "one-point";
    double alpha = 0.25;
    double alpha0 = 1.0;
    double alpha1 = 1.0;
    double a = 1.0;
    double beta = 1.0;
    double ell = 1.0;
    std::string format = "csv";
    std::string out;
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
    std::optional<int> max_subdivisions;
    int jobs = 1;
};

/// Runs one command line (without the program name). Tables go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltazeta::cli
