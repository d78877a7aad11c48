#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 malformed flags, 2 domain error or failed hypothesis,
//   3 unwritable output path, 4 a certificate check failed.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cohsys/core.hpp"

namespace cohsys::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kUnwritable = 3,
    kCheckFailed = 4,
};

enum class CurveFilter { Hyperelliptic, NonHyperelliptic, Both };
enum class OutputFormat { Json, Csv };

struct ScanSpec {
    int g_min = 2;
    int g_max = 2;
    CurveFilter curves = CurveFilter::Both;
    std::int64_t n_min = 2;
    std::int64_t n_max = 2;
    /// Per-cell degree range is [max(1, d_min), min(2n, d_max)].
    std::int64_t d_min = 1;
    std::optional<std::int64_t> d_max;
    /// Per-cell section range is [1, k_max], defaulting to 2n + 2.
    std::optional<std::int64_t> k_max;
    OutputFormat format = OutputFormat::Csv;
    std::string output = "-";
    unsigned jobs = 0;

    /// Throws DomainError on empty or invalid ranges.
    void validate() const;
};

/// Classifies every cell in deterministic (g, hyp, n, d, k) order.
/// Genus 2 contributes hyperelliptic rows only.
std::vector<Verdict> run_scan(const ScanSpec& spec);

std::string render_scan(const std::vector<Verdict>& rows, OutputFormat format);

/// Runs the CLI with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohsys::cli
