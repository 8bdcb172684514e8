#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "document.hpp"
#include "genusfield/represent.hpp"
#include "genusfield/verify.hpp"

namespace genusfield::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUnsupportedPrime = 2,
    kNotCovered = 3,
    kDegenerate = 4,  // also non-square-free input
    kVerificationFailed = 5,
};

enum class Format { Text, Json };

struct Settings {
    int m = 3;
    Format format = Format::Text;
    int jobs = 1;
    represent::SearchOptions search{};
    verify::CharacterOptions characters{};
};

/// Reads a JSON config file. Recognized keys: m, format, jobs, trial_division_limit,
/// exhaustive_limit, pell_bound_factor, max_characters. Unknown keys are rejected.
Settings load_config(const std::string& path, Settings base = {});

/// Result of running one command on one d.
struct Outcome {
    Json document;
    int exit_code = kOk;
    /// "ok", "NotCovered", "UnsupportedPrime", "NotSquareFree", "Degenerate", "InternalError".
    std::string status = "ok";
    std::optional<int> case_id;
    std::optional<bool> verified;
};

Outcome compute(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, bool with_verify,
                const Settings& s);
Outcome verify_command(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, const Settings& s);
Outcome classify_command(std::int64_t d, const std::optional<std::vector<std::int64_t>>& primes, const Settings& s);

struct BatchResult {
    std::vector<Outcome> documents;
    Json summary;
};

/// Scans d in [first, last]. Per-d failures are tallied, never thrown.
BatchResult batch(std::int64_t first, std::int64_t last, bool with_verify, bool only_supported, const Settings& s);

/// Full command line: `genusfield <compute|classify|verify|batch> ...`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genusfield::cli
