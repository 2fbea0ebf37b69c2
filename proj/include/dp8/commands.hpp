#pragma once

#include <string>

#include "dp8/report.hpp"

namespace dp8 {

/// Malformed or out-of-range command input (exit code 2).
class InputError : public DomainError {
public:
    using DomainError::DomainError;
};

struct CommandOptions {
    int k_max = 5;
    long long height = 100;
    std::string parity = "odd";
    std::string mode = "isomorphic";
    int k = 0;
    int orbits = 1;
    int jobs = 1;
};

struct CommandResult {
    Json output;
    int exit_code = 0;
};

enum ExitCode { kExitOk = 0, kExitInput = 2, kExitRefusal = 3, kExitAssertion = 4 };

/// Parsed surface or quadric descriptor.
struct Descriptor {
    Json echo;
    Json warnings = Json::array();
    std::optional<QuadraticForm> quadric;
    std::optional<DP8Surface> surface;
};

/// Accepts an integer, an integer string or a "p/q" string; |value| < 2^63.
Rational parse_number(const Json& j);
Descriptor parse_descriptor(const Json& j);
Conic parse_conic(const Json& j);

Json cmd_classify(const Json& input, const CommandOptions& opt);
Json cmd_compare(const Json& input, const CommandOptions& opt);
Json cmd_product(const Json& input, const CommandOptions& opt);
Json cmd_minimal_models(const Json& input, const CommandOptions& opt);
Json cmd_splitting_field(const Json& input, const CommandOptions& opt);
Json cmd_lattice_demo(const Json& input, const CommandOptions& opt);
Json cmd_oracle(const Json& input, const CommandOptions& opt);

/// Runs one subcommand and maps exceptions to exit codes with a JSON error
/// object. A JSON array input is a batch: each element runs independently
/// (opt.jobs threads) and the exit code is the largest one.
CommandResult run_command(const std::string& name, const Json& input, const CommandOptions& opt);

}  // namespace dp8
