#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace janet {

/// Subcommand dispatch configuration.  Exit codes: 0 success, 1 mathematical
/// negative (incompatible system, failed check), 2 usage or parse error.
struct RunConfig {
    std::string subcommand;     // complete | mult-table | complement | hilbert |
                                // partition-check | pde-check | pde-canonicalize |
                                // pde-solve-monomial
    std::string input_path;     // optional for partition-check
    int bound = 8;              // degree bound for oracles and series
    std::string format = "text";  // text | records
    std::uint64_t seed = 0;
    int count = 500;            // random sets for partition-check campaigns
    std::string order_override;  // "", "deglex", a file path, or an inline order spec
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace janet
