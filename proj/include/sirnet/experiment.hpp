#pragma once

#include <map>
#include <string>
#include <vector>

#include "sirnet/result_table.hpp"

namespace sirnet {

inline constexpr const char* kVersion = "0.1.0";

// A named command plus a flat key/value parameter map. The metadata block of
// every emitted table contains the fully resolved parameters, so a table can be
// reproduced from its own header.
struct ExperimentSpec {
    std::string command;
    std::map<std::string, std::string> params;
};

// Dispatches to the analytic/Monte Carlo layers. Throws std::invalid_argument
// on malformed parameters, std::domain_error on violated preconditions and
// truncation_error when a sampling budget cannot be met.
ResultTable run(const ExperimentSpec& spec);

// One gnuplot-ready data table per figure panel, keyed by file name (without
// directory); also returns the gnuplot script under the key "sirnet_figures.gp".
std::vector<std::pair<std::string, std::string>> figures(const ExperimentSpec& spec);

// Rebuild the spec recorded in a table's metadata block (inverse of run()).
ExperimentSpec spec_from_metadata(const std::vector<std::pair<std::string, std::string>>& metadata);

}  // namespace sirnet
