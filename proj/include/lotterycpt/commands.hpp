#pragma once

#include <string_view>
#include <vector>

#include "lotterycpt/run_config.hpp"
#include "lotterycpt/table.hpp"

namespace lotterycpt {

/// Subcommand names in the order they are documented.
const std::vector<std::string_view>& command_names();

/// Builds the output table of `command`.
///
/// eval            mechanism,k,n,f,r,utility,eut_utility
/// sweep-n         mechanism,n,utility      (CPT rows, then "<name>:eut" rows)
/// optimal-k       k,avg_utility
/// sweep-f         f,n,utility
/// sweep-r         r,n,utility
/// profit          n,f,r,profit,viable
/// break-even      mechanism,k,r,f,n_star
///
/// Throws ConfigError for an unknown command. eval propagates GameTerminated
/// and optimal-k propagates UnsupportedMechanism; other commands turn
/// terminated games into empty cells.
Table run_command(std::string_view command, const RunConfig& config);

}  // namespace lotterycpt
