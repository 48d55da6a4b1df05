#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/harness.hpp"

namespace lefschetz::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kBudget = 3 };

/// Parses argv (program name first), runs one subcommand and writes its report
/// to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Campaign config: `key = value` lines with keys n, d, property, i, range
/// ("lo..hi"), symmetry, budget, entry_budget, seed, threads. '#' starts a comment.
SearchSpec parse_search_config(std::string_view text, SearchSpec base = {});

Property parse_property(const std::string& name);

}  // namespace lefschetz::cli
