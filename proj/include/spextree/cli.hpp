#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "spextree/report.hpp"

namespace spextree {

// Exit codes: 0 success, 1 domain error (JSON error object on out), 2 usage.
auto run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) -> int;

using Config = std::map<std::string, std::string>;

// "key = value" lines, '#' comments. Throws ConfigError.
auto parse_config(std::string_view text) -> Config;
auto run_sweep(const Config& config) -> Json;
// Flattens the rows of a sweep report.
auto sweep_csv(const Json& report) -> std::string;

}  // namespace spextree
