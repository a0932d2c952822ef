#pragma once

#include "qonsager/suite.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qons {

enum ExitCode
{
	exit_ok = 0,
	exit_usage = 1,
	exit_failure = 2,
	exit_capacity = 3
};

constexpr int report_schema_version = 1;

// items in report order; millis is written as 0 when timing is off
nlohmann::ordered_json report_to_json(SuiteReport const &rep, SuiteOptions const &opts,
                                      std::vector<std::string> const &suites, bool timing);

// structure constants B_g B_h for out-of-order pairs with height sum <= max_height
nlohmann::ordered_json structure_constants(int max_height);

// args excludes the program name
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace qons
