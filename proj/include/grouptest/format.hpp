#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace grouptest {

// Shortest decimal string that round-trips to the same double, for
// bit-stable CSV output.
std::string format_double(double value);

// '#'-prefixed key=value comment lines echoing the resolved configuration
// at the top of an output file.
void write_config_echo(std::ostream& out,
                       const std::vector<std::pair<std::string, std::string>>& config);

}  // namespace grouptest
