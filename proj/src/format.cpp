#include "grouptest/format.hpp"

#include <charconv>
#include <ostream>

namespace grouptest {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

void write_config_echo(std::ostream& out,
                       const std::vector<std::pair<std::string, std::string>>& config) {
    for (const auto& [key, value] : config) out << "# " << key << '=' << value << '\n';
}

}  // namespace grouptest
