#pragma once

#include <string>
#include <vector>

namespace sf::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Outcome {
    int code = 0; // 0 ok, 1 verification failure, 2 usage error
    std::string out;
    std::string err;
};

// args[0] is the program name. Never writes to the process streams.
Outcome run(const std::vector<std::string>& args);

} // namespace sf::cli
