#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "uma/batch.hpp"

namespace uma {

// A config problem, located at origin:line:column (1-based; 0 when unknown).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& origin, std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

struct LoadedConfig {
    RunConfig run;
    bool seed_generated = false;  // run.seed came from std::random_device
};

// YAML with sections env, signal, learner and run; unknown keys are errors.
LoadedConfig parse_config(const std::string& text, const std::string& origin = "<config>");
LoadedConfig load_config(const std::string& path);

}  // namespace uma
