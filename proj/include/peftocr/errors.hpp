#pragma once

#include <stdexcept>
#include <string>

namespace peftocr {

// Error taxonomy mapped onto CLI exit codes:
//   config_error / state_error  -> exit 2 (validation)
//   numerical_error             -> exit 3 (numerical failure)
// Usage errors are handled by the CLI parser itself (exit 1).

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class state_error : public std::runtime_error {
public:
    explicit state_error(const std::string& what) : std::runtime_error(what) {}
};

class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace peftocr
