#pragma once

#include <stdexcept>
#include <string>

namespace ucycle {

struct NotEulerianError : std::runtime_error {
    explicit NotEulerianError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotConnectedError : std::runtime_error {
    explicit NotConnectedError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ucycle
