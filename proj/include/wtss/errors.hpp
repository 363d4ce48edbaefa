#pragma once

#include <stdexcept>
#include <string>

namespace wtss {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NegativeCycleError : std::runtime_error {
    explicit NegativeCycleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnreachableError : std::runtime_error {
    explicit UnreachableError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotACutError : std::runtime_error {
    explicit NotACutError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IntegralityError : std::runtime_error {
    explicit IntegralityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct WitnessBudgetError : std::runtime_error {
    explicit WitnessBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wtss
