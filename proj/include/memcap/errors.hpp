#pragma once

#include <stdexcept>
#include <string>

namespace memcap {

// Two objects that must share a dimension do not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed the configured pattern-space limit.
class EnumerationLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A text input violates its format; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

// A proximity graph leaves a neuron unreachable from the chosen seed.
class ConnectivityError : public std::runtime_error {
public:
    ConnectivityError(const std::string& message, int neuron)
        : std::runtime_error(message), neuron_(neuron) {}

    int neuron() const { return neuron_; }

private:
    int neuron_;
};

}  // namespace memcap
