#pragma once

#include <stdexcept>
#include <string>

namespace pfflab {

// Argument outside the mathematical domain of an operation: pole proximity,
// strip violation, division by a ball containing zero, constraint violations.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested certified radius is unreachable within the configured term
// or level caps. Callers may retry with more digits / terms.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural misuse: bad lengths, missing data, invalid configuration.
class invalid_argument : public std::invalid_argument {
public:
    explicit invalid_argument(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace pfflab
