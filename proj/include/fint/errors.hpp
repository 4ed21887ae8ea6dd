#pragma once

#include <stdexcept>
#include <string>

namespace fint {

// Bad user input: malformed job document, field mismatch, invalid exponent set.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Groebner pair/step budget exceeded; never a silent partial answer.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Oracle search space exceeds the configured ceiling.
struct ceiling_error : std::runtime_error {
    explicit ceiling_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fint
