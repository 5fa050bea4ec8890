#pragma once
// Error taxonomy shared by the whole library.  Callers can distinguish bad
// arguments, disconnected inputs, exhausted search budgets, and malformed
// input text without string-matching on messages.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propc {

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// operation requires a connected (sub)graph and the input is not
struct disconnected_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a search hit its configured resource cap before reaching an answer
struct budget_error : std::runtime_error {
    long long nodes_explored;
    budget_error(const std::string& what, long long nodes)
        : std::runtime_error(what), nodes_explored(nodes) {}
};

// malformed input text; byte_offset points at the offending position
struct parse_error : std::runtime_error {
    std::size_t byte_offset;
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), byte_offset(offset) {}
};

}  // namespace propc
