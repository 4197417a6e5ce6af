// errors.hpp - exception hierarchy and the debug-check switch.
#pragma once

#include <stdexcept>
#include <string>

namespace elim {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation on a zero divisor or zero where a unit is required.
struct division_by_zero : error {
    using error::error;
};

// Operands living in different coefficient fields, variable sets or quotient rings.
struct context_mismatch : error {
    using error::error;
};

// Input outside an operation's documented domain (constant where a non-constant is required, ...).
struct domain_error : error {
    using error::error;
};

struct not_zero_dimensional : error {
    using error::error;
};

// A post-condition check failed; this always indicates a bug.
struct invariant_violation : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// True when ELIM_DEBUG_CHECKS is set to a non-empty value other than "0".
// Enables expensive identity checks inside the algorithms.
bool debug_checks();
void set_debug_checks(bool on);

inline void check_invariant(bool ok, const char* what) {
    if (!ok) throw invariant_violation(what);
}

} // namespace elim
