#pragma once

#include <stdexcept>

namespace eqhom {

// Malformed textual input: group, character, flag, expression or config specs.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition
// (mismatched groups, character missing from a truncated flag, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace eqhom
