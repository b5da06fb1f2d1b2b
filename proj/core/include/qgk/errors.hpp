#pragma once

#include <stdexcept>
#include <string>

namespace qgk {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Invalid combination of options or parameters supplied by a caller.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series hit its term cap before the stopping rule was met.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (e.g. unsorted sequence).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qgk
