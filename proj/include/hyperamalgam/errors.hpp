#pragma once

#include <stdexcept>
#include <string>

namespace hyperamalgam {

// Argument outside an operation's stated domain (bad interval, unsupported
// exponent combination, evaluation window too small, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative routine exhausted its budget before meeting its tolerance.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// An operation that requires a positive definite input received one that
// fails the positivity test.
class PositivityViolation : public std::runtime_error {
public:
    explicit PositivityViolation(const std::string& what) : std::runtime_error(what) {}
};

// Suite name not recognized by the harness.
class UnknownSuite : public std::invalid_argument {
public:
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

// Report emission / filesystem failure.
class IOError : public std::runtime_error {
public:
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hyperamalgam
