#pragma once

#include <stdexcept>
#include <string>

namespace dmp {

/// Bad arguments, malformed files or configs. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The economics has no admissible answer. The CLI maps these to exit code 3.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class SchemaError : public InputError {
public:
    using InputError::InputError;
};

/// A malformed data row; `line` is 1-based and counts the header.
class ParseError : public InputError {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : InputError(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class JoinError : public InputError {
public:
    using InputError::InputError;
};

class IoError : public InputError {
public:
    using InputError::InputError;
};

class NormalizationRangeError : public DomainError {
public:
    using DomainError::DomainError;
};

class ExistenceError : public MathError {
public:
    using MathError::MathError;
};

class BracketError : public MathError {
public:
    using MathError::MathError;
};

class InfeasibleTargetError : public MathError {
public:
    using MathError::MathError;
};

/// Raised when a per-period probability leaves (0,1]. Carries the offending values.
class ProbabilityRangeError : public MathError {
public:
    ProbabilityRangeError(double fill, double find, const std::string& what)
        : MathError(what), fill_(fill), find_(find) {}
    double fill() const noexcept { return fill_; }
    double find() const noexcept { return find_; }

private:
    double fill_;
    double find_;
};

/// A solved state failed one of its accounting identities.
class InvariantError : public MathError {
public:
    using MathError::MathError;
};

}  // namespace dmp
