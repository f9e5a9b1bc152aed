#pragma once

#include <stdexcept>
#include <string>

namespace zsign {

/// Failure of a numerical procedure on valid input. The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The zero count of a scan disagrees with the phase-based count after all refinements.
class AuditFailure : public DomainError {
public:
    AuditFailure(const std::string& what, double lo, double hi)
        : DomainError(what), lo_(lo), hi_(hi) {}
    double suspect_lo() const noexcept { return lo_; }
    double suspect_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

class PrecisionExhausted : public DomainError {
public:
    using DomainError::DomainError;
};

/// Consecutive zeros carry the same derivative sign: a multiple or missed zero.
class AlternationViolation : public DomainError {
public:
    AlternationViolation(const std::string& what, std::size_t index)
        : DomainError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class PoleProximity : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateLength : public DomainError {
public:
    using DomainError::DomainError;
};

/// Bad flags or config values. Exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public UsageError {
public:
    using UsageError::UsageError;
};

}  // namespace zsign
