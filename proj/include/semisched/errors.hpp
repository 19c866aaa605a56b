#pragma once

#include <stdexcept>
#include <string>

namespace semisched {

/// Base class for every error raised by the library. The CLI maps
/// subclasses to stable exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Instance validation.
class NotNonIncreasing : public Error {
public:
    using Error::Error;
};
class NonPositiveSize : public Error {
public:
    using Error::Error;
};
class EmptySequence : public Error {
public:
    using Error::Error;
};
class MachineCountTooSmall : public Error {
public:
    using Error::Error;
};

// Schedule accounting.
class LengthMismatch : public Error {
public:
    using Error::Error;
};
class MachineIndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Policy engine.
class MachineCountMismatch : public Error {
public:
    using Error::Error;
};
/// SD's published description leaves some revealed-size configurations
/// without a branch; we refuse to guess.
class UnspecifiedBranch : public Error {
public:
    using Error::Error;
};

// Oracle.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};
class MismatchedInstance : public Error {
public:
    using Error::Error;
};

// Adversary families.
class KOutOfRange : public Error {
public:
    using Error::Error;
};

// I/O and CLI.
class ParseError : public Error {
public:
    using Error::Error;
};
class DeclaredSumMismatch : public Error {
public:
    using Error::Error;
};
class InvalidDomain : public Error {
public:
    using Error::Error;
};

// Exact arithmetic.
class RationalOverflow : public Error {
public:
    using Error::Error;
};
class ZeroDenominator : public Error {
public:
    using Error::Error;
};

} // namespace semisched
