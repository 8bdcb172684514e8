#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genusfield {

/// Base of every error raised by the library. Each subclass maps to one
/// CLI exit code (see tools/commands.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotSquareFree : public Error {
public:
    NotSquareFree(std::int64_t d, std::int64_t prime)
        : Error("d = " + std::to_string(d) + " is divisible by " + std::to_string(prime) + "^2"),
          prime_(prime) {}
    std::int64_t prime() const noexcept { return prime_; }

private:
    std::int64_t prime_;
};

/// |d| in {0, 1, 2} or d even: the field collapses or leaves the supported prime classes.
class Degenerate : public Error {
public:
    using Error::Error;
};

class UnsupportedPrime : public Error {
public:
    explicit UnsupportedPrime(std::int64_t p)
        : Error("prime " + std::to_string(p) + " is not congruent to 3, 5 (mod 8) or 9 (mod 16)"),
          prime_(p) {}
    std::int64_t prime() const noexcept { return prime_; }

private:
    std::int64_t prime_;
};

/// The (r, s, t) signature falls outside the fifteen covered cases.
class NotCovered : public Error {
public:
    using Error::Error;
};

/// A representation that must exist for a correctly classified input was not found.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace genusfield
