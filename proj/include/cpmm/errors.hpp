#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpmm {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Pool has no reserves / no liquidity outstanding.
class EmptyPoolError : public Error {
public:
    EmptyPoolError() : Error("pool is empty") {}
};

// Negative or otherwise out-of-domain amount passed to a pool operation.
class InvalidAmountError : public Error {
public:
    explicit InvalidAmountError(const std::string& msg) : Error(msg) {}
};

// Requested output would deplete (or exceed) the pool reserve.
class InsufficientLiquidityError : public Error {
public:
    explicit InsufficientLiquidityError(const std::string& msg) : Error(msg) {}
};

// Burn amount exceeds outstanding liquidity-token supply.
class ExceedsSupplyError : public Error {
public:
    explicit ExceedsSupplyError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical domain of a closed-form expression.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// End-point invariant k1 < k0 beyond tolerance; cannot occur under correct
// fee mechanics, so it flags corrupted inputs.
class InvariantShrunkError : public Error {
public:
    explicit InvariantShrunkError(const std::string& msg) : Error(msg) {}
};

// Frontier evaluated at or below its pole, where it is undefined.
class FrontierUndefinedError : public Error {
public:
    explicit FrontierUndefinedError(const std::string& msg) : Error(msg) {}
};

// Malformed event-log row. line() is 1-based and counts the header.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Event ordering violation: (block, index) not strictly increasing, or
// timestamps decreasing.
class OrderError : public Error {
public:
    OrderError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Event cannot be applied to the replayed pool state. index() is the
// 0-based position of the offending event.
class ReplayError : public Error {
public:
    ReplayError(std::size_t index, const std::string& msg)
        : Error("event " + std::to_string(index) + ": " + msg), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

}  // namespace cpmm
