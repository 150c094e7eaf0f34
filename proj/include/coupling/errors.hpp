#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "coupling/rational.hpp"

namespace coupling {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SpaceMismatch : public Error {
public:
    SpaceMismatch() : Error("state spaces differ") {}
    explicit SpaceMismatch(const std::string& what) : Error("state spaces differ: " + what) {}
};

class UnknownState : public Error {
public:
    explicit UnknownState(std::string label)
        : Error("unknown state '" + label + "'"), label_(std::move(label)) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

/// An entry of a distribution (or of row `row` of a matrix) is below zero.
class NegativeEntry : public Error {
public:
    NegativeEntry(std::size_t index, Rat value, std::string where = {});
    std::size_t index() const { return index_; }
    const Rat& value() const { return value_; }

private:
    std::size_t index_;
    Rat value_;
};

/// Entries sum to something other than 1. deficit() is 1 - sum, so it is
/// negative when the entries overshoot.
class SumNotOne : public Error {
public:
    explicit SumNotOne(Rat deficit, std::string where = {});
    const Rat& deficit() const { return deficit_; }

private:
    Rat deficit_;
};

class EnumerationLimitExceeded : public Error {
public:
    EnumerationLimitExceeded(std::uint64_t required, std::uint64_t limit);
    std::uint64_t required() const { return required_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

class ZeroSamples : public Error {
public:
    ZeroSamples() : Error("sample count must be positive") {}
};

}  // namespace coupling
