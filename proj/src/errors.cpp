#include "coupling/errors.hpp"

namespace coupling {

namespace {

std::string located(const std::string& message, const std::string& where) {
    return where.empty() ? message : where + ": " + message;
}

}  // namespace

NegativeEntry::NegativeEntry(std::size_t index, Rat value, std::string where)
    : Error(located("negative entry " + value.to_string() + " at index " + std::to_string(index), where)),
      index_(index),
      value_(std::move(value)) {}

SumNotOne::SumNotOne(Rat deficit, std::string where)
    : Error(located("entries do not sum to 1 (deficit " + deficit.to_string() + ")", where)),
      deficit_(std::move(deficit)) {}

EnumerationLimitExceeded::EnumerationLimitExceeded(std::uint64_t required, std::uint64_t limit)
    : Error("enumeration needs " + std::to_string(required) + " terms, limit is " + std::to_string(limit)),
      required_(required),
      limit_(limit) {}

}  // namespace coupling
