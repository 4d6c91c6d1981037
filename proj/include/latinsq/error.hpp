#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latinsq {

enum class Errc {
    OrderTooLarge,
    SymbolOutOfRange,
    MaskOutOfRange,
    OrderMismatch,
    NotASubset,
    InvalidBound,
    ChoiceImpossible,
    RestartBudgetExhausted,
    MalformedMatrix,
    InvalidSquare,
    OrderTooLargeForEnumeration,
    ParseError,
};

/// Short stable name for an error code, e.g. "OrderTooLarge".
const char* to_string(Errc code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised by the generator when the row-restart cap is hit. Carries the
/// statistics of the abandoned run.
class RestartBudgetExhausted : public Error {
public:
    RestartBudgetExhausted(std::uint64_t seed, std::uint64_t restarts, int rows_completed);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t restarts() const noexcept { return restarts_; }
    int rows_completed() const noexcept { return rows_completed_; }

private:
    std::uint64_t seed_;
    std::uint64_t restarts_;
    int rows_completed_;
};

} // namespace latinsq
