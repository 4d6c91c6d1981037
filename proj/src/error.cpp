#include "latinsq/error.hpp"

namespace latinsq {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::SymbolOutOfRange: return "SymbolOutOfRange";
    case Errc::MaskOutOfRange: return "MaskOutOfRange";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotASubset: return "NotASubset";
    case Errc::InvalidBound: return "InvalidBound";
    case Errc::ChoiceImpossible: return "ChoiceImpossible";
    case Errc::RestartBudgetExhausted: return "RestartBudgetExhausted";
    case Errc::MalformedMatrix: return "MalformedMatrix";
    case Errc::InvalidSquare: return "InvalidSquare";
    case Errc::OrderTooLargeForEnumeration: return "OrderTooLargeForEnumeration";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

RestartBudgetExhausted::RestartBudgetExhausted(std::uint64_t seed, std::uint64_t restarts,
                                               int rows_completed)
    : Error(Errc::RestartBudgetExhausted,
            "gave up after " + std::to_string(restarts) + " row restarts with " +
                std::to_string(rows_completed) + " rows completed (seed " +
                std::to_string(seed) + ")"),
      seed_(seed), restarts_(restarts), rows_completed_(rows_completed)
{
}

} // namespace latinsq
