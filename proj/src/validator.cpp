#include "latinsq/validator.hpp"

#include <bit>

namespace latinsq {

namespace {

SquareOrder square_order(const Matrix& m)
{
    if (m.empty()) {
        throw Error(Errc::MalformedMatrix, "matrix is empty");
    }
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r].size() != n) {
            throw Error(Errc::MalformedMatrix, "row " + std::to_string(r + 1) + " has " +
                                                   std::to_string(m[r].size()) +
                                                   " entries, expected " + std::to_string(n));
        }
    }
    if (n > static_cast<std::size_t>(SquareOrder::kMax)) {
        throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds 64");
    }
    return SquareOrder(static_cast<int>(n));
}

// Symbols are already known to be in [n].
std::optional<Violation> find_duplicate(const Matrix& m, Axis axis)
{
    const int n = static_cast<int>(m.size());
    for (int line = 0; line < n; ++line) {
        std::uint64_t seen = 0;
        for (int pos = 0; pos < n; ++pos) {
            const auto symbol = axis == Axis::Row ? m[line][pos] : m[pos][line];
            const std::uint64_t bit = std::uint64_t{1} << (symbol - 1);
            if (seen & bit) {
                return Violation{ViolationKind::Duplicate, axis, line + 1, pos + 1, symbol};
            }
            seen |= bit;
        }
    }
    return std::nullopt;
}

} // namespace

std::string Violation::describe() const
{
    const std::string where = std::string(axis == Axis::Row ? "row " : "column ") +
                              std::to_string(line);
    const std::string cell = axis == Axis::Row
                                 ? "row " + std::to_string(line) + " column " +
                                       std::to_string(position)
                                 : "row " + std::to_string(position) + " column " +
                                       std::to_string(line);
    switch (kind) {
    case ViolationKind::Duplicate:
        return where + " duplicates " + std::to_string(value);
    case ViolationKind::OutOfRange:
        return cell + ": symbol " + std::to_string(value) + " is out of range";
    case ViolationKind::NotPowerOfTwo:
        return cell + ": " + std::to_string(value) + " is not an allowed power of two";
    }
    return where;
}

Verdict is_latin(const Matrix& m)
{
    const SquareOrder order = square_order(m);
    const auto n = static_cast<std::uint64_t>(order.value());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (m[r][c] < 1 || m[r][c] > n) {
                return {Violation{ViolationKind::OutOfRange, Axis::Row, static_cast<int>(r) + 1,
                                  static_cast<int>(c) + 1, m[r][c]}};
            }
        }
    }
    if (auto v = find_duplicate(m, Axis::Row)) {
        return {v};
    }
    return {find_duplicate(m, Axis::Column)};
}

Verdict is_exponential_latin(const Matrix& m)
{
    const SquareOrder order = square_order(m);
    const std::uint64_t full = universe(order).bits();
    Matrix symbols(m.size(), std::vector<std::uint64_t>(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            const std::uint64_t cell = m[r][c];
            // A singleton of [n]: exactly one bit set, and inside the universe.
            if (std::popcount(cell) != 1 || (cell & ~full) != 0) {
                return {Violation{ViolationKind::NotPowerOfTwo, Axis::Row,
                                  static_cast<int>(r) + 1, static_cast<int>(c) + 1, cell}};
            }
            symbols[r][c] = static_cast<std::uint64_t>(std::countr_zero(cell)) + 1;
        }
    }
    Verdict verdict = is_latin(symbols);
    if (verdict.violation) {
        verdict.violation->value = std::uint64_t{1} << (verdict.violation->value - 1);
    }
    return verdict;
}

} // namespace latinsq
