// square.hpp -- Latin squares in standard and exponential form.
//
// Standard form holds symbols 1..n. Exponential form holds the singleton
// masks 2^0..2^(n-1) of those symbols, which is what the generator produces.
// The two forms are related cellwise by symbol = log2(cell) + 1.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latinsq/mask_set.hpp"

namespace latinsq {

/// Unvalidated row-major input as read from a file. Rows may be ragged.
using Matrix = std::vector<std::vector<std::uint64_t>>;

/// n x n matrix in which each row and column is a permutation of [n].
class LatinSquare {
public:
    /// Validates with is_latin. Throws Error(MalformedMatrix) for non-square
    /// input and Error(InvalidSquare) with the violation detail otherwise.
    static LatinSquare from_matrix(const Matrix& m);

    /// Takes ownership of row-major symbols that are already known to form a
    /// Latin square. Checked only in debug builds.
    static LatinSquare from_cells_unchecked(SquareOrder n, std::vector<int> cells);

    SquareOrder order() const noexcept { return order_; }
    int size() const noexcept { return order_.value(); }

    int at(int row, int col) const noexcept
    {
        return cells_[static_cast<std::size_t>(row * size() + col)];
    }

    std::span<const int> row(int r) const noexcept
    {
        return std::span<const int>(cells_).subspan(static_cast<std::size_t>(r * size()),
                                                    static_cast<std::size_t>(size()));
    }

    std::span<const int> cells() const noexcept { return cells_; }

    Matrix to_matrix() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
    friend auto operator<=>(const LatinSquare& a, const LatinSquare& b)
    {
        return a.cells_ <=> b.cells_;
    }

private:
    LatinSquare(SquareOrder n, std::vector<int> cells) : order_(n), cells_(std::move(cells)) {}

    SquareOrder order_;
    std::vector<int> cells_;
};

/// n x n matrix of powers of two whose cellwise log2 + 1 is a Latin square.
class ExponentialLatinSquare {
public:
    /// Validates with is_exponential_latin; throws like LatinSquare::from_matrix.
    static ExponentialLatinSquare from_matrix(const Matrix& m);

    static ExponentialLatinSquare from_cells_unchecked(SquareOrder n,
                                                       std::vector<std::uint64_t> cells);

    SquareOrder order() const noexcept { return order_; }
    int size() const noexcept { return order_.value(); }

    std::uint64_t at(int row, int col) const noexcept
    {
        return cells_[static_cast<std::size_t>(row * size() + col)];
    }

    std::span<const std::uint64_t> row(int r) const noexcept
    {
        return std::span<const std::uint64_t>(cells_).subspan(
            static_cast<std::size_t>(r * size()), static_cast<std::size_t>(size()));
    }

    std::span<const std::uint64_t> cells() const noexcept { return cells_; }

    Matrix to_matrix() const;

    friend bool operator==(const ExponentialLatinSquare&, const ExponentialLatinSquare&) = default;

private:
    ExponentialLatinSquare(SquareOrder n, std::vector<std::uint64_t> cells)
        : order_(n), cells_(std::move(cells))
    {
    }

    SquareOrder order_;
    std::vector<std::uint64_t> cells_;
};

/// Cellwise log2 + 1: powers 2^0..2^(n-1) become symbols 1..n.
LatinSquare to_standard(const ExponentialLatinSquare& e);

/// Cellwise 2^(symbol - 1). Inverse of to_standard.
ExponentialLatinSquare to_exponential(const LatinSquare& s);

} // namespace latinsq
