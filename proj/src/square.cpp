#include "latinsq/square.hpp"

#include <bit>
#include <cassert>

#include "latinsq/validator.hpp"

namespace latinsq {

namespace {

[[noreturn]] void throw_invalid(const Verdict& v)
{
    throw Error(Errc::InvalidSquare, v.violation->describe());
}

} // namespace

LatinSquare LatinSquare::from_matrix(const Matrix& m)
{
    const Verdict v = is_latin(m);
    if (!v) {
        throw_invalid(v);
    }
    std::vector<int> cells;
    cells.reserve(m.size() * m.size());
    for (const auto& row : m) {
        for (std::uint64_t symbol : row) {
            cells.push_back(static_cast<int>(symbol));
        }
    }
    return LatinSquare(SquareOrder(static_cast<int>(m.size())), std::move(cells));
}

LatinSquare LatinSquare::from_cells_unchecked(SquareOrder n, std::vector<int> cells)
{
    assert(cells.size() == static_cast<std::size_t>(n.value() * n.value()));
    return LatinSquare(n, std::move(cells));
}

Matrix LatinSquare::to_matrix() const
{
    Matrix m(static_cast<std::size_t>(size()));
    for (int r = 0; r < size(); ++r) {
        m[r].assign(row(r).begin(), row(r).end());
    }
    return m;
}

ExponentialLatinSquare ExponentialLatinSquare::from_matrix(const Matrix& m)
{
    const Verdict v = is_exponential_latin(m);
    if (!v) {
        throw_invalid(v);
    }
    std::vector<std::uint64_t> cells;
    cells.reserve(m.size() * m.size());
    for (const auto& row : m) {
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return ExponentialLatinSquare(SquareOrder(static_cast<int>(m.size())), std::move(cells));
}

ExponentialLatinSquare ExponentialLatinSquare::from_cells_unchecked(
    SquareOrder n, std::vector<std::uint64_t> cells)
{
    assert(cells.size() == static_cast<std::size_t>(n.value() * n.value()));
    return ExponentialLatinSquare(n, std::move(cells));
}

Matrix ExponentialLatinSquare::to_matrix() const
{
    Matrix m(static_cast<std::size_t>(size()));
    for (int r = 0; r < size(); ++r) {
        m[r].assign(row(r).begin(), row(r).end());
    }
    return m;
}

LatinSquare to_standard(const ExponentialLatinSquare& e)
{
    std::vector<int> cells;
    cells.reserve(e.cells().size());
    for (std::uint64_t cell : e.cells()) {
        cells.push_back(std::countr_zero(cell) + 1);
    }
    return LatinSquare::from_cells_unchecked(e.order(), std::move(cells));
}

ExponentialLatinSquare to_exponential(const LatinSquare& s)
{
    std::vector<std::uint64_t> cells;
    cells.reserve(s.cells().size());
    for (int symbol : s.cells()) {
        cells.push_back(std::uint64_t{1} << (symbol - 1));
    }
    return ExponentialLatinSquare::from_cells_unchecked(s.order(), std::move(cells));
}

} // namespace latinsq
