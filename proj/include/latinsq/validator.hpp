// validator.hpp -- checks arbitrary matrices against the Latin square
// definitions, reporting the first violation found.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "latinsq/square.hpp"

namespace latinsq {

enum class ViolationKind {
    OutOfRange,     ///< symbol not in [n]
    Duplicate,      ///< symbol repeated within a row or column
    NotPowerOfTwo,  ///< exponential cell is not one of 2^0..2^(n-1)
};

enum class Axis { Row, Column };

struct Violation {
    ViolationKind kind;
    Axis axis;
    int line;            ///< 1-based row or column index, per `axis`
    int position;        ///< 1-based index of the offending cell within that line
    std::uint64_t value; ///< the offending cell as it appears in the input

    /// Human-readable form, e.g. "row 2 duplicates 2".
    std::string describe() const;
};

struct Verdict {
    std::optional<Violation> violation;

    bool valid() const noexcept { return !violation.has_value(); }
    explicit operator bool() const noexcept { return valid(); }
};

/// Rows are scanned first (top to bottom), then columns (left to right).
/// Throws Error(MalformedMatrix) for empty or non-square input and
/// Error(OrderTooLarge) above 64.
Verdict is_latin(const Matrix& m);

/// Every cell must be a power of two no larger than 2^(n-1), and the
/// log2 + 1 image must pass is_latin. Violations carry the original cell value.
Verdict is_exponential_latin(const Matrix& m);

} // namespace latinsq
