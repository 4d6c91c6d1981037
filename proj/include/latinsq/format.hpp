// format.hpp -- text serialization of squares.
//
//   grid  n lines of n space-separated symbols in [n]
//   exp   same layout, each cell written as 2^(symbol - 1)
//   json  {"order": n, "cells": [[...], ...]} with symbols in [n]
//
// Output is ASCII and newline terminated. Several squares are separated by a
// single blank line (grid, exp) or wrapped in a JSON array.

#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latinsq/square.hpp"

namespace latinsq::io {

enum class Format { Grid, Exp, Json };

std::optional<Format> parse_format(std::string_view name);
const char* to_string(Format f) noexcept;

void write(std::ostream& out, const LatinSquare& square, Format format);
void write(std::ostream& out, std::span<const LatinSquare> squares, Format format);

std::string to_text(std::span<const LatinSquare> squares, Format format);

/// Whether parse() would treat the text as JSON.
bool is_json(std::string_view text) noexcept;

/// Reads one or more matrices. JSON is detected by a leading '{' or '[';
/// anything else is whitespace-separated text where blank lines separate
/// matrices and lines starting with '#' are ignored. Entries must be
/// non-negative decimal integers that fit in 64 bits.
///
/// Shape is not checked here. Throws Error(ParseError) on malformed text or
/// when no matrix is present.
std::vector<Matrix> parse(std::string_view text);

} // namespace latinsq::io
