#include "latinsq/format.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace latinsq::io {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what)
{
    throw Error(Errc::ParseError, what);
}

void write_rows(std::ostream& out, const LatinSquare& square, bool exponential)
{
    for (int r = 0; r < square.size(); ++r) {
        const auto row = square.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) {
                out << ' ';
            }
            if (exponential) {
                out << (std::uint64_t{1} << (row[c] - 1));
            } else {
                out << row[c];
            }
        }
        out << '\n';
    }
}

ordered_json to_json(const LatinSquare& square)
{
    ordered_json cells = ordered_json::array();
    for (int r = 0; r < square.size(); ++r) {
        const auto row = square.row(r);
        cells.push_back(ordered_json(std::vector<int>(row.begin(), row.end())));
    }
    return ordered_json{{"order", square.size()}, {"cells", std::move(cells)}};
}

Matrix matrix_from_json(const ordered_json& j)
{
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) {
        parse_error("expected an object with a \"cells\" array");
    }
    Matrix m;
    for (const auto& row : j["cells"]) {
        if (!row.is_array()) {
            parse_error("each entry of \"cells\" must be an array");
        }
        auto& out = m.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_number_unsigned()) {
                parse_error("cells must be non-negative integers");
            }
            out.push_back(cell.get<std::uint64_t>());
        }
    }
    if (j.contains("order")) {
        if (!j["order"].is_number_unsigned() || j["order"].get<std::uint64_t>() != m.size()) {
            parse_error("\"order\" does not match the number of rows");
        }
    }
    return m;
}

std::vector<Matrix> parse_json(std::string_view text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(e.what());
    }
    std::vector<Matrix> out;
    if (doc.is_array()) {
        for (const auto& item : doc) {
            out.push_back(matrix_from_json(item));
        }
    } else {
        out.push_back(matrix_from_json(doc));
    }
    if (out.empty()) {
        parse_error("no square found");
    }
    return out;
}

std::vector<Matrix> parse_text(std::string_view text)
{
    std::vector<Matrix> out;
    Matrix current;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        if (line[first] == '#') {
            continue;
        }
        auto& row = current.emplace_back();
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size()) {
                parse_error("line " + std::to_string(line_no) + ": '" + token +
                            "' is not a non-negative integer");
            }
            row.push_back(value);
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    if (out.empty()) {
        parse_error("no square found");
    }
    return out;
}

} // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "grid") return Format::Grid;
    if (name == "exp") return Format::Exp;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

const char* to_string(Format f) noexcept
{
    switch (f) {
    case Format::Grid: return "grid";
    case Format::Exp: return "exp";
    case Format::Json: return "json";
    }
    return "grid";
}

void write(std::ostream& out, const LatinSquare& square, Format format)
{
    write(out, std::span<const LatinSquare>(&square, 1), format);
}

void write(std::ostream& out, std::span<const LatinSquare> squares, Format format)
{
    if (format == Format::Json) {
        if (squares.size() == 1) {
            out << to_json(squares.front()).dump() << '\n';
            return;
        }
        ordered_json all = ordered_json::array();
        for (const auto& s : squares) {
            all.push_back(to_json(s));
        }
        out << all.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (i != 0) {
            out << '\n';
        }
        write_rows(out, squares[i], format == Format::Exp);
    }
}

std::string to_text(std::span<const LatinSquare> squares, Format format)
{
    std::ostringstream out;
    write(out, squares, format);
    return out.str();
}

bool is_json(std::string_view text) noexcept
{
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && (text[first] == '{' || text[first] == '[');
}

std::vector<Matrix> parse(std::string_view text)
{
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        parse_error("input is empty");
    }
    return is_json(text) ? parse_json(text) : parse_text(text);
}

} // namespace latinsq::io
