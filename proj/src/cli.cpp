#include "latinsq/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latinsq/bench.hpp"
#include "latinsq/enumerate.hpp"
#include "latinsq/format.hpp"
#include "latinsq/generator.hpp"
#include "latinsq/validator.hpp"

namespace latinsq::cli {

namespace {

struct Options {
    int order = 0;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 1;
    std::string format = "grid";
    std::string max_restarts;
    std::uint64_t iterations = 100;
    std::string file;
    std::string to;
    bool exp = false;
    bool allow_order_six = false;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::ParseError, "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RestartBudget parse_budget(const std::string& text)
{
    if (text.empty()) {
        return kDefaultMaxRowRestarts;
    }
    if (text == "unlimited") {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw CLI::ValidationError("--max-restarts", "expected a positive integer or 'unlimited'");
    }
    return value;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err)
{
    const SquareOrder n(o.order);
    const RestartBudget budget = parse_budget(o.max_restarts);
    const io::Format format = *io::parse_format(o.format);
    std::uint64_t seed = 0;
    if (o.seed) {
        seed = *o.seed;
    } else {
        seed = RandomSource::from_entropy().seed();
        err << "# seed: " << seed << '\n';
    }
    std::vector<LatinSquare> squares;
    squares.reserve(o.count);
    for (std::uint64_t i = 0; i < o.count; ++i) {
        RandomSource src(RandomSource::derive_seed(seed, i));
        squares.push_back(to_standard(generate(n, src, budget).square));
    }
    io::write(out, squares, format);
    return kOk;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const std::vector<Matrix> matrices = io::parse(read_input(o.file));
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const Verdict v = o.exp ? is_exponential_latin(matrices[i]) : is_latin(matrices[i]);
        if (!v) {
            out << "INVALID: ";
            if (matrices.size() > 1) {
                out << "square " << i + 1 << ": ";
            }
            out << v.violation->describe() << '\n';
            return kInvalidSquare;
        }
    }
    out << "VALID\n";
    return kOk;
}

int cmd_convert(const Options& o, std::ostream& out)
{
    const std::string text = read_input(o.file);
    const std::vector<Matrix> matrices = io::parse(text);
    // Text input is in the opposite form of the target; JSON always holds symbols.
    const bool source_exp = o.to == "grid" && !io::is_json(text);
    std::vector<LatinSquare> squares;
    for (const Matrix& m : matrices) {
        squares.push_back(source_exp ? to_standard(ExponentialLatinSquare::from_matrix(m))
                                     : LatinSquare::from_matrix(m));
    }
    io::write(out, squares, *io::parse_format(o.to));
    return kOk;
}

int cmd_count(const Options& o, std::ostream& out)
{
    CountOptions options;
    options.allow_order_six = o.allow_order_six;
    out << count_all(SquareOrder(o.order), options) << '\n';
    return kOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err)
{
    const SquareOrder n(o.order);
    std::uint64_t seed = 0;
    if (o.seed) {
        seed = *o.seed;
    } else {
        seed = RandomSource::from_entropy().seed();
        err << "# seed: " << seed << '\n';
    }
    print(out, run_bench(n, o.iterations, seed, parse_budget(o.max_restarts)));
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generate, validate, convert, count and benchmark Latin squares", "latinsq"};
    app.require_subcommand(1);
    Options o;

    const auto formats = CLI::IsMember({"grid", "exp", "json"});

    auto* gen = app.add_subcommand("generate", "Generate random Latin squares");
    gen->add_option("-n,--order", o.order, "Order of the square (1..64)")->required();
    gen->add_option("--seed", o.seed, "Unsigned 64-bit seed; drawn from entropy if omitted");
    gen->add_option("--count", o.count, "Number of squares (square i uses seed + i)")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    gen->add_option("--format", o.format, "grid, exp or json")->check(formats);
    gen->add_option("--max-restarts", o.max_restarts,
                    "Row restart cap per square, or 'unlimited' (default 1000000)");

    auto* val = app.add_subcommand("validate", "Check a square; exit 0 if valid, 1 if not");
    val->add_option("file", o.file, "Input file, or - for standard input")->required();
    val->add_flag("--exp", o.exp, "Input is in exponential form");

    auto* conv = app.add_subcommand("convert", "Convert between grid and exponential form");
    conv->add_option("file", o.file, "Input file, or - for standard input")->required();
    conv->add_option("--to", o.to, "Target form: exp or grid")
        ->required()
        ->check(CLI::IsMember({"exp", "grid"}));

    auto* cnt = app.add_subcommand("count", "Count all Latin squares of a small order");
    cnt->add_option("-n,--order", o.order, "Order (1..5)")->required();
    cnt->add_flag("--allow-order-6", o.allow_order_six, "Permit order 6 (slow)");

    auto* bench = app.add_subcommand("bench", "Compare mask-based and boolean-array generation");
    bench->add_option("-n,--order", o.order, "Order of the square (1..64)")->required();
    bench->add_option("--iterations", o.iterations, "Squares per implementation")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    bench->add_option("--seed", o.seed, "Base seed; drawn from entropy if omitted");
    bench->add_option("--max-restarts", o.max_restarts,
                      "Row restart cap per square, or 'unlimited' (default 1000000)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out, err);
        if (val->parsed()) return cmd_validate(o, out);
        if (conv->parsed()) return cmd_convert(o, out);
        if (cnt->parsed()) return cmd_count(o, out);
        if (bench->parsed()) return cmd_bench(o, out, err);
    } catch (const RestartBudgetExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExhausted;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::InvalidSquare ? kInvalidSquare : kUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace latinsq::cli
