// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails. Usage: acceptance <path to latinsq executable>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "latinsq/enumerate.hpp"
#include "latinsq/generator.hpp"
#include "latinsq/validator.hpp"
#include "oracles.hpp"

using namespace latinsq;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string tool_path;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string ms(double seconds)
{
    std::ostringstream s;
    s.precision(3);
    s << std::fixed << seconds * 1e3 << " ms";
    return s.str();
}

// Criterion 1: the published order-12 square, exact, under 1 ms.
Outcome fixture()
{
    const auto start = Clock::now();
    const bool exp_ok = is_exponential_latin(oracle::kOrder12Exponential).valid();
    bool std_ok = false;
    if (exp_ok) {
        const auto e = ExponentialLatinSquare::from_matrix(oracle::kOrder12Exponential);
        std_ok = is_latin(to_standard(e).to_matrix()).valid();
    }
    const double t = seconds_since(start);
    return {exp_ok && std_ok && t < 1e-3,
            std::string("exponential ") + (exp_ok ? "ok" : "FAIL") + ", standard " +
                (std_ok ? "ok" : "FAIL") + ", " + ms(t) + " (limit 1 ms)"};
}

// Criterion 2: n in 1..12, 100 seeds each, both validators, under 10 s.
Outcome soundness()
{
    const auto start = Clock::now();
    int failures = 0;
    int total = 0;
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const GenerationReport r = generate(SquareOrder(n), seed);
            ++total;
            if (!is_exponential_latin(r.square.to_matrix()).valid() ||
                !is_latin(to_standard(r.square).to_matrix()).valid()) {
                ++failures;
            }
        }
    }
    const double t = seconds_since(start);
    return {failures == 0 && t < 10.0, std::to_string(total - failures) + "/" +
                                           std::to_string(total) + " valid, " + ms(t) +
                                           " (limit 10 s)"};
}

std::pair<int, std::string> run_tool(const std::string& args)
{
    const std::string command = "\"" + tool_path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, ""};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    return {pclose(pipe), out};
}

// Criterion 3: 20 (n, seed) pairs, two separate processes, byte-identical.
Outcome determinism()
{
    if (tool_path.empty()) {
        return {false, "no latinsq executable given"};
    }
    int identical = 0;
    for (int i = 0; i < 20; ++i) {
        const int n = i < 12 ? i + 1 : 12 + (i - 11) * 2; // 1..12, then 14..28
        const std::uint64_t seed = 1000003ULL * static_cast<std::uint64_t>(i + 1);
        const std::string args = "generate --order " + std::to_string(n) + " --seed " +
                                 std::to_string(seed) + " --format exp";
        const auto first = run_tool(args);
        const auto second = run_tool(args);
        if (first.first == 0 && second.first == 0 && !first.second.empty() &&
            first.second == second.second) {
            ++identical;
        }
    }
    return {identical == 20, std::to_string(identical) + "/20 pairs byte-identical"};
}

// Criterion 4: exact counts for n = 1..5, n = 5 under 60 s.
Outcome counts()
{
    const std::uint64_t expected[] = {1, 2, 12, 576, 161280};
    std::ostringstream detail;
    bool ok = true;
    double t5 = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const auto start = Clock::now();
        const std::uint64_t c = count_all(SquareOrder(n));
        if (n == 5) {
            t5 = seconds_since(start);
        }
        ok = ok && c == expected[n - 1];
        detail << (n > 1 ? ", " : "") << c;
    }
    detail << "; n=5 in " << ms(t5) << " (limit 60 s)";
    return {ok && t5 < 60.0, detail.str()};
}

// Criterion 5: 10^4 seeds at n = 3 reach exactly the 12 squares, under 5 s.
Outcome reachability()
{
    const auto start = Clock::now();
    std::set<LatinSquare> seen;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        seen.insert(to_standard(generate(SquareOrder(3), seed).square));
    }
    const auto all = enumerate_all(SquareOrder(3));
    const bool equal = seen == std::set<LatinSquare>(all.begin(), all.end());
    const double t = seconds_since(start);
    return {equal && t < 5.0, std::to_string(seen.size()) + " of " + std::to_string(all.size()) +
                                  " squares reached, " + ms(t) + " (limit 5 s)"};
}

// Criterion 6: chi-square goodness of fit for choice over mask 0b1111.
Outcome uniformity()
{
    const SquareOrder n(4);
    RandomSource src(20240611);
    std::map<std::uint64_t, std::uint64_t> freq;
    for (int i = 0; i < 100000; ++i) {
        ++freq[choice(0b1111, n, src).bits()];
    }
    std::vector<std::uint64_t> observed;
    for (auto [bit, count] : freq) {
        observed.push_back(count);
    }
    const double stat = oracle::chi_square_uniform(observed);
    const double critical = oracle::chi_square_critical_0001(3);
    std::ostringstream detail;
    detail << "chi2 = " << stat << " over " << observed.size()
           << " outcomes, critical(3 dof, 1e-3) = " << critical;
    return {observed.size() == 4 && stat < critical, detail.str()};
}

// Criterion 7: exhaustive codec round trip at n = 16, random homomorphisms at
// n <= 10, under 1 s.
Outcome codec()
{
    const auto start = Clock::now();
    bool ok = true;
    const SquareOrder n16(16);
    for (std::uint64_t bits = 0; bits <= universe_bits(16) && ok; ++bits) {
        const SubsetMask m = SubsetMask::from_bits(bits, n16);
        ok = encode(decode(m), n16) == m;
    }
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 10);
        const SquareOrder order(n);
        std::vector<int> a;
        std::vector<int> b;
        std::vector<int> part;
        for (int i = 1; i <= n; ++i) {
            if (gen() & 1) a.push_back(i);
            if (gen() & 1) b.push_back(i);
        }
        for (int x : a) {
            if (gen() & 1) part.push_back(x);
        }
        std::vector<int> both;
        std::vector<int> diff;
        std::vector<int> rest;
        std::vector<int> full(static_cast<std::size_t>(n));
        std::iota(full.begin(), full.end(), 1);
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        std::set_difference(a.begin(), a.end(), part.begin(), part.end(),
                            std::back_inserter(diff));
        std::set_difference(full.begin(), full.end(), a.begin(), a.end(),
                            std::back_inserter(rest));
        const SubsetMask ea = encode(a, order);
        ok = set_union(ea, encode(b, order)).bits() == oracle::encode(both) &&
             remove_subset(ea, encode(part, order)).bits() == oracle::encode(diff) &&
             complement_in_universe(ea).bits() == oracle::encode(rest);
    }
    const double t = seconds_since(start);
    return {ok && t < 1.0, std::string(ok ? "all exact" : "mismatch") + ", " + ms(t) +
                               " (limit 1 s)"};
}

// Criterion 8: no run at n <= 12 over 100 seeds needs more than 10^5 row
// restarts, and the default budget never runs out.
Outcome restarts()
{
    std::uint64_t worst = 0;
    int exhausted = 0;
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            try {
                worst = std::max(worst, generate(SquareOrder(n), seed).row_restarts);
            } catch (const RestartBudgetExhausted&) {
                ++exhausted;
            }
        }
    }
    return {exhausted == 0 && worst <= 100000,
            "max restarts " + std::to_string(worst) + " (limit 100000), budget exhausted " +
                std::to_string(exhausted) + " times"};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc > 1) {
        tool_path = argv[1];
    }
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 order-12 fixture validates", fixture},
        {"2 generation soundness n=1..12 x 100 seeds", soundness},
        {"3 CLI determinism over 20 (n, seed) pairs", determinism},
        {"4 oracle counts n=1..5", counts},
        {"5 reachability of all order-3 squares", reachability},
        {"6 choice uniformity (chi-square, 1e-3)", uniformity},
        {"7 codec round trip and homomorphisms", codec},
        {"8 row restarts within bounds", restarts},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
