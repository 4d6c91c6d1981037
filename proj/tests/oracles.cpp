#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::uint64_t encode(const std::vector<int>& elements)
{
    const std::set<int> distinct(elements.begin(), elements.end());
    std::uint64_t total = 0;
    for (int i : distinct) {
        std::uint64_t power = 1;
        for (int k = 1; k < i; ++k) {
            power *= 2;
        }
        total += power;
    }
    return total;
}

std::set<int> decode(std::uint64_t bits)
{
    std::set<int> out;
    for (int i = 1; bits != 0; ++i, bits /= 2) {
        if (bits % 2 == 1) {
            out.insert(i);
        }
    }
    return out;
}

int popcount(std::uint64_t bits)
{
    int count = 0;
    for (int i = 0; i < 64; ++i) {
        if (bits & (std::uint64_t{1} << i)) {
            ++count;
        }
    }
    return count;
}

std::string binary(std::int64_t x)
{
    // |x| in unsigned arithmetic.
    std::uint64_t v = x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x)
                            : static_cast<std::uint64_t>(x);
    if (v == 0) {
        return "0";
    }
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + v % 2));
        v /= 2;
    }
    return std::string(digits.rbegin(), digits.rend());
}

bool is_latin(const Rows& rows)
{
    const int n = static_cast<int>(rows.size());
    std::set<int> expected;
    for (int i = 1; i <= n; ++i) {
        expected.insert(i);
    }
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n ||
            std::set<int>(row.begin(), row.end()) != expected) {
            return false;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::set<int> column;
        for (int r = 0; r < n; ++r) {
            column.insert(rows[r][c]);
        }
        if (column != expected) {
            return false;
        }
    }
    return true;
}

namespace {

template <class Visit>
void stack_rows(const std::vector<std::vector<int>>& perms, Rows& partial, int n, Visit& visit)
{
    if (static_cast<int>(partial.size()) == n) {
        visit(partial);
        return;
    }
    for (const auto& p : perms) {
        bool clash = false;
        for (const auto& above : partial) {
            for (int c = 0; c < n && !clash; ++c) {
                clash = above[c] == p[c];
            }
            if (clash) {
                break;
            }
        }
        if (!clash) {
            partial.push_back(p);
            stack_rows(perms, partial, n, visit);
            partial.pop_back();
        }
    }
}

std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::vector<Rows> all_latin_squares(int n)
{
    const auto perms = permutations(n);
    std::vector<Rows> out;
    Rows partial;
    auto visit = [&](const Rows& rows) { out.push_back(rows); };
    stack_rows(perms, partial, n, visit);
    return out;
}

std::uint64_t count_latin_squares(int n)
{
    const auto perms = permutations(n);
    std::uint64_t count = 0;
    Rows partial;
    auto visit = [&](const Rows&) { ++count; };
    stack_rows(perms, partial, n, visit);
    return count;
}

double chi_square_uniform(const std::vector<std::uint64_t>& observed)
{
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    const double expected = total / static_cast<double>(observed.size());
    double stat = 0.0;
    for (std::uint64_t o : observed) {
        const double d = static_cast<double>(o) - expected;
        stat += d * d / expected;
    }
    return stat;
}

double chi_square_critical_0001(int dof)
{
    switch (dof) {
    case 1: return 10.827566170662733;
    case 2: return 13.815510557964274;
    case 3: return 16.26623619623813;
    case 4: return 18.46682695290317;
    case 5: return 20.515005652432873;
    }
    throw std::out_of_range("no tabulated critical value");
}

const std::vector<std::vector<std::uint64_t>> kOrder12Exponential = {
    {32, 1, 16, 8, 512, 256, 2048, 128, 2, 1024, 4, 64},
    {4, 256, 512, 16, 8, 64, 1024, 2, 32, 1, 2048, 128},
    {8, 32, 1, 2, 64, 4, 16, 256, 128, 512, 1024, 2048},
    {16, 4, 8, 32, 2048, 1024, 512, 64, 256, 128, 2, 1},
    {256, 128, 32, 64, 4, 8, 1, 16, 2048, 2, 512, 1024},
    {512, 2048, 1024, 256, 1, 128, 2, 32, 64, 16, 8, 4},
    {1024, 16, 256, 128, 32, 2048, 8, 4, 512, 64, 1, 2},
    {2, 64, 128, 4, 1024, 16, 256, 8, 1, 2048, 32, 512},
    {1, 2, 4, 512, 16, 32, 128, 2048, 1024, 256, 64, 8},
    {64, 8, 2048, 1024, 2, 512, 32, 1, 16, 4, 128, 256},
    {2048, 1024, 64, 1, 128, 2, 4, 512, 8, 32, 256, 16},
    {128, 512, 2, 2048, 256, 1, 64, 1024, 4, 8, 16, 32},
};

} // namespace oracle
