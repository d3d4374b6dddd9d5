#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projbch {

struct RunLimits {
    unsigned threads = 1;
    std::uint64_t enum_cap = std::uint64_t(1) << 26;
    std::uint32_t weight_budget = 0; // 0 picks a budget from the Bose bound
};

struct Check {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
    double ms = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    bool overall = false; // true iff every check passed
    double total_ms = 0.0;

    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

// The numbered verification groups. Each group appends one row per
// elementary comparison it makes.
//  1  worked-example code parameters ([n,k,d] for twelve codes)
//  2  printed weight enumerators vs brute-force enumeration
//  3  closed-form tables vs brute-force enumeration
//  4  largest-leader closed forms and coset sizes
//  5  smallest-leader-geq examples and full scan agreement
//  6  power-moment identities
//  7  exponential-sum value distributions
//  8  Griesmer equality for the one-weight even-like family
//  9  dimension formula vs constructed dimension
// 10  designed-distance 2 and 3 minimum distances and witnesses
// 11  secret-sharing weight-ratio checks
constexpr int kCriterionCount = 11;

const char* criterion_title(int criterion);

// Suites: examples={1}, tables={3}, moments={6}, bounds={8,11},
// all={1..11}. Throws InvalidParameter for an unknown name.
std::vector<int> suite_criteria(std::string_view suite);

VerificationReport run_criteria(std::string_view label,
                                const std::vector<int>& criteria,
                                const RunLimits& limits = {});
VerificationReport run_suite(std::string_view suite,
                             const RunLimits& limits = {});

} // namespace projbch
