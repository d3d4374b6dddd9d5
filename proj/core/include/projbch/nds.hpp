#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "projbch/cosets.hpp"

namespace projbch {
namespace nds {

// Fixed-width base-q expansion of an integer, most significant digit first.
struct QaryWord {
    unsigned q = 0;
    std::vector<std::uint8_t> digits;

    std::size_t size() const { return digits.size(); }
    bool operator==(const QaryWord&) const = default;
};

// Base-q digits of s, padded to width m.
QaryWord expand(std::uint64_t s, unsigned q, unsigned m);
// Integer value of a word (inverse of expand).
std::uint64_t word_value(const QaryWord& w);

// True when the digits never decrease in stored order, i.e. reading from the
// most significant digit down they form a nondecreasing sequence.
bool is_nds(const QaryWord& w);

// Partition of a word into maximal nondecreasing runs; every block boundary
// is a strict digit decrease, which makes the block count minimal.
struct Decomposition {
    unsigned q = 0;
    std::vector<QaryWord> blocks;

    std::size_t total_length() const;
    QaryWord concat() const;
};

Decomposition decompose(const QaryWord& w);

// Order on nondecreasing blocks: compare digit-wise from the most significant
// end; if one block is a prefix of the other, the longer block is greater.
std::strong_ordering compare_blocks(const QaryWord& a, const QaryWord& b);
// Order on words of equal total length, compared block by block. Coincides
// with integer order of the expanded values.
std::strong_ordering compare_words(const QaryWord& a, const QaryWord& b);

// Prefix of the k most significant digits. The input must be an NDS.
QaryWord truncate(const QaryWord& w, std::size_t k);

// Smallest NDS of the same length strictly greater than w. Throws
// InvalidParameter when w is the all-(q-1) word.
QaryWord successor(const QaryWord& w);

enum class LeaderClass { Leader, NotLeader, Inapplicable };

// Classification of s as a coset leader when its expansion has only 0/1
// digits (any other word is Inapplicable). Since multiplying by q cyclically
// rotates such words, s is a leader exactly when it is minimal among its
// digit rotations; the run-block conditions decide most cases directly.
LeaderClass classify_binary_leader(std::uint64_t s, const CosetContext& ctx);

struct LeaderBound {
    std::uint64_t value = 0;
    bool exact = false; // true: value is the smallest leader >= s
};

// Closed-form estimate of the smallest coset leader >= s. Applicable when the
// expansion splits as V1 V2 ... Vr with r >= 2, V1 > V2 and V1 made of 0/1
// digits: writing m = a*len(V1) + b, the word V1^a S(T_b(V1)) evaluates to a
// lower bound for that leader, exact when b = 0 or the successor block ends
// in digit 1. Values >= n only occur when no leader at or above s exists.
// Returns nullopt when the hypotheses fail.
std::optional<LeaderBound> leader_bound_closed_form(std::uint64_t s, unsigned q,
                                                    unsigned m);

enum class MPath { ClosedForm, ClosedFormVerified, Scan };

struct MResult {
    std::uint32_t value = 0; // smallest leader >= s, or n when none exists
    MPath path = MPath::Scan;
};

// Smallest coset leader >= s. Uses the closed form when its hypotheses hold
// (verifying against the leader table whenever the closed form only gives a
// lower bound) and falls back to a table scan otherwise.
MResult smallest_leader_geq(std::uint32_t s, const CosetContext& ctx);

} // namespace nds
} // namespace projbch
