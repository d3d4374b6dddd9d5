#include "projbch/nds.hpp"

#include <algorithm>

namespace projbch {
namespace nds {

QaryWord expand(std::uint64_t s, unsigned q, unsigned m) {
    if (q < 2) throw InvalidParameter("q must be >= 2");
    if (m == 0) throw InvalidParameter("width must be >= 1");
    QaryWord w;
    w.q = q;
    w.digits.assign(m, 0);
    std::uint64_t t = s;
    for (unsigned i = m; i-- > 0;) {
        w.digits[i] = std::uint8_t(t % q);
        t /= q;
    }
    if (t) throw InvalidParameter("value does not fit in the given width");
    return w;
}

std::uint64_t word_value(const QaryWord& w) {
    std::uint64_t v = 0;
    for (std::uint8_t d : w.digits) v = v * w.q + d;
    return v;
}

bool is_nds(const QaryWord& w) {
    for (std::size_t i = 1; i < w.digits.size(); ++i)
        if (w.digits[i] < w.digits[i - 1]) return false;
    return true;
}

std::size_t Decomposition::total_length() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
}

QaryWord Decomposition::concat() const {
    QaryWord w;
    w.q = q;
    for (const auto& b : blocks)
        w.digits.insert(w.digits.end(), b.digits.begin(), b.digits.end());
    return w;
}

Decomposition decompose(const QaryWord& w) {
    if (w.digits.empty()) throw InvalidParameter("empty word");
    Decomposition d;
    d.q = w.q;
    QaryWord cur;
    cur.q = w.q;
    for (std::size_t i = 0; i < w.digits.size(); ++i) {
        if (!cur.digits.empty() && w.digits[i] < cur.digits.back()) {
            d.blocks.push_back(std::move(cur));
            cur = QaryWord{w.q, {}};
        }
        cur.digits.push_back(w.digits[i]);
    }
    d.blocks.push_back(std::move(cur));
    return d;
}

std::strong_ordering compare_blocks(const QaryWord& a, const QaryWord& b) {
    if (a.q != b.q) throw InvalidParameter("blocks over different radices");
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.digits[i] != b.digits[i])
            return a.digits[i] <=> b.digits[i];
    }
    return a.size() <=> b.size();
}

std::strong_ordering compare_words(const QaryWord& a, const QaryWord& b) {
    if (a.q != b.q) throw InvalidParameter("words over different radices");
    if (a.size() != b.size()) throw InvalidParameter("words of different lengths");
    const Decomposition da = decompose(a), db = decompose(b);
    const std::size_t r = std::min(da.blocks.size(), db.blocks.size());
    for (std::size_t i = 0; i < r; ++i) {
        auto c = compare_blocks(da.blocks[i], db.blocks[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    // Equal leading blocks with equal total length force equal block counts.
    return da.blocks.size() <=> db.blocks.size();
}

QaryWord truncate(const QaryWord& w, std::size_t k) {
    if (!is_nds(w)) throw InvalidParameter("truncate requires an NDS");
    if (k > w.size()) throw InvalidParameter("truncation width exceeds word length");
    QaryWord out;
    out.q = w.q;
    out.digits.assign(w.digits.begin(), w.digits.begin() + k);
    return out;
}

QaryWord successor(const QaryWord& w) {
    if (!is_nds(w)) throw InvalidParameter("successor requires an NDS");
    if (w.digits.empty()) throw InvalidParameter("empty word");
    QaryWord out = w;
    // Find the rightmost digit below q-1; everything after it is q-1.
    std::size_t i = out.size();
    while (i > 0 && out.digits[i - 1] == w.q - 1) --i;
    if (i == 0) throw InvalidParameter("no successor: word is all q-1 digits");
    const std::uint8_t d = std::uint8_t(out.digits[i - 1] + 1);
    for (std::size_t j = i - 1; j < out.size(); ++j) out.digits[j] = d;
    return out;
}

namespace {

// Smallest digit rotation of a word, as an integer.
std::uint64_t min_rotation_value(const QaryWord& w) {
    const std::size_t m = w.size();
    std::uint64_t best = word_value(w);
    QaryWord rot = w;
    for (std::size_t r = 1; r < m; ++r) {
        std::rotate(rot.digits.begin(), rot.digits.begin() + 1, rot.digits.end());
        best = std::min(best, word_value(rot));
    }
    return best;
}

} // namespace

LeaderClass classify_binary_leader(std::uint64_t s, const CosetContext& ctx) {
    if (s >= ctx.n()) throw InvalidParameter("s out of range");
    const QaryWord w = expand(s, unsigned(ctx.q()), ctx.m());
    for (std::uint8_t d : w.digits)
        if (d > 1) return LeaderClass::Inapplicable;

    const Decomposition dec = decompose(w);
    const std::size_t r = dec.blocks.size();
    if (r == 1) return LeaderClass::Leader;

    // Leading run of blocks equal to V1.
    std::size_t j = 1;
    while (j < r && compare_blocks(dec.blocks[j], dec.blocks[0]) == std::strong_ordering::equal)
        ++j;
    if (j == r) return LeaderClass::Leader;
    bool all_greater = true;
    for (std::size_t t = j; t < r; ++t) {
        if (compare_blocks(dec.blocks[t], dec.blocks[0]) != std::strong_ordering::greater) {
            all_greater = false;
            break;
        }
    }
    if (all_greater) return LeaderClass::Leader;

    // The block conditions are only sufficient; settle the rest by taking the
    // minimum over digit rotations, which enumerate the whole coset here.
    return min_rotation_value(w) == s ? LeaderClass::Leader : LeaderClass::NotLeader;
}

std::optional<LeaderBound> leader_bound_closed_form(std::uint64_t s, unsigned q,
                                                    unsigned m) {
    if (m < 2) throw InvalidParameter("m must be >= 2");
    const QaryWord w = expand(s, q, m);
    const Decomposition dec = decompose(w);
    if (dec.blocks.size() < 2) return std::nullopt;
    const QaryWord& v1 = dec.blocks[0];
    for (std::uint8_t d : v1.digits)
        if (d > 1) return std::nullopt;
    if (compare_blocks(v1, dec.blocks[1]) != std::strong_ordering::greater)
        return std::nullopt;

    const std::size_t l = v1.size();
    const std::size_t a = m / l, b = m % l;
    QaryWord out;
    out.q = q;
    out.digits.reserve(m);
    for (std::size_t i = 0; i < a; ++i)
        out.digits.insert(out.digits.end(), v1.digits.begin(), v1.digits.end());
    bool exact = true;
    if (b) {
        const QaryWord tail = successor(truncate(v1, b));
        exact = tail.digits.back() == 1;
        out.digits.insert(out.digits.end(), tail.digits.begin(), tail.digits.end());
    }
    return LeaderBound{word_value(out), exact};
}

MResult smallest_leader_geq(std::uint32_t s, const CosetContext& ctx) {
    const std::uint32_t scan = ctx.first_leader_geq(s); // n() when none
    const auto cf = leader_bound_closed_form(s, unsigned(ctx.q()), ctx.m());
    if (!cf) return {scan, MPath::Scan};
    if (cf->exact) {
        // The closed form names a leader >= s; a disagreement with the table
        // would be an internal error. n() means every leader lies below s.
        if (scan != ctx.n() && cf->value != scan)
            throw ConstructionFailure("closed-form leader disagrees with table");
        if (scan == ctx.n() && cf->value < ctx.n())
            throw ConstructionFailure("closed-form leader disagrees with table");
        return {scan, MPath::ClosedForm};
    }
    if (scan != ctx.n() && std::uint64_t(scan) < cf->value)
        throw ConstructionFailure("leader table below closed-form lower bound");
    return {scan, MPath::ClosedFormVerified};
}

} // namespace nds
} // namespace projbch
