#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "projbch/errors.hpp"

namespace projbch {

using bigint = boost::multiprecision::cpp_int;

inline bigint bigpow(std::uint64_t base, std::uint64_t e) {
    bigint r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Weight enumerator of an [n, k] code over GF(q), counts kept exact.
struct WeightDistribution {
    std::uint64_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::map<std::uint32_t, bigint> counts; // weight -> frequency, frequencies > 0

    void add(std::uint32_t w, const bigint& c) {
        if (c == 0) return;
        counts[w] += c;
    }

    // Checks the basic shape: exactly one zero-weight word, no weight above n,
    // frequencies summing to q^k.
    void validate() const {
        bigint total = 0;
        for (const auto& [w, c] : counts) {
            if (w > n) throw InvalidParameter("weight exceeds length");
            if (c <= 0) throw InvalidParameter("nonpositive frequency");
            total += c;
        }
        auto it = counts.find(0);
        if (it == counts.end() || it->second != 1)
            throw InvalidParameter("distribution must contain the zero word once");
        if (total != bigpow(q, k))
            throw InvalidParameter("frequencies do not sum to q^k");
    }

    std::uint32_t w_min_nonzero() const {
        for (const auto& [w, c] : counts)
            if (w > 0) return w;
        throw InvalidParameter("no nonzero weights");
    }
    std::uint32_t w_max_nonzero() const {
        if (counts.empty()) throw InvalidParameter("no nonzero weights");
        auto it = counts.rbegin();
        if (it->first == 0) throw InvalidParameter("no nonzero weights");
        return it->first;
    }

    bool operator==(const WeightDistribution& o) const {
        return q == o.q && n == o.n && k == o.k && counts == o.counts;
    }

    std::string to_string() const {
        std::string s = "[n=" + std::to_string(n) + ",k=" + std::to_string(k) + "]";
        for (const auto& [w, c] : counts)
            s += " " + std::to_string(w) + ":" + c.str();
        return s;
    }
};

} // namespace projbch
