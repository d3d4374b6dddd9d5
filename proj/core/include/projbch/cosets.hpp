#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "projbch/errors.hpp"

namespace projbch {

struct CyclotomicCoset {
    std::uint32_t leader = 0;
    std::vector<std::uint32_t> elements; // sorted ascending
    std::uint32_t size() const { return std::uint32_t(elements.size()); }
};

// q-cyclotomic cosets modulo n = (q^m - 1)/(q - 1): orbits of s -> s*q mod n.
// Flat per-element leader and size tables, built in one O(n) orbit sweep.
class CosetContext {
public:
    static std::shared_ptr<const CosetContext> build(std::uint64_t q, unsigned m);

    std::uint64_t q() const { return q_; }
    unsigned m() const { return m_; }
    std::uint32_t n() const { return n_; }

    std::uint32_t leader_of(std::uint32_t s) const {
        check(s);
        return leader_[s];
    }
    std::uint32_t coset_size(std::uint32_t s) const {
        check(s);
        return size_[s];
    }
    bool is_leader(std::uint32_t s) const {
        check(s);
        return leader_[s] == s;
    }
    CyclotomicCoset coset_of(std::uint32_t s) const;

    // All coset leaders, ascending.
    const std::vector<std::uint32_t>& leaders() const { return leaders_; }
    // The `count` largest leaders, descending.
    std::vector<std::uint32_t> largest_leaders(std::size_t count) const;
    // Smallest leader >= s, or n() when every leader is below s.
    std::uint32_t first_leader_geq(std::uint32_t s) const;

private:
    CosetContext() = default;
    void check(std::uint32_t s) const {
        if (s >= n_) throw InvalidParameter("coset index out of range");
    }

    std::uint64_t q_ = 0;
    unsigned m_ = 0;
    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> leader_;
    std::vector<std::uint8_t> size_;
    std::vector<std::uint32_t> leaders_;
};

// Closed forms for the largest coset leaders when q = 3:
// the i-th largest leader is 3^{m-1} - 1 - (3^{floor((m-3)/2) + i} - 1)/2.
// i = 1, 2 are valid for m >= 2; larger i requires 1 <= i <= ceil(m/4).
std::uint64_t delta_closed_form(unsigned m, unsigned i);
// Coset size of the first and second largest leaders, q = 3, i in {1, 2}.
unsigned delta_coset_size_closed_form(unsigned m, unsigned i);

// Coset size for small s: equals m whenever 1 <= s <= n*q^{ceil(m/2)}/(q^m-1).
// Throws InvalidParameter outside that guaranteed range.
unsigned coset_size_small_s(std::uint64_t q, unsigned m, std::uint64_t s);

// Largest s covered by the coset_size_small_s guarantee.
std::uint64_t small_s_guarantee_bound(std::uint64_t q, unsigned m);

bool is_prime_power(std::uint64_t q, unsigned* p_out = nullptr, unsigned* s_out = nullptr);

} // namespace projbch
