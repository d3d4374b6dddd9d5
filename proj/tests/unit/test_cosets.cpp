#include "doctest.h"

#include <numeric>

#include "projbch/cosets.hpp"

using namespace projbch;

TEST_CASE("coset partition at q=3, m=4") {
    auto ctx = CosetContext::build(3, 4);
    CHECK(ctx->q() == 3);
    CHECK(ctx->m() == 4);
    CHECK(ctx->n() == 40);

    std::uint64_t covered = 0;
    for (std::uint32_t s : ctx->leaders()) {
        CHECK(ctx->is_leader(s));
        covered += ctx->coset_size(s);
    }
    CHECK(covered == 40);

    for (std::uint32_t s = 0; s < 40; ++s) {
        const std::uint32_t l = ctx->leader_of(s);
        CHECK(l <= s);
        CHECK(ctx->leader_of(l) == l);
        CHECK(ctx->coset_size(s) == ctx->coset_size(l));
    }

    // Orbits close under multiplication by q.
    const auto coset = ctx->coset_of(5);
    CHECK(coset.leader == ctx->leader_of(5));
    for (std::uint32_t e : coset.elements) {
        const std::uint32_t next = std::uint32_t((std::uint64_t(e) * 3) % 40);
        bool found = false;
        for (std::uint32_t f : coset.elements) found = found || f == next;
        CHECK(found);
    }

    CHECK(ctx->largest_leaders(2) == std::vector<std::uint32_t>{25, 22});
    CHECK(ctx->first_leader_geq(0) == 0);
    CHECK(ctx->first_leader_geq(23) == 25);
    CHECK(ctx->first_leader_geq(25) == 25);
    CHECK(ctx->first_leader_geq(26) == 40); // past the largest leader
    CHECK_THROWS_AS((void)ctx->leader_of(40), InvalidParameter);
}

TEST_CASE("first_leader_geq is the scan answer everywhere") {
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{3, 5}, {4, 4}, {5, 3}, {7, 3}}) {
        auto ctx = CosetContext::build(q, m);
        const auto& leaders = ctx->leaders();
        for (std::uint32_t s = 0; s < ctx->n(); ++s) {
            std::uint32_t want = ctx->n();
            for (std::uint32_t l : leaders)
                if (l >= s) {
                    want = l;
                    break;
                }
            CHECK(ctx->first_leader_geq(s) == want);
        }
    }
}

TEST_CASE("largest-leader closed forms, q=3") {
    // Third-largest-or-deeper leaders need m >= 4i - 3ish; the two top ones
    // exist from m = 2 on.
    for (unsigned m = 2; m <= 8; ++m) {
        auto ctx = CosetContext::build(3, m);
        const auto top = ctx->largest_leaders(2);
        CHECK(delta_closed_form(m, 1) == top[0]);
        CHECK(delta_closed_form(m, 2) == top[1]);
        if (m >= 3) {
            const unsigned want1 = m % 2 == 1 ? m : m / 2;
            CHECK(delta_coset_size_closed_form(m, 1) == want1);
            CHECK(delta_coset_size_closed_form(m, 2) == m);
            CHECK(ctx->coset_size(std::uint32_t(top[0])) == want1);
            CHECK(ctx->coset_size(std::uint32_t(top[1])) == m);
        }
    }
    for (unsigned m = 4; m <= 8; ++m) {
        auto ctx = CosetContext::build(3, m);
        const unsigned imax = (m + 3) / 4;
        const auto top = ctx->largest_leaders(imax);
        for (unsigned i = 1; i <= imax; ++i)
            CHECK(delta_closed_form(m, i) == top[i - 1]);
    }
}

TEST_CASE("frozen large-leader values") {
    CHECK(delta_closed_form(4, 1) == 25);
    CHECK(delta_closed_form(4, 2) == 22);
    CHECK(delta_closed_form(5, 1) == 76);
    CHECK(delta_closed_form(5, 2) == 67);
    CHECK(delta_closed_form(6, 1) == 238);
    CHECK(delta_closed_form(6, 2) == 229);
}

TEST_CASE("small-s coset sizes") {
    CHECK(small_s_guarantee_bound(3, 4) == 4);
    CHECK(small_s_guarantee_bound(3, 5) == 13);
    CHECK(small_s_guarantee_bound(4, 3) == 5);
    CHECK(small_s_guarantee_bound(5, 3) == 6);

    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{3, 5}, {4, 4}, {5, 3}}) {
        auto ctx = CosetContext::build(q, m);
        const std::uint64_t bound = small_s_guarantee_bound(q, m);
        for (std::uint64_t s = 1; s <= bound; ++s) {
            CHECK(coset_size_small_s(q, m, s) == m);
            CHECK(ctx->coset_size(std::uint32_t(s)) == m);
        }
        CHECK_THROWS_AS((void)coset_size_small_s(q, m, bound + 1), InvalidParameter);
    }
}

TEST_CASE("prime power detection") {
    unsigned p = 0, s = 0;
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(9, &p, &s));
    CHECK(p == 3);
    CHECK(s == 2);
    CHECK(is_prime_power(121, &p, &s));
    CHECK(p == 11);
    CHECK(s == 2);
    CHECK(is_prime_power(128, &p, &s));
    CHECK(p == 2);
    CHECK(s == 7);
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(10));
    CHECK_FALSE(is_prime_power(100));
}

TEST_CASE("context rejects a composite q") {
    CHECK_THROWS_AS((void)CosetContext::build(6, 3), InvalidParameter);
}
