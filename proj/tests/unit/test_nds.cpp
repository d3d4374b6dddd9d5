#include "doctest.h"

#include "projbch/nds.hpp"

using namespace projbch;

namespace {

nds::QaryWord word(unsigned q, std::vector<std::uint8_t> d) {
    nds::QaryWord w;
    w.q = q;
    w.digits = std::move(d);
    return w;
}

} // namespace

TEST_CASE("expansion round trip") {
    CHECK(nds::expand(112, 3, 6).digits == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 1});
    CHECK(nds::expand(110, 3, 6).digits == std::vector<std::uint8_t>{0, 1, 1, 0, 0, 2});
    CHECK(nds::expand(0, 5, 4).digits == std::vector<std::uint8_t>{0, 0, 0, 0});
    for (std::uint64_t s = 0; s < 81; ++s)
        CHECK(nds::word_value(nds::expand(s, 3, 4)) == s);
    for (std::uint64_t s : {std::uint64_t(0), std::uint64_t(393), std::uint64_t(16806)})
        CHECK(nds::word_value(nds::expand(s, 7, 5)) == s);
}

TEST_CASE("nondecreasing test") {
    CHECK(nds::is_nds(word(3, {0, 0, 1, 1, 2, 2})));
    CHECK(nds::is_nds(word(3, {1})));
    CHECK(nds::is_nds(word(3, {2, 2, 2})));
    CHECK_FALSE(nds::is_nds(word(3, {0, 1, 1, 0, 1, 1})));
    CHECK_FALSE(nds::is_nds(word(3, {1, 0})));
}

TEST_CASE("block decomposition") {
    const auto dec = nds::decompose(nds::expand(110, 3, 6));
    REQUIRE(dec.blocks.size() == 2);
    CHECK(dec.blocks[0].digits == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(dec.blocks[1].digits == std::vector<std::uint8_t>{0, 0, 2});

    // Generic shape checks across a whole length-6 space.
    for (std::uint64_t s = 0; s < 729; ++s) {
        const auto w = nds::expand(s, 3, 6);
        const auto d = nds::decompose(w);
        CHECK(d.total_length() == 6);
        CHECK(d.concat() == w);
        for (const auto& b : d.blocks) CHECK(nds::is_nds(b));
        // A block boundary is a strict decrease.
        for (std::size_t i = 1; i < d.blocks.size(); ++i)
            CHECK(d.blocks[i - 1].digits.back() > d.blocks[i].digits.front());
    }
}

TEST_CASE("word comparison matches integer order") {
    for (std::uint64_t s = 0; s < 81; ++s)
        for (std::uint64_t t = 0; t < 81; ++t) {
            const auto c = nds::compare_words(nds::expand(s, 3, 4), nds::expand(t, 3, 4));
            CHECK((c == std::strong_ordering::less) == (s < t));
            CHECK((c == std::strong_ordering::equal) == (s == t));
        }
}

TEST_CASE("block comparison prefers the longer prefix-equal block") {
    CHECK(nds::compare_blocks(word(3, {0, 1}), word(3, {0, 1, 1})) ==
          std::strong_ordering::less);
    CHECK(nds::compare_blocks(word(3, {0, 1, 1}), word(3, {0, 1})) ==
          std::strong_ordering::greater);
    CHECK(nds::compare_blocks(word(3, {0, 2}), word(3, {0, 1, 2})) ==
          std::strong_ordering::greater);
    CHECK(nds::compare_blocks(word(3, {1, 2}), word(3, {1, 2})) ==
          std::strong_ordering::equal);
}

TEST_CASE("truncate keeps the leading digits") {
    CHECK(nds::truncate(word(3, {0, 0, 1, 2}), 2).digits ==
          std::vector<std::uint8_t>{0, 0});
    CHECK(nds::truncate(word(3, {0, 1, 2}), 3).digits ==
          std::vector<std::uint8_t>{0, 1, 2});
}

TEST_CASE("successor enumerates NDS words in order") {
    // Walk every length-5 ternary word; each NDS word's successor must be the
    // next NDS word the integer scan finds.
    std::vector<std::uint64_t> nds_values;
    for (std::uint64_t s = 0; s < 243; ++s)
        if (nds::is_nds(nds::expand(s, 3, 5))) nds_values.push_back(s);

    for (std::size_t i = 0; i + 1 < nds_values.size(); ++i) {
        const auto w = nds::expand(nds_values[i], 3, 5);
        CHECK(nds::word_value(nds::successor(w)) == nds_values[i + 1]);
    }
    CHECK_THROWS_AS((void)nds::successor(word(3, {2, 2, 2, 2, 2})), InvalidParameter);
}

TEST_CASE("binary-digit leader classification agrees with the table") {
    auto ctx = CosetContext::build(3, 6);
    for (std::uint32_t s = 0; s < ctx->n(); ++s) {
        const auto w = nds::expand(s, 3, 6);
        bool binary = true;
        for (auto d : w.digits) binary = binary && d <= 1;
        const auto cls = nds::classify_binary_leader(s, *ctx);
        if (!binary) {
            CHECK(cls == nds::LeaderClass::Inapplicable);
        } else {
            REQUIRE(cls != nds::LeaderClass::Inapplicable);
            CHECK((cls == nds::LeaderClass::Leader) == ctx->is_leader(s));
        }
    }
}

TEST_CASE("closed-form leader bound brackets the table scan") {
    for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{3, 6}, {3, 5}, {5, 4}}) {
        auto ctx = CosetContext::build(q, m);
        for (std::uint32_t s = 1; s < ctx->n(); ++s) {
            const auto bound = nds::leader_bound_closed_form(s, unsigned(q), m);
            if (!bound) continue;
            const std::uint32_t scan = ctx->first_leader_geq(s);
            CHECK(bound->value >= s);
            if (bound->exact) {
                // Once the table runs out the constructed word may pass n.
                if (scan == ctx->n())
                    CHECK(bound->value >= ctx->n());
                else
                    CHECK(bound->value == scan);
            } else if (scan != ctx->n()) {
                CHECK(bound->value <= scan);
            }
        }
    }
}

TEST_CASE("smallest leader at or above s") {
    SUBCASE("worked values") {
        auto c36 = CosetContext::build(3, 6);
        const auto r = nds::smallest_leader_geq(110, *c36);
        CHECK(r.value == 112);
        CHECK(r.path != nds::MPath::Scan);

        auto c35 = CosetContext::build(3, 5);
        CHECK(nds::smallest_leader_geq(29, *c35).value == 31);

        auto c75 = CosetContext::build(7, 5);
        CHECK(nds::smallest_leader_geq(393, *c75).value == 394);
    }

    SUBCASE("agreement with the leader table") {
        for (auto [q, m] : {std::pair<std::uint64_t, unsigned>{3, 5}, {4, 4}}) {
            auto ctx = CosetContext::build(q, m);
            for (std::uint32_t s = 0; s < ctx->n(); ++s)
                CHECK(nds::smallest_leader_geq(s, *ctx).value ==
                      ctx->first_leader_geq(s));
        }
    }

    SUBCASE("past the largest leader the sentinel is n") {
        auto ctx = CosetContext::build(3, 5);
        CHECK(nds::smallest_leader_geq(77, *ctx).value == 121); // delta1 = 76
    }
}
