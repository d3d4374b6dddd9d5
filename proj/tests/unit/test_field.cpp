#include "doctest.h"

#include "projbch/field.hpp"

using namespace projbch;

TEST_CASE("GF(81) basic structure") {
    auto fp = Field::make(3, 4);
    const Field& f = *fp;

    CHECK(f.characteristic() == 3);
    CHECK(f.degree() == 4);
    CHECK(f.order() == 81);
    CHECK(f.mul_group_order() == 80);
    CHECK(f.has_tables());

    const auto& mod = f.modulus();
    REQUIRE(mod.size() == 5);
    CHECK(mod.back() == 1);

    // 80 = 2^4 * 5; the generator is primitive iff no proper power hits 1.
    const elem_t g = f.generator();
    CHECK(f.pow(g, 80) == 1);
    CHECK(f.pow(g, 40) != 1);
    CHECK(f.pow(g, 16) != 1);

    for (elem_t x = 1; x < 81; ++x) {
        CHECK(f.mul(x, f.inv(x)) == 1);
        CHECK(f.pow_signed(x, -1) == f.inv(x));
    }
    CHECK(f.pow(0, 5) == 0);
    CHECK(f.pow(7, 0) == 1);
    CHECK_THROWS_AS((void)f.inv(0), DivisionByZero);
}

TEST_CASE("GF(27) ring axioms, exhaustive") {
    auto fp = Field::make(3, 3);
    const Field& f = *fp;
    for (elem_t x = 0; x < 27; ++x)
        for (elem_t y = 0; y < 27; ++y) {
            CHECK(f.add(x, y) == f.add(y, x));
            CHECK(f.mul(x, y) == f.mul(y, x));
            CHECK(f.add(x, f.neg(x)) == 0);
            for (elem_t z : {elem_t(0), elem_t(1), elem_t(5), elem_t(26)}) {
                CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                CHECK(f.mul(z, f.add(x, y)) == f.add(f.mul(z, x), f.mul(z, y)));
            }
        }
}

TEST_CASE("Frobenius is additive and fixes GF(3)") {
    auto fp = Field::make(3, 3);
    const Field& f = *fp;
    for (elem_t x = 0; x < 27; ++x) {
        for (elem_t y = 0; y < 27; ++y)
            CHECK(f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)));
        if (f.in_subfield(x, 3)) CHECK(f.frobenius(x) == x);
    }
}

TEST_CASE("traces: balance, linearity, transitivity through GF(9)") {
    auto fp = Field::make(3, 4);
    const Field& f = *fp;

    unsigned hits[3] = {0, 0, 0};
    for (elem_t x = 0; x < 81; ++x) {
        const elem_t t = f.trace_to_prime(x);
        REQUIRE(t < 3);
        ++hits[t];

        // Tr_{81->3} = Tr_{9->3} of Tr_{81->9}; the inner value lies in GF(9)
        // where Frobenius is cubing.
        const elem_t mid = f.trace_to(x, 9);
        CHECK(f.in_subfield(mid, 9));
        CHECK(f.add(mid, f.pow(mid, 3)) == t);
    }
    CHECK(hits[0] == 27);
    CHECK(hits[1] == 27);
    CHECK(hits[2] == 27);

    for (elem_t x = 0; x < 81; ++x)
        for (elem_t y : {elem_t(3), elem_t(17), elem_t(80)})
            CHECK(f.trace_to_prime(f.add(x, y)) ==
                  f.add(f.trace_to_prime(x), f.trace_to_prime(y)));

    const auto table = f.trace_to_prime_table();
    REQUIRE(table.size() == 81);
    for (elem_t x = 0; x < 81; ++x) CHECK(table[x] == f.trace_to_prime(x));
}

TEST_CASE("subfield membership of GF(9) inside GF(81)") {
    auto fp = Field::make(3, 4);
    const Field& f = *fp;

    CHECK(f.is_subfield_order(3));
    CHECK(f.is_subfield_order(9));
    CHECK(f.is_subfield_order(81));
    CHECK_FALSE(f.is_subfield_order(27));

    unsigned count = 0;
    for (elem_t x = 0; x < 81; ++x) {
        const bool fixed = f.pow(x, 9) == x;
        CHECK(f.in_subfield(x, 9) == fixed);
        if (fixed) ++count;
    }
    CHECK(count == 9);

    const auto sub = subfield_elements(f, 9);
    REQUIRE(sub.size() == 9);
    CHECK(sub[0] == 0);
    for (elem_t x : sub) CHECK(f.pow(x, 9) == x);
}

TEST_CASE("quadratic character on GF(25)") {
    auto fp = Field::make(5, 2);
    const Field& f = *fp;

    CHECK(f.quadratic_character(0) == 0);
    unsigned squares = 0;
    for (elem_t x = 1; x < 25; ++x) {
        const int c = f.quadratic_character(x);
        REQUIRE((c == 1 || c == -1));
        if (c == 1) ++squares;
        for (elem_t y = 1; y < 25; ++y)
            CHECK(f.quadratic_character(f.mul(x, y)) ==
                  c * f.quadratic_character(y));
    }
    CHECK(squares == 12);
}

TEST_CASE("Gauss sum closed form vs direct summation, p=3") {
    for (unsigned k : {1u, 2u, 3u, 4u}) {
        auto fp = Field::make(3, k);
        const Field& f = *fp;
        const GaussSum gs = f.gauss_sum();
        CHECK(gs.p == 3);
        CHECK(gs.s == k);
        const Eisenstein g = gs.to_eisenstein();
        for (elem_t a = 1; a < f.order(); ++a) {
            const Eisenstein direct = f.square_character_sum_exact(a);
            const int chi = f.quadratic_character(a);
            // sum_{x != 0} zeta^{Tr(a x^2)} = chi(a) * g - 1.
            const Eisenstein want = (chi == 1 ? g : -g) + Eisenstein{-1, 0};
            CHECK(direct == want);
        }
        CHECK(f.square_character_sum_exact(0) ==
              Eisenstein{std::int64_t(f.order()) - 1, 0});
    }
}

TEST_CASE("digit vector round trip") {
    auto fp = Field::make(3, 4);
    const Field& f = *fp;
    for (elem_t x = 0; x < 81; ++x) {
        const auto d = f.digits(x);
        REQUIRE(d.size() == 4);
        for (auto v : d) CHECK(v < 3);
        CHECK(f.from_digits(d) == x);
    }
}

TEST_CASE("log and exp_at agree") {
    auto fp = Field::make(3, 4);
    const Field& f = *fp;
    for (elem_t x = 1; x < 81; ++x) CHECK(f.exp_at(f.log(x)) == x);
    for (std::uint64_t i = 0; i < 80; ++i) CHECK(f.log(f.exp_at(i)) == i);
}

TEST_CASE("table-free arithmetic in GF(2^25)") {
    auto fp = Field::make(2, 25);
    const Field& f = *fp;
    CHECK_FALSE(f.has_tables());
    CHECK(f.order() == (std::uint64_t(1) << 25));

    const elem_t g = f.generator();
    CHECK(f.mul(g, f.inv(g)) == 1);
    elem_t p = f.pow(g, 12345);
    CHECK(f.mul(p, f.pow(g, 55)) == f.pow(g, 12400));
    for (elem_t x : {elem_t(1), g, p, f.add(g, 1)})
        CHECK(f.frobenius(f.add(x, g)) == f.add(f.frobenius(x), f.frobenius(g)));
    CHECK(f.trace_to_prime(0) == 0);
}

TEST_CASE("Field::make rejects composite characteristic") {
    CHECK_THROWS_AS((void)Field::make(6, 2), InvalidParameter);
    CHECK_THROWS_AS((void)Field::make(1, 3), InvalidParameter);
}

TEST_CASE("GF(q) embeddings") {
    SUBCASE("GF(3) in GF(81)") {
        auto fp = Field::make(3, 4);
        SubfieldEmbedding emb(fp, 3);
        CHECK(emb.q() == 3);
        CHECK(emb.element(0) == 0);
        CHECK(emb.element(1) == 1);
        for (unsigned a = 0; a < 3; ++a) {
            CHECK(emb.symbol(emb.element(a)) == a);
            for (unsigned b = 0; b < 3; ++b) {
                CHECK(emb.element(emb.add(a, b)) ==
                      fp->add(emb.element(a), emb.element(b)));
                CHECK(emb.element(emb.mul(a, b)) ==
                      fp->mul(emb.element(a), emb.element(b)));
            }
        }
        unsigned members = 0;
        for (elem_t x = 0; x < 81; ++x)
            if (emb.contains(x)) ++members;
        CHECK(members == 3);
    }

    SUBCASE("GF(4) in GF(2^6)") {
        auto fp = Field::make(2, 6);
        SubfieldEmbedding emb(fp, 4);
        for (unsigned a = 0; a < 4; ++a) {
            CHECK(emb.add(a, a) == 0); // characteristic 2
            if (a != 0) CHECK(emb.mul(a, emb.inv(a)) == 1);
        }
        const elem_t sg = emb.subfield_generator();
        CHECK(fp->pow(sg, 3) == 1);
        CHECK(sg != 1);
    }
}

TEST_CASE("FieldElement wrapper checks field identity") {
    auto f1 = Field::make(3, 2);
    CHECK(Field::make(3, 2).get() == f1.get()); // construction is memoized
    auto f2 = Field::make(3, 3);
    FieldElement a(*f1, 4), b(*f1, 7), c(*f2, 4);
    CHECK((a + b).v == f1->add(4, 7));
    CHECK_THROWS_AS((void)(a + c), FieldMismatch);
}
