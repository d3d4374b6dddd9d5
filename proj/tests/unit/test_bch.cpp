#include "doctest.h"

#include <set>

#include "projbch/bch.hpp"

using namespace projbch;

namespace {

bool divisible_by_generator(const BchCode& code, const std::vector<std::uint8_t>& word) {
    const auto p = Polynomial::from_symbols(*code.gfq, word);
    if (p.is_zero()) return true;
    return p.divmod(code.generator).second.is_zero();
}

std::uint32_t weight_of(const std::vector<std::uint8_t>& w) {
    std::uint32_t c = 0;
    for (auto v : w) c += v != 0;
    return c;
}

} // namespace

TEST_CASE("the [13,7,4] code") {
    const auto code = build_code(3, 3, 4);
    CHECK(code.n == 13);
    CHECK(code.dimension == 7);
    CHECK(code.bose_distance == 4);
    CHECK(code.distance_lower_bound() == 4);

    CHECK(code.generator.is_monic());
    CHECK(code.generator.degree() == 6);
    CHECK(code.generator.coeffs_in_subfield(3));
    CHECK(code.generator_symbols.size() == 7);

    // g | x^n - 1
    auto xn1 = Polynomial::x_pow_plus(code.field, 13, code.field->neg(1));
    CHECK(xn1.divmod(code.generator).second.is_zero());

    // beta, beta^2, beta^3 are roots; beta^0 is not.
    const elem_t beta = code.beta;
    for (std::uint32_t e = 1; e < 4; ++e)
        CHECK(code.generator.eval(code.field->pow(beta, e)) == 0);
    CHECK(code.generator.eval(1) != 0);

    const auto d = min_distance_enumerate(code, std::uint64_t(1) << 30);
    CHECK(d.value == 4);
    CHECK(d.exact);
    CHECK(d.method == DistanceMethod::Enumeration);
    REQUIRE_FALSE(d.witness.empty());
    CHECK(weight_of(d.witness) == 4);
    CHECK(divisible_by_generator(code, d.witness));
}

TEST_CASE("zero cosets partition the leaders and give the dimension") {
    for (auto [q, m, delta, even] :
         {std::tuple<std::uint64_t, unsigned, std::uint32_t, bool>{3, 4, 5, false},
          {3, 4, 22, true},
          {4, 3, 4, false},
          {5, 3, 6, true}}) {
        const auto code = build_code(q, m, delta, even);
        // For even-like codes the {0} coset is part of zero_cosets already.
        std::uint32_t zeroed = 0;
        for (std::uint32_t l : code.zero_cosets) {
            CHECK(code.cosets->is_leader(l));
            zeroed += code.cosets->coset_size(l);
        }
        CHECK(code.dimension == code.n - zeroed);
        CHECK(std::int64_t(code.generator.degree()) == code.n - code.dimension);
        CHECK(code.zero_cosets.size() + code.nonzero_reps.size() ==
              code.cosets->leaders().size());
        if (even)
            CHECK(code.generator.eval(1) == 0);
        else
            CHECK(code.generator.eval(1) != 0);
    }
}

TEST_CASE("dimension formula inside and outside its range") {
    CHECK(dimension_formula(3, 4, 5) == 28);
    CHECK(dimension_formula(3, 4, 5) == build_code(3, 4, 5).dimension);
    CHECK(dimension_formula(3, 4, 5, true) == 27);
    for (std::uint32_t delta = 2; delta <= 4; ++delta)
        CHECK(dimension_formula(3, 3, delta) == build_code(3, 3, delta).dimension);

    // q^i + l stays valid only while q*(delta-1) < n; at m=3 the wrap merges
    // cosets and the formula overcounts, so these throw instead of lying.
    CHECK(dimension_formula(5, 3, 7) == 16);
    CHECK(dimension_formula(5, 3, 7) == build_code(5, 3, 7).dimension);
    CHECK_THROWS_AS((void)dimension_formula(4, 3, 7), InvalidParameter);
    CHECK_THROWS_AS((void)dimension_formula(5, 3, 8), InvalidParameter);

    CHECK_THROWS_AS((void)dimension_formula(3, 4, 1), InvalidParameter);
    CHECK_THROWS_AS((void)dimension_formula(6, 3, 2), InvalidParameter);
    CHECK_THROWS_AS((void)dimension_formula(3, 4, 35), InvalidParameter);
}

TEST_CASE("bose distance tracks the leader table") {
    const auto a = build_code(3, 4, 22);
    CHECK(a.bose_distance == 22);
    const auto b = build_code(3, 4, 23);
    CHECK(b.bose_distance == 25);
    CHECK(b.dimension == a.dimension - 4); // picks up C_22 = {22,26,34,38}

    const auto c = build_code(3, 4, 26); // no leader >= 26: everything zeroed
    CHECK(c.dimension == 1);
    CHECK(c.bose_distance == 40);
    const auto d = min_distance_enumerate(c, std::uint64_t(1) << 20);
    CHECK(d.value == 40);
}

TEST_CASE("codeword enumeration walks exactly q^k distinct words") {
    const auto code = build_code(3, 3, 5);
    REQUIRE(code.dimension == 4);
    std::set<std::vector<std::uint8_t>> seen;
    enumerate_codewords(code, std::uint64_t(1) << 20,
                        [&](const std::vector<std::uint8_t>& w, std::uint32_t wt) {
                            CHECK(wt == weight_of(w));
                            CHECK(divisible_by_generator(code, w));
                            seen.insert(w);
                            return true;
                        });
    CHECK(seen.size() == 81);
    CHECK_THROWS_AS(
        enumerate_codewords(code, 10,
                            [](const std::vector<std::uint8_t>&, std::uint32_t) {
                                return true;
                            }),
        CapExceeded);
}

TEST_CASE("generator enumeration and trace representation agree") {
    for (auto [q, m, delta, even] :
         {std::tuple<std::uint64_t, unsigned, std::uint32_t, bool>{3, 3, 4, false},
          {3, 4, 22, false},
          {3, 4, 22, true},
          {4, 3, 14, false}}) {
        const auto code = build_code(q, m, delta, even);
        const auto a = weight_distribution_bruteforce(code, std::uint64_t(1) << 32);
        const auto b = trace_weight_distribution(code, std::uint64_t(1) << 32);
        CHECK(a == b);
        a.validate();
    }
}

TEST_CASE("trace words are codewords") {
    const auto code = build_code(3, 4, 22);
    REQUIRE(code.nonzero_reps.size() >= 2);
    std::vector<elem_t> coeffs(code.nonzero_reps.size(), 0);
    CHECK(weight_of(trace_codeword(code, coeffs)) == 0);

    coeffs[0] = 1;
    // The second rep's coset can be shorter than m, in which case its
    // coefficient has to come from the matching subfield.
    const std::uint32_t mj = code.cosets->coset_size(code.nonzero_reps[1]);
    std::uint64_t sub = 1;
    for (std::uint32_t j = 0; j < mj; ++j) sub *= code.q;
    coeffs[1] = subfield_elements(*code.field, sub)[2];
    const auto w = trace_codeword(code, coeffs);
    CHECK(divisible_by_generator(code, w));
}

TEST_CASE("low-weight search against enumeration") {
    const auto code = build_code(3, 3, 4);
    const auto lw = min_distance_low_weight(code, 4);
    CHECK(lw.exact);
    CHECK(lw.value == 4);
    CHECK(weight_of(lw.witness) == 4);
    CHECK(divisible_by_generator(code, lw.witness));

    const auto below = min_distance_low_weight(code, 3);
    CHECK_FALSE(below.exact);
    CHECK(below.value == 4);

    const auto meta = min_distance(code, std::uint64_t(1) << 30);
    CHECK(meta.exact);
    CHECK(meta.value == 4);
}

TEST_CASE("distance of the [121,106,6] code via the split search") {
    const auto code = build_code(3, 5, 5);
    CHECK(code.dimension == 106);
    CHECK(code.bose_distance == 5);
    const auto d = min_distance(code, std::uint64_t(1) << 26);
    CHECK(d.exact);
    CHECK(d.value == 6);
    CHECK(d.method == DistanceMethod::LowWeightSearch);
    CHECK(divisible_by_generator(code, d.witness));
}

TEST_CASE("locator witnesses") {
    // gcd(40, 2) = 2, so a weight-2 word of the delta=2 code exists.
    const auto c2 = build_code(3, 4, 2);
    const auto w2 = locator_witness(c2, 2);
    REQUIRE(w2.has_value());
    CHECK(weight_of(*w2) == 2);
    CHECK(divisible_by_generator(c2, *w2));

    // 4 | 40 and 3 does not divide 4: evenly spaced ones give weight 4.
    const auto c3 = build_code(3, 4, 3);
    const auto w4 = locator_witness(c3, 4);
    REQUIRE(w4.has_value());
    CHECK(weight_of(*w4) == 4);
    CHECK(divisible_by_generator(c3, *w4));

    // No weight-2 word when gcd(n, q-1) = 1.
    const auto c13 = build_code(3, 3, 2);
    CHECK_FALSE(locator_witness(c13, 2).has_value());
}

TEST_CASE("minimal polynomial degree equals the coset size") {
    const auto code = build_code(3, 4, 2);
    for (std::uint32_t s : {0u, 1u, 2u, 5u, 22u, 25u}) {
        const auto mp = minimal_polynomial(*code.gfq, code.beta, *code.cosets, s);
        CHECK(mp.is_monic());
        CHECK(mp.degree() == code.cosets->coset_size(s));
        CHECK(mp.coeffs_in_subfield(3));
        CHECK(mp.eval(code.field->pow(code.beta, s)) == 0);
    }
}

TEST_CASE("constructor rejects bad parameters") {
    CHECK_THROWS_AS((void)build_code(6, 3, 2), InvalidParameter);
    CHECK_THROWS_AS((void)build_code(3, 3, 0), InvalidParameter);
    CHECK_THROWS_AS((void)build_code(3, 3, 1), InvalidParameter);
    CHECK_THROWS_AS((void)build_code(3, 3, 14), InvalidParameter);
}
