#include "doctest.h"

#include "projbch/poly.hpp"

using namespace projbch;

namespace {

Polynomial make_poly(std::shared_ptr<const Field> f, std::vector<elem_t> c) {
    return Polynomial(std::move(f), std::move(c));
}

} // namespace

TEST_CASE("construction trims high zeros") {
    auto f = Field::make(3, 1);
    CHECK(make_poly(f, {}).degree() == -1);
    CHECK(make_poly(f, {0, 0, 0}).degree() == -1);
    CHECK(make_poly(f, {1, 2, 0}).degree() == 1);
    CHECK(make_poly(f, {0, 0, 2}).degree() == 2);
    CHECK(make_poly(f, {}).is_zero());
    CHECK_THROWS_AS(make_poly(f, {3}), InvalidParameter);
}

TEST_CASE("x_pow_plus and constant") {
    auto f = Field::make(3, 1);
    const auto p = Polynomial::x_pow_plus(f, 5, 2);
    CHECK(p.degree() == 5);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(5) == 1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.is_monic());
    CHECK(Polynomial::constant(f, 2).degree() == 0);
}

TEST_CASE("arithmetic over GF(3)") {
    auto f = Field::make(3, 1);
    const auto xp1 = make_poly(f, {1, 1});
    const auto xp2 = make_poly(f, {2, 1});

    // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2
    CHECK(xp1 * xp2 == make_poly(f, {2, 0, 1}));
    CHECK(xp1 + xp2 == make_poly(f, {0, 2}));
    CHECK(xp1 - xp1 == make_poly(f, {}));

    const auto p = make_poly(f, {1, 2, 0, 1}); // x^3 + 2x + 1
    CHECK(p.eval(0) == 1);
    CHECK(p.eval(1) == 1); // 1 + 2 + 1 = 4 = 1
    CHECK(p.eval(2) == 1); // 8 + 4 + 1 = 13 = 1
}

TEST_CASE("division with remainder reconstructs") {
    auto f = Field::make(3, 2);
    std::vector<Polynomial> pool;
    for (elem_t a = 0; a < 9; a += 2)
        for (elem_t b = 1; b < 9; b += 3)
            pool.push_back(make_poly(f, {a, b, 1}));
    pool.push_back(make_poly(f, {5, 1}));
    pool.push_back(make_poly(f, {7}));

    for (const auto& a : pool)
        for (const auto& b : pool) {
            const auto prod = a * b;
            for (const auto& r : {make_poly(f, {}), make_poly(f, {4})}) {
                if (!r.is_zero() && r.degree() >= b.degree()) continue;
                const auto [qt, rem] = (prod + r).divmod(b);
                CHECK(qt == a);
                CHECK(rem == r);
            }
        }
    CHECK_THROWS_AS((void)pool[0].divmod(make_poly(f, {})), DivisionByZero);
}

TEST_CASE("gcd and lcm are monic and correct") {
    auto f = Field::make(3, 1);
    const auto xm1 = make_poly(f, {2, 1}); // x - 1
    const auto xp1 = make_poly(f, {1, 1}); // x + 1
    const auto x = make_poly(f, {0, 1});

    CHECK(gcd(xm1 * xp1, xm1 * x) == xm1);
    CHECK(lcm(xm1, xp1) == xm1 * xp1);
    CHECK(lcm(xm1 * xp1, xm1 * x) == xm1 * xp1 * x);

    // gcd of coprime inputs is 1 regardless of scaling.
    const auto two = Polynomial::constant(f, 2);
    CHECK(gcd(two * xm1, xp1) == make_poly(f, {1}));
}

TEST_CASE("monic scales by the leading inverse") {
    auto f = Field::make(3, 1);
    const auto p = make_poly(f, {0, 1, 2}); // 2x^2 + x
    const auto m = p.monic();
    CHECK(m.is_monic());
    CHECK(m == make_poly(f, {0, 2, 1})); // x^2 + 2x
}

TEST_CASE("symbol round trip through an embedding") {
    auto f = Field::make(3, 3);
    SubfieldEmbedding emb(f, 3);
    const std::vector<std::uint8_t> syms{1, 0, 2, 2};
    const auto p = Polynomial::from_symbols(emb, syms);
    CHECK(p.degree() == 3);
    CHECK(p.coeffs_in_subfield(3));
    CHECK(p.to_symbols(emb) == syms);
}

TEST_CASE("cross-field operations throw") {
    auto f1 = Field::make(3, 1);
    auto f2 = Field::make(3, 2);
    const auto a = make_poly(f1, {1, 1});
    const auto b = make_poly(f2, {1, 1});
    CHECK_THROWS_AS((void)(a + b), FieldMismatch);
    CHECK_THROWS_AS((void)(a * b), FieldMismatch);
}
