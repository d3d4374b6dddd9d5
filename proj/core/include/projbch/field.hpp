#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "projbch/eisenstein.hpp"
#include "projbch/errors.hpp"

namespace projbch {

// Packed element of GF(p^k): the base-p digit string of the polynomial-basis
// coefficient vector, low coefficient in the low digit. The zero element is 0
// and the one element is 1 in every field.
using elem_t = std::uint64_t;

// Exact value of the quadratic-character Gauss sum of GF(p^s), p odd:
// sign * p^{s/2}, times i when `imaginary` is set.
struct GaussSum {
    int sign = 1;
    bool imaginary = false;
    unsigned p = 0;
    unsigned s = 0;

    std::complex<double> to_complex() const;
    Eisenstein to_eisenstein() const; // p == 3 only
    std::string to_string() const;
};

// GF(p^k) with a deterministic modulus (the lexicographically smallest monic
// irreducible of degree k, coefficient vector read high degree first) and a
// deterministic primitive element (the smallest packed value of full order).
//
// Fields with at most 2^22 elements carry full log/antilog tables; larger
// fields (up to 2^32 elements) fall back to digit-wise polynomial arithmetic.
class Field {
public:
    static std::shared_ptr<const Field> make(unsigned p, unsigned k);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    std::uint64_t mul_group_order() const { return q_ - 1; }
    // Modulus coefficients, low degree first, length k+1, leading 1.
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    elem_t generator() const { return gen_; }
    bool has_tables() const { return !exp_.empty(); }

    elem_t add(elem_t x, elem_t y) const;
    elem_t neg(elem_t x) const;
    elem_t sub(elem_t x, elem_t y) const { return add(x, neg(y)); }
    elem_t mul(elem_t x, elem_t y) const;
    elem_t inv(elem_t x) const;
    elem_t div(elem_t x, elem_t y) const { return mul(x, inv(y)); }
    elem_t pow(elem_t x, std::uint64_t e) const;
    // x^e for signed e, x != 0 (exponent reduced mod q-1).
    elem_t pow_signed(elem_t x, std::int64_t e) const;

    // Discrete log base the primitive element; x != 0, tables required.
    std::uint64_t log(elem_t x) const;
    // generator^i, i reduced mod q-1; tables required.
    elem_t exp_at(std::uint64_t i) const;

    elem_t frobenius(elem_t x) const { return pow(x, p_); }

    bool is_subfield_order(std::uint64_t s) const;
    bool in_subfield(elem_t x, std::uint64_t s) const;
    // Relative trace onto the subfield of the given order.
    elem_t trace_to(elem_t x, std::uint64_t sub_order) const;
    elem_t trace_to_prime(elem_t x) const { return trace_to(x, p_); }
    // Dense table of trace_to_prime over the whole field, indexed by element.
    std::vector<std::uint8_t> trace_to_prime_table() const;

    // Quadratic character: 0 at zero, +1 on squares, -1 on non-squares.
    // Odd characteristic only.
    int quadratic_character(elem_t x) const;
    GaussSum gauss_sum() const;
    // Direct evaluation of sum_{x != 0} zeta_p^{Tr(a x^2)}, exact in Z[w]
    // for p == 3.
    Eisenstein square_character_sum_exact(elem_t a) const;
    // Same sum evaluated in floating complex arithmetic, any odd p.
    std::complex<double> square_character_sum(elem_t a) const;

    std::vector<std::uint8_t> digits(elem_t x) const;
    elem_t from_digits(const std::vector<std::uint8_t>& d) const;

private:
    Field() = default;

    unsigned p_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint8_t> modulus_;
    elem_t gen_ = 0;
    std::vector<std::uint32_t> exp_; // size q-1
    std::vector<std::uint32_t> log_; // size q, log_[0] unused
    std::vector<std::uint16_t> add_table_; // q x q, only for small odd-char fields

    elem_t mul_slow(elem_t x, elem_t y) const;
};

// All elements of the subfield of the given order: zero followed by the
// powers of alpha^{(q-1)/(sub_order-1)} in exponent order.
std::vector<elem_t> subfield_elements(const Field& f, std::uint64_t sub_order);

// Value-semantics wrapper that carries its field and checks operand
// compatibility. Convenience layer over the raw elem_t interface.
struct FieldElement {
    const Field* field = nullptr;
    elem_t v = 0;

    FieldElement() = default;
    FieldElement(const Field& f, elem_t x) : field(&f), v(x) {}

    friend FieldElement operator+(FieldElement x, FieldElement y) {
        check(x, y);
        return {*x.field, x.field->add(x.v, y.v)};
    }
    friend FieldElement operator-(FieldElement x, FieldElement y) {
        check(x, y);
        return {*x.field, x.field->sub(x.v, y.v)};
    }
    friend FieldElement operator*(FieldElement x, FieldElement y) {
        check(x, y);
        return {*x.field, x.field->mul(x.v, y.v)};
    }
    friend FieldElement operator/(FieldElement x, FieldElement y) {
        check(x, y);
        return {*x.field, x.field->div(x.v, y.v)};
    }
    friend bool operator==(FieldElement x, FieldElement y) {
        check(x, y);
        return x.v == y.v;
    }

private:
    static void check(const FieldElement& x, const FieldElement& y) {
        if (x.field != y.field)
            throw FieldMismatch("operands belong to different fields");
    }
};

// GF(q) sitting inside GF(q^m) = GF(p^k), with the canonical symbol order
// {0, g^0, g^1, ..., g^{q-2}} where g = alpha^{(p^k - 1)/(q - 1)} for the
// field's primitive element alpha. Symbols are 0..q-1.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(std::shared_ptr<const Field> field, std::uint64_t q);

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::uint64_t q() const { return q_; }
    elem_t subfield_generator() const { return sub_gen_; }

    elem_t element(unsigned symbol) const;
    unsigned symbol(elem_t x) const;
    bool contains(elem_t x) const;

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned inv(unsigned a) const;

private:
    std::shared_ptr<const Field> field_;
    std::uint64_t q_ = 0;
    elem_t sub_gen_ = 0;
    std::vector<elem_t> sym_to_elem_;
    std::vector<std::int32_t> elem_to_sym_; // dense, -1 = not in subfield
    std::vector<std::uint8_t> add_, mul_, neg_;
};

} // namespace projbch
