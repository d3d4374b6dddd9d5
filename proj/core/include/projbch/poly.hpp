#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "projbch/field.hpp"

namespace projbch {

// Dense univariate polynomial over a Field, coefficients stored low degree
// first with no trailing zeros. The zero polynomial has degree -1.
class Polynomial {
public:
    explicit Polynomial(std::shared_ptr<const Field> field)
        : field_(std::move(field)) {}
    Polynomial(std::shared_ptr<const Field> field, std::vector<elem_t> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        for (elem_t c : c_)
            if (c >= field_->order()) throw InvalidParameter("coefficient out of range");
        trim();
    }

    static Polynomial constant(std::shared_ptr<const Field> field, elem_t c) {
        return Polynomial(std::move(field), std::vector<elem_t>{c});
    }
    // x^n + c
    static Polynomial x_pow_plus(std::shared_ptr<const Field> field, std::size_t n, elem_t c);
    // Coefficients given as GF(q) symbols through an embedding.
    static Polynomial from_symbols(const SubfieldEmbedding& emb,
                                   const std::vector<std::uint8_t>& symbols);

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    std::int64_t degree() const { return std::int64_t(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    elem_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<elem_t>& coeffs() const { return c_; }
    elem_t leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    elem_t eval(elem_t x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial monic() const;

    // True when every coefficient lies in the subfield of the given order.
    bool coeffs_in_subfield(std::uint64_t sub_order) const;
    std::vector<std::uint8_t> to_symbols(const SubfieldEmbedding& emb) const;

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same_field(const Polynomial& o) const {
        if (field_.get() != o.field_.get())
            throw FieldMismatch("polynomials over different fields");
    }

    std::shared_ptr<const Field> field_;
    std::vector<elem_t> c_;
};

// Monic greatest common divisor.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Monic least common multiple.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

} // namespace projbch
