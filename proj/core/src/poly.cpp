#include "projbch/poly.hpp"

#include <algorithm>

namespace projbch {

Polynomial Polynomial::x_pow_plus(std::shared_ptr<const Field> field, std::size_t n,
                                  elem_t c) {
    std::vector<elem_t> v(n + 1, 0);
    v[0] = c;
    v[n] = 1;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::from_symbols(const SubfieldEmbedding& emb,
                                    const std::vector<std::uint8_t>& symbols) {
    std::vector<elem_t> v(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) v[i] = emb.element(symbols[i]);
    return Polynomial(emb.field_ptr(), std::move(v));
}

elem_t Polynomial::leading() const {
    if (c_.empty()) throw InvalidParameter("leading coefficient of zero polynomial");
    return c_.back();
}

elem_t Polynomial::eval(elem_t x) const {
    const Field& F = *field_;
    elem_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    const Field& F = *field_;
    std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
    Polynomial out(field_);
    out.c_ = std::move(r);
    out.trim();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_field(o);
    const Field& F = *field_;
    std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(coeff(i), o.coeff(i));
    Polynomial out(field_);
    out.c_ = std::move(r);
    out.trim();
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    const Field& F = *field_;
    std::vector<elem_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (!o.c_[j]) continue;
            r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
        }
    }
    Polynomial out(field_);
    out.c_ = std::move(r);
    out.trim();
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_field(o);
    return c_ == o.c_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = *field_;
    std::vector<elem_t> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (c_.size() <= dd) {
        Polynomial q(field_), r(field_);
        r.c_ = rem;
        r.trim();
        return {q, r};
    }
    std::vector<elem_t> quot(c_.size() - dd, 0);
    const elem_t lead_inv = F.inv(divisor.c_.back());
    for (std::size_t i = rem.size(); i-- > dd;) {
        elem_t f = F.mul(rem[i], lead_inv);
        if (!f) continue;
        quot[i - dd] = f;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(f, divisor.c_[j]));
    }
    Polynomial q(field_), r(field_);
    q.c_ = std::move(quot);
    q.trim();
    r.c_ = std::move(rem);
    r.trim();
    return {q, r};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Field& F = *field_;
    if (c_.back() == 1) return *this;
    const elem_t s = F.inv(c_.back());
    std::vector<elem_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F.mul(c_[i], s);
    Polynomial out(field_);
    out.c_ = std::move(r);
    return out;
}

bool Polynomial::coeffs_in_subfield(std::uint64_t sub_order) const {
    for (elem_t c : c_)
        if (!field_->in_subfield(c, sub_order)) return false;
    return true;
}

std::vector<std::uint8_t> Polynomial::to_symbols(const SubfieldEmbedding& emb) const {
    std::vector<std::uint8_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = std::uint8_t(emb.symbol(c_[i]));
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_ptr());
    Polynomial g = gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

} // namespace projbch
