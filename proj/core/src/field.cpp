#include "projbch/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace projbch {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 22;
constexpr std::uint64_t kOrderLimit = std::uint64_t(1) << 32;
constexpr std::uint64_t kAddTableLimit = 1024;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense GF(p) polynomials, low degree first, used only during construction
// and as the fallback multiply for tableless fields.
using ppoly = std::vector<std::uint8_t>;

void ptrim(ppoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ppoly pmul(const ppoly& a, const ppoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    ppoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint8_t((r[i + j] + a[i] * b[j]) % p);
    }
    ptrim(r);
    return r;
}

// a mod f, f monic.
ppoly pmod(ppoly a, const ppoly& f, unsigned p) {
    ptrim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint8_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (lead) {
            for (std::size_t i = 0; i <= df; ++i) {
                unsigned t = a[shift + i] + unsigned(p - 1) * lead * f[i];
                a[shift + i] = std::uint8_t(t % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() <= df) break;
    }
    return a;
}

bool pis_zero(const ppoly& a) { return a.empty(); }

ppoly poly_from_value(std::uint64_t t, unsigned p, unsigned deg, bool monic) {
    ppoly f(deg + (monic ? 1 : 0), 0);
    for (unsigned i = 0; i < deg; ++i) {
        f[i] = std::uint8_t(t % p);
        t /= p;
    }
    if (monic) f[deg] = 1;
    ptrim(f);
    return f;
}

bool divides(const ppoly& g, const ppoly& f, unsigned p) {
    return pis_zero(pmod(f, g, p));
}

bool irreducible(const ppoly& f, unsigned p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    std::uint64_t count = p;
    for (std::size_t d = 1; 2 * d <= k; ++d, count *= p) {
        for (std::uint64_t t = 0; t < count; ++t) {
            ppoly g = poly_from_value(t, p, unsigned(d), true);
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

elem_t pack(const ppoly& a, unsigned p) {
    elem_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * p + a[i];
    return r;
}

ppoly unpack(elem_t x, unsigned p, unsigned k) {
    ppoly a(k, 0);
    for (unsigned i = 0; i < k && x; ++i) {
        a[i] = std::uint8_t(x % p);
        x /= p;
    }
    ptrim(a);
    return a;
}

} // namespace

std::complex<double> GaussSum::to_complex() const {
    const double mag = std::pow(double(p), double(s) / 2.0);
    return imaginary ? std::complex<double>(0.0, sign * mag)
                     : std::complex<double>(sign * mag, 0.0);
}

Eisenstein GaussSum::to_eisenstein() const {
    if (p != 3)
        throw Unsupported("exact Gauss sum representation requires p = 3");
    if (!imaginary) {
        // s even: value = sign * 3^{s/2}
        std::int64_t mag = 1;
        for (unsigned i = 0; i < s / 2; ++i) mag *= 3;
        return {sign * mag, 0};
    }
    // s odd: value = sign * i * 3^{s/2} = sign * 3^{(s-1)/2} * sqrt(-3)
    std::int64_t mag = 1;
    for (unsigned i = 0; i < (s - 1) / 2; ++i) mag *= 3;
    return Eisenstein{sign * mag, 2 * sign * mag};
}

std::string GaussSum::to_string() const {
    std::string r = sign < 0 ? "-" : "";
    if (imaginary) r += "i*";
    r += std::to_string(p);
    if (s == 2 && !imaginary) return (sign < 0 ? "-" : "") + std::to_string(p);
    r += "^(" + std::to_string(s) + "/2)";
    return r;
}

elem_t Field::add(elem_t x, elem_t y) const {
    if (p_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[x * q_ + y];
    elem_t r = 0, pw = 1;
    while (x || y) {
        std::uint64_t d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        r += d * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return r;
}

elem_t Field::neg(elem_t x) const {
    if (p_ == 2) return x;
    elem_t r = 0, pw = 1;
    while (x) {
        std::uint64_t d = x % p_;
        if (d) d = p_ - d;
        r += d * pw;
        x /= p_;
        pw *= p_;
    }
    return r;
}

elem_t Field::mul_slow(elem_t x, elem_t y) const {
    ppoly r = pmod(pmul(unpack(x, p_, k_), unpack(y, p_, k_), p_), modulus_, p_);
    return pack(r, p_);
}

elem_t Field::mul(elem_t x, elem_t y) const {
    if (x == 0 || y == 0) return 0;
    if (!exp_.empty()) {
        std::uint64_t s = std::uint64_t(log_[x]) + log_[y];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_slow(x, y);
}

elem_t Field::inv(elem_t x) const {
    if (x == 0) throw DivisionByZero("inverse of zero");
    if (!exp_.empty()) {
        std::uint64_t l = log_[x];
        return l == 0 ? 1 : exp_[q_ - 1 - l];
    }
    return pow(x, q_ - 2);
}

elem_t Field::pow(elem_t x, std::uint64_t e) const {
    if (x == 0) {
        if (e == 0) return 1;
        return 0;
    }
    if (!exp_.empty()) {
        std::uint64_t l = (std::uint64_t(log_[x]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }
    elem_t r = 1, b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

elem_t Field::pow_signed(elem_t x, std::int64_t e) const {
    if (x == 0) throw DivisionByZero("signed power of zero");
    const std::int64_t n = std::int64_t(q_ - 1);
    std::int64_t r = e % n;
    if (r < 0) r += n;
    return pow(x, std::uint64_t(r));
}

std::uint64_t Field::log(elem_t x) const {
    if (x == 0) throw DivisionByZero("log of zero");
    if (exp_.empty()) throw Unsupported("field too large for log tables");
    return log_[x];
}

elem_t Field::exp_at(std::uint64_t i) const {
    if (exp_.empty()) throw Unsupported("field too large for log tables");
    return exp_[i % (q_ - 1)];
}

bool Field::is_subfield_order(std::uint64_t s) const {
    if (s < 2) return false;
    std::uint64_t t = s;
    unsigned j = 0;
    while (t > 1) {
        if (t % p_) return false;
        t /= p_;
        ++j;
    }
    return j > 0 && k_ % j == 0;
}

bool Field::in_subfield(elem_t x, std::uint64_t s) const {
    if (!is_subfield_order(s)) throw NotASubfield("order " + std::to_string(s));
    return pow(x, s) == x;
}

elem_t Field::trace_to(elem_t x, std::uint64_t sub_order) const {
    if (!is_subfield_order(sub_order))
        throw NotASubfield("order " + std::to_string(sub_order));
    std::uint64_t steps = 1;
    for (std::uint64_t t = sub_order; t < q_; t *= sub_order) ++steps;
    elem_t acc = x, y = x;
    for (std::uint64_t i = 1; i < steps; ++i) {
        y = pow(y, sub_order);
        acc = add(acc, y);
    }
    return acc;
}

std::vector<std::uint8_t> Field::trace_to_prime_table() const {
    std::vector<std::uint8_t> t(q_, 0);
    for (elem_t x = 1; x < q_; ++x) t[x] = std::uint8_t(trace_to_prime(x));
    return t;
}

int Field::quadratic_character(elem_t x) const {
    if (p_ == 2) throw Unsupported("quadratic character needs odd characteristic");
    if (x == 0) return 0;
    if (!exp_.empty()) return (log_[x] & 1) ? -1 : 1;
    return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

GaussSum Field::gauss_sum() const {
    if (p_ == 2) throw Unsupported("Gauss sum needs odd characteristic");
    GaussSum g;
    g.p = p_;
    g.s = k_;
    const int base = (k_ % 2 == 0) ? -1 : 1; // (-1)^{s-1}
    if (p_ % 4 == 1) {
        g.sign = base;
        g.imaginary = false;
    } else {
        // value = (-1)^{s-1} i^s p^{s/2}
        switch (k_ % 4) {
            case 0: g.sign = base; g.imaginary = false; break;
            case 1: g.sign = base; g.imaginary = true; break;
            case 2: g.sign = -base; g.imaginary = false; break;
            default: g.sign = -base; g.imaginary = true; break;
        }
    }
    return g;
}

Eisenstein Field::square_character_sum_exact(elem_t a) const {
    if (p_ != 3) throw Unsupported("exact character sum requires p = 3");
    std::int64_t c[3] = {0, 0, 0};
    for (elem_t x = 1; x < q_; ++x) {
        elem_t t = trace_to_prime(mul(a, mul(x, x)));
        ++c[t];
    }
    // c0 + c1 w + c2 w^2 with w^2 = -1 - w
    return {c[0] - c[2], c[1] - c[2]};
}

std::complex<double> Field::square_character_sum(elem_t a) const {
    if (p_ == 2) throw Unsupported("character sum needs odd characteristic");
    const double step = 2.0 * M_PI / double(p_);
    std::vector<std::int64_t> c(p_, 0);
    for (elem_t x = 1; x < q_; ++x) ++c[trace_to_prime(mul(a, mul(x, x)))];
    std::complex<double> r{0.0, 0.0};
    for (unsigned t = 0; t < p_; ++t)
        r += double(c[t]) * std::complex<double>(std::cos(step * t), std::sin(step * t));
    return r;
}

std::vector<std::uint8_t> Field::digits(elem_t x) const {
    std::vector<std::uint8_t> d(k_, 0);
    for (unsigned i = 0; i < k_ && x; ++i) {
        d[i] = std::uint8_t(x % p_);
        x /= p_;
    }
    return d;
}

elem_t Field::from_digits(const std::vector<std::uint8_t>& d) const {
    if (d.size() != k_) throw InvalidParameter("digit vector length != degree");
    elem_t r = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw InvalidParameter("digit out of range");
        r = r * p_ + d[i];
    }
    return r;
}

std::vector<elem_t> subfield_elements(const Field& f, std::uint64_t sub_order) {
    if (!f.is_subfield_order(sub_order))
        throw NotASubfield("order does not divide the field");
    std::vector<elem_t> out;
    out.reserve(sub_order);
    out.push_back(0);
    const std::uint64_t d = f.mul_group_order() / (sub_order - 1);
    const elem_t g = f.pow(f.generator(), d);
    elem_t cur = 1;
    for (std::uint64_t t = 0; t + 1 < sub_order; ++t) {
        out.push_back(cur);
        cur = f.mul(cur, g);
    }
    if (cur != 1) throw ConstructionFailure("subfield generator order mismatch");
    return out;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }

    if (!is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidParameter("degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > kOrderLimit / p) throw Unsupported("field order exceeds 2^32");
        q *= p;
    }

    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->k_ = k;
    F->q_ = q;

    // Smallest coefficient vector in the order that compares the high-degree
    // coefficients first; candidate t encodes (c_{k-1} ... c_0) base p.
    std::uint64_t limit = 1;
    for (unsigned i = 0; i < k; ++i) limit *= p;
    bool found = false;
    for (std::uint64_t t = 0; t < limit; ++t) {
        ppoly f = poly_from_value(t, p, k, true);
        f.resize(k + 1, 0);
        f[k] = 1;
        if (irreducible(f, p)) {
            F->modulus_ = f;
            found = true;
            break;
        }
    }
    if (!found) throw ConstructionFailure("no irreducible modulus found");

    const auto factors = prime_factors(q - 1);
    auto slow_pow = [&](elem_t x, std::uint64_t e) {
        elem_t r = 1, b = x;
        while (e) {
            if (e & 1) r = F->mul_slow(r, b);
            b = F->mul_slow(b, b);
            e >>= 1;
        }
        return r;
    };
    found = false;
    for (elem_t cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (auto f : factors) {
            if (slow_pow(cand, (q - 1) / f) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            F->gen_ = cand;
            found = true;
            break;
        }
    }
    if (!found) throw ConstructionFailure("no primitive element found");

    if (q <= kTableLimit) {
        F->exp_.resize(q - 1);
        F->log_.assign(q, 0);
        elem_t cur = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            F->exp_[i] = std::uint32_t(cur);
            F->log_[cur] = std::uint32_t(i);
            cur = F->mul_slow(cur, F->gen_);
        }
        if (cur != 1) throw ConstructionFailure("generator order mismatch");
    }

    if (p != 2 && q <= kAddTableLimit) {
        F->add_table_.resize(q * q);
        for (elem_t x = 0; x < q; ++x) {
            for (elem_t y = 0; y <= x; ++y) {
                elem_t r = 0, pw = 1, xx = x, yy = y;
                while (xx || yy) {
                    std::uint64_t d = xx % p + yy % p;
                    if (d >= p) d -= p;
                    r += d * pw;
                    xx /= p;
                    yy /= p;
                    pw *= p;
                }
                F->add_table_[x * q + y] = std::uint16_t(r);
                F->add_table_[y * q + x] = std::uint16_t(r);
            }
        }
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, _] = cache.emplace(std::make_pair(p, k), F);
    return it->second;
}

SubfieldEmbedding::SubfieldEmbedding(std::shared_ptr<const Field> field, std::uint64_t q)
    : field_(std::move(field)), q_(q) {
    const Field& F = *field_;
    if (!F.is_subfield_order(q))
        throw NotASubfield("GF(" + std::to_string(q) + ") is not a subfield of GF(" +
                           std::to_string(F.order()) + ")");
    if (q > 255) throw Unsupported("symbol alphabet limited to q <= 255");
    sub_gen_ = F.pow(F.generator(), (F.order() - 1) / (q - 1));

    sym_to_elem_.assign(q_, 0);
    elem_to_sym_.assign(F.order(), -1);
    elem_to_sym_[0] = 0;
    elem_t cur = 1;
    for (std::uint64_t j = 1; j < q_; ++j) {
        sym_to_elem_[j] = cur;
        if (elem_to_sym_[cur] != -1)
            throw ConstructionFailure("subfield generator has short order");
        elem_to_sym_[cur] = std::int32_t(j);
        cur = F.mul(cur, sub_gen_);
    }
    if (cur != 1) throw ConstructionFailure("subfield generator order mismatch");

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    for (std::uint64_t a = 0; a < q_; ++a) {
        neg_[a] = std::uint8_t(elem_to_sym_[F.neg(sym_to_elem_[a])]);
        for (std::uint64_t b = 0; b < q_; ++b) {
            elem_t s = F.add(sym_to_elem_[a], sym_to_elem_[b]);
            elem_t m = F.mul(sym_to_elem_[a], sym_to_elem_[b]);
            std::int32_t ssym = elem_to_sym_[s];
            std::int32_t msym = elem_to_sym_[m];
            if (ssym < 0 || msym < 0)
                throw ConstructionFailure("subfield not closed under arithmetic");
            add_[a * q_ + b] = std::uint8_t(ssym);
            mul_[a * q_ + b] = std::uint8_t(msym);
        }
    }
}

elem_t SubfieldEmbedding::element(unsigned symbol) const {
    if (symbol >= q_) throw InvalidParameter("symbol out of range");
    return sym_to_elem_[symbol];
}

unsigned SubfieldEmbedding::symbol(elem_t x) const {
    if (x >= field_->order() || elem_to_sym_[x] < 0)
        throw NotASubfield("element not in embedded subfield");
    return unsigned(elem_to_sym_[x]);
}

bool SubfieldEmbedding::contains(elem_t x) const {
    return x < field_->order() && elem_to_sym_[x] >= 0;
}

unsigned SubfieldEmbedding::inv(unsigned a) const {
    if (a == 0) throw DivisionByZero("inverse of zero symbol");
    return symbol(field_->inv(sym_to_elem_[a]));
}

} // namespace projbch
