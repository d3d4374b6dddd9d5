#include "projbch/analysis.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "projbch/cosets.hpp"
#include "projbch/errors.hpp"

namespace projbch {

namespace {

std::uint64_t upow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

bigint exact_div(const bigint& num, std::uint64_t den) {
    if (num % den != 0)
        throw ConstructionFailure("table frequency is not an integer");
    return num / den;
}

// Runs work(lo, hi, slot) over a partition of [0, domain) into contiguous
// slices, one thread per slice. Callers merge per-slot results in slot order,
// so the outcome does not depend on scheduling.
template <class Work>
unsigned run_slices(std::size_t domain, unsigned threads, Work&& work) {
    unsigned nt = threads == 0 ? 1 : threads;
    if (domain < nt) nt = domain ? unsigned(domain) : 1;
    if (nt == 1) {
        work(std::size_t(0), domain, 0u);
        return 1;
    }
    std::size_t chunk = (domain + nt - 1) / nt;
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < nt; ++s) {
        std::size_t lo = s * chunk;
        std::size_t hi = std::min(domain, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&work, lo, hi, s] { work(lo, hi, s); });
    }
    for (auto& t : pool) t.join();
    return nt;
}

elem_t partial_prime_trace(const Field& f, elem_t y, unsigned terms) {
    elem_t acc = y, cur = y;
    for (unsigned i = 1; i < terms; ++i) {
        cur = f.frobenius(cur);
        acc = f.add(acc, cur);
    }
    return acc;
}

void require_t_field(const Field& f) {
    if (f.characteristic() != 3)
        throw InvalidParameter("quadratic-form sums are defined over GF(3^m)");
    if (f.degree() < 3 || f.degree() % 2 == 0)
        throw InvalidParameter("this form needs odd m >= 3");
}

void require_u_field(const Field& f) {
    if (f.characteristic() != 3)
        throw InvalidParameter("quadratic-form sums are defined over GF(3^m)");
    if (f.degree() < 4 || f.degree() % 2 != 0)
        throw InvalidParameter("this form needs even m >= 4");
}

Eisenstein from_zeta_counts(const std::uint64_t c[3]) {
    return {std::int64_t(c[0]) - std::int64_t(c[2]),
            std::int64_t(c[1]) - std::int64_t(c[2])};
}

unsigned kernel_log3(std::uint64_t kernel, unsigned m) {
    unsigned dim = 0;
    std::uint64_t v = kernel;
    while (v > 1 && v % 3 == 0) {
        v /= 3;
        ++dim;
    }
    if (v != 1 || dim > m)
        throw ConstructionFailure("kernel size is not a power of 3");
    return dim;
}

using RowKey = std::pair<int, Eisenstein>; // (rank tag, value)

ValueDistribution sorted_distribution(const std::map<RowKey, bigint>& rows) {
    ValueDistribution vd;
    for (const auto& [key, mult] : rows)
        vd.entries.push_back({key.first, key.second, mult});
    std::sort(vd.entries.begin(), vd.entries.end(),
              [](const ValueEntry& x, const ValueEntry& y) {
                  if (x.rank != y.rank) return x.rank > y.rank;
                  return x.value < y.value;
              });
    return vd;
}

std::map<RowKey, bigint> merge_slots(
    const std::vector<std::map<RowKey, std::uint64_t>>& slots) {
    std::map<RowKey, bigint> rows;
    for (const auto& slot : slots)
        for (const auto& [key, mult] : slot) rows[key] += mult;
    return rows;
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::Delta1: return "delta1";
    case Family::Delta1Tilde: return "delta1-tilde";
    case Family::Delta2: return "delta2";
    case Family::Delta2Tilde: return "delta2-tilde";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "delta1") return Family::Delta1;
    if (s == "delta1-tilde") return Family::Delta1Tilde;
    if (s == "delta2") return Family::Delta2;
    if (s == "delta2-tilde") return Family::Delta2Tilde;
    return std::nullopt;
}

bool family_even_like(Family f) {
    return f == Family::Delta1Tilde || f == Family::Delta2Tilde;
}

std::uint64_t family_delta(Family f, unsigned m) {
    if (m < 3) throw InvalidParameter("family codes need m >= 3");
    unsigned i = (f == Family::Delta1 || f == Family::Delta1Tilde) ? 1 : 2;
    return delta_closed_form(m, i);
}

BchCode family_code(Family f, unsigned m) {
    return build_code(3, m, family_delta(f, m), family_even_like(f));
}

WeightDistribution table_closed_form(Family f, unsigned m) {
    bool odd = m % 2 == 1;
    if ((odd && m < 3) || (!odd && m < 4))
        throw InvalidParameter("closed forms need m >= 3 odd or m >= 4 even");
    if (m > 20) throw InvalidParameter("length would overflow 32 bits");

    const std::uint64_t pm = upow(3, m);      // 3^m
    const std::uint64_t A = pm / 3;           // 3^{m-1}
    const std::uint32_t n = std::uint32_t((pm - 1) / 2);
    const bigint pm1 = pm - 1;

    WeightDistribution wd;
    wd.q = 3;
    wd.n = n;
    wd.add(0, 1);

    switch (f) {
    case Family::Delta1:
        if (odd) {
            wd.k = m + 1;
            const std::int64_t B = std::int64_t(upow(3, (m - 1) / 2));
            // signs of the two off-center weights alternate with m mod 4
            const std::int64_t e1 = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
            wd.add(std::uint32_t(std::int64_t(A) - (1 + e1 * B) / 2), pm1);
            wd.add(std::uint32_t(A), pm1);
            wd.add(std::uint32_t(std::int64_t(A) - (1 - e1 * B) / 2), pm1);
            wd.add(n, 2);
        } else {
            wd.k = m / 2 + 1;
            const std::uint64_t H = upow(3, m / 2), h = H / 3;
            wd.add(std::uint32_t(A - (h + 1) / 2), 2 * (bigint(H) - 1));
            wd.add(std::uint32_t(A + h), bigint(H) - 1);
            wd.add(n, 2);
        }
        break;

    case Family::Delta1Tilde:
        if (odd) {
            wd.k = m;
            wd.add(std::uint32_t(A), bigpow(3, m) - 1);
        } else {
            wd.k = m / 2;
            wd.add(std::uint32_t(A + upow(3, m / 2 - 1)), bigpow(3, m / 2) - 1);
        }
        break;

    case Family::Delta2Tilde:
        if (odd) {
            wd.k = 2 * m;
            const std::uint64_t B = upow(3, (m - 1) / 2);
            wd.add(std::uint32_t(A - B), exact_div((A + B) * pm1, 2));
            wd.add(std::uint32_t(A), (bigint(pm) - A + 1) * pm1);
            wd.add(std::uint32_t(A + B), exact_div((bigint(A) - B) * pm1, 2));
        } else {
            wd.k = 3 * m / 2;
            const std::uint64_t H = upow(3, m / 2), h = H / 3;
            wd.add(std::uint32_t(A - h),
                   exact_div(3 * (bigint(H) - 1) * (H + 1) * (H + 1), 8));
            wd.add(std::uint32_t(A), h * pm1);
            wd.add(std::uint32_t(A + h), exact_div(3 * (bigint(H) - 1) * (A + 1), 4));
            wd.add(std::uint32_t(A + H), exact_div((bigint(h) - 1) * pm1, 8));
        }
        break;

    case Family::Delta2:
        if (odd) {
            wd.k = 2 * m + 1;
            const std::uint64_t B = upow(3, (m - 1) / 2);
            const std::uint64_t C = 3 * B;
            wd.add(std::uint32_t((pm - A - C - 1) / 2), exact_div((bigint(A) - 1) * pm1, 8));
            wd.add(std::uint32_t(A - B), exact_div((bigint(A) + B) * pm1, 2));
            wd.add(std::uint32_t((pm - A - B - 1) / 2),
                   exact_div((8 * bigint(pm) - A - 8 * B + 9) * pm1, 8));
            wd.add(std::uint32_t(A), (bigint(pm) - A + 1) * pm1);
            wd.add(std::uint32_t((pm - A + B - 1) / 2),
                   exact_div((8 * bigint(pm) - A + 8 * B + 9) * pm1, 8));
            wd.add(std::uint32_t(A + B), exact_div((bigint(A) - B) * pm1, 2));
            wd.add(std::uint32_t((pm - A + C - 1) / 2), exact_div((bigint(A) - 1) * pm1, 8));
            wd.add(n, 2);
        } else {
            wd.k = (3 * m + 2) / 2;
            const std::uint64_t H = upow(3, m / 2), h = H / 3;
            wd.add(std::uint32_t((pm - A - H - 1) / 2), exact_div((5 * bigint(h) - 1) * pm1, 4));
            wd.add(std::uint32_t(A - h),
                   exact_div(3 * (bigint(H) - 1) * (H + 1) * (H + 1), 8));
            wd.add(std::uint32_t((pm - A - h - 1) / 2), exact_div(3 * (bigint(H) - 1) * (A + 1), 2));
            wd.add(std::uint32_t(A), h * pm1);
            wd.add(std::uint32_t((pm - A + h - 1) / 2),
                   exact_div(3 * (bigint(H) - 1) * (H + 1) * (H + 1), 4));
            wd.add(std::uint32_t(A + h), exact_div(3 * (bigint(H) - 1) * (A + 1), 4));
            wd.add(std::uint32_t((pm - A + H - 1) / 2), h * pm1);
            wd.add(std::uint32_t(A + H), exact_div((bigint(h) - 1) * pm1, 8));
            wd.add(n, 2);
        }
        break;
    }

    wd.validate();
    return wd;
}

Eisenstein T_sum(const Field& f, elem_t a, elem_t b) {
    require_t_field(f);
    const unsigned m = f.degree();
    const std::uint64_t e1 = upow(3, (m - 1) / 2) + 1;
    const std::uint64_t e2 = upow(3, (m - 3) / 2) + 1;
    std::uint64_t c[3] = {0, 0, 0};
    for (elem_t x = 0; x < f.order(); ++x) {
        elem_t t = f.add(f.trace_to_prime(f.mul(a, f.pow(x, e1))),
                         f.trace_to_prime(f.mul(b, f.pow(x, e2))));
        ++c[t];
    }
    return from_zeta_counts(c);
}

Eisenstein S_sum(const Field& f, elem_t a, elem_t b) {
    Eisenstein t = T_sum(f, a, b);
    Eisenstein s = t + t.conj(); // the y=2 term is the conjugate sum
    if ((a != 0 || b != 0) && f.degree() <= 7) {
        unsigned r = rank_of_T_form(f, a, b);
        Eisenstein expect = r % 2 == 0 ? 2 * t : Eisenstein{0, 0};
        if (s != expect)
            throw ConstructionFailure("sum does not match its rank-parity form");
    }
    return s;
}

unsigned rank_of_T_form(const Field& f, elem_t a, elem_t b) {
    require_t_field(f);
    const unsigned m = f.degree();
    if (m > 7) throw Unsupported("exhaustive kernel count supports m <= 7");
    if (a == 0 && b == 0)
        throw InvalidParameter("the zero form has no rank");
    const elem_t a9 = f.pow(a, upow(3, (m + 1) / 2));
    const elem_t b27 = f.pow(b, upow(3, (m + 3) / 2));
    std::uint64_t kernel = 0;
    for (elem_t x = 0; x < f.order(); ++x) {
        elem_t x3 = f.frobenius(x);
        elem_t x9 = f.frobenius(x3);
        elem_t x27 = f.frobenius(x9);
        elem_t v = f.add(f.add(f.mul(b27, x27), f.mul(a9, x9)),
                         f.add(f.mul(a, x3), f.mul(b, x)));
        if (v == 0) ++kernel;
    }
    return m - kernel_log3(kernel, m);
}

Eisenstein U_sum(const Field& f, elem_t a, elem_t b) {
    require_u_field(f);
    const unsigned m = f.degree();
    const std::uint64_t H = upow(3, m / 2);
    if (!f.in_subfield(a, H))
        throw InvalidParameter("first coefficient must lie in GF(3^{m/2})");
    const std::uint64_t e1 = H + 1;     // x^{e1} ranges over GF(3^{m/2})
    const std::uint64_t e2 = H / 3 + 1;
    std::uint64_t c[3] = {0, 0, 0};
    for (elem_t x = 0; x < f.order(); ++x) {
        elem_t half = partial_prime_trace(f, f.mul(a, f.pow(x, e1)), m / 2);
        elem_t t = f.add(half, f.trace_to_prime(f.mul(b, f.pow(x, e2))));
        ++c[t];
    }
    return from_zeta_counts(c);
}

unsigned rank_of_U_form(const Field& f, elem_t a, elem_t b) {
    require_u_field(f);
    const unsigned m = f.degree();
    if (m > 8) throw Unsupported("exhaustive kernel count supports m <= 8");
    const std::uint64_t H = upow(3, m / 2);
    if (!f.in_subfield(a, H))
        throw InvalidParameter("first coefficient must lie in GF(3^{m/2})");
    if (a == 0 && b == 0)
        throw InvalidParameter("the zero form has no rank");
    const elem_t bp = f.pow(b, 3 * H);
    std::uint64_t kernel = 0;
    for (elem_t x = 0; x < f.order(); ++x) {
        elem_t xl = f.pow(x, H / 3); // x^{3^{m/2-1}}
        elem_t xm = f.frobenius(xl); // x^{3^{m/2}}
        elem_t xh = f.frobenius(xm); // x^{3^{m/2+1}}
        elem_t v = f.add(f.mul(a, xm), f.add(f.mul(b, xl), f.mul(bp, xh)));
        if (v == 0) ++kernel;
    }
    return m - kernel_log3(kernel, m);
}

bigint ValueDistribution::total() const {
    bigint t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

std::string ValueDistribution::to_string() const {
    std::string s;
    for (const auto& e : entries) {
        if (!s.empty()) s += "; ";
        if (e.rank >= 0) s += "rank " + std::to_string(e.rank) + ": ";
        s += e.value.to_string() + " x" + e.multiplicity.str();
    }
    return s;
}

ValueDistribution t_value_distribution(unsigned m, unsigned threads) {
    if (m % 2 == 0 || m < 3 || m > 5)
        throw Unsupported("exhaustive sweep supports odd m in [3,5]");
    auto fp = Field::make(3, m);
    const Field& f = *fp;
    const std::uint64_t q = f.order();
    std::vector<std::map<RowKey, std::uint64_t>> slots(std::max(threads, 1u));
    run_slices(q, threads, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        auto& rows = slots[slot];
        for (elem_t a = lo; a < hi; ++a)
            for (elem_t b = 0; b < q; ++b) {
                if (a == 0 && b == 0) {
                    ++rows[{0, Eisenstein(std::int64_t(q), 0)}];
                    continue;
                }
                Eisenstein v = T_sum(f, a, b);
                ++rows[{int(rank_of_T_form(f, a, b)), v}];
            }
    });
    return sorted_distribution(merge_slots(slots));
}

ValueDistribution s_value_distribution(unsigned m, unsigned threads) {
    if (m % 2 == 0 || m < 3 || m > 5)
        throw Unsupported("exhaustive sweep supports odd m in [3,5]");
    auto fp = Field::make(3, m);
    const Field& f = *fp;
    const std::uint64_t q = f.order();
    std::vector<std::map<RowKey, std::uint64_t>> slots(std::max(threads, 1u));
    run_slices(q, threads, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        auto& rows = slots[slot];
        for (elem_t a = lo; a < hi; ++a)
            for (elem_t b = 0; b < q; ++b) {
                Eisenstein t = (a == 0 && b == 0)
                                   ? Eisenstein(std::int64_t(q), 0)
                                   : T_sum(f, a, b);
                ++rows[{-1, t + t.conj()}];
            }
    });
    return sorted_distribution(merge_slots(slots));
}

ValueDistribution u_value_distribution(unsigned m, unsigned threads) {
    if (m % 2 == 1 || m < 4 || m > 6)
        throw Unsupported("exhaustive sweep supports even m in [4,6]");
    auto fp = Field::make(3, m);
    const Field& f = *fp;
    const std::uint64_t q = f.order();
    const std::vector<elem_t> half = subfield_elements(f, upow(3, m / 2));
    std::vector<std::map<RowKey, std::uint64_t>> slots(std::max(threads, 1u));
    run_slices(half.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        auto& rows = slots[slot];
        for (std::size_t i = lo; i < hi; ++i)
            for (elem_t b = 0; b < q; ++b) {
                elem_t a = half[i];
                if (a == 0 && b == 0) {
                    ++rows[{0, Eisenstein(std::int64_t(q), 0)}];
                    continue;
                }
                Eisenstein v = U_sum(f, a, b);
                ++rows[{int(rank_of_U_form(f, a, b)), v}];
            }
    });
    return sorted_distribution(merge_slots(slots));
}

ValueDistribution combine_imaginary_rows(const ValueDistribution& vd) {
    std::map<RowKey, bigint> rows;
    for (const auto& e : vd.entries) {
        Eisenstein v = e.value;
        if (v.is_imaginary() && v.a < 0) v = -v;
        rows[{e.rank, v}] += e.multiplicity;
    }
    return sorted_distribution(rows);
}

ValueDistribution expected_t_distribution(unsigned m) {
    if (m % 2 == 0 || m < 3) throw InvalidParameter("needs odd m >= 3");
    const bigint pm = bigpow(3, m), pm1 = pm - 1;
    const std::int64_t rootq = std::int64_t(upow(3, (m - 1) / 2)); // 3^{m/2}/sqrt(3)
    std::map<RowKey, bigint> rows;
    // rank m: value +-3^{m/2} i, the printed count carried jointly
    rows[{int(m), Eisenstein(rootq, 2 * rootq)}] =
        exact_div(pm1 * (8 * pm - 9 * (pm / 3) + 9), 8);
    const bigint nplus = exact_div((pm / 3 + rootq) * pm1, 2);
    const bigint nminus = exact_div((pm / 3 - rootq) * pm1, 2);
    rows[{int(m - 1), Eisenstein(3 * rootq, 0)}] = nplus;
    rows[{int(m - 1), Eisenstein(-3 * rootq, 0)}] = nminus;
    rows[{int(m - 2), Eisenstein(3 * rootq, 6 * rootq)}] =
        exact_div(pm1 * (pm / 3 - 1), 8);
    rows[{0, Eisenstein(std::int64_t(upow(3, m)), 0)}] = 1;
    return sorted_distribution(rows);
}

ValueDistribution expected_s_distribution(unsigned m) {
    if (m % 2 == 0 || m < 3) throw InvalidParameter("needs odd m >= 3");
    const bigint pm = bigpow(3, m), pm1 = pm - 1;
    const std::int64_t rootq = std::int64_t(upow(3, (m - 1) / 2));
    std::map<RowKey, bigint> rows;
    rows[{-1, Eisenstein(0, 0)}] = (pm - pm / 3 + 1) * pm1;
    rows[{-1, Eisenstein(6 * rootq, 0)}] = exact_div((pm / 3 + rootq) * pm1, 2);
    rows[{-1, Eisenstein(-6 * rootq, 0)}] = exact_div((pm / 3 - rootq) * pm1, 2);
    rows[{-1, Eisenstein(std::int64_t(2 * upow(3, m)), 0)}] = 1;
    return sorted_distribution(rows);
}

ValueDistribution expected_u_distribution(unsigned m) {
    if (m % 2 == 1 || m < 4) throw InvalidParameter("needs even m >= 4");
    const bigint pm = bigpow(3, m), pm1 = pm - 1;
    const std::int64_t H = std::int64_t(upow(3, m / 2));
    const std::int64_t h = H / 3;
    const bigint A = pm / 3;
    std::map<RowKey, bigint> rows;
    rows[{int(m), Eisenstein(H, 0)}] = exact_div(3 * (bigint(H) - 1) * (H + 1) * (H + 1), 8);
    rows[{int(m), Eisenstein(-H, 0)}] = exact_div(3 * (bigint(H) - 1) * (A + 1), 4);
    rows[{int(m - 1), Eisenstein(H, 2 * H)}] = exact_div(h * pm1, 2);
    rows[{int(m - 1), Eisenstein(-H, -2 * H)}] = exact_div(h * pm1, 2);
    rows[{int(m - 2), Eisenstein(-3 * H, 0)}] = exact_div((bigint(h) - 1) * pm1, 8);
    rows[{0, Eisenstein(std::int64_t(upow(3, m)), 0)}] = 1;
    return sorted_distribution(rows);
}

MomentReport moment_checks(unsigned m, unsigned threads) {
    if (m % 2 == 0 || m < 3 || m > 5)
        throw Unsupported("exhaustive moment sweep supports odd m in [3,5]");
    auto fp = Field::make(3, m);
    const Field& f = *fp;
    const std::uint64_t q = f.order();

    struct Acc {
        std::int64_t s1 = 0, s2 = 0, s3 = 0;
        Eisenstein t2;
    };
    std::vector<Acc> slots(std::max(threads, 1u));
    run_slices(q, threads, [&](std::size_t lo, std::size_t hi, unsigned slot) {
        Acc& acc = slots[slot];
        for (elem_t a = lo; a < hi; ++a)
            for (elem_t b = 0; b < q; ++b) {
                Eisenstein t = (a == 0 && b == 0)
                                   ? Eisenstein(std::int64_t(q), 0)
                                   : T_sum(f, a, b);
                Eisenstein s = t + t.conj();
                if (!s.is_real())
                    throw ConstructionFailure("character sum total must be real");
                acc.s1 += s.a;
                acc.s2 += s.a * s.a;
                acc.s3 += s.a * s.a * s.a;
                acc.t2 = acc.t2 + t * t;
            }
    });
    Acc total;
    for (const auto& acc : slots) {
        total.s1 += acc.s1;
        total.s2 += acc.s2;
        total.s3 += acc.s3;
        total.t2 = total.t2 + acc.t2;
    }

    const std::int64_t p2m = std::int64_t(upow(3, 2 * m));
    const std::int64_t p3m = std::int64_t(upow(3, 3 * m));
    MomentReport rep;
    rep.m = m;
    rep.checks.push_back({"sum S", total.s1, 2 * p2m, total.s1 == 2 * p2m});
    rep.checks.push_back({"sum S^2", total.s2, 4 * p3m, total.s2 == 4 * p3m});
    rep.checks.push_back(
        {"sum S^3", total.s3, 32 * p3m - 24 * p2m, total.s3 == 32 * p3m - 24 * p2m});
    rep.checks.push_back(
        {"sum T^2", total.t2.a, p2m, total.t2.is_real() && total.t2.a == p2m});
    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

BoundsReport bounds_report(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                           std::uint64_t q) {
    if (n == 0 || k == 0 || d == 0 || q < 2)
        throw InvalidParameter("bounds need positive n, k, d and q >= 2");
    BoundsReport rep;

    bigint qi = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        rep.griesmer.sum += (bigint(d) + qi - 1) / qi;
        qi *= q;
    }
    rep.griesmer.meets = rep.griesmer.sum == n;

    // largest d with the Hamming-ball volume within q^{n-k}: balls of radius
    // t = floor((d-1)/2) must fit, so d = 2t* + 2 for the largest feasible t*
    // (an odd d = 2t*+1 is always no stronger than 2t*+2 here)
    const bigint budget = k <= n ? bigpow(q, n - k) : bigint(0);
    bigint volume = 1, term = 1;
    std::uint32_t t_max = 0;
    for (std::uint32_t i = 1; i <= n; ++i) {
        term = term * (n - i + 1) * (q - 1) / i; // binom(n,i)*(q-1)^i, exact
        volume += term;
        if (volume > budget) break;
        t_max = i;
    }
    rep.sphere_packing_max_d = 2 * t_max + 2;

    rep.singleton_slack =
        std::int64_t(n) - std::int64_t(k) + 1 - std::int64_t(d);

    rep.feasible = rep.griesmer.sum <= n && rep.singleton_slack >= 0 &&
                   d <= rep.sphere_packing_max_d;
    return rep;
}

SecretSharingReport secret_sharing_suitable(const WeightDistribution& wd) {
    SecretSharingReport rep;
    rep.w_min = wd.w_min_nonzero();
    rep.w_max = wd.w_max_nonzero();
    // w_min / w_max > (q-1)/q without leaving the integers
    rep.suitable = bigint(wd.q) * rep.w_min > bigint(wd.q - 1) * rep.w_max;
    return rep;
}

} // namespace projbch
