#include "projbch/bch.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <set>

namespace projbch {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool in_code(const BchCode& code, const std::vector<std::uint8_t>& symbols) {
    Polynomial c = Polynomial::from_symbols(*code.gfq, symbols);
    if (c.is_zero()) return true;
    return c.divmod(code.generator).second.is_zero();
}

} // namespace

Polynomial minimal_polynomial(const SubfieldEmbedding& emb, elem_t beta,
                              const CosetContext& ctx, std::uint32_t s) {
    const Field& f = emb.field();
    auto fp = emb.field_ptr();
    CyclotomicCoset coset = ctx.coset_of(s);
    Polynomial prod = Polynomial::constant(fp, 1);
    for (std::uint32_t e : coset.elements) {
        elem_t root = f.pow(beta, e);
        prod = prod * Polynomial(fp, {f.neg(root), 1});
    }
    if (!prod.coeffs_in_subfield(emb.q()))
        throw ConstructionFailure("minimal polynomial left the base field");
    return prod;
}

BchCode build_code(std::uint64_t q, unsigned m, std::uint32_t delta, bool even_like) {
    unsigned p = 0, s = 0;
    if (!is_prime_power(q, &p, &s)) throw InvalidParameter("q must be a prime power");
    auto cosets = CosetContext::build(q, m); // validates m and the length limit
    const std::uint32_t n = cosets->n();
    if (delta < 2 || delta > n) throw InvalidParameter("delta must be in [2, n]");

    auto field = Field::make(p, s * m);
    auto gfq = std::make_shared<SubfieldEmbedding>(field, q);
    const elem_t alpha = field->generator();
    const elem_t beta = field->pow(alpha, q - 1);

    std::set<std::uint32_t> zeros;
    for (std::uint32_t i = 1; i < delta; ++i) zeros.insert(cosets->leader_of(i));
    if (even_like) zeros.insert(0);

    Polynomial gen = Polynomial::constant(field, 1);
    std::uint64_t deg = 0;
    for (std::uint32_t z : zeros) {
        gen = gen * minimal_polynomial(*gfq, beta, *cosets, z);
        deg += cosets->coset_size(z);
    }
    if (deg >= n) throw InvalidParameter("parameters give the zero code");

    std::uint32_t bose;
    nds::MPath path = nds::MPath::Scan;
    if (delta == n) {
        bose = n;
    } else {
        nds::MResult r = nds::smallest_leader_geq(delta, *cosets);
        bose = r.value;
        path = r.path;
    }

    std::vector<std::uint32_t> zero_list(zeros.begin(), zeros.end());
    std::vector<std::uint32_t> nonzero;
    for (std::uint32_t l : cosets->leaders())
        if (!zeros.count(l)) nonzero.push_back(l);

    std::vector<std::uint8_t> gen_syms = gen.to_symbols(*gfq);

    return BchCode{q,
                   m,
                   n,
                   delta,
                   even_like,
                   field,
                   gfq,
                   cosets,
                   alpha,
                   beta,
                   std::move(gen),
                   std::move(gen_syms),
                   std::uint32_t(n - deg),
                   bose,
                   path,
                   std::move(zero_list),
                   std::move(nonzero)};
}

std::uint32_t dimension_formula(std::uint64_t q, unsigned m, std::uint64_t delta,
                                bool even_like) {
    if (!is_prime_power(q)) throw InvalidParameter("q must be a prime power");
    if (m < 2) throw InvalidParameter("m must be at least 2");
    if (delta < 2) throw InvalidParameter("delta must be at least 2");
    const std::uint64_t n = (ipow(q, m) - 1) / (q - 1);
    const unsigned half = (m + 1) / 2;

    bool valid = delta <= small_s_guarantee_bound(q, m);
    for (unsigned i = 1; !valid && i + 1 <= half; ++i) {
        std::uint64_t qi = ipow(q, i);
        if (delta <= qi || delta > qi + (q - 1)) continue;
        // Every exponent counted between q^i and delta must head its own
        // q-ary coset. That fails once q*(delta-1) wraps past n: the rotated
        // value collapses onto a smaller exponent already counted, as in
        // q=4, m=3, where 6*4 = 24 = 3 (mod 21) puts 6 in the coset of 3.
        if (q * (delta - 1) < n) valid = true;
    }
    for (unsigned i = 2; !valid && i <= half; ++i)
        if (delta == (ipow(q, i) - 1) / (q - 1)) valid = true;
    if (!valid)
        throw InvalidParameter("delta outside the range where the dimension formula holds");

    const std::uint64_t k = n - m * (((delta - 1) * (q - 1) + q - 1) / q);
    return std::uint32_t(k) - (even_like ? 1 : 0);
}

std::optional<std::uint64_t> enumeration_cost(const BchCode& code) {
    const std::uint64_t words = std::uint64_t(code.generator_symbols.size());
    std::uint64_t total = words;
    for (std::uint32_t i = 0; i < code.dimension; ++i) {
        if (total > std::uint64_t(1) << 62) return std::nullopt;
        total *= code.q;
    }
    return total;
}

WeightDistribution weight_distribution_bruteforce(const BchCode& code,
                                                  std::uint64_t cost_cap) {
    std::vector<std::uint64_t> counts(code.n + 1, 0);
    enumerate_codewords(code, cost_cap,
                        [&](const std::vector<std::uint8_t>&, std::uint32_t w) {
                            ++counts[w];
                            return true;
                        });
    WeightDistribution wd;
    wd.q = code.q;
    wd.n = code.n;
    wd.k = code.dimension;
    for (std::uint32_t w = 0; w <= code.n; ++w)
        if (counts[w]) wd.counts[w] = counts[w];
    wd.validate();
    return wd;
}

namespace {

// Trace from GF(q^mj) down to GF(q): x + x^q + ... + x^{q^{mj-1}}. This is
// the relative trace of the subfield the coset representative generates, not
// of the full field, which matters whenever mj < m.
elem_t relative_trace(const Field& f, elem_t x, std::uint64_t q, unsigned mj) {
    elem_t t = x, cur = x;
    for (unsigned u = 1; u < mj; ++u) {
        cur = f.pow(cur, q);
        t = f.add(t, cur);
    }
    return t;
}

} // namespace

std::vector<std::uint8_t> trace_codeword(const BchCode& code,
                                         const std::vector<elem_t>& coeffs) {
    const Field& f = *code.field;
    const auto& reps = code.nonzero_reps;
    if (coeffs.size() != reps.size())
        throw InvalidParameter("one trace coefficient per nonzero coset required");

    std::vector<elem_t> acc(code.n, 0);
    for (std::size_t j = 0; j < reps.size(); ++j) {
        const unsigned mj = code.cosets->coset_size(reps[j]);
        const std::uint64_t sub = ipow(code.q, mj);
        if (coeffs[j] != 0 && !f.in_subfield(coeffs[j], sub))
            throw InvalidParameter("trace coefficient outside its subfield");
        if (coeffs[j] == 0) continue;
        const elem_t step = f.pow_signed(code.beta, -std::int64_t(reps[j]));
        elem_t cur = coeffs[j];
        for (std::uint32_t l = 0; l < code.n; ++l) {
            acc[l] = f.add(acc[l], relative_trace(f, cur, code.q, mj));
            cur = f.mul(cur, step);
        }
    }
    std::vector<std::uint8_t> out(code.n);
    for (std::uint32_t l = 0; l < code.n; ++l)
        out[l] = std::uint8_t(code.gfq->symbol(acc[l]));
    return out;
}

WeightDistribution trace_weight_distribution(const BchCode& code,
                                             std::uint64_t cost_cap) {
    const Field& f = *code.field;
    const auto& reps = code.nonzero_reps;
    const std::size_t t = reps.size();

    std::uint64_t tuples = 1;
    for (std::size_t j = 0; j < t; ++j) {
        const std::uint64_t sub = ipow(code.q, code.cosets->coset_size(reps[j]));
        if (tuples > cost_cap / sub) throw CapExceeded("trace enumeration over budget");
        tuples *= sub;
    }
    if (tuples > cost_cap / code.n) throw CapExceeded("trace enumeration over budget");

    // Per-coset symbol table of the relative trace GF(q^mj) -> GF(q), dense
    // over the field so the inner loop is table lookups. Indices outside the
    // subfield are never queried.
    const bool dense = f.has_tables();
    std::vector<std::vector<std::uint8_t>> tr_sym(t);
    std::vector<std::vector<elem_t>> elems(t);
    std::vector<std::vector<elem_t>> rows(t);
    for (std::size_t j = 0; j < t; ++j) {
        const unsigned mj = code.cosets->coset_size(reps[j]);
        elems[j] = subfield_elements(f, ipow(code.q, mj));
        if (dense) {
            tr_sym[j].resize(f.order());
            for (elem_t x : elems[j])
                tr_sym[j][x] = std::uint8_t(
                    code.gfq->symbol(relative_trace(f, x, code.q, mj)));
        }
        rows[j].resize(code.n);
        const elem_t step = f.pow_signed(code.beta, -std::int64_t(reps[j]));
        elem_t cur = 1;
        for (std::uint32_t l = 0; l < code.n; ++l) {
            rows[j][l] = cur;
            cur = f.mul(cur, step);
        }
    }

    std::vector<std::uint64_t> counts(code.n + 1, 0);
    std::vector<std::size_t> idx(t, 0);
    std::vector<std::uint8_t> word(code.n);
    for (;;) {
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t j = 0; j < t; ++j) {
            const elem_t a = elems[j][idx[j]];
            if (a == 0) continue;
            const auto& row = rows[j];
            if (dense) {
                const auto& ts = tr_sym[j];
                for (std::uint32_t l = 0; l < code.n; ++l)
                    word[l] = std::uint8_t(
                        code.gfq->add(word[l], ts[f.mul(a, row[l])]));
            } else {
                const unsigned mj = code.cosets->coset_size(reps[j]);
                for (std::uint32_t l = 0; l < code.n; ++l)
                    word[l] = std::uint8_t(code.gfq->add(
                        word[l], code.gfq->symbol(relative_trace(
                                     f, f.mul(a, row[l]), code.q, mj))));
            }
        }
        std::uint32_t w = 0;
        for (std::uint32_t l = 0; l < code.n; ++l) w += word[l] != 0;
        ++counts[w];

        std::size_t j = 0;
        while (j < t && ++idx[j] == elems[j].size()) idx[j++] = 0;
        if (j == t) break;
    }

    WeightDistribution wd;
    wd.q = code.q;
    wd.n = code.n;
    wd.k = code.dimension;
    for (std::uint32_t w = 0; w <= code.n; ++w)
        if (counts[w]) wd.counts[w] = counts[w];
    wd.validate(); // also certifies the map a -> c(a) hit q^k distinct words
    return wd;
}

DistanceResult min_distance_enumerate(const BchCode& code, std::uint64_t cost_cap) {
    const std::uint32_t lb = code.distance_lower_bound();
    DistanceResult res;
    res.value = code.n + 1;
    res.method = DistanceMethod::Enumeration;
    enumerate_codewords(code, cost_cap,
                        [&](const std::vector<std::uint8_t>& cw, std::uint32_t w) {
                            if (w == 0 || w >= res.value) return true;
                            res.value = w;
                            res.witness = cw;
                            return w > lb;
                        });
    if (res.value > code.n) throw ConstructionFailure("no nonzero codeword found");
    res.exact = true;
    return res;
}

namespace {

constexpr std::size_t kMaxHalf = 6;
constexpr std::uint64_t kHashLimit = std::uint64_t(1) << 22;
constexpr std::uint64_t kProbeLimit = std::uint64_t(1) << 28;

struct HalfEntry {
    unsigned __int128 key = 0;
    std::uint16_t edge = 0; // max position of a low half, min position of a high half
    std::array<std::uint16_t, kMaxHalf> pos{};
    std::array<std::uint8_t, kMaxHalf> coeff{};
    std::uint8_t count = 0;
};

std::uint64_t half_count(std::uint32_t n, unsigned picks, std::uint64_t coeff_choices,
                         unsigned free_coeffs) {
    // binomial(n, picks) * coeff_choices^free_coeffs, saturating
    bigint c = 1;
    for (unsigned i = 0; i < picks; ++i) c = c * (n - i) / (i + 1);
    for (unsigned i = 0; i < free_coeffs; ++i) c *= coeff_choices;
    if (c > std::numeric_limits<std::uint64_t>::max()) return ~std::uint64_t(0);
    return std::uint64_t(c);
}

} // namespace

DistanceResult min_distance_low_weight(const BchCode& code, std::uint32_t max_weight) {
    const Field& f = *code.field;
    const SubfieldEmbedding& emb = *code.gfq;
    const std::uint32_t n = code.n;
    const unsigned q = unsigned(code.q);
    const auto& J = code.zero_cosets;
    const std::uint32_t lb = code.distance_lower_bound();

    if (max_weight >= n) throw InvalidParameter("weight budget must be below n");
    if ((max_weight + 1) / 2 > kMaxHalf)
        throw CapExceeded("weight budget too large for the split search");

    unsigned bits = 0;
    while ((std::uint64_t(1) << bits) < f.order()) ++bits;
    if (J.size() > 16 || J.size() * bits > 128)
        throw CapExceeded("syndrome does not fit the packed key");

    // syndrome columns beta^{l*pos} for every root coset leader l, and the
    // same columns pre-scaled by each nonzero coefficient
    const std::size_t nj = J.size();
    std::vector<std::vector<elem_t>> scaled((q - 1) * nj);
    for (unsigned c = 1; c < q; ++c) {
        const elem_t ec = emb.element(c);
        for (std::size_t j = 0; j < nj; ++j) {
            auto& col = scaled[(c - 1) * nj + j];
            col.resize(n);
            const elem_t r = f.pow(code.beta, J[j]);
            elem_t cur = ec;
            for (std::uint32_t pos = 0; pos < n; ++pos) {
                col[pos] = cur;
                cur = f.mul(cur, r);
            }
        }
    }

    using Syn = std::array<elem_t, 16>;
    auto pack = [&](const Syn& s) {
        unsigned __int128 key = 0;
        for (std::size_t j = 0; j < nj; ++j)
            key = (key << bits) | s[j];
        return key;
    };

    DistanceResult res;
    res.method = DistanceMethod::LowWeightSearch;

    for (std::uint32_t v = std::max<std::uint32_t>(1, lb); v <= max_weight; ++v) {
        const unsigned a = (v + 1) / 2, b = v / 2;
        const std::uint64_t left_n = half_count(n, a, q - 1, a - 1);
        const std::uint64_t right_n = b ? half_count(n, b, q - 1, b) : 1;
        const bool hash_left = left_n <= right_n;
        const std::uint64_t hash_n = hash_left ? left_n : right_n;
        const std::uint64_t probe_n = hash_left ? right_n : left_n;
        if (hash_n > kHashLimit || probe_n > kProbeLimit)
            throw CapExceeded("split search over budget at weight " + std::to_string(v));

        // walk(side): enumerate all position/coefficient choices for one half,
        // feeding each completed combination to sink
        auto walk = [&](bool low_half, auto&& sink) {
            std::array<std::uint16_t, kMaxHalf> pos{};
            std::array<std::uint8_t, kMaxHalf> cf{};
            const unsigned picks = low_half ? a : b;
            if (picks == 0) {
                Syn z{};
                sink(z, pos, cf, 0);
                return;
            }
            Syn syn{};
            auto rec = [&](auto&& self, unsigned depth, std::uint32_t start) -> bool {
                // leave room above for the other half and the rest of this one
                const std::uint32_t limit = n - (picks - depth) - (low_half ? b : 0);
                for (std::uint32_t pp = start; pp <= limit; ++pp) {
                    const bool fixed = low_half && depth == 0; // normalized lead 1
                    for (unsigned c = 1; c < (fixed ? 2u : q); ++c) {
                        Syn saved = syn;
                        const auto* col = &scaled[(c - 1) * nj];
                        for (std::size_t j = 0; j < nj; ++j)
                            syn[j] = f.add(syn[j], col[j][pp]);
                        pos[depth] = std::uint16_t(pp);
                        cf[depth] = std::uint8_t(c);
                        bool keep;
                        if (depth + 1 == picks)
                            keep = sink(syn, pos, cf, picks);
                        else
                            keep = self(self, depth + 1, pp + 1);
                        syn = saved;
                        if (!keep) return false;
                    }
                }
                return true;
            };
            rec(rec, 0, low_half ? 0 : a);
        };

        std::vector<HalfEntry> table;
        table.reserve(std::size_t(hash_n));
        walk(hash_left, [&](const Syn& s, const auto& pos, const auto& cf, unsigned cnt) {
            HalfEntry e;
            e.key = pack(s);
            e.pos = pos;
            e.coeff = cf;
            e.count = std::uint8_t(cnt);
            e.edge = cnt ? (hash_left ? pos[cnt - 1] : pos[0]) : 0;
            table.push_back(e);
            return true;
        });
        std::sort(table.begin(), table.end(),
                  [](const HalfEntry& x, const HalfEntry& y) { return x.key < y.key; });

        bool found = false;
        std::vector<std::uint8_t> word;
        walk(!hash_left, [&](const Syn& s, const auto& pos, const auto& cf, unsigned cnt) {
            Syn negs{};
            for (std::size_t j = 0; j < nj; ++j) negs[j] = f.neg(s[j]);
            const auto key = pack(negs);
            auto it = std::lower_bound(table.begin(), table.end(), key,
                                       [](const HalfEntry& e, const unsigned __int128& k) {
                                           return e.key < k;
                                       });
            for (; it != table.end() && it->key == key; ++it) {
                if (cnt && it->count) {
                    const std::uint16_t lo_max = hash_left ? it->edge : pos[cnt - 1];
                    const std::uint16_t hi_min = hash_left ? pos[0] : it->edge;
                    if (lo_max >= hi_min) continue;
                }
                word.assign(n, 0);
                for (unsigned i = 0; i < it->count; ++i) word[it->pos[i]] = it->coeff[i];
                for (unsigned i = 0; i < cnt; ++i) word[pos[i]] = cf[i];
                found = true;
                return false;
            }
            return true;
        });

        if (found) {
            if (!in_code(code, word))
                throw ConstructionFailure("matched halves failed the divisibility check");
            res.value = v;
            res.exact = true;
            res.witness = std::move(word);
            return res;
        }
    }

    res.value = std::max(lb, max_weight + 1);
    res.exact = false;
    return res;
}

DistanceResult min_distance(const BchCode& code, std::uint64_t enum_cap,
                            std::uint32_t weight_slack) {
    const auto cost = enumeration_cost(code);
    if (cost && *cost <= enum_cap) return min_distance_enumerate(code, enum_cap);
    std::uint32_t budget = code.distance_lower_bound() + weight_slack;
    if (budget >= code.n) budget = code.n - 1;
    return min_distance_low_weight(code, budget);
}

std::optional<std::vector<std::uint8_t>> locator_witness(const BchCode& code,
                                                         std::uint32_t weight) {
    const std::uint32_t n = code.n;
    if (weight < 2 || weight > n) throw InvalidParameter("witness weight out of range");
    std::vector<std::uint8_t> word(n, 0);
    if (weight == 2) {
        const std::uint64_t e = std::gcd<std::uint64_t>(n, code.q - 1);
        if (e == 1) return std::nullopt;
        const elem_t gamma = code.field->pow(code.beta, n / e);
        word[0] = std::uint8_t(code.gfq->neg(code.gfq->symbol(gamma)));
        word[n / e] = 1;
    } else {
        if (n % weight != 0 || weight % code.field->characteristic() == 0)
            return std::nullopt;
        for (std::uint32_t t = 0; t < weight; ++t) word[t * (n / weight)] = 1;
    }
    if (!in_code(code, word)) return std::nullopt;
    return word;
}

} // namespace projbch
