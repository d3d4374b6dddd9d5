#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "projbch/cosets.hpp"
#include "projbch/field.hpp"
#include "projbch/nds.hpp"
#include "projbch/poly.hpp"
#include "projbch/weights.hpp"

namespace projbch {

// Minimal polynomial over GF(q) of beta^s, computed as the product of
// (x - beta^e) over the cyclotomic coset of s. beta must have order ctx.n().
Polynomial minimal_polynomial(const SubfieldEmbedding& emb, elem_t beta,
                              const CosetContext& ctx, std::uint32_t s);

// Narrow-sense code of length n = (q^m - 1)/(q - 1) with designed distance
// delta: the cyclic code whose generator is lcm of the minimal polynomials of
// beta, beta^2, ..., beta^{delta-1}. With even_like set, (x - 1) joins the
// product and the dimension drops by one.
struct BchCode {
    std::uint64_t q = 0;
    unsigned m = 0;
    std::uint32_t n = 0;
    std::uint32_t delta = 0;
    bool even_like = false;

    std::shared_ptr<const Field> field;
    std::shared_ptr<const SubfieldEmbedding> gfq;
    std::shared_ptr<const CosetContext> cosets;
    elem_t alpha = 0; // primitive element of GF(q^m)
    elem_t beta = 0;  // alpha^{q-1}, order n

    Polynomial generator;
    std::vector<std::uint8_t> generator_symbols; // low degree first
    std::uint32_t dimension = 0;

    // Smallest coset leader >= delta; the true distance is at least this
    // (plus one for the even-like code).
    std::uint32_t bose_distance = 0;
    nds::MPath bose_path = nds::MPath::Scan;

    std::vector<std::uint32_t> zero_cosets;  // leaders whose cosets are roots
    std::vector<std::uint32_t> nonzero_reps; // the remaining leaders

    std::uint32_t distance_lower_bound() const {
        return bose_distance + (even_like ? 1 : 0);
    }
};

BchCode build_code(std::uint64_t q, unsigned m, std::uint32_t delta,
                   bool even_like = false);

// Dimension n - m*ceil((delta-1)(q-1)/q), valid for
//   2 <= delta <= n*q^{ceil(m/2)}/(q^m - 1),
// and also at delta = q^i + l (1 <= i <= ceil(m/2)-1, 1 <= l <= q-1, with
// q*(delta-1) < n) and delta = (q^i - 1)/(q - 1) (2 <= i <= ceil(m/2)).
// Throws InvalidParameter for delta outside these ranges, where the formula
// can miscount.
std::uint32_t dimension_formula(std::uint64_t q, unsigned m, std::uint64_t delta,
                                bool even_like = false);

// q^dimension * (degree(g) + 1) if it fits in 64 bits, nullopt on overflow.
std::optional<std::uint64_t> enumeration_cost(const BchCode& code);

// Walks all q^k codewords as message * generator, in reflected Gray order so
// each step updates deg(g)+1 symbols. The visitor gets the codeword symbol
// vector and its weight; returning false stops early. Throws CapExceeded when
// q^k * (deg(g)+1) > cost_cap.
template <typename Visitor>
void enumerate_codewords(const BchCode& code, std::uint64_t cost_cap, Visitor&& visit) {
    const auto cost = enumeration_cost(code);
    if (!cost || *cost > cost_cap)
        throw CapExceeded("codeword enumeration over budget");

    const SubfieldEmbedding& emb = *code.gfq;
    const unsigned q = unsigned(code.q);
    const std::uint32_t k = code.dimension;
    const std::vector<std::uint8_t>& g = code.generator_symbols;

    std::vector<std::uint8_t> cw(code.n, 0);
    std::uint32_t weight = 0;
    std::vector<std::uint8_t> a(k, 0);
    std::vector<int> o(k, 1);
    std::vector<std::uint32_t> f(k + 1);
    for (std::uint32_t j = 0; j <= k; ++j) f[j] = j;

    if (!visit(cw, weight)) return;
    for (;;) {
        const std::uint32_t j = f[0];
        f[0] = 0;
        if (j == k) break;
        const std::uint8_t prev = a[j];
        a[j] = std::uint8_t(int(prev) + o[j]);
        if (a[j] == 0 || a[j] == q - 1) {
            o[j] = -o[j];
            f[j] = f[j + 1];
            f[j + 1] = j + 1;
        }
        const unsigned dsym = emb.sub(a[j], prev);
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (g[t] == 0) continue;
            std::uint8_t& c = cw[j + t];
            if (c != 0) --weight;
            c = std::uint8_t(emb.add(c, emb.mul(dsym, g[t])));
            if (c != 0) ++weight;
        }
        if (!visit(cw, weight)) return;
    }
}

WeightDistribution weight_distribution_bruteforce(const BchCode& code,
                                                  std::uint64_t cost_cap);

// Codeword from trace coefficients, one per nonzero coset representative i_j:
//   c_l = sum_j Tr_{GF(q^{m_j}) -> GF(q)}(a_j * beta^{-l * i_j}),
// where m_j is the coset size of i_j and a_j must lie in GF(q^{m_j}).
std::vector<std::uint8_t> trace_codeword(const BchCode& code,
                                         const std::vector<elem_t>& coeffs);

// Weight distribution by ranging every trace coefficient over its subfield.
// Independent of the generator-polynomial enumeration; throws CapExceeded
// when q^k * n > cost_cap.
WeightDistribution trace_weight_distribution(const BchCode& code,
                                             std::uint64_t cost_cap);

enum class DistanceMethod { Enumeration, LowWeightSearch, BchBound };

struct DistanceResult {
    std::uint32_t value = 0;
    bool exact = false; // false: value is only a lower bound
    DistanceMethod method = DistanceMethod::BchBound;
    std::vector<std::uint8_t> witness; // a codeword of weight `value` when exact
};

// Minimum distance by full enumeration (exact; CapExceeded over budget).
DistanceResult min_distance_enumerate(const BchCode& code, std::uint64_t cost_cap);

// Meet-in-the-middle search for codewords of weight <= max_weight: the
// support of a weight-v word splits into its ceil(v/2) lowest and floor(v/2)
// highest positions, and the two halves must carry opposite syndromes at the
// generator roots. The lowest coefficient is normalized to 1. Exact when a
// word is found; otherwise reports max_weight + 1 (or the BCH bound if
// larger) as an inexact lower bound.
DistanceResult min_distance_low_weight(const BchCode& code, std::uint32_t max_weight);

// Enumerates when affordable, otherwise runs the low-weight search up to
// distance_lower_bound() + weight_slack.
DistanceResult min_distance(const BchCode& code, std::uint64_t enum_cap,
                            std::uint32_t weight_slack = 2);

// Short witness codewords. For weight >= 3 with weight | n and the
// characteristic not dividing weight, tries ones at the evenly spaced
// positions t*n/weight. For weight == 2 with e = gcd(n, q-1) > 1, tries
// x^{n/e} - beta^{n/e} (the constant lies in GF(q)). Returns the word only
// when it verifies against the generator, nullopt otherwise.
std::optional<std::vector<std::uint8_t>> locator_witness(const BchCode& code,
                                                         std::uint32_t weight);

} // namespace projbch
