#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projbch/bch.hpp"
#include "projbch/eisenstein.hpp"
#include "projbch/field.hpp"
#include "projbch/weights.hpp"

namespace projbch {

// The four ternary families with closed-form weight distributions: the codes
// designed at the largest (delta1) and second-largest (delta2) coset leaders,
// each in narrow-sense and even-like form.
enum class Family { Delta1, Delta1Tilde, Delta2, Delta2Tilde };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

bool family_even_like(Family f);
// Designed distance the family uses at this m (q = 3).
std::uint64_t family_delta(Family f, unsigned m);
BchCode family_code(Family f, unsigned m);

// Closed-form weight distribution over GF(3). Odd m needs m >= 3, even m
// needs m >= 4. Every frequency is evaluated exactly and the result is
// checked to sum to 3^k.
WeightDistribution table_closed_form(Family f, unsigned m);

// ---------------------------------------------------------------------------
// Exponential sums attached to the quadratic forms behind the delta2 family.
// All values are exact elements of Z[w], w a primitive cube root of unity.

// T(a,b) = sum over x in GF(3^m) of zeta3^{Tr(a x^{s+1} + b x^{s'+1})} with
// s = 3^{(m-1)/2}, s' = 3^{(m-3)/2}. Requires odd m >= 3.
Eisenstein T_sum(const Field& f, elem_t a, elem_t b);
// S(a,b) = sum_{y in GF(3)*} T(ya, yb) = T(a,b) + conj(T(a,b)).
Eisenstein S_sum(const Field& f, elem_t a, elem_t b);
// U(a,b) = sum over x in GF(3^m) of
// zeta3^{Tr_{3^{m/2}}(a x^{3^{m/2}+1}) + Tr(b x^{3^{m/2-1}+1})}.
// Requires even m >= 4 and a in the subfield GF(3^{m/2}).
Eisenstein U_sum(const Field& f, elem_t a, elem_t b);

// Rank of the quadratic form behind T_sum (odd m): m minus the GF(3)
// dimension of the kernel of
//   b^{3^{(m+3)/2}} x^{27} + a^{3^{(m+1)/2}} x^9 + a x^3 + b x.
// Throws InvalidParameter at (a,b) = (0,0), where the form is zero.
unsigned rank_of_T_form(const Field& f, elem_t a, elem_t b);
// Rank of the form behind U_sum (even m), kernel of
//   a x^{3^{m/2}} + b x^{3^{m/2-1}} + b^{3^{m/2+1}} x^{3^{m/2+1}}.
unsigned rank_of_U_form(const Field& f, elem_t a, elem_t b);

// One row of a value distribution: how often a (rank, value) pair occurs
// over the swept coefficient space. rank -1 marks rows aggregated over ranks.
struct ValueEntry {
    int rank = 0;
    Eisenstein value;
    bigint multiplicity;

    bool operator==(const ValueEntry&) const = default;
};

struct ValueDistribution {
    std::vector<ValueEntry> entries; // sorted by rank descending, then value

    bigint total() const;
    bool operator==(const ValueDistribution&) const = default;
    std::string to_string() const;
};

// Exhaustive sweeps over the coefficient space, values by direct summation
// and ranks by the linearized-polynomial kernel. T and U sweep all of
// GF(3^m) x GF(3^m) resp. GF(3^{m/2}) x GF(3^m); S aggregates by value only.
ValueDistribution t_value_distribution(unsigned m, unsigned threads = 1);
ValueDistribution s_value_distribution(unsigned m, unsigned threads = 1);
ValueDistribution u_value_distribution(unsigned m, unsigned threads = 1);

// Folds each imaginary value with its negative into one row (the convention
// under which the T table's imaginary multiplicities are stated).
ValueDistribution combine_imaginary_rows(const ValueDistribution& vd);

// The distributions the closed-form tables predict.
ValueDistribution expected_t_distribution(unsigned m); // imaginary rows combined
ValueDistribution expected_s_distribution(unsigned m);
ValueDistribution expected_u_distribution(unsigned m);

// The four power-moment identities for S and T, each side exact.
struct MomentCheck {
    std::string name;
    std::int64_t lhs = 0; // computed sum
    std::int64_t rhs = 0; // closed form
    bool pass = false;
};

struct MomentReport {
    unsigned m = 0;
    std::vector<MomentCheck> checks;
    bool all_pass = false;
};

// Requires odd m with 3 <= m <= 7 (the sweep is exhaustive over 3^{2m} pairs).
MomentReport moment_checks(unsigned m, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Classical bounds.

struct GriesmerReport {
    bigint sum; // sum of ceil(d / q^i) for i < k
    bool meets = false;
};

struct BoundsReport {
    bool feasible = false; // no classical bound violated
    GriesmerReport griesmer;
    std::uint32_t sphere_packing_max_d = 0; // largest d the Hamming bound allows
    std::int64_t singleton_slack = 0;       // (n - k + 1) - d
};

BoundsReport bounds_report(std::uint32_t n, std::uint32_t k, std::uint32_t d,
                           std::uint64_t q);

// w_min / w_max > (q-1)/q, decided in exact integer arithmetic.
struct SecretSharingReport {
    std::uint32_t w_min = 0;
    std::uint32_t w_max = 0;
    bool suitable = false;
};

SecretSharingReport secret_sharing_suitable(const WeightDistribution& wd);

} // namespace projbch
