#include "projbch/verify.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include "projbch/analysis.hpp"
#include "projbch/bch.hpp"
#include "projbch/cosets.hpp"
#include "projbch/errors.hpp"
#include "projbch/nds.hpp"

namespace projbch {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs one comparison, timing it and turning any exception into a failure.
template <class Body>
void check(std::vector<Check>& out, std::string id, std::string expected, Body&& body) {
    Check c;
    c.id = std::move(id);
    c.expected = std::move(expected);
    auto t0 = Clock::now();
    try {
        c.pass = body(c.actual);
    } catch (const std::exception& e) {
        c.pass = false;
        c.actual = std::string("error: ") + e.what();
    }
    c.ms = ms_since(t0);
    out.push_back(std::move(c));
}

std::string params_str(std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," +
           std::to_string(d) + "]";
}

DistanceResult distance_for(const BchCode& code, const RunLimits& limits) {
    if (limits.weight_budget > 0) {
        auto cost = enumeration_cost(code);
        if (cost && *cost <= limits.enum_cap)
            return min_distance_enumerate(code, limits.enum_cap);
        return min_distance_low_weight(code, limits.weight_budget);
    }
    return min_distance(code, limits.enum_cap);
}

// --- 1: worked-example code parameters --------------------------------------

struct CodeExample {
    std::uint64_t q;
    unsigned m;
    std::uint32_t delta;
    bool even_like;
    std::uint32_t n, k, d;
};

constexpr CodeExample kCodeExamples[] = {
    {3, 4, 3, false, 40, 32, 4},     {4, 6, 3, false, 1365, 1353, 3},
    {5, 4, 3, false, 156, 148, 3},   {3, 3, 4, false, 13, 7, 4},
    {3, 4, 5, false, 40, 28, 5},     {3, 5, 5, false, 121, 106, 6},
    {3, 4, 25, false, 40, 3, 25},    {3, 5, 76, false, 121, 6, 76},
    {3, 4, 22, true, 40, 6, 24},     {3, 5, 67, true, 121, 10, 72},
    {3, 4, 22, false, 40, 7, 22},    {3, 5, 67, false, 121, 11, 67},
};

void criterion_code_examples(const RunLimits& limits, std::vector<Check>& out) {
    for (const auto& ex : kCodeExamples) {
        std::string id = "code q=" + std::to_string(ex.q) + " m=" + std::to_string(ex.m) +
                         " delta=" + std::to_string(ex.delta) + (ex.even_like ? " even-like" : "");
        check(out, id, params_str(ex.n, ex.k, ex.d), [&](std::string& actual) {
            BchCode code = build_code(ex.q, ex.m, ex.delta, ex.even_like);
            DistanceResult d = distance_for(code, limits);
            actual = d.exact ? params_str(code.n, code.dimension, d.value)
                             : params_str(code.n, code.dimension, 0) + " d>=" +
                                   std::to_string(d.value);
            return d.exact && code.n == ex.n && code.dimension == ex.k && d.value == ex.d;
        });
    }
}

// --- 2: printed weight enumerators ------------------------------------------

struct FrozenEnumerator {
    std::uint64_t q;
    unsigned m;
    std::uint32_t delta;
    bool even_like;
    std::uint32_t n, k;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> rows;
};

const std::vector<FrozenEnumerator>& frozen_enumerators() {
    static const std::vector<FrozenEnumerator> table = {
        {3, 4, 25, false, 40, 3, {{25, 16}, {30, 8}, {40, 2}}},
        {3, 5, 76, false, 121, 6, {{76, 242}, {81, 242}, {85, 242}, {121, 2}}},
        {3, 4, 22, true, 40, 6, {{24, 300}, {27, 240}, {30, 168}, {36, 20}}},
        {3, 5, 67, true, 121, 10, {{72, 10890}, {81, 39446}, {90, 8712}}},
        {3, 4, 22, false, 40, 7,
         {{22, 280}, {24, 300}, {25, 336}, {27, 240}, {28, 600},
          {30, 168}, {31, 240}, {36, 20}, {40, 2}}},
        {3, 5, 67, false, 121, 11,
         {{67, 2420}, {72, 10890}, {76, 54450}, {81, 39446}, {85, 58806},
          {90, 8712}, {94, 2420}, {121, 2}}},
    };
    return table;
}

void criterion_printed_enumerators(const RunLimits& limits, std::vector<Check>& out) {
    for (const auto& ex : frozen_enumerators()) {
        WeightDistribution want;
        want.q = ex.q;
        want.n = ex.n;
        want.k = ex.k;
        want.add(0, 1);
        for (const auto& [w, c] : ex.rows) want.add(w, c);
        want.validate();

        std::string id = "enumerator " + params_str(ex.n, ex.k, ex.rows.front().first);
        check(out, id, want.to_string(), [&](std::string& actual) {
            BchCode code = build_code(ex.q, ex.m, ex.delta, ex.even_like);
            WeightDistribution got = weight_distribution_bruteforce(code, limits.enum_cap);
            actual = got.to_string();
            return got == want;
        });
    }
}

// --- 3: closed-form tables vs brute force -----------------------------------

void criterion_tables(const RunLimits& limits, std::vector<Check>& out) {
    const std::pair<Family, unsigned> combos[] = {
        {Family::Delta1, 4},      {Family::Delta1, 6},
        {Family::Delta1, 3},      {Family::Delta1, 5},
        {Family::Delta2Tilde, 4}, {Family::Delta2Tilde, 6},
        {Family::Delta2Tilde, 3}, {Family::Delta2Tilde, 5},
        {Family::Delta2, 4},      {Family::Delta2, 6},
        {Family::Delta2, 3},      {Family::Delta2, 5},
    };
    for (const auto& [fam, m] : combos) {
        std::string id = std::string("table ") + family_name(fam) + " m=" + std::to_string(m);
        check(out, id, "closed form equals enumeration", [&](std::string& actual) {
            WeightDistribution cf = table_closed_form(fam, m);
            BchCode code = family_code(fam, m);
            WeightDistribution bf = weight_distribution_bruteforce(code, limits.enum_cap);
            bool ok = cf == bf;
            actual = ok ? "equal (" + std::to_string(cf.counts.size()) + " weights)"
                        : "closed " + cf.to_string() + " vs brute " + bf.to_string();
            return ok;
        });
    }
}

// --- 4: largest-leader closed forms -----------------------------------------

void criterion_leader_forms(const RunLimits&, std::vector<Check>& out) {
    for (unsigned m = 2; m <= 12; ++m) {
        std::string id = "largest leaders q=3 m=" + std::to_string(m);
        check(out, id, "delta1/delta2 values and coset sizes match", [&](std::string& actual) {
            auto ctx = CosetContext::build(3, m);
            auto top = ctx->largest_leaders(2);
            std::uint64_t d1 = delta_closed_form(m, 1);
            std::uint64_t d2 = delta_closed_form(m, 2);
            unsigned s1 = delta_coset_size_closed_form(m, 1);
            unsigned s2 = delta_coset_size_closed_form(m, 2);
            actual = "delta1=" + std::to_string(d1) + " |C|=" + std::to_string(s1) +
                     ", delta2=" + std::to_string(d2) + " |C|=" + std::to_string(s2);
            bool sizes = s1 == (m % 2 ? m : m / 2) && s2 == m;
            return top.size() == 2 && top[0] == d1 && top[1] == d2 &&
                   ctx->coset_size(std::uint32_t(d1)) == s1 &&
                   ctx->coset_size(std::uint32_t(d2)) == s2 && sizes;
        });
    }
    for (unsigned m = 4; m <= 12; ++m) {
        unsigned imax = (m + 3) / 4;
        std::string id = "leader ladder q=3 m=" + std::to_string(m) +
                         " i<=" + std::to_string(imax);
        check(out, id, "i-th largest leader formula matches scan", [&](std::string& actual) {
            auto ctx = CosetContext::build(3, m);
            auto top = ctx->largest_leaders(imax);
            for (unsigned i = 1; i <= imax; ++i)
                if (top.at(i - 1) != delta_closed_form(m, i)) {
                    actual = "mismatch at i=" + std::to_string(i);
                    return false;
                }
            actual = "all " + std::to_string(imax) + " match";
            return true;
        });
    }
}

// --- 5: smallest leader >= s ------------------------------------------------

void criterion_bose_examples(const RunLimits&, std::vector<Check>& out) {
    struct Example {
        std::uint64_t q;
        unsigned m;
        std::uint32_t s, want;
    };
    const Example examples[] = {{3, 6, 110, 112}, {3, 5, 29, 31}, {7, 5, 393, 394}};
    for (const auto& ex : examples) {
        std::string id = "M(" + std::to_string(ex.s) + ") q=" + std::to_string(ex.q) +
                         " m=" + std::to_string(ex.m);
        check(out, id, std::to_string(ex.want) + " via closed form", [&](std::string& actual) {
            auto ctx = CosetContext::build(ex.q, ex.m);
            auto res = nds::smallest_leader_geq(ex.s, *ctx);
            std::uint32_t scan = ctx->first_leader_geq(ex.s);
            const char* path = res.path == nds::MPath::Scan ? "scan"
                               : res.path == nds::MPath::ClosedForm ? "closed form"
                                                                    : "closed form, verified";
            actual = std::to_string(res.value) + " via " + path + ", scan " +
                     std::to_string(scan);
            return res.value == ex.want && scan == ex.want && res.path != nds::MPath::Scan;
        });
    }
    for (std::uint64_t q : {3, 4, 5, 7}) {
        for (unsigned m = 2; m <= 6; ++m) {
            std::string id = "M agreement q=" + std::to_string(q) + " m=" + std::to_string(m);
            check(out, id, "closed-form path agrees with scan for every s", [&](std::string& actual) {
                auto ctx = CosetContext::build(q, m);
                for (std::uint32_t s = 2; s < ctx->n(); ++s) {
                    auto res = nds::smallest_leader_geq(s, *ctx);
                    if (res.value != ctx->first_leader_geq(s)) {
                        actual = "mismatch at s=" + std::to_string(s);
                        return false;
                    }
                }
                actual = "agree on " + std::to_string(ctx->n() - 2) + " values";
                return true;
            });
        }
    }
}

// --- 6: power moments --------------------------------------------------------

void criterion_moments(const RunLimits& limits, std::vector<Check>& out) {
    for (unsigned m : {3u, 5u}) {
        MomentReport rep = moment_checks(m, limits.threads);
        for (const auto& mc : rep.checks) {
            Check c;
            c.id = "moment m=" + std::to_string(m) + " " + mc.name;
            c.expected = std::to_string(mc.rhs);
            c.actual = std::to_string(mc.lhs);
            c.pass = mc.pass;
            out.push_back(std::move(c));
        }
    }
}

// --- 7: value distributions ---------------------------------------------------

void criterion_distributions(const RunLimits& limits, std::vector<Check>& out) {
    for (unsigned m : {3u, 5u}) {
        ValueDistribution measured;
        std::string id = "T distribution m=" + std::to_string(m);
        check(out, id, "combined rows match the closed-form table", [&](std::string& actual) {
            measured = t_value_distribution(m, limits.threads);
            ValueDistribution combined = combine_imaginary_rows(measured);
            ValueDistribution want = expected_t_distribution(m);
            actual = combined == want ? "match: " + combined.to_string()
                                      : "got " + combined.to_string();
            return combined == want;
        });
        check(out, "T rank support m=" + std::to_string(m),
              "no rank m-3 values (positive or negative)", [&](std::string& actual) {
                  std::int64_t pm = 1;
                  for (unsigned j = 0; j < m; ++j) pm *= 3;
                  const Eisenstein zero_row{pm, 0};
                  std::size_t bad = 0;
                  for (const auto& e : measured.entries) {
                      if (e.rank != int(m) - 3) continue;
                      // The zero pair is carried as a rank-0 row by
                      // convention; at m=3 it would otherwise be miscounted.
                      if (e.rank == 0 && e.value == zero_row && e.multiplicity == 1)
                          continue;
                      ++bad;
                  }
                  actual = std::to_string(bad) + " rank m-3 rows";
                  return bad == 0 && !measured.entries.empty();
              });
        check(out, "S distribution m=" + std::to_string(m),
              "matches the four-row table exactly", [&](std::string& actual) {
                  ValueDistribution got = s_value_distribution(m, limits.threads);
                  ValueDistribution want = expected_s_distribution(m);
                  actual = got == want ? "match: " + got.to_string() : "got " + got.to_string();
                  return got == want;
              });
    }
    for (unsigned m : {4u, 6u}) {
        check(out, "U distribution m=" + std::to_string(m),
              "matches the six-row table exactly", [&](std::string& actual) {
                  ValueDistribution got = u_value_distribution(m, limits.threads);
                  ValueDistribution want = expected_u_distribution(m);
                  actual = got == want ? "match: " + got.to_string() : "got " + got.to_string();
                  return got == want;
              });
    }
}

// --- 8: Griesmer equality for the one-weight family --------------------------

void criterion_griesmer(const RunLimits& limits, std::vector<Check>& out) {
    for (unsigned m = 3; m <= 7; ++m) {
        std::string id = "one-weight even-like family m=" + std::to_string(m);
        check(out, id, "enumeration matches and Griesmer bound met with equality",
              [&](std::string& actual) {
                  WeightDistribution cf = table_closed_form(Family::Delta1Tilde, m);
                  BchCode code = family_code(Family::Delta1Tilde, m);
                  WeightDistribution bf =
                      weight_distribution_bruteforce(code, limits.enum_cap);
                  std::uint32_t d = cf.w_min_nonzero();
                  BoundsReport rep = bounds_report(cf.n, cf.k, d, 3);
                  actual = params_str(cf.n, cf.k, d) + " griesmer sum " +
                           rep.griesmer.sum.str() + (cf == bf ? "" : ", enumeration differs");
                  return cf == bf && rep.griesmer.meets;
              });
    }
}

// --- 9: dimension formula ------------------------------------------------------

void criterion_dimension_formula(const RunLimits&, std::vector<Check>& out) {
    for (std::uint64_t q : {3, 4, 5}) {
        for (unsigned m = 2; m <= 6; ++m) {
            std::string id = "dimension formula q=" + std::to_string(q) +
                             " m=" + std::to_string(m);
            check(out, id, "formula equals constructed dimension on its whole range",
                  [&](std::string& actual) {
                      auto ctx = CosetContext::build(q, m);
                      std::uint32_t tested = 0;
                      for (std::uint32_t delta = 2; delta < ctx->n(); ++delta) {
                          std::uint32_t predicted;
                          try {
                              predicted = dimension_formula(q, m, delta);
                          } catch (const InvalidParameter&) {
                              continue; // outside the formula's validity range
                          }
                          BchCode code = build_code(q, m, delta);
                          if (code.dimension != predicted) {
                              actual = "mismatch at delta=" + std::to_string(delta) +
                                       ": formula " + std::to_string(predicted) + ", built " +
                                       std::to_string(code.dimension);
                              return false;
                          }
                          ++tested;
                      }
                      actual = tested == 0 ? "formula range is empty here"
                                           : std::to_string(tested) + " designed distances agree";
                      return true;
                  });
        }
    }
}

// --- 10: small designed distances ----------------------------------------------

void criterion_small_delta_distances(const RunLimits& limits, std::vector<Check>& out) {
    for (std::uint64_t q : {3, 4, 5}) {
        for (unsigned m = 2; m <= 6; ++m) {
            std::uint32_t want = std::gcd(std::uint64_t(m), q - 1) == 1 ? 3 : 2;
            std::string id = "distance delta=2 q=" + std::to_string(q) +
                             " m=" + std::to_string(m);
            check(out, id, "d = " + std::to_string(want), [&](std::string& actual) {
                BchCode code = build_code(q, m, 2);
                DistanceResult d = distance_for(code, limits);
                actual = (d.exact ? "d = " : "d >= ") + std::to_string(d.value);
                return d.exact && d.value == want;
            });
        }
    }
    check(out, "distance delta=3 q=3 m=4", "d = 4", [&](std::string& actual) {
        BchCode code = build_code(3, 4, 3);
        DistanceResult d = distance_for(code, limits);
        actual = (d.exact ? "d = " : "d >= ") + std::to_string(d.value);
        return d.exact && d.value == 4;
    });
    struct WitnessCase {
        std::uint64_t q;
        unsigned m;
        std::uint32_t delta, weight;
    };
    for (const auto& wc : {WitnessCase{4, 6, 3, 3}, WitnessCase{3, 4, 3, 4}}) {
        std::string id = "locator witness q=" + std::to_string(wc.q) +
                         " m=" + std::to_string(wc.m) + " w=" + std::to_string(wc.weight);
        check(out, id, "verified codeword of that weight", [&](std::string& actual) {
            BchCode code = build_code(wc.q, wc.m, wc.delta);
            auto word = locator_witness(code, wc.weight);
            if (!word) {
                actual = "no witness";
                return false;
            }
            std::uint32_t w = 0;
            for (auto s : *word) w += s != 0;
            actual = "weight " + std::to_string(w) + " codeword";
            return w == wc.weight;
        });
    }
}

// --- 11: secret-sharing ratio ---------------------------------------------------

void criterion_secret_sharing(const RunLimits&, std::vector<Check>& out) {
    struct Case {
        Family fam;
        unsigned m;
        bool want; // whether w_min/w_max > 2/3 should hold
    };
    const Case cases[] = {
        {Family::Delta1, 4, false}, {Family::Delta1, 5, true},
        {Family::Delta1, 6, true},  {Family::Delta2Tilde, 5, true},
        {Family::Delta2Tilde, 6, true},
    };
    for (const auto& c : cases) {
        std::string id = std::string("secret sharing ") + family_name(c.fam) +
                         " m=" + std::to_string(c.m);
        check(out, id,
              c.want ? "w_min/w_max > 2/3" : "w_min/w_max <= 2/3",
              [&](std::string& actual) {
                  SecretSharingReport rep =
                      secret_sharing_suitable(table_closed_form(c.fam, c.m));
                  actual = std::to_string(rep.w_min) + "/" + std::to_string(rep.w_max) +
                           (rep.suitable ? " > 2/3" : " <= 2/3");
                  return rep.suitable == c.want;
              });
    }
}

} // namespace

const char* criterion_title(int criterion) {
    switch (criterion) {
    case 1: return "worked-example code parameters";
    case 2: return "printed weight enumerators";
    case 3: return "closed-form tables vs enumeration";
    case 4: return "largest-leader closed forms";
    case 5: return "smallest-leader-geq agreement";
    case 6: return "power-moment identities";
    case 7: return "exponential-sum value distributions";
    case 8: return "Griesmer equality, one-weight family";
    case 9: return "dimension formula consistency";
    case 10: return "small designed-distance minimums";
    case 11: return "secret-sharing weight ratios";
    }
    throw InvalidParameter("criterion number out of range");
}

std::vector<int> suite_criteria(std::string_view suite) {
    if (suite == "examples") return {1};
    if (suite == "tables") return {3};
    if (suite == "moments") return {6};
    if (suite == "bounds") return {8, 11};
    if (suite == "all") {
        std::vector<int> all(kCriterionCount);
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    throw InvalidParameter("unknown suite: " + std::string(suite));
}

VerificationReport run_criteria(std::string_view label, const std::vector<int>& criteria,
                                const RunLimits& limits) {
    VerificationReport rep;
    rep.suite = std::string(label);
    auto t0 = Clock::now();
    for (int c : criteria) {
        switch (c) {
        case 1: criterion_code_examples(limits, rep.checks); break;
        case 2: criterion_printed_enumerators(limits, rep.checks); break;
        case 3: criterion_tables(limits, rep.checks); break;
        case 4: criterion_leader_forms(limits, rep.checks); break;
        case 5: criterion_bose_examples(limits, rep.checks); break;
        case 6: criterion_moments(limits, rep.checks); break;
        case 7: criterion_distributions(limits, rep.checks); break;
        case 8: criterion_griesmer(limits, rep.checks); break;
        case 9: criterion_dimension_formula(limits, rep.checks); break;
        case 10: criterion_small_delta_distances(limits, rep.checks); break;
        case 11: criterion_secret_sharing(limits, rep.checks); break;
        default: throw InvalidParameter("criterion number out of range");
        }
    }
    rep.total_ms = ms_since(t0);
    rep.overall = true;
    for (const auto& c : rep.checks) rep.overall = rep.overall && c.pass;
    return rep;
}

VerificationReport run_suite(std::string_view suite, const RunLimits& limits) {
    return run_criteria(suite, suite_criteria(suite), limits);
}

} // namespace projbch
