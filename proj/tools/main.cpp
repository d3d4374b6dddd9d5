#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "projbch/analysis.hpp"
#include "projbch/bch.hpp"
#include "projbch/cosets.hpp"
#include "projbch/errors.hpp"
#include "projbch/nds.hpp"
#include "projbch/verify.hpp"
#include "projbch/weights.hpp"

namespace {

using nlohmann::json;
using namespace projbch;

constexpr int kExitBadParams = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitMismatch = 4;

struct GlobalOpts {
    std::string format = "text";
    std::string out;
    RunLimits limits;
};

// Every command renders its full output into one string first, so a run is
// byte-identical whether it lands on stdout or behind --out.
void deliver(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw InvalidParameter("cannot open output file: " + g.out);
    f.write(text.data(), std::streamsize(text.size()));
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    r += '"';
    return r;
}

std::string join_u8(const std::vector<std::uint8_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(unsigned(v[i]));
    }
    return s;
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

std::string method_text(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Enumeration: return "enumeration";
        case DistanceMethod::LowWeightSearch: return "low-weight search";
        default: return "bose bound";
    }
}

std::string method_token(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Enumeration: return "enumeration";
        case DistanceMethod::LowWeightSearch: return "low_weight_search";
        default: return "bose_bound";
    }
}

json code_json(const BchCode& c) {
    return json{{"q", c.q},
                {"m", c.m},
                {"n", c.n},
                {"delta", c.delta},
                {"even_like", c.even_like},
                {"k", c.dimension},
                {"bose_distance", c.bose_distance}};
}

json weights_json(const WeightDistribution& wd) {
    json rows = json::array();
    for (const auto& [w, c] : wd.counts)
        rows.push_back(json{{"w", w}, {"count", c.str()}});
    return rows;
}

std::string weights_block(const WeightDistribution& wd) {
    std::string s;
    for (const auto& [w, c] : wd.counts)
        s += "  " + std::to_string(w) + ": " + c.str() + "\n";
    return s;
}

// --- code-params -------------------------------------------------------------

int cmd_code_params(const GlobalOpts& g, std::uint64_t q, unsigned m,
                    std::uint32_t delta, bool even_like) {
    const BchCode code = build_code(q, m, delta, even_like);

    DistanceResult dist;
    bool cap_hit = false;
    try {
        dist = distance_for(code, g.limits);
    } catch (const CapExceeded&) {
        // Partial report: fall back to the designed-distance bound.
        cap_hit = true;
        dist.value = code.distance_lower_bound();
        dist.exact = false;
        dist.method = DistanceMethod::BchBound;
    }

    const auto deg = code.generator.degree();
    if (g.format == "json") {
        json j;
        j["code"] = code_json(code);
        j["distance"] = json{{"value", dist.value},
                             {"exact", dist.exact},
                             {"method", method_token(dist.method)}};
        json coeffs = json::array();
        for (std::uint8_t c : code.generator_symbols) coeffs.push_back(unsigned(c));
        j["generator"] = json{{"deg", deg}, {"coeffs", coeffs}};
        deliver(g, json_text(j));
    } else if (g.format == "csv") {
        std::string s = "field,value\n";
        s += "q," + std::to_string(code.q) + "\n";
        s += "m," + std::to_string(code.m) + "\n";
        s += "n," + std::to_string(code.n) + "\n";
        s += "delta," + std::to_string(code.delta) + "\n";
        s += std::string("even_like,") + (code.even_like ? "true" : "false") + "\n";
        s += "k," + std::to_string(code.dimension) + "\n";
        s += "bose_distance," + std::to_string(code.bose_distance) + "\n";
        s += "d," + std::to_string(dist.value) + "\n";
        s += std::string("d_exact,") + (dist.exact ? "true" : "false") + "\n";
        s += "method," + method_token(dist.method) + "\n";
        s += "generator_deg," + std::to_string(deg) + "\n";
        s += "generator," + csv_escape(join_u8(code.generator_symbols, ",")) + "\n";
        deliver(g, s);
    } else {
        char head[160];
        if (dist.exact)
            std::snprintf(head, sizeof head, "n=%u k=%u d_B=%u d=%u (%s)\n",
                          code.n, code.dimension, code.distance_lower_bound(),
                          dist.value, method_text(dist.method).c_str());
        else
            std::snprintf(head, sizeof head, "n=%u k=%u d_B=%u d >= %u (%s)\n",
                          code.n, code.dimension, code.distance_lower_bound(),
                          dist.value, method_text(dist.method).c_str());
        std::string s = head;
        s += "generator: deg=" + std::to_string(deg) + "\n";
        s += join_u8(code.generator_symbols, ",") + "\n";
        deliver(g, s);
    }
    if (cap_hit) {
        std::fprintf(stderr, "distance computation exceeded the enumeration cap; "
                             "reported d is only the designed-distance bound\n");
        return kExitCapExceeded;
    }
    return 0;
}

// --- weight-dist ---------------------------------------------------------------

struct DiffRow {
    std::uint32_t w;
    bigint closed;
    bigint brute;
};

std::vector<DiffRow> diff_rows(const WeightDistribution& cf,
                               const WeightDistribution& bf) {
    std::vector<DiffRow> rows;
    auto a = cf.counts.begin();
    auto b = bf.counts.begin();
    while (a != cf.counts.end() || b != bf.counts.end()) {
        if (b == bf.counts.end() || (a != cf.counts.end() && a->first < b->first)) {
            rows.push_back({a->first, a->second, 0});
            ++a;
        } else if (a == cf.counts.end() || b->first < a->first) {
            rows.push_back({b->first, 0, b->second});
            ++b;
        } else {
            if (a->second != b->second) rows.push_back({a->first, a->second, b->second});
            ++a;
            ++b;
        }
    }
    return rows;
}

int cmd_weight_dist(const GlobalOpts& g, const std::string& family_arg,
                    unsigned m, const std::string& method) {
    auto fam = family_from_name(family_arg);
    if (!fam) throw InvalidParameter("unknown family: " + family_arg);

    const bool want_cf = method != "brute_force";
    const bool want_bf = method != "closed_form";

    WeightDistribution cf, bf;
    if (want_cf) cf = table_closed_form(*fam, m);

    std::optional<BchCode> code;
    if (want_bf) {
        code.emplace(family_code(*fam, m));
        try {
            bf = weight_distribution_bruteforce(*code, g.limits.enum_cap);
        } catch (const CapExceeded& e) {
            if (want_cf && g.format == "text")
                deliver(g, "closed form:\n" + weights_block(cf));
            std::fprintf(stderr, "%s\n", e.what());
            return kExitCapExceeded;
        }
    }

    const WeightDistribution& shown = want_cf ? cf : bf;
    const std::string fname = family_name(*fam);

    if (method == "both") {
        const auto diff = diff_rows(cf, bf);
        if (g.format == "json") {
            json j;
            j["code"] = code_json(*code);
            j["family"] = fname;
            j["closed_form"] = weights_json(cf);
            j["brute_force"] = weights_json(bf);
            json d = json::array();
            for (const auto& r : diff)
                d.push_back(json{{"w", r.w},
                                 {"closed_form", r.closed.str()},
                                 {"brute_force", r.brute.str()}});
            j["diff"] = d;
            deliver(g, json_text(j));
        } else if (g.format == "csv") {
            std::string s = "weight,closed_form,brute_force\n";
            auto a = cf.counts.begin();
            auto b = bf.counts.begin();
            while (a != cf.counts.end() || b != bf.counts.end()) {
                std::uint32_t w;
                bigint x = 0, y = 0;
                if (b == bf.counts.end() ||
                    (a != cf.counts.end() && a->first <= b->first))
                    w = a->first;
                else
                    w = b->first;
                if (a != cf.counts.end() && a->first == w) x = (a++)->second;
                if (b != bf.counts.end() && b->first == w) y = (b++)->second;
                s += std::to_string(w) + "," + x.str() + "," + y.str() + "\n";
            }
            deliver(g, s);
        } else {
            std::string s = "family " + fname + " m=" + std::to_string(m) +
                            ": n=" + std::to_string(shown.n) +
                            " k=" + std::to_string(shown.k) + "\n";
            s += "closed form:\n" + weights_block(cf);
            s += "brute force:\n" + weights_block(bf);
            if (diff.empty()) {
                s += "diff: none\n";
            } else {
                s += "diff:\n";
                for (const auto& r : diff)
                    s += "  " + std::to_string(r.w) + ": closed=" + r.closed.str() +
                         " brute=" + r.brute.str() + "\n";
            }
            deliver(g, s);
        }
        return diff.empty() ? 0 : kExitMismatch;
    }

    if (g.format == "json") {
        json j;
        if (want_bf)
            j["code"] = code_json(*code);
        else
            j["code"] = json{{"q", shown.q}, {"m", m}, {"n", shown.n},
                             {"k", shown.k}, {"family", fname}};
        j["family"] = fname;
        j["method"] = method;
        j["weights"] = weights_json(shown);
        deliver(g, json_text(j));
    } else if (g.format == "csv") {
        std::string s = "weight,count\n";
        for (const auto& [w, c] : shown.counts)
            s += std::to_string(w) + "," + c.str() + "\n";
        deliver(g, s);
    } else {
        std::string s = "family " + fname + " m=" + std::to_string(m) +
                        ": n=" + std::to_string(shown.n) +
                        " k=" + std::to_string(shown.k) + "\n";
        s += weights_block(shown);
        deliver(g, s);
    }
    return 0;
}

// --- coset-leaders -------------------------------------------------------------

std::string blocks_text(const nds::Decomposition& dec) {
    std::string s;
    for (const auto& b : dec.blocks) s += "(" + join_u8(b.digits, ",") + ")";
    return s;
}

std::string path_text(nds::MPath p) {
    switch (p) {
        case nds::MPath::ClosedForm: return "closed form";
        case nds::MPath::ClosedFormVerified: return "closed form, verified";
        default: return "scan";
    }
}

std::string path_token(nds::MPath p) {
    switch (p) {
        case nds::MPath::ClosedForm: return "closed_form";
        case nds::MPath::ClosedFormVerified: return "closed_form_verified";
        default: return "scan";
    }
}

int cmd_coset_leaders(const GlobalOpts& g, std::uint64_t q, unsigned m,
                      std::uint64_t largest, bool all,
                      std::optional<std::uint64_t> value) {
    auto ctx = CosetContext::build(q, m);

    if (value) {
        if (*value >= ctx->n())
            throw InvalidParameter("value must lie in [0, n)");
        const auto s = std::uint32_t(*value);
        const auto word = nds::expand(s, unsigned(q), m);
        const auto dec = nds::decompose(word);
        const bool leader = ctx->is_leader(s);
        const auto res = nds::smallest_leader_geq(s, *ctx);

        if (g.format == "json") {
            json j{{"q", q},
                   {"m", m},
                   {"n", ctx->n()},
                   {"s", s},
                   {"digits", word.digits},
                   {"is_nds", nds::is_nds(word)},
                   {"is_leader", leader},
                   {"leader", ctx->leader_of(s)},
                   {"coset_size", ctx->coset_size(s)},
                   {"M", res.value},
                   {"path", path_token(res.path)}};
            json blocks = json::array();
            for (const auto& b : dec.blocks) blocks.push_back(b.digits);
            j["blocks"] = blocks;
            deliver(g, json_text(j));
        } else if (g.format == "csv") {
            std::string out = "field,value\n";
            out += "s," + std::to_string(s) + "\n";
            out += "n," + std::to_string(ctx->n()) + "\n";
            out += "expansion," + csv_escape(join_u8(word.digits, ",")) + "\n";
            out += "decomposition," + csv_escape(blocks_text(dec)) + "\n";
            out += std::string("is_nds,") + (nds::is_nds(word) ? "true" : "false") + "\n";
            out += std::string("is_leader,") + (leader ? "true" : "false") + "\n";
            out += "leader," + std::to_string(ctx->leader_of(s)) + "\n";
            out += "coset_size," + std::to_string(ctx->coset_size(s)) + "\n";
            out += "M," + std::to_string(res.value) + "\n";
            out += "path," + path_token(res.path) + "\n";
            deliver(g, out);
        } else {
            std::string out = "s=" + std::to_string(s) + " q=" + std::to_string(q) +
                              " m=" + std::to_string(m) +
                              " n=" + std::to_string(ctx->n()) + "\n";
            out += "expansion: " + join_u8(word.digits, ",") + "\n";
            out += "decomposition: " + blocks_text(dec) + "\n";
            out += std::string("nondecreasing: ") + (nds::is_nds(word) ? "yes" : "no") + "\n";
            out += "coset leader: " + std::to_string(ctx->leader_of(s)) +
                   " (size " + std::to_string(ctx->coset_size(s)) + ")\n";
            out += std::string("is leader: ") + (leader ? "yes" : "no") + "\n";
            out += "M(" + std::to_string(s) + ")=" + std::to_string(res.value) +
                   " (" + path_text(res.path) + ")\n";
            deliver(g, out);
        }
        return 0;
    }

    std::vector<std::uint32_t> list;
    if (all)
        list = ctx->leaders();
    else
        list = ctx->largest_leaders(std::size_t(largest));

    if (g.format == "json") {
        json rows = json::array();
        for (std::uint32_t s : list)
            rows.push_back(json{{"value", s}, {"size", ctx->coset_size(s)}});
        deliver(g, json_text(json{{"q", q}, {"m", m}, {"n", ctx->n()},
                                  {"leaders", rows}}));
    } else if (g.format == "csv") {
        std::string s = "leader,size\n";
        for (std::uint32_t v : list)
            s += std::to_string(v) + "," + std::to_string(ctx->coset_size(v)) + "\n";
        deliver(g, s);
    } else {
        std::string s;
        for (std::uint32_t v : list)
            s += std::to_string(v) + " (size " + std::to_string(ctx->coset_size(v)) + ")\n";
        deliver(g, s);
    }
    return 0;
}

// --- nds ----------------------------------------------------------------------

int cmd_nds(const GlobalOpts& g, std::uint64_t q, unsigned m, std::uint64_t value,
            bool show_successor) {
    auto ctx = CosetContext::build(q, m);
    if (value >= ctx->n()) throw InvalidParameter("value must lie in [0, n)");
    const auto s = std::uint32_t(value);
    const auto word = nds::expand(s, unsigned(q), m);
    const auto dec = nds::decompose(word);
    const auto cls = nds::classify_binary_leader(s, *ctx);
    const auto bound = nds::leader_bound_closed_form(s, unsigned(q), m);
    const auto res = nds::smallest_leader_geq(s, *ctx);

    const char* cls_text = cls == nds::LeaderClass::Leader ? "leader"
                           : cls == nds::LeaderClass::NotLeader ? "not a leader"
                                                                : "inapplicable";

    std::optional<nds::QaryWord> succ;
    if (show_successor) succ = nds::successor(word);

    if (g.format == "json") {
        json j{{"q", q},
               {"m", m},
               {"n", ctx->n()},
               {"s", s},
               {"digits", word.digits},
               {"is_nds", nds::is_nds(word)},
               {"binary_leader_test", cls_text},
               {"M", res.value},
               {"path", path_token(res.path)}};
        json blocks = json::array();
        for (const auto& b : dec.blocks) blocks.push_back(b.digits);
        j["blocks"] = blocks;
        if (bound)
            j["closed_form_bound"] = json{{"value", bound->value},
                                          {"exact", bound->exact}};
        else
            j["closed_form_bound"] = nullptr;
        if (succ) j["successor"] = succ->digits;
        deliver(g, json_text(j));
    } else if (g.format == "csv") {
        std::string out = "field,value\n";
        out += "s," + std::to_string(s) + "\n";
        out += "expansion," + csv_escape(join_u8(word.digits, ",")) + "\n";
        out += "blocks," + csv_escape(blocks_text(dec)) + "\n";
        out += std::string("is_nds,") + (nds::is_nds(word) ? "true" : "false") + "\n";
        out += std::string("binary_leader_test,") + cls_text + "\n";
        if (bound)
            out += "closed_form_bound," + std::to_string(bound->value) +
                   (bound->exact ? " (exact)" : " (lower bound)") + "\n";
        out += "M," + std::to_string(res.value) + "\n";
        out += "path," + path_token(res.path) + "\n";
        if (succ) out += "successor," + csv_escape(join_u8(succ->digits, ",")) + "\n";
        deliver(g, out);
    } else {
        std::string out = "s=" + std::to_string(s) + " q=" + std::to_string(q) +
                          " m=" + std::to_string(m) +
                          " n=" + std::to_string(ctx->n()) + "\n";
        out += "expansion: " + join_u8(word.digits, ",") + "\n";
        out += "blocks: " + blocks_text(dec) + "\n";
        out += std::string("nondecreasing: ") + (nds::is_nds(word) ? "yes" : "no") + "\n";
        out += std::string("binary-digit leader test: ") + cls_text + "\n";
        if (bound)
            out += "closed-form bound: " + std::to_string(bound->value) +
                   (bound->exact ? " (exact)" : " (lower bound)") + "\n";
        out += "M(" + std::to_string(s) + ")=" + std::to_string(res.value) +
               " (" + path_text(res.path) + ")\n";
        if (succ) out += "successor: " + join_u8(succ->digits, ",") + "\n";
        deliver(g, out);
    }
    return 0;
}

// --- verify --------------------------------------------------------------------

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
    const VerificationReport rep = run_suite(suite, g.limits);

    if (g.format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"id", c.id},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"pass", c.pass}});
        // Timings stay out of the JSON report so identical runs stay
        // byte-identical.
        json j{{"suite", rep.suite},
               {"overall", rep.overall},
               {"passed", rep.checks.size() - rep.failed()},
               {"failed", rep.failed()},
               {"checks", checks}};
        deliver(g, json_text(j));
    } else if (g.format == "csv") {
        std::string s = "id,pass,expected,actual\n";
        for (const auto& c : rep.checks)
            s += csv_escape(c.id) + "," + (c.pass ? "true" : "false") + "," +
                 csv_escape(c.expected) + "," + csv_escape(c.actual) + "\n";
        deliver(g, s);
    } else {
        std::string s = "suite " + rep.suite + ": " +
                        std::to_string(rep.checks.size()) + " checks\n";
        for (const auto& c : rep.checks) {
            char line[64];
            std::snprintf(line, sizeof line, " (%.1f ms)\n", c.ms);
            s += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.id +
                 ": expected " + c.expected + ", got " + c.actual + line;
        }
        char foot[96];
        std::snprintf(foot, sizeof foot, "overall: %s (%zu of %zu, %.0f ms)\n",
                      rep.overall ? "PASS" : "FAIL",
                      rep.checks.size() - rep.failed(), rep.checks.size(),
                      rep.total_ms);
        s += foot;
        deliver(g, s);
    }
    return rep.overall ? 0 : 1;
}

template <typename Body>
int guarded(Body&& body) {
    try {
        return body();
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const InvalidParameter& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const Unsupported& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadParams;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"narrow-sense BCH codes of length (q^m-1)/(q-1)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--enum-cap", g.limits.enum_cap,
                   "codeword-enumeration budget (symbol operations)")
        ->capture_default_str();
    app.add_option("--weight-budget", g.limits.weight_budget,
                   "low-weight search budget; 0 derives one from the Bose bound")
        ->capture_default_str();
    app.add_option("--threads", g.limits.threads, "worker threads for sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    std::uint64_t q = 3;
    unsigned m = 3;
    std::uint32_t delta = 2;
    bool even_like = false;

    auto* cp = app.add_subcommand("code-params",
                                  "construct a code and report n, k, d");
    cp->add_option("--q", q, "subfield size")->required();
    cp->add_option("--m", m, "extension degree")->required();
    cp->add_option("--delta", delta, "designed distance")->required();
    cp->add_flag("--even-like", even_like, "add x-1 to the generator");

    std::string family = "delta1";
    std::string method = "closed_form";
    auto* wd = app.add_subcommand("weight-dist",
                                  "weight distribution of a table family");
    wd->add_option("--family", family,
                   "delta1, delta1-tilde, delta2 or delta2-tilde")
        ->required();
    wd->add_option("--m", m, "extension degree (q=3)")->required();
    wd->add_option("--method", method, "computation path")
        ->check(CLI::IsMember({"closed_form", "brute_force", "both"}))
        ->capture_default_str();

    std::uint64_t largest = 0;
    bool all = false;
    std::optional<std::uint64_t> value;
    auto* cl = app.add_subcommand("coset-leaders",
                                  "q-cyclotomic coset leaders modulo n");
    cl->add_option("--q", q, "subfield size")->required();
    cl->add_option("--m", m, "extension degree")->required();
    auto* lopt = cl->add_option("--largest", largest, "show the K largest leaders");
    auto* aopt = cl->add_flag("--all", all, "show every leader");
    auto* vopt = cl->add_option("--value", value,
                                "inspect one value: decomposition, leader status, M");
    lopt->excludes(aopt)->excludes(vopt);
    aopt->excludes(vopt);

    std::uint64_t nds_value = 0;
    bool show_successor = false;
    auto* nd = app.add_subcommand("nds",
                                  "nondecreasing-sequence view of a q-ary expansion");
    nd->add_option("--q", q, "subfield size")->required();
    nd->add_option("--m", m, "digit count")->required();
    nd->add_option("--value", nds_value, "value to expand")->required();
    nd->add_flag("--successor", show_successor, "also print the next NDS word");

    std::string suite = "all";
    auto* vf = app.add_subcommand("verify", "run a reproduction suite");
    vf->add_option("--suite", suite,
                   "examples, tables, moments, bounds or all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }

    if (cp->parsed())
        return guarded([&] { return cmd_code_params(g, q, m, delta, even_like); });
    if (wd->parsed())
        return guarded([&] { return cmd_weight_dist(g, family, m, method); });
    if (cl->parsed()) {
        if (!all && largest == 0 && !value) {
            std::fprintf(stderr, "error: pick one of --largest, --all, --value\n");
            return kExitBadParams;
        }
        return guarded([&] { return cmd_coset_leaders(g, q, m, largest, all, value); });
    }
    if (nd->parsed())
        return guarded([&] { return cmd_nds(g, q, m, nds_value, show_successor); });
    return guarded([&] { return cmd_verify(g, suite); });
}
