#include "projbch/cosets.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace projbch {

namespace {
constexpr std::uint64_t kLengthLimit = std::uint64_t(1) << 24;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}
} // namespace

bool is_prime_power(std::uint64_t q, unsigned* p_out, unsigned* s_out) {
    if (q < 2) return false;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q; // q itself prime
    unsigned s = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p) return false;
        t /= p;
        ++s;
    }
    if (p_out) *p_out = unsigned(p);
    if (s_out) *s_out = s;
    return true;
}

std::shared_ptr<const CosetContext> CosetContext::build(std::uint64_t q, unsigned m) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const CosetContext>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({q, m});
        if (it != cache.end()) return it->second;
    }

    if (!is_prime_power(q)) throw InvalidParameter("q must be a prime power >= 2");
    if (m < 2) throw InvalidParameter("m must be >= 2");
    std::uint64_t n = 0, t = 1;
    for (unsigned i = 0; i < m; ++i) {
        n += t;
        t *= q;
        if (n > kLengthLimit) throw Unsupported("length exceeds 2^24");
    }

    auto ctx = std::shared_ptr<CosetContext>(new CosetContext());
    ctx->q_ = q;
    ctx->m_ = m;
    ctx->n_ = std::uint32_t(n);
    ctx->leader_.assign(n, 0);
    ctx->size_.assign(n, 0);

    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        orbit.clear();
        std::uint64_t cur = s;
        do {
            orbit.push_back(std::uint32_t(cur));
            seen[cur] = true;
            cur = cur * q % n;
        } while (cur != s);
        for (std::uint32_t e : orbit) {
            ctx->leader_[e] = s;
            ctx->size_[e] = std::uint8_t(orbit.size());
        }
        ctx->leaders_.push_back(s);
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, _] = cache.emplace(std::make_pair(q, m), ctx);
    return it->second;
}

CyclotomicCoset CosetContext::coset_of(std::uint32_t s) const {
    check(s);
    CyclotomicCoset c;
    c.leader = leader_[s];
    std::uint64_t cur = c.leader;
    do {
        c.elements.push_back(std::uint32_t(cur));
        cur = cur * q_ % n_;
    } while (cur != c.leader);
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

std::vector<std::uint32_t> CosetContext::largest_leaders(std::size_t count) const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = leaders_.size(); i-- > 0 && out.size() < count;)
        out.push_back(leaders_[i]);
    return out;
}

std::uint32_t CosetContext::first_leader_geq(std::uint32_t s) const {
    if (s >= n_) throw InvalidParameter("coset index out of range");
    auto it = std::lower_bound(leaders_.begin(), leaders_.end(), s);
    return it == leaders_.end() ? n_ : *it;
}

std::uint64_t delta_closed_form(unsigned m, unsigned i) {
    if (i == 0) throw InvalidParameter("i must be >= 1");
    if (m > 40) throw Unsupported("closed form overflows 64 bits for m > 40");
    if (i <= 2) {
        if (m < 2) throw InvalidParameter("m must be >= 2");
    } else {
        if (m < 4) throw InvalidParameter("m must be >= 4 for i >= 3");
        if (i > (m + 3) / 4) throw InvalidParameter("i exceeds ceil(m/4)");
    }
    // 3^{m-1} - 1 - (3^{floor((m-3)/2) + i} - 1)/2; for i <= 2 the inner
    // exponent simplifies to floor((m-3+2i)/2) which is >= 0 for all m >= 2.
    const int e = (int(m) - 3 + 2 * int(i)) / 2;
    return ipow(3, m - 1) - 1 - (ipow(3, unsigned(e)) - 1) / 2;
}

unsigned delta_coset_size_closed_form(unsigned m, unsigned i) {
    if (m < 2) throw InvalidParameter("m must be >= 2");
    if (i == 1) return m % 2 ? m : m / 2;
    if (i == 2) return m;
    throw InvalidParameter("coset size closed form only for i in {1, 2}");
}

std::uint64_t small_s_guarantee_bound(std::uint64_t q, unsigned m) {
    const std::uint64_t qm = ipow(q, m);
    const std::uint64_t n = (qm - 1) / (q - 1);
    return n * ipow(q, (m + 1) / 2) / (qm - 1);
}

unsigned coset_size_small_s(std::uint64_t q, unsigned m, std::uint64_t s) {
    if (m < 2) throw InvalidParameter("m must be >= 2");
    if (s < 1 || s > small_s_guarantee_bound(q, m))
        throw InvalidParameter("s outside the guaranteed small-coset range");
    return m;
}

} // namespace projbch
