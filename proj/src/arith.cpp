#include "uqg/arith.hpp"

#include <algorithm>

namespace uqg {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q) {
    if (q < 2) return std::nullopt;
    auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    uint32_t n = 0;
    for (uint64_t r = q; r > 1; r /= f[0]) ++n;
    return std::make_pair(static_cast<uint32_t>(f[0]), n);
}

uint64_t ipow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (uint64_t f : prime_factors(n)) r = r / f * (f - 1);
    return r;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace uqg
