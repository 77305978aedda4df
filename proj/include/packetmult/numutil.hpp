#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace packetmult {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long ipow(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && r > (1LL << 62) / (base < 0 ? -base : base))
            throw std::overflow_error("ipow overflow");
        r *= base;
    }
    return r;
}

inline long long isqrt_floor(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// gcd/lcm from <numeric> work for long long; re-exported here for locality.
using std::gcd;
using std::lcm;

}  // namespace packetmult
