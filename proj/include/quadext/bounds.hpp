#pragma once

#include <cstdint>

#include "quadext/errors.hpp"

namespace quadext {

/// Exact integer square root: the largest r with r*r <= n.
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = n;
    std::uint64_t x = (r + 1) / 2;
    while (x < r) {
        r = x;
        x = (x + n / x) / 2;
    }
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

/// floor(q + 1 + 2 g sqrt(q)), computed as q + 1 + isqrt(4 g^2 q).
inline std::uint64_t hasse_weil_bound(std::uint64_t q, std::uint64_t g) {
    if (q == 0 || g > 1000000 || q > 1000000) throw DomainError("bound arguments out of range");
    return q + 1 + isqrt(4 * g * g * q);
}

/// q + 1 + g * floor(2 sqrt(q)).
inline std::uint64_t serre_bound(std::uint64_t q, std::uint64_t g) {
    if (q == 0 || g > 1000000 || q > 1000000) throw DomainError("bound arguments out of range");
    return q + 1 + g * isqrt(4 * q);
}

}  // namespace quadext
