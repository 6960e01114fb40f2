#pragma once

#include <cstdint>
#include <string>

#include "hjline/error.hpp"

namespace hjline {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b)
{
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw UsageError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
    }
    return out;
}

inline Count checked_mul(Count a, Count b)
{
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw UsageError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

inline Count checked_pow(Count base, Count exponent)
{
    Count out = 1;
    for (Count i = 0; i < exponent; ++i) {
        out = checked_mul(out, base);
        if (out == 1 && base == 1) {
            break;
        }
    }
    return out;
}

// C(n + 1, 2): number of pairs {p1 < p2} drawn from {0, ..., n}.
inline Count pairs_up_to(Count n)
{
    const Count a = checked_add(n, 1);
    return (a % 2 == 0) ? checked_mul(a / 2, n) : checked_mul(a, n / 2);
}

} // namespace hjline
