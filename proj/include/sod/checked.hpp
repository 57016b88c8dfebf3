#pragma once

#include <cstdint>
#include <stdexcept>

namespace sod {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// Exact binomial coefficient; 0 outside the Pascal triangle.
i64 binomial(i64 n, i64 k);

/// Errors raised when two values live over different Gr(k, n).
class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed user input (weights, ranks, CLI arguments).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace sod
