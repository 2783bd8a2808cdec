#ifndef FSCHUR_CHECKED_HPP
#define FSCHUR_CHECKED_HPP

#include <cstdint>
#include <stdexcept>

namespace fschur {

using Int = std::int64_t;

// All coefficient arithmetic is exact: overflow throws, never wraps.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace fschur

#endif
