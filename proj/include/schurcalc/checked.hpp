#pragma once

#include <cstdint>
#include <stdexcept>

namespace schurcalc {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("schurcalc: int64 overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("schurcalc: int64 overflow in multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace schurcalc
