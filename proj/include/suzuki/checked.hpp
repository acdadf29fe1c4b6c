#ifndef SUZUKI_CHECKED_HPP
#define SUZUKI_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace suzuki {

// Every derived constant and point count is exact; arithmetic that would
// exceed 64 signed bits throws instead of wrapping.
class overflow_error : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

// 2^e; reports the width a caller would need when it does not fit.
inline int64_t checked_pow2(int64_t e) {
    if (e < 0) throw std::invalid_argument("checked_pow2: negative exponent");
    if (e > 62) {
        throw overflow_error("2^" + std::to_string(e) + " requires " + std::to_string(e + 2) +
                             "-bit signed integers (64 available)");
    }
    return int64_t{1} << e;
}

inline int64_t checked_pow(int64_t base, int64_t e) {
    if (e < 0) throw std::invalid_argument("checked_pow: negative exponent");
    int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = checked_mul(r, base);
        e >>= 1;
        if (e > 0) base = checked_mul(base, base);
    }
    return r;
}

} // namespace suzuki

#endif // SUZUKI_CHECKED_HPP
