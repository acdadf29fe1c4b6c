#include "suzuki/gf2n.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "suzuki/params.hpp"

namespace suzuki {

namespace gf2poly {

int degree(uint64_t f) {
    return f == 0 ? -1 : 63 - std::countl_zero(f);
}

uint64_t mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return r;
}

uint64_t mod(uint64_t a, uint64_t f) {
    const int df = degree(f);
    if (df < 0) throw std::invalid_argument("gf2poly::mod: zero modulus");
    for (int da = degree(a); da >= df; da = degree(a)) a ^= f << (da - df);
    return a;
}

uint64_t gcd(uint64_t a, uint64_t b) {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(uint64_t f) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const uint64_t x = mod(2, f);
    uint64_t t = x; // x^{2^i} mod f
    for (int i = 1; i < n; ++i) {
        t = mod(mul(t, t), f);
        if (n % i == 0 && gcd(t ^ x, f) != 1) return false;
    }
    t = mod(mul(t, t), f); // x^{2^n} mod f
    return t == x;
}

uint64_t least_irreducible(int n) {
    for (uint64_t cand = uint64_t{1} << n; cand < uint64_t{1} << (n + 1); ++cand) {
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("least_irreducible: none found"); // unreachable
}

} // namespace gf2poly

Gf2n::Gf2n(int n) {
    if (n < 1 || n > 24) {
        throw std::invalid_argument("Gf2n: extension degree must be in [1,24], got " +
                                    std::to_string(n));
    }
    n_ = n;
    modulus_ = static_cast<uint32_t>(gf2poly::least_irreducible(n));
}

void Gf2n::check(uint32_t a) const {
    if (a >> n_) {
        throw std::invalid_argument("Gf2n: value " + std::to_string(a) +
                                    " is not a canonical GF(2^" + std::to_string(n_) +
                                    ") element (mismatched field spec?)");
    }
}

uint32_t Gf2n::reduce(uint64_t v) const {
    for (int d = gf2poly::degree(v); d >= n_; d = gf2poly::degree(v)) {
        v ^= uint64_t{modulus_} << (d - n_);
    }
    return static_cast<uint32_t>(v);
}

uint32_t Gf2n::add(uint32_t a, uint32_t b) const {
    check(a);
    check(b);
    return a ^ b;
}

uint32_t Gf2n::mul(uint32_t a, uint32_t b) const {
    check(a);
    check(b);
    return reduce(gf2poly::mul(a, b));
}

uint32_t Gf2n::square(uint32_t a) const {
    check(a);
    return reduce(gf2poly::mul(a, a));
}

uint32_t Gf2n::pow(uint32_t a, uint64_t e) const {
    check(a);
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = square(a);
    }
    return r;
}

uint32_t Gf2n::sqrt(uint32_t a) const {
    check(a);
    for (int i = 0; i < n_ - 1; ++i) a = square(a);
    return a;
}

int64_t point_count_naive(int m, int k) {
    if (k != 1 && k != 2 && k != 4) {
        throw std::invalid_argument("point_count_naive: k must be 1, 2 or 4");
    }
    make_params(m); // validates m
    const int n = (2 * m + 1) * k;
    if (n > 24) {
        throw std::invalid_argument("point_count_naive: q^k = 2^" + std::to_string(n) +
                                    " exceeds the 2^24 desk-scale bound");
    }
    const Gf2n field(n);
    const auto size = static_cast<uint32_t>(field.order());

    // z -> z^q + z is 2-linear; tally its values, then sum tallies over y.
    std::vector<uint32_t> lhs_count(size, 0);
    for (uint32_t z = 0; z < size; ++z) {
        uint32_t zq = z;
        for (int i = 0; i < 2 * m + 1; ++i) zq = field.square(zq);
        ++lhs_count[zq ^ z];
    }
    int64_t affine = 0;
    for (uint32_t y = 0; y < size; ++y) {
        uint32_t yq0 = y;
        for (int i = 0; i < m; ++i) yq0 = field.square(yq0);
        uint32_t yq = yq0;
        for (int i = 0; i < m + 1; ++i) yq = field.square(yq);
        const uint32_t rhs = field.mul(yq0, yq ^ y);
        affine += lhs_count[rhs];
    }
    return affine + 1;
}

} // namespace suzuki
