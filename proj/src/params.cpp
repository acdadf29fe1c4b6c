#include "suzuki/params.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "suzuki/checked.hpp"

namespace suzuki {

SuzukiParams make_params(int m) {
    if (m < 1) throw std::invalid_argument("make_params: m must be >= 1, got " + std::to_string(m));
    // g = q0*(q-1) < 2^{3m+1} needs 3m+2 signed bits.
    if (3 * int64_t{m} + 2 > 62) {
        throw overflow_error("make_params: m=" + std::to_string(m) + " requires " +
                             std::to_string(3 * int64_t{m} + 2) + "-bit integers (64 available)");
    }
    SuzukiParams p;
    p.m = m;
    p.q0 = checked_pow2(m);
    p.q = checked_pow2(2 * int64_t{m} + 1);
    p.g = checked_mul(p.q0, p.q - 1);
    p.vy = p.q;
    p.vz = p.q + p.q0;
    p.vh1 = p.q + 2 * p.q0;
    p.vh2 = p.q + 2 * p.q0 + 1;
    p.sg_generators = {p.vy, p.vz, p.vh1, p.vh2};
    int64_t d = 0;
    for (int64_t gen : p.sg_generators) d = std::gcd(d, gen);
    if (d != 1) throw std::logic_error("make_params: semigroup generators are not coprime");
    return p;
}

int64_t a_number_formula(int m) {
    const int64_t q0 = make_params(m).q0;
    // q0(q0+1)(2q0+1) is divisible by 6 for every q0.
    return checked_mul(checked_mul(q0, q0 + 1), 2 * q0 + 1) / 6;
}

int64_t nu_g_formula(int m) {
    const int64_t q0 = make_params(m).q0;
    return checked_mul(checked_mul(q0, 10 * q0 + 7), q0 - 1) / 6;
}

namespace {

int64_t simplex_point_count(int64_t limit) {
    if (limit < 0) return 0;
    int64_t count = 0;
    for (int64_t a = 0; a <= limit; ++a) {
        for (int64_t c = 0; a + c <= limit; ++c) {
            for (int64_t d = 0; a + c + d <= limit; ++d) ++count;
        }
    }
    return count;
}

} // namespace

int64_t lattice_count(int m) {
    const int64_t q0 = make_params(m).q0;
    return checked_add(simplex_point_count(q0 - 1), simplex_point_count(q0 - 2));
}

int64_t semigroup_count(int m) {
    const SuzukiParams p = make_params(m);
    const int64_t top = 2 * p.g - 2;
    std::vector<uint8_t> reachable(static_cast<size_t>(top) + 1, 0);
    reachable[0] = 1;
    for (int64_t gen : p.sg_generators) {
        for (int64_t v = gen; v <= top; ++v) {
            reachable[static_cast<size_t>(v)] |= reachable[static_cast<size_t>(v - gen)];
        }
    }
    int64_t count = 0;
    for (uint8_t r : reachable) count += r;
    return count;
}

int64_t ZetaData::power_sum(int k) const {
    if (k < 0) throw std::invalid_argument("power_sum: k must be >= 0");
    int64_t prev = 2;             // s_0
    int64_t cur = -linear_coeff;  // s_1
    if (k == 0) return prev;
    for (int i = 2; i <= k; ++i) {
        const int64_t next =
            checked_sub(checked_mul(-linear_coeff, cur), checked_mul(norm, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<int64_t> ZetaData::power_sums(int k_max) const {
    std::vector<int64_t> s;
    s.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) s.push_back(power_sum(k));
    return s;
}

ZetaData zeta_data(const SuzukiParams& p) {
    return ZetaData{2 * p.q0, p.q, p.g};
}

int64_t point_count_zeta(int m, int k) {
    if (k < 1) throw std::invalid_argument("point_count_zeta: k must be >= 1");
    const SuzukiParams p = make_params(m);
    const ZetaData z = zeta_data(p);
    const int64_t qk = checked_pow(p.q, k);
    return checked_sub(checked_add(qk, 1), checked_mul(p.g, z.power_sum(k)));
}

bool is_maximal_over(int m, int k) {
    if (k < 1) throw std::invalid_argument("is_maximal_over: k must be >= 1");
    const SuzukiParams p = make_params(m);
    // q = 2^{2m+1}, so q^{k/2} is an integer only for even k.
    if (k % 2 != 0) return false;
    const int64_t half = checked_pow2((2 * int64_t{m} + 1) * (k / 2));
    const int64_t bound = checked_add(checked_add(checked_pow(p.q, k), 1),
                                      checked_mul(2 * p.g, half));
    return point_count_zeta(m, k) == bound;
}

bool a_number_ratio_in_bounds(int m) {
    const SuzukiParams p = make_params(m);
    const int64_t a = a_number_formula(m);
    // 1/6 < a/g  <=>  g < 6a;  a/g < 1/6 + 1/2^{m+1}  <=>  6*2^{m+1}*a < (2^{m+1}+6)*g.
    const int64_t two_m1 = checked_pow2(m + 1);
    const bool lower = p.g < checked_mul(6, a);
    const bool upper =
        checked_mul(checked_mul(6, two_m1), a) < checked_mul(checked_add(two_m1, 6), p.g);
    return lower && upper;
}

} // namespace suzuki
