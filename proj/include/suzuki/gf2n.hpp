#ifndef SUZUKI_GF2N_HPP
#define SUZUKI_GF2N_HPP

#include <cstdint>

namespace suzuki {

// Polynomials over GF(2) packed into integers, bit i = coefficient of x^i.
namespace gf2poly {

int degree(uint64_t f); // -1 for the zero polynomial
uint64_t mul(uint64_t a, uint64_t b);
uint64_t mod(uint64_t a, uint64_t f);
uint64_t gcd(uint64_t a, uint64_t b);

/// Rabin test: f of degree n is irreducible iff x^{2^n} = x (mod f) and
/// gcd(x^{2^k} - x, f) = 1 for every proper divisor k of n.
bool is_irreducible(uint64_t f);

/// Smallest irreducible of degree n in ascending integer order.
uint64_t least_irreducible(int n);

} // namespace gf2poly

/**
 * GF(2^n), 1 <= n <= 24, polynomial basis modulo the lexicographically least
 * irreducible of degree n (deterministic across runs).  Elements are raw
 * n-bit values; every operation rejects values with bits at or above n,
 * which is how use of an element from a different field spec surfaces.
 */
class Gf2n {
  public:
    explicit Gf2n(int n);

    int degree() const { return n_; }
    uint32_t modulus() const { return modulus_; }
    uint64_t order() const { return uint64_t{1} << n_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t square(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Unique square root in characteristic 2: a^{2^{n-1}}.
    uint32_t sqrt(uint32_t a) const;

  private:
    void check(uint32_t a) const;
    uint32_t reduce(uint64_t v) const;

    int n_ = 0;
    uint32_t modulus_ = 0;
};

/**
 * Brute-force count of points of S_m over GF(q^k), k in {1,2,4}: pairs
 * (y,z) in GF(q^k)^2 with z^q + z = y^{q0}(y^q + y), plus one for P_inf.
 * Enforces the desk-scale bound q^k <= 2^24.
 */
int64_t point_count_naive(int m, int k);

} // namespace suzuki

#endif // SUZUKI_GF2N_HPP
