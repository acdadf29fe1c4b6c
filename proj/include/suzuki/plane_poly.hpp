#ifndef SUZUKI_PLANE_POLY_HPP
#define SUZUKI_PLANE_POLY_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "suzuki/params.hpp"

namespace suzuki {

struct PlaneTerm {
    int64_t y_exp = 0;
    int64_t z_exp = 0;
    auto operator<=>(const PlaneTerm&) const = default;
};

/**
 * Element of GF(2)[y,z] modulo the curve relation z^q + z = y^{q0+q} + y^{q0+1},
 * stored as the sorted set of exponent pairs with coefficient 1.  Addition is
 * symmetric difference.  A poly is canonical when every z-exponent is < q;
 * `known_canonical` tracks that for the params of the operation that built it.
 */
class PlanePoly {
  public:
    PlanePoly() = default; // zero
    static PlanePoly one();
    static PlanePoly monomial(int64_t y_exp, int64_t z_exp);
    /// Symmetric-difference collapse of an arbitrary term list.
    static PlanePoly from_terms(std::vector<PlaneTerm> terms, bool canonical_hint = false);

    const std::vector<PlaneTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool known_canonical() const { return canonical_; }
    bool max_z_exp_below(int64_t q) const;

    friend PlanePoly operator+(const PlanePoly& f, const PlanePoly& g);
    bool operator==(const PlanePoly& other) const { return terms_ == other.terms_; }

  private:
    friend PlanePoly curve_reduce(const SuzukiParams&, PlanePoly);
    std::vector<PlaneTerm> terms_;
    bool canonical_ = true; // zero is canonical for every q
};

/// Rewrites z^j with j >= q via z^q -> z + y^{q0+q} + y^{q0+1} until canonical.
PlanePoly curve_reduce(const SuzukiParams& p, PlanePoly f);

/// Curve-reduced product.
PlanePoly mul(const SuzukiParams& p, const PlanePoly& f, const PlanePoly& g);

PlanePoly pow(const SuzukiParams& p, const PlanePoly& base, int64_t e);

/// Canonical image of y^a z^b h1^c h2^d; exponents unrestricted.
PlanePoly embed_monomial(const SuzukiParams& p, int64_t a, int64_t b, int64_t c, int64_t d);

/// embed_monomial with cached powers of h1 and h2; cheaper across many calls.
class Embedder {
  public:
    explicit Embedder(const SuzukiParams& p);
    const SuzukiParams& params() const { return p_; }
    const PlanePoly& h1() const { return h1_pows_[1]; }
    const PlanePoly& h2() const { return h2_pows_[1]; }
    PlanePoly embed(int64_t a, int64_t b, int64_t c, int64_t d);

  private:
    const PlanePoly& h1_pow(int64_t c);
    const PlanePoly& h2_pow(int64_t d);
    SuzukiParams p_;
    std::vector<PlanePoly> h1_pows_, h2_pows_;
};

/**
 * The Cartier operator from its definition: for canonical f, returns the
 * unique h with C(f*dy) = h*dy.
 *
 * Each term with odd z-exponent has one factor of z rewritten through the
 * curve relation (z = z^q + y^{q0+q} + y^{q0+1}), making every z-exponent
 * even; terms with odd y-exponent then form the g^2*y part of
 * f = f0^2 + g^2*y, and h = g is read off by halving exponents.  Curve
 * reduction is deliberately deferred until after the square-root split:
 * reducing between the two steps reintroduces odd z-exponents and breaks
 * the parity argument.
 */
PlanePoly cartier_oracle(const SuzukiParams& p, const PlanePoly& f);

/// True iff C((f^2*g)*dy) = f*C(g*dy) and C((f+g)*dy) = C(f*dy) + C(g*dy).
bool semilinearity_check(const SuzukiParams& p, const PlanePoly& f, const PlanePoly& g);

} // namespace suzuki

#endif // SUZUKI_PLANE_POLY_HPP
