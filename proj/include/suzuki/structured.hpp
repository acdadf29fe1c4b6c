#ifndef SUZUKI_STRUCTURED_HPP
#define SUZUKI_STRUCTURED_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "suzuki/bit_matrix.hpp"
#include "suzuki/params.hpp"
#include "suzuki/plane_poly.hpp"

namespace suzuki {

/// Exponents of y^a z^b h1^c h2^d.  Normal form: b <= 1, c <= q0-1, d <= q0-1
/// (a is only bounded by the pole-order cut when enumerating bases).
struct StructuredMonomial {
    int64_t a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const StructuredMonomial&) const = default;
};

int64_t pole_order(const SuzukiParams& p, const StructuredMonomial& mon);
bool is_normal_form(const SuzukiParams& p, const StructuredMonomial& mon);

/// GF(2) combination of structured monomials; addition is symmetric difference.
class StructuredPoly {
  public:
    StructuredPoly() = default;
    static StructuredPoly monomial(const StructuredMonomial& mon);
    static StructuredPoly from_terms(std::vector<StructuredMonomial> terms);

    const std::vector<StructuredMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    friend StructuredPoly operator+(const StructuredPoly& f, const StructuredPoly& g);
    bool operator==(const StructuredPoly&) const = default;

  private:
    std::vector<StructuredMonomial> terms_; // sorted, no duplicates
};

/**
 * Rewrites to normal form with the curve relations
 *   z^2 = y*h1 + h2,  h1^{q0} = z + y^{q0+1},  h2^{q0} = h1 + z*y^{q0}.
 * d-violations are reduced first, then c, then b, rescanning after every
 * replacement; no replacement increases pole order.  A hard iteration cap of
 * 64*q0*(initial term count) turns any nontermination into an error.
 */
StructuredPoly normalize(const SuzukiParams& p, const StructuredPoly& f);

/// The g normal-form monomials with pole order <= 2g-2, ascending by pole
/// order.  Their differentials y^a z^b h1^c h2^d dy form a basis of the
/// regular 1-forms of S_m.
struct Basis {
    SuzukiParams params;
    std::vector<StructuredMonomial> elements;
    std::vector<int64_t> poles; // parallel to elements, strictly increasing

    size_t size() const { return elements.size(); }
    std::optional<size_t> index_of(const StructuredMonomial& mon) const;
    std::map<StructuredMonomial, size_t> index; // element -> position
};

Basis enumerate_basis(const SuzukiParams& p);

/// All normal-form monomials with pole order <= bound, ascending (the basis
/// is the special case bound = 2g-2).
std::vector<StructuredMonomial> normal_monomials_up_to(const SuzukiParams& p, int64_t bound);

/// Thrown when a plane poly is not a GF(2) combination of the embedded
/// monomials handed to a CoordSolver (for the basis: not a regular form).
class not_regular_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Coordinates of curve-reduced plane polys against the embedded images of a
 * fixed monomial list.  One Gaussian elimination at construction; solves are
 * matrix-vector products plus a consistency re-check.
 */
class CoordSolver {
  public:
    CoordSolver(const SuzukiParams& p, std::vector<StructuredMonomial> monomials);

    const std::vector<StructuredMonomial>& monomials() const { return monomials_; }
    /// Coordinate vector v with sum v_j * embed(monomials[j]) = f.
    BitVector coords(const PlanePoly& f) const;
    /// Same solve, repackaged as a StructuredPoly.
    StructuredPoly lift(const PlanePoly& f) const;

  private:
    SuzukiParams p_;
    std::vector<StructuredMonomial> monomials_;
    std::map<PlaneTerm, size_t> row_of_term_;
    BitMatrix embedded_;        // rows: plane terms, cols: monomials
    std::vector<size_t> pivot_rows_;
    BitMatrix solve_;           // inverse of the pivot-row square block
};

/**
 * Cartier images of the 16 residue monomials y^r1 z^r2 h1^r3 h2^r4,
 * r_i in {0,1}, regenerated from the definition-driven plane-model operator
 * at construction (not transcribed), and the operator on normal-form
 * monomials they induce:
 *   C(y^{2e1+r1} z^{2e2+r2} h1^{2e3+r3} h2^{2e4+r4} dy)
 *     = y^{e1} z^{e2} h1^{e3} h2^{e4} C(residue dy).
 */
class CartierTable {
  public:
    explicit CartierTable(const SuzukiParams& p);

    const SuzukiParams& params() const { return p_; }
    const StructuredPoly& residue_image(int r1, int r2, int r3, int r4) const;

    /// Table-path Cartier image of one normal-form monomial.  Errors if any
    /// output monomial has pole order > 2g-2 (the image of a regular form
    /// must stay regular).
    StructuredPoly apply(const StructuredMonomial& mon) const;
    StructuredPoly apply(const StructuredPoly& f) const;

  private:
    SuzukiParams p_;
    std::array<StructuredPoly, 16> images_;
};

enum class CartierPath { structured, oracle };

/**
 * g x g GF(2) matrix of the Cartier operator: column j holds the basis
 * coordinates of C(basis[j] dy).  `structured` goes through CartierTable,
 * `oracle` through cartier_oracle + CoordSolver; the two must agree
 * bit-for-bit.  jobs > 1 splits columns across threads (result identical).
 */
BitMatrix build_cartier_matrix(const SuzukiParams& p, const Basis& basis, CartierPath path,
                               int jobs = 1);

} // namespace suzuki

#endif // SUZUKI_STRUCTURED_HPP
