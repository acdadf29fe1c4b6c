#ifndef SUZUKI_PARAMS_HPP
#define SUZUKI_PARAMS_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace suzuki {

/**
 * Derived constants of the Suzuki curve S_m over GF(q), q = 2^{2m+1}.
 *
 * The affine model is z^q + z = y^{q0}(y^q + y) with q0 = 2^m; the curve has
 * genus g = q0(q-1) and a single point P_inf at infinity.  vy..vh2 are the
 * pole orders at P_inf of the functions y, z, h1 = z^{2q0} + y^{2q0+1} and
 * h2 = z^{2q0} y + h1^{2q0}.
 */
struct SuzukiParams {
    int m = 0;
    int64_t q0 = 0; // 2^m
    int64_t q = 0;  // 2^{2m+1} = 2*q0^2
    int64_t g = 0;  // q0*(q-1)
    int64_t vy = 0, vz = 0, vh1 = 0, vh2 = 0;
    std::array<int64_t, 4> sg_generators{}; // {q, q+q0, q+2q0, q+2q0+1}
};

/// Builds all derived constants.  Rejects m < 1 and any m whose constants
/// exceed 64 signed bits (g needs about 3m+2 bits; the error says how many).
SuzukiParams make_params(int m);

/// a(m) = q0(q0+1)(2q0+1)/6, the corank of the Cartier matrix.
int64_t a_number_formula(int m);

/// nu_g = q0(10q0+7)(q0-1)/6 = g - a(m), the rank of the Cartier matrix.
int64_t nu_g_formula(int m);

/// Counts {(a,c,d) in N^3 : a+c+d <= q0-1} plus {(a,c,d) : a+c+d <= q0-2}
/// by explicit enumeration of the triples.  Independent route to a(m).
int64_t lattice_count(int m);

/// Number of elements of the semigroup <q, q+q0, q+2q0, q+2q0+1> in
/// [0, 2g-2], by a boolean reachability array.  Equals g.
int64_t semigroup_count(int m);

/**
 * Zeta data of S_m.  The L-polynomial is (1 + 2q0*t + q*t^2)^g; power_sum(k)
 * is s_k = alpha^k + conj(alpha)^k for the two inverse roots of the quadratic
 * factor: s_0 = 2, s_1 = -2q0, s_k = -2q0*s_{k-1} - q*s_{k-2}.
 */
struct ZetaData {
    int64_t linear_coeff = 0; // 2*q0 = sqrt(2q)
    int64_t norm = 0;         // q
    int64_t multiplicity = 0; // g

    int64_t power_sum(int k) const;
    std::vector<int64_t> power_sums(int k_max) const; // s_0..s_{k_max}
};

ZetaData zeta_data(const SuzukiParams& p);

/// #S_m(F_{q^k}) = q^k + 1 - g*s_k.
int64_t point_count_zeta(int m, int k);

/// True iff S_m meets the Hasse-Weil upper bound over F_{q^k}, i.e.
/// the point count equals q^k + 1 + 2g*q^{k/2} with q^{k/2} an integer.
bool is_maximal_over(int m, int k);

/// Exact cross-multiplied check of 1/6 < a(m)/g(m) < 1/6 + 1/2^{m+1}.
bool a_number_ratio_in_bounds(int m);

} // namespace suzuki

#endif // SUZUKI_PARAMS_HPP
