#ifndef SUZUKI_EO_HPP
#define SUZUKI_EO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "suzuki/bit_matrix.hpp"

namespace suzuki {

/**
 * Ranks of the iterated Cartier matrix: r_1 > r_2 > ... > r_t = 0.
 * The a-number is g - r_1 (corank = kernel dimension of the operator on the
 * regular 1-forms); t is the nilpotency index.  A profile that does not
 * reach zero, or does not strictly decrease, is rejected: the 2-rank of a
 * supersingular curve is 0, so the matrix must be nilpotent.
 */
struct RankProfile {
    int64_t g = 0;
    std::vector<int64_t> ranks;

    int64_t a_number() const { return g - ranks.front(); }
    int64_t nilpotency() const { return static_cast<int64_t>(ranks.size()); }

    static RankProfile from_ranks(int64_t g, std::vector<int64_t> ranks);
    static RankProfile from_matrix(const BitMatrix& m);
};

int64_t a_number_from_matrix(const BitMatrix& m);

/**
 * Partial Ekedahl-Oort final type [nu_1..nu_g] pinned down by a rank profile.
 *
 * Taking N_{r_k} to be the image of the k-th Cartier iterate inside a final
 * filtration forces nu_{r_k} = r_{k+1} (with r_0 = g), nu_1 = 0 (2-rank 0),
 * and every value the step condition nu_i <= nu_{i+1} <= nu_i + 1 then leaves
 * no room for.  Beyond nu_g = r_1 and nu_1 = 0 this inference rests on a
 * final filtration containing all the iterated images at once, which is a
 * worked fact only for m = 1; treat the remaining fixed values for larger m
 * as heuristic.
 */
struct FinalTypeConstraints {
    int64_t g = 0;
    std::map<int64_t, int64_t> fixed; // i -> nu_i, 1-based indices
};

FinalTypeConstraints derive_constraints(const RankProfile& rp);

/// Thrown by enumerate_compatible_final_types when more than `cap` sequences
/// satisfy the constraints; the message reports the number of free indices.
class enumeration_cap_error : public std::runtime_error {
  public:
    enumeration_cap_error(const std::string& msg, int64_t free_indices)
        : std::runtime_error(msg), free_indices(free_indices) {}
    int64_t free_indices;
};

/**
 * All sequences nu_1..nu_g with nu_1 = 0, nu_i <= nu_{i+1} <= nu_i + 1, and
 * the given fixed values; deterministic lexicographic order.
 */
std::vector<std::vector<int64_t>> enumerate_compatible_final_types(
    const FinalTypeConstraints& fc, uint64_t cap = 1'000'000);

/// Upper bound (= the a-number) on the number of indecomposable principally
/// polarized factors of a p-rank-0 abelian variety.
int64_t decomposition_bound(int64_t a_number);

/// a(m) = g(m) never holds: the Jacobian is not superspecial for any m.
bool superspecial_check(int m);

} // namespace suzuki

#endif // SUZUKI_EO_HPP
