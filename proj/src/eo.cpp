#include "suzuki/eo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "suzuki/params.hpp"

namespace suzuki {

RankProfile RankProfile::from_ranks(int64_t g, std::vector<int64_t> ranks) {
    if (g < 1) throw std::invalid_argument("RankProfile: g must be >= 1");
    if (ranks.empty() || ranks.back() != 0)
        throw std::invalid_argument("RankProfile: ranks must end at 0 (nilpotent operator)");
    int64_t prev = g;
    for (int64_t r : ranks) {
        if (r < 0 || r >= prev)
            throw std::invalid_argument("RankProfile: ranks must strictly decrease from g to 0");
        prev = r;
    }
    RankProfile rp;
    rp.g = g;
    rp.ranks = std::move(ranks);
    if (rp.a_number() < 1) throw std::invalid_argument("RankProfile: a-number must be >= 1");
    return rp;
}

RankProfile RankProfile::from_matrix(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("RankProfile: matrix must be square");
    return from_ranks(static_cast<int64_t>(m.rows()), power_ranks(m));
}

int64_t a_number_from_matrix(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("a_number_from_matrix: matrix must be square");
    return static_cast<int64_t>(m.cols()) - static_cast<int64_t>(rank(m));
}

namespace {

// Interval closure of the step condition nu_i <= nu_{i+1} <= nu_i + 1 around
// fixed values; lower/upper are 1-based with a virtual nu_0 = 0.
struct StepBounds {
    std::vector<int64_t> lower, upper;
};

StepBounds close_bounds(int64_t g, const std::map<int64_t, int64_t>& fixed) {
    StepBounds b;
    b.lower.assign(static_cast<size_t>(g) + 1, 0);
    b.upper.assign(static_cast<size_t>(g) + 1, 0);
    for (int64_t i = 1; i <= g; ++i) b.upper[static_cast<size_t>(i)] = i;
    for (const auto& [i, v] : fixed) {
        if (i < 1 || i > g) throw std::invalid_argument("constraints: index out of range");
        if (v < 0 || v > i) throw std::invalid_argument("constraints: value out of range");
        b.lower[static_cast<size_t>(i)] = v;
        b.upper[static_cast<size_t>(i)] = v;
    }
    // Forward: nu_i >= nu_{i-1} and nu_i <= nu_{i-1} + 1.
    for (int64_t i = 1; i <= g; ++i) {
        const size_t s = static_cast<size_t>(i);
        b.lower[s] = std::max(b.lower[s], b.lower[s - 1]);
        b.upper[s] = std::min(b.upper[s], b.upper[s - 1] + 1);
    }
    // Backward: nu_i >= nu_{i+1} - 1 and nu_i <= nu_{i+1}.
    for (int64_t i = g - 1; i >= 1; --i) {
        const size_t s = static_cast<size_t>(i);
        b.lower[s] = std::max(b.lower[s], b.lower[s + 1] - 1);
        b.upper[s] = std::min(b.upper[s], b.upper[s + 1]);
    }
    for (int64_t i = 1; i <= g; ++i) {
        const size_t s = static_cast<size_t>(i);
        if (b.lower[s] > b.upper[s]) {
            throw std::invalid_argument(
                "constraints are inconsistent at index " + std::to_string(i) +
                " (upstream rank profile cannot come from a nilpotent Cartier matrix)");
        }
    }
    return b;
}

} // namespace

FinalTypeConstraints derive_constraints(const RankProfile& rp) {
    std::map<int64_t, int64_t> fixed;
    fixed[1] = 0; // 2-rank 0: no i with nu_i = i
    int64_t prev = rp.g; // r_0 = g
    for (int64_t r : rp.ranks) {
        if (prev >= 1) {
            auto [it, inserted] = fixed.emplace(prev, r);
            if (!inserted && it->second != r)
                throw std::invalid_argument("derive_constraints: conflicting fixed values");
        }
        prev = r;
    }
    const StepBounds bounds = close_bounds(rp.g, fixed);

    FinalTypeConstraints fc;
    fc.g = rp.g;
    for (int64_t i = 1; i <= rp.g; ++i) {
        const size_t s = static_cast<size_t>(i);
        if (bounds.lower[s] == bounds.upper[s]) fc.fixed[i] = bounds.lower[s];
    }
    return fc;
}

std::vector<std::vector<int64_t>> enumerate_compatible_final_types(
    const FinalTypeConstraints& fc, uint64_t cap) {
    const StepBounds bounds = close_bounds(fc.g, fc.fixed);
    int64_t free_indices = 0;
    for (int64_t i = 1; i <= fc.g; ++i) {
        const size_t s = static_cast<size_t>(i);
        if (bounds.lower[s] != bounds.upper[s]) ++free_indices;
    }

    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> current(static_cast<size_t>(fc.g));
    // Backtracking in ascending value order yields lexicographic output.
    auto extend = [&](auto&& self, int64_t i, int64_t prev_value) -> void {
        if (i > fc.g) {
            if (out.size() >= cap) {
                throw enumeration_cap_error(
                    "final-type enumeration exceeds cap of " + std::to_string(cap) + " (" +
                        std::to_string(free_indices) + " free indices)",
                    free_indices);
            }
            out.push_back(current);
            return;
        }
        const size_t s = static_cast<size_t>(i);
        const int64_t lo = std::max(bounds.lower[s], prev_value);
        const int64_t hi = std::min(bounds.upper[s], prev_value + 1);
        for (int64_t v = lo; v <= hi; ++v) {
            current[s - 1] = v;
            self(self, i + 1, v);
        }
    };
    extend(extend, 1, 0);
    return out;
}

int64_t decomposition_bound(int64_t a_number) {
    if (a_number < 1) throw std::invalid_argument("decomposition_bound: a-number must be >= 1");
    return a_number;
}

bool superspecial_check(int m) {
    return a_number_formula(m) == make_params(m).g;
}

} // namespace suzuki
