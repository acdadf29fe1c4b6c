#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suzuki/eo.hpp"
#include "suzuki/structured.hpp"

using namespace suzuki;

namespace {

BitMatrix cartier_matrix(int m) {
    const SuzukiParams p = make_params(m);
    return build_cartier_matrix(p, enumerate_basis(p), CartierPath::structured);
}

// rank([M | v]) == rank(M) iff v lies in the column space of M
bool in_column_space(const BitMatrix& m, const BitVector& v) {
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
    aug.set_column(m.cols(), v);
    return rank(aug) == rank(m);
}

} // namespace

TEST_CASE("rank profile validation") {
    const RankProfile rp = RankProfile::from_ranks(14, {9, 4, 0});
    CHECK(rp.a_number() == 5);
    CHECK(rp.nilpotency() == 3);
    CHECK_THROWS_AS(RankProfile::from_ranks(14, {9, 4}), std::invalid_argument);    // no zero
    CHECK_THROWS_AS(RankProfile::from_ranks(14, {9, 9, 0}), std::invalid_argument); // not strict
    CHECK_THROWS_AS(RankProfile::from_ranks(14, {14, 4, 0}), std::invalid_argument); // a = 0
}

TEST_CASE("rank profile of the m=1..3 Cartier matrices") {
    const RankProfile rp1 = RankProfile::from_matrix(cartier_matrix(1));
    CHECK(rp1.ranks == std::vector<int64_t>{9, 4, 0});
    CHECK(rp1.a_number() == 5);
    CHECK(rp1.nilpotency() == 3);

    const RankProfile rp2 = RankProfile::from_matrix(cartier_matrix(2));
    CHECK(rp2.ranks.front() == 94); // = nu_g_formula(2)
    CHECK(rp2.a_number() == 30);

    const RankProfile rp3 = RankProfile::from_matrix(cartier_matrix(3));
    CHECK(rp3.a_number() == 204);
    CHECK(rp3.ranks.back() == 0);
}

TEST_CASE("a-number from the matrix equals the closed formula") {
    for (int m : {1, 2, 3}) {
        CHECK(a_number_from_matrix(cartier_matrix(m)) == a_number_formula(m));
    }
}

TEST_CASE("kernel of the m=1 matrix is 5-dimensional") {
    const BitMatrix m = cartier_matrix(1);
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == 5);
    for (const auto& v : kernel) CHECK_FALSE(m.multiply(v).any());
}

TEST_CASE("derived constraints for the m=1 profile") {
    const FinalTypeConstraints fc = derive_constraints(RankProfile::from_ranks(14, {9, 4, 0}));
    const std::map<int64_t, int64_t> expected{{1, 0}, {2, 0},  {3, 0},  {4, 0},  {9, 4},
                                              {10, 5}, {11, 6}, {12, 7}, {13, 8}, {14, 9}};
    CHECK(fc.fixed == expected);
}

TEST_CASE("step condition forces everything for tiny profiles") {
    const FinalTypeConstraints fc = derive_constraints(RankProfile::from_ranks(2, {1, 0}));
    CHECK(fc.fixed == std::map<int64_t, int64_t>{{1, 0}, {2, 1}});
    CHECK(enumerate_compatible_final_types(fc).size() == 1);
}

TEST_CASE("impossible profiles are rejected") {
    // climbing from nu_5 = 1 to nu_6 = 5 needs four unit steps in one index
    CHECK_THROWS_AS(derive_constraints(RankProfile::from_ranks(6, {5, 1, 0})),
                    std::invalid_argument);
}

TEST_CASE("constraints derived from computed matrices stay consistent") {
    for (int m : {1, 2, 3}) {
        const RankProfile rp = RankProfile::from_matrix(cartier_matrix(m));
        const FinalTypeConstraints fc = derive_constraints(rp); // throws on contradiction
        CHECK(fc.fixed.begin()->second == 0); // smallest fixed index has nu = 0
        CHECK(fc.fixed.at(rp.g) == rp.ranks.front());
    }
}

TEST_CASE("exactly five final types are compatible for m=1") {
    const FinalTypeConstraints fc = derive_constraints(RankProfile::from_ranks(14, {9, 4, 0}));
    const auto types = enumerate_compatible_final_types(fc);
    REQUIRE(types.size() == 5);
    for (const auto& nu : types) {
        REQUIRE(nu.size() == 14);
        CHECK(nu[0] == 0);
        CHECK(nu[8] == 4);  // nu_9
        CHECK(nu[13] == 9); // nu_14
        for (size_t i = 1; i < nu.size(); ++i) {
            CHECK(nu[i] >= nu[i - 1]);
            CHECK(nu[i] <= nu[i - 1] + 1);
        }
    }
    // deterministic lexicographic order, all distinct
    CHECK(std::is_sorted(types.begin(), types.end()));
    CHECK(std::adjacent_find(types.begin(), types.end()) == types.end());
}

TEST_CASE("enumeration cap reports the number of free indices") {
    const FinalTypeConstraints fc = derive_constraints(RankProfile::from_ranks(14, {9, 4, 0}));
    try {
        enumerate_compatible_final_types(fc, 3);
        FAIL("expected enumeration_cap_error");
    } catch (const enumeration_cap_error& e) {
        CHECK(e.free_indices == 4); // nu_5..nu_8 are free
    }
}

TEST_CASE("decomposition bound is the a-number") {
    CHECK(decomposition_bound(5) == 5);   // m=1
    CHECK(decomposition_bound(30) == 30); // m=2
    CHECK(decomposition_bound(1) == 1);   // indecomposable forced
    CHECK_THROWS_AS(decomposition_bound(0), std::invalid_argument);
}

TEST_CASE("never superspecial") {
    for (int m = 1; m <= 10; ++m) CHECK_FALSE(superspecial_check(m));
}

TEST_CASE("m=1 image of C contains dy, y dy and h1 dy") {
    const SuzukiParams p = make_params(1);
    const Basis basis = enumerate_basis(p);
    const BitMatrix m = build_cartier_matrix(p, basis, CartierPath::structured);
    CHECK(rank(m) == 9);
    for (const StructuredMonomial mon :
         {StructuredMonomial{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}) {
        BitVector e(basis.size());
        e.set(*basis.index_of(mon));
        CHECK(in_column_space(m, e));
    }
}
