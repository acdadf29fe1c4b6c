#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suzuki/checked.hpp"
#include "suzuki/params.hpp"

using namespace suzuki;

TEST_CASE("make_params derives all constants") {
    const SuzukiParams p1 = make_params(1);
    CHECK(p1.q0 == 2);
    CHECK(p1.q == 8);
    CHECK(p1.g == 14);
    CHECK(p1.vy == 8);
    CHECK(p1.vz == 10);
    CHECK(p1.vh1 == 12);
    CHECK(p1.vh2 == 13);
    CHECK(p1.sg_generators == std::array<int64_t, 4>{8, 10, 12, 13});

    const SuzukiParams p2 = make_params(2);
    CHECK(p2.q0 == 4);
    CHECK(p2.q == 32);
    CHECK(p2.g == 124);

    for (int m = 1; m <= 10; ++m) {
        const SuzukiParams p = make_params(m);
        CHECK(p.q == 2 * p.q0 * p.q0);
        CHECK(p.g == p.q0 * (p.q - 1));
    }
}

TEST_CASE("make_params rejects bad m") {
    CHECK_THROWS_AS(make_params(0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(-3), std::invalid_argument);
    CHECK_THROWS_AS(make_params(21), overflow_error);
    try {
        make_params(25);
        FAIL("expected overflow");
    } catch (const overflow_error& e) {
        CHECK(std::string(e.what()).find("bit") != std::string::npos);
    }
}

TEST_CASE("a-number closed formula") {
    CHECK(a_number_formula(1) == 5);
    CHECK(a_number_formula(2) == 30);
    CHECK(a_number_formula(3) == 204);
}

TEST_CASE("nu_g formula and the identity nu_g + a = g") {
    CHECK(nu_g_formula(1) == 9);
    CHECK(nu_g_formula(2) == 94);
    for (int m = 1; m <= 10; ++m) {
        CHECK(nu_g_formula(m) + a_number_formula(m) == make_params(m).g);
    }
}

TEST_CASE("lattice enumeration equals the closed formula") {
    CHECK(lattice_count(1) == 5); // 4 triples with sum <= 1, plus 1 with sum <= 0
    CHECK(lattice_count(2) == 30);
    for (int m = 1; m <= 10; ++m) {
        CHECK(lattice_count(m) == a_number_formula(m));
    }
}

TEST_CASE("semigroup count in [0, 2g-2] equals g") {
    // m=1: <8,10,12,13> meets [0,26] in {0,8,10,12,13,16,18,20,21,22,23,24,25,26}.
    CHECK(semigroup_count(1) == 14);
    for (int m = 1; m <= 4; ++m) {
        CHECK(semigroup_count(m) == make_params(m).g);
    }
}

TEST_CASE("zeta power sums") {
    const ZetaData z = zeta_data(make_params(1));
    CHECK(z.linear_coeff == 4);
    CHECK(z.norm == 8);
    CHECK(z.multiplicity == 14);
    const auto s = z.power_sums(4);
    CHECK(s[0] == 2);
    CHECK(s[1] == -4);
    CHECK(s[2] == 0);    // s_2 = -2q0*s_1 - q*s_0 = 16 - 16
    CHECK(s[3] == 32);   // -q*s_1 = 2*q0*q
    CHECK(s[4] == -128); // -2q^2
}

TEST_CASE("zeta point counts") {
    CHECK(point_count_zeta(1, 1) == 65);
    CHECK(point_count_zeta(1, 2) == 65);
    CHECK(point_count_zeta(1, 4) == 5889); // q^4 + 1 + 2q^2 g
    CHECK(point_count_zeta(2, 1) == 1025);
    CHECK_THROWS_AS(point_count_zeta(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(point_count_zeta(10, 4), overflow_error);
}

TEST_CASE("maximality happens exactly over F_{q^4}") {
    CHECK(is_maximal_over(1, 4));
    CHECK(is_maximal_over(2, 4));
    CHECK_FALSE(is_maximal_over(1, 1));
    CHECK_FALSE(is_maximal_over(1, 2));
    CHECK_FALSE(is_maximal_over(2, 2));
}

TEST_CASE("Hasse-Weil window, exact arithmetic") {
    for (int m = 1; m <= 3; ++m) {
        const SuzukiParams p = make_params(m);
        for (int k = 1; k <= 4; ++k) {
            const int64_t dev = checked_sub(point_count_zeta(m, k),
                                            checked_add(checked_pow(p.q, k), 1));
            const int64_t lhs = checked_mul(dev, dev);
            const int64_t rhs =
                checked_mul(checked_mul(4, checked_mul(p.g, p.g)), checked_pow(p.q, k));
            CHECK(lhs <= rhs);
        }
    }
}

TEST_CASE("a/g sits strictly inside (1/6, 1/6 + 1/2^{m+1})") {
    for (int m = 1; m <= 10; ++m) {
        CHECK(a_number_ratio_in_bounds(m));
    }
}

TEST_CASE("checked arithmetic traps instead of wrapping") {
    CHECK(checked_pow2(10) == 1024);
    CHECK_THROWS_AS(checked_pow2(63), overflow_error);
    CHECK_THROWS_AS(checked_mul(int64_t{1} << 40, int64_t{1} << 40), overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), overflow_error);
}
