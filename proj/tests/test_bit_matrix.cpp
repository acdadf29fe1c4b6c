#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "suzuki/bit_matrix.hpp"

using namespace suzuki;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, double density = 0.5) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

} // namespace

TEST_CASE("rank of identity and zero") {
    CHECK(rank(BitMatrix::identity(17)) == 17);
    CHECK(rank(BitMatrix(9, 9)) == 0);
    BitMatrix m(3, 4);
    m.set(0, 1);
    m.set(1, 1);
    m.set(2, 3);
    CHECK(rank(m) == 2); // rows 0 and 1 coincide
}

TEST_CASE("rank + kernel dimension = columns") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
        const BitMatrix m = random_matrix(rng, rows, cols);
        const auto kernel = kernel_basis(m);
        CHECK(rank(m) + kernel.size() == cols);
        for (const auto& v : kernel) CHECK_FALSE(m.multiply(v).any());
    }
    CHECK(kernel_basis(BitMatrix::identity(8)).empty());
}

TEST_CASE("matmul agrees with the naive triple loop") {
    std::mt19937_64 rng(43);
    const BitMatrix a = random_matrix(rng, 13, 21);
    const BitMatrix b = random_matrix(rng, 21, 9);
    const BitMatrix c = matmul(a, b);
    for (size_t i = 0; i < 13; ++i) {
        for (size_t j = 0; j < 9; ++j) {
            bool bit = false;
            for (size_t k = 0; k < 21; ++k) bit ^= (a.get(i, k) && b.get(k, j));
            CHECK(c.get(i, j) == bit);
        }
    }
    CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
}

TEST_CASE("rank of a product is bounded by both factors") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const BitMatrix a = random_matrix(rng, 16, 16, 0.3);
        const BitMatrix b = random_matrix(rng, 16, 16, 0.3);
        CHECK(rank(matmul(a, b)) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("power ranks of the shift matrix count down to zero") {
    BitMatrix shift(6, 6);
    for (size_t i = 0; i + 1 < 6; ++i) shift.set(i, i + 1);
    CHECK(power_ranks(shift) == std::vector<int64_t>{5, 4, 3, 2, 1, 0});
}

TEST_CASE("power ranks decrease strictly for nilpotent matrices") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m(20, 20); // strictly upper triangular, hence nilpotent
        for (size_t r = 0; r < 20; ++r)
            for (size_t c = r + 1; c < 20; ++c)
                if (rng() & 1) m.set(r, c);
        const auto ranks = power_ranks(m);
        REQUIRE(!ranks.empty());
        CHECK(ranks.back() == 0);
        int64_t prev = 20;
        for (int64_t r : ranks) {
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("power ranks stop once the rank stabilizes") {
    CHECK(power_ranks(BitMatrix::identity(5)) == std::vector<int64_t>{5, 5});
}

TEST_CASE("column access keeps padding bits clear") {
    BitMatrix m(3, 70);
    BitVector v(3);
    v.set(0);
    v.set(2);
    m.set_column(69, v);
    CHECK(m.column(69) == v);
    CHECK(m.get(0, 69));
    CHECK_FALSE(m.get(1, 69));
    // bits above column 69 in the second word stay zero
    CHECK((m.row(0)[1] >> 6) == 0);
}

TEST_CASE("matrix-vector product") {
    std::mt19937_64 rng(46);
    const BitMatrix m = random_matrix(rng, 15, 33);
    BitVector v(33);
    for (size_t i = 0; i < 33; ++i)
        if (rng() & 1) v.set(i);
    const BitVector out = m.multiply(v);
    for (size_t r = 0; r < 15; ++r) {
        bool bit = false;
        for (size_t c = 0; c < 33; ++c) bit ^= (m.get(r, c) && v.get(c));
        CHECK(out.get(r) == bit);
    }
}
