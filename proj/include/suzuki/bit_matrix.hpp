#ifndef SUZUKI_BIT_MATRIX_HPP
#define SUZUKI_BIT_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace suzuki {

/// Dense GF(2) vector packed into 64-bit words; padding bits stay zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    size_t size() const { return size_; }
    size_t word_count() const { return words_.size(); }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v = true) {
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_with(const BitVector& other);
    bool any() const;
    size_t count() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    bool operator==(const BitVector&) const = default;

  private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/**
 * Dense GF(2) matrix, bit-packed row-major, 64-bit words.
 *
 * Carrier for the Cartier matrix M: the operator is 1/2-linear, but its
 * matrix on a basis has GF(2) entries and the square-root twist fixes GF(2),
 * so the matrix of the k-th iterate is the plain power M^k, and the plain
 * right kernel has the same dimension as the semilinear kernel (entrywise
 * squaring permutes solutions bijectively).
 */
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }

    bool get(size_t r, size_t c) const { return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool v = true) {
        const uint64_t mask = uint64_t{1} << (c & 63);
        if (v) data_[r * wpr_ + (c >> 6)] |= mask;
        else data_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<uint64_t> row(size_t r) { return {data_.data() + r * wpr_, wpr_}; }
    std::span<const uint64_t> row(size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

    void xor_rows(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    void set_column(size_t c, const BitVector& v);
    BitVector column(size_t c) const;
    BitVector multiply(const BitVector& v) const; // M*v

    static BitMatrix identity(size_t n);

    bool operator==(const BitMatrix&) const = default;

  private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

/// GF(2) rank by Gaussian elimination on a working copy (row swaps only).
size_t rank(BitMatrix m);

/// Vectors spanning the right kernel {v : M*v = 0}; size = cols - rank.
/// No column permutation is used, so coordinates stay aligned to the
/// caller's column indexing.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);

/// Ranks of M, M^2, M^3, ... for square M.  Stops after the first zero rank,
/// when the rank stabilizes (non-nilpotent input), or after cols powers.
std::vector<int64_t> power_ranks(const BitMatrix& m);

} // namespace suzuki

#endif // SUZUKI_BIT_MATRIX_HPP
