#include "suzuki/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace suzuki {

void BitVector::xor_with(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector::xor_with: size mismatch");
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVector::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

size_t BitVector::count() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(std::popcount(w));
    return n;
}

void BitMatrix::xor_rows(size_t dst, size_t src) {
    uint64_t* d = data_.data() + dst * wpr_;
    const uint64_t* s = data_.data() + src * wpr_;
    for (size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    uint64_t* pa = data_.data() + a * wpr_;
    uint64_t* pb = data_.data() + b * wpr_;
    for (size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

void BitMatrix::set_column(size_t c, const BitVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("BitMatrix::set_column: size mismatch");
    for (size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r);
    return v;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::multiply: size mismatch");
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint64_t* row_words = data_.data() + r * wpr_;
        for (size_t w = 0; w < wpr_; ++w) acc ^= row_words[w] & v.words()[w];
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

size_t rank(BitMatrix m) {
    const size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (size_t i = pivot + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_rows(i, r);
        ++r;
    }
    return r;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    BitMatrix w = m;
    const size_t rows = w.rows(), cols = w.cols();
    std::vector<size_t> pivot_col; // pivot column of each pivot row, increasing
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (w.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        w.swap_rows(r, pivot);
        for (size_t i = 0; i < rows; ++i)
            if (i != r && w.get(i, c)) w.xor_rows(i, r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitVector> kernel;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols);
        v.set(free);
        for (size_t pr = 0; pr < pivot_col.size(); ++pr)
            if (w.get(pr, free)) v.set(pivot_col[pr]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row(i);
        auto orow = out.row(i);
        for (size_t w = 0; w < arow.size(); ++w) {
            uint64_t bits = arow[w];
            while (bits) {
                const size_t k = 64 * w + static_cast<size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                auto brow = b.row(k);
                for (size_t u = 0; u < brow.size(); ++u) orow[u] ^= brow[u];
            }
        }
    }
    return out;
}

std::vector<int64_t> power_ranks(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("power_ranks: matrix must be square");
    std::vector<int64_t> ranks;
    BitMatrix p = m;
    int64_t prev = -1;
    for (size_t k = 1; k <= m.cols(); ++k) {
        const int64_t r = static_cast<int64_t>(rank(p));
        ranks.push_back(r);
        if (r == 0 || r == prev) break; // nilpotent done, or rank stabilized
        prev = r;
        p = matmul(p, m);
    }
    return ranks;
}

} // namespace suzuki
