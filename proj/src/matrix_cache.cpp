#include "suzuki/matrix_cache.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <vector>

#include "suzuki/params.hpp"

namespace suzuki {

namespace {

constexpr std::array<char, 4> kMagic = {'S', 'Z', 'C', 'M'};
constexpr uint8_t kVersion = 1;

void put_u32_le(std::string& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64_le(std::string& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint32_t get_u32_le(const unsigned char* p) {
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

uint64_t get_u64_le(const unsigned char* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

} // namespace

void save_matrix_cache(const std::filesystem::path& path, int m, const BitMatrix& matrix) {
    const SuzukiParams p = make_params(m);
    if (matrix.rows() != matrix.cols() || static_cast<int64_t>(matrix.rows()) != p.g) {
        throw std::invalid_argument("save_matrix_cache: matrix must be g x g for the given m");
    }
    std::string blob;
    blob.reserve(13 + matrix.rows() * matrix.words_per_row() * 8);
    blob.append(kMagic.data(), kMagic.size());
    blob.push_back(static_cast<char>(kVersion));
    put_u32_le(blob, static_cast<uint32_t>(m));
    put_u32_le(blob, static_cast<uint32_t>(matrix.rows()));
    for (size_t r = 0; r < matrix.rows(); ++r) {
        for (uint64_t w : matrix.row(r)) put_u64_le(blob, w);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(CacheError::Kind::io, "cannot open " + path.string() + " for writing");
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw CacheError(CacheError::Kind::io, "write failed for " + path.string());
}

CachedMatrix load_matrix_cache(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError(CacheError::Kind::io, "cannot open " + path.string());
    std::vector<unsigned char> blob((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());

    if (blob.size() < 13) {
        throw CacheError(CacheError::Kind::short_read,
                         "short read: " + std::to_string(blob.size()) + " bytes is below the 13-byte header");
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), blob.begin())) {
        throw CacheError(CacheError::Kind::bad_magic, "bad magic (expected \"SZCM\")");
    }
    if (blob[4] != kVersion) {
        throw CacheError(CacheError::Kind::bad_version,
                         "unsupported version " + std::to_string(blob[4]));
    }
    const uint32_t m = get_u32_le(blob.data() + 5);
    const uint32_t g = get_u32_le(blob.data() + 9);

    int64_t expected_g = -1;
    if (m >= 1) {
        try {
            expected_g = make_params(static_cast<int>(m)).g;
        } catch (const std::exception&) {
            // falls through to the mismatch error below
        }
    }
    if (expected_g != static_cast<int64_t>(g)) {
        throw CacheError(CacheError::Kind::bad_dimensions,
                         "dimension mismatch: header says m=" + std::to_string(m) + ", g=" +
                             std::to_string(g) + " but g must be q0(q-1)");
    }

    const size_t words_per_row = (g + 63) / 64;
    const size_t expected_size = 13 + size_t{g} * words_per_row * 8;
    if (blob.size() < expected_size) {
        throw CacheError(CacheError::Kind::short_read,
                         "short read: expected " + std::to_string(expected_size) + " bytes, got " +
                             std::to_string(blob.size()));
    }
    if (blob.size() > expected_size) {
        throw CacheError(CacheError::Kind::trailing_data,
                         "trailing data after " + std::to_string(expected_size) + " bytes");
    }

    BitMatrix matrix(g, g);
    const unsigned char* cursor = blob.data() + 13;
    const uint64_t pad_mask =
        (g % 64 == 0) ? ~uint64_t{0} : ((uint64_t{1} << (g % 64)) - 1);
    for (size_t r = 0; r < g; ++r) {
        auto row = matrix.row(r);
        for (size_t w = 0; w < words_per_row; ++w, cursor += 8) row[w] = get_u64_le(cursor);
        if ((row[words_per_row - 1] & ~pad_mask) != 0) {
            throw CacheError(CacheError::Kind::bad_dimensions,
                             "row " + std::to_string(r) + " has nonzero padding bits");
        }
    }
    return CachedMatrix{static_cast<int>(m), std::move(matrix)};
}

} // namespace suzuki
