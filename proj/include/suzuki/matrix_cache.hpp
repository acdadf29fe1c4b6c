#ifndef SUZUKI_MATRIX_CACHE_HPP
#define SUZUKI_MATRIX_CACHE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "suzuki/bit_matrix.hpp"

namespace suzuki {

/**
 * On-disk Cartier-matrix cache, format "SZCM":
 *   magic "SZCM" | version byte 0x01 | m as u32 LE | g as u32 LE |
 *   g rows of ceil(g/64) little-endian 64-bit words.
 * Round trips are bit-exact; the loader validates magic, version, the
 * m <-> g relation g = q0(q-1), padding bits, and exact file length.
 */
class CacheError : public std::runtime_error {
  public:
    enum class Kind { io, bad_magic, bad_version, bad_dimensions, short_read, trailing_data };

    CacheError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind(kind) {}
    Kind kind;
};

struct CachedMatrix {
    int m = 0;
    BitMatrix matrix;
};

void save_matrix_cache(const std::filesystem::path& path, int m, const BitMatrix& matrix);
CachedMatrix load_matrix_cache(const std::filesystem::path& path);

} // namespace suzuki

#endif // SUZUKI_MATRIX_CACHE_HPP
