#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace qblock::gf2 {

// Inner loops on bit-packed GF(2) rows (64 entries per word).  The scalar
// versions are the reference; the AVX2 versions must agree bit-for-bit and
// are selected once at startup on machines that support them.
struct Kernels {
    // dst ^= src over n words.
    void (*row_xor)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    // For every row i with select[i] nonzero: rows[i*stride ..] ^= pivot.
    void (*rows_xor_select)(std::uint64_t* rows, std::size_t stride, std::size_t nrows,
                            const std::uint8_t* select, const std::uint64_t* pivot,
                            std::size_t n);
    // acc ^= sum of b[k*stride ..] over the bits k set in the word mask,
    // k in [0, 64).
    void (*accumulate_rows)(std::uint64_t* acc, const std::uint64_t* b, std::size_t stride,
                            std::uint64_t mask, std::size_t n);
    const char* name;
};

enum class Simd { Auto, Scalar, Avx2 };

const Kernels& kernels();           // active set (honors force_simd)
const Kernels& kernels(Simd which); // explicit set; throws if unavailable
bool avx2_available();
void force_simd(Simd which);        // test hook; Auto restores detection
std::string active_kernel_name();

}  // namespace qblock::gf2
