#include "qblock/gf2kernel.hpp"

#include <stdexcept>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace qblock::gf2 {

namespace {

void row_xor_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void rows_xor_select_scalar(std::uint64_t* rows, std::size_t stride, std::size_t nrows,
                            const std::uint8_t* select, const std::uint64_t* pivot,
                            std::size_t n) {
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!select[r]) continue;
        std::uint64_t* row = rows + r * stride;
        for (std::size_t i = 0; i < n; ++i) row[i] ^= pivot[i];
    }
}

void accumulate_rows_scalar(std::uint64_t* acc, const std::uint64_t* b, std::size_t stride,
                            std::uint64_t mask, std::size_t n) {
    while (mask) {
        const int k = __builtin_ctzll(mask);
        mask &= mask - 1;
        const std::uint64_t* row = b + static_cast<std::size_t>(k) * stride;
        for (std::size_t i = 0; i < n; ++i) acc[i] ^= row[i];
    }
}

constexpr Kernels kScalar = {row_xor_scalar, rows_xor_select_scalar, accumulate_rows_scalar,
                             "scalar"};

#if defined(__x86_64__)

__attribute__((target("avx2"))) void row_xor_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                  std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) void rows_xor_select_avx2(std::uint64_t* rows, std::size_t stride,
                                                          std::size_t nrows,
                                                          const std::uint8_t* select,
                                                          const std::uint64_t* pivot,
                                                          std::size_t n) {
    for (std::size_t r = 0; r < nrows; ++r) {
        if (!select[r]) continue;
        std::uint64_t* row = rows + r * stride;
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
            __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), _mm256_xor_si256(d, s));
        }
        for (; i < n; ++i) row[i] ^= pivot[i];
    }
}

__attribute__((target("avx2"))) void accumulate_rows_avx2(std::uint64_t* acc,
                                                          const std::uint64_t* b,
                                                          std::size_t stride, std::uint64_t mask,
                                                          std::size_t n) {
    if (n >= 4) {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
            std::uint64_t m = mask;
            while (m) {
                const int k = __builtin_ctzll(m);
                m &= m - 1;
                const std::uint64_t* row = b + static_cast<std::size_t>(k) * stride;
                a = _mm256_xor_si256(a, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)));
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
        }
        std::uint64_t m = mask;
        while (m) {
            const int k = __builtin_ctzll(m);
            m &= m - 1;
            const std::uint64_t* row = b + static_cast<std::size_t>(k) * stride;
            for (std::size_t j = i; j < n; ++j) acc[j] ^= row[j];
        }
        return;
    }
    accumulate_rows_scalar(acc, b, stride, mask, n);
}

constexpr Kernels kAvx2 = {row_xor_avx2, rows_xor_select_avx2, accumulate_rows_avx2, "avx2"};

bool detect_avx2() { return __builtin_cpu_supports("avx2"); }

#else

bool detect_avx2() { return false; }

#endif

Simd g_forced = Simd::Auto;

}  // namespace

bool avx2_available() { return detect_avx2(); }

const Kernels& kernels(Simd which) {
    switch (which) {
        case Simd::Scalar:
            return kScalar;
        case Simd::Avx2:
#if defined(__x86_64__)
            if (detect_avx2()) return kAvx2;
#endif
            throw std::runtime_error("avx2 kernels unavailable on this machine");
        case Simd::Auto:
        default:
#if defined(__x86_64__)
            if (detect_avx2()) return kAvx2;
#endif
            return kScalar;
    }
}

const Kernels& kernels() { return kernels(g_forced); }

void force_simd(Simd which) {
    if (which == Simd::Avx2 && !detect_avx2())
        throw std::runtime_error("cannot force avx2: not supported");
    g_forced = which;
}

std::string active_kernel_name() { return kernels().name; }

}  // namespace qblock::gf2
