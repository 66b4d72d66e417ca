#include "locan/kernels/accumulate.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace locan::kernels::avx2 {

// Compiled with -mavx2; only reached after a runtime CPU check.
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  // Any carry distance >= 16 is safe for the unrolled loop below; shorter
  // ones fall back to 4-lane steps, and distances < 4 to the scalar loop.
  if (detail::short_carry(dst, src, n, 4)) {
    scalar::accumulate(dst, src, n);
    return;
  }
  std::size_t k = 0;
  if (!detail::short_carry(dst, src, n, 16)) {
    for (; k + 16 <= n; k += 16) {
      __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
      __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k + 4));
      __m256i s2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k + 8));
      __m256i s3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k + 12));
      __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
      __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k + 4));
      __m256i d2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k + 8));
      __m256i d3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k + 12));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_add_epi64(d0, s0));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k + 4), _mm256_add_epi64(d1, s1));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k + 8), _mm256_add_epi64(d2, s2));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k + 12), _mm256_add_epi64(d3, s3));
    }
  }
  for (; k + 4 <= n; k += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_add_epi64(d, s));
  }
  for (; k < n; ++k) dst[k] += src[k];
}

}  // namespace locan::kernels::avx2

#else

namespace locan::kernels::avx2 {
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) { scalar::accumulate(dst, src, n); }
}  // namespace locan::kernels::avx2

#endif
