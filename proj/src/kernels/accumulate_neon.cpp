#include "locan/kernels/accumulate.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)
#include <arm_neon.h>

namespace locan::kernels::neon {

void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  if (detail::short_carry(dst, src, n, 2)) {
    scalar::accumulate(dst, src, n);
    return;
  }
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    vst1q_u64(dst + k, vaddq_u64(vld1q_u64(dst + k), vld1q_u64(src + k)));
  }
  for (; k < n; ++k) dst[k] += src[k];
}

}  // namespace locan::kernels::neon

#else

namespace locan::kernels::neon {
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) { scalar::accumulate(dst, src, n); }
}  // namespace locan::kernels::neon

#endif
