#include "locan/kernels/accumulate.hpp"

namespace locan::kernels::scalar {

void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) dst[k] += src[k];
}

}  // namespace locan::kernels::scalar
