#include "locan/kernels/accumulate.hpp"

namespace locan::kernels {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__aarch64__) || defined(_M_ARM64)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (backend_available(b)) out.push_back(b);
  }
  return out;
}

Backend best_backend() {
  static const Backend best = [] {
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
  }();
  return best;
}

void accumulate(Backend b, std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  switch (b) {
    case Backend::Avx2:
      if (backend_available(Backend::Avx2)) return avx2::accumulate(dst, src, n);
      break;
    case Backend::Neon:
      if (backend_available(Backend::Neon)) return neon::accumulate(dst, src, n);
      break;
    case Backend::Scalar:
      break;
  }
  scalar::accumulate(dst, src, n);
}

}  // namespace locan::kernels
