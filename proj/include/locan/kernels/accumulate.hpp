#pragma once

// Shifted accumulation over uint64 counters, the inner loop of the
// partition-function tables. The scalar routine is the reference; vector
// variants must match it bit for bit on every input, including overlapping
// ranges, where the semantics are those of the sequential loop.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace locan::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
/// Compiled in and supported by the running CPU.
bool backend_available(Backend b);
std::vector<Backend> available_backends();
/// Fastest available backend, detected once.
Backend best_backend();

namespace scalar {
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}
namespace avx2 {
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}
namespace neon {
void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}

/// for k in [0, n): dst[k] += src[k]   (wrapping mod 2^64)
void accumulate(Backend b, std::uint64_t* dst, const std::uint64_t* src, std::size_t n);

inline void accumulate(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  accumulate(best_backend(), dst, src, n);
}

inline void accumulate(Backend b, std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  accumulate(b, dst.data(), src.data(), dst.size() < src.size() ? dst.size() : src.size());
}

namespace detail {
/// True when a vector step of `width` lanes could read a value the same
/// step is about to write, i.e. src trails dst by fewer than `width` slots
/// inside the range.
inline bool short_carry(const std::uint64_t* dst, const std::uint64_t* src, std::size_t n, std::size_t width) {
  return src < dst && dst < src + n && static_cast<std::size_t>(dst - src) < width;
}
}  // namespace detail

}  // namespace locan::kernels
