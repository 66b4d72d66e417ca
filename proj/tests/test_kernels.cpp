#include "locan/kernels/accumulate.hpp"
#include "locan/partition.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace locan::kernels;

namespace {

std::vector<std::uint64_t> random_buffer(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailable) {
  EXPECT_TRUE(backend_available(Backend::Scalar));
  EXPECT_TRUE(backend_available(best_backend()));
  EXPECT_FALSE(available_backends().empty());
}

TEST(Kernels, DisjointRangesMatchScalarReference) {
  std::mt19937_64 rng(1);
  for (Backend b : available_backends()) {
    SCOPED_TRACE(backend_name(b));
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 15u, 16u, 17u, 63u, 64u, 100u, 1027u}) {
      const auto src = random_buffer(rng, n);
      auto expected = random_buffer(rng, n);
      auto got = expected;
      scalar::accumulate(expected.data(), src.data(), n);
      accumulate(b, got.data(), src.data(), n);
      EXPECT_EQ(got, expected) << "n=" << n;
    }
  }
}

TEST(Kernels, OverlappingRangesKeepSequentialSemantics) {
  std::mt19937_64 rng(2);
  for (Backend b : available_backends()) {
    SCOPED_TRACE(backend_name(b));
    for (std::size_t distance = 0; distance <= 20; ++distance) {
      for (std::size_t n : {1u, 7u, 16u, 33u, 90u}) {
        const auto init = random_buffer(rng, n + distance + 1);
        auto expected = init;
        auto got = init;
        // src trails dst
        scalar::accumulate(expected.data() + distance, expected.data(), n);
        accumulate(b, got.data() + distance, got.data(), n);
        EXPECT_EQ(got, expected) << "trailing distance " << distance << " n=" << n;
        // src leads dst
        expected = init;
        got = init;
        scalar::accumulate(expected.data(), expected.data() + distance, n);
        accumulate(b, got.data(), got.data() + distance, n);
        EXPECT_EQ(got, expected) << "leading distance " << distance << " n=" << n;
      }
    }
  }
}

TEST(Kernels, WrapsModulo64Bits) {
  std::vector<std::uint64_t> dst(9, ~std::uint64_t{0});
  const std::vector<std::uint64_t> src(9, 2);
  for (Backend b : available_backends()) {
    auto d = dst;
    accumulate(b, d.data(), src.data(), d.size());
    for (auto x : d) EXPECT_EQ(x, 1u);
  }
}

TEST(Kernels, PartitionTablesAgreeAcrossBackends) {
  for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
    const auto rs = locan::roots::build_root_system(std::string(name));
    const auto box = locan::verma::height_box(rs.rank(), rs.rank() <= 2 ? 40 : 7);
    const locan::verma::PartitionTable reference(rs, box, Backend::Scalar);
    for (Backend b : available_backends()) {
      const locan::verma::PartitionTable table(rs, box, b);
      EXPECT_EQ(table.raw(), reference.raw()) << name << " " << backend_name(b);
    }
  }
}
