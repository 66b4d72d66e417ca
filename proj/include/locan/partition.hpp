#pragma once

#include "locan/kernels/accumulate.hpp"
#include "locan/roots.hpp"

#include <cstdint>
#include <vector>

namespace locan::verma {

/// Kostant partition function on a box of the root lattice:
/// count(ν) = number of multisets of positive roots summing to ν
///          = dim M_{λ−ν} for every Verma module M(λ).
/// Counts wrap mod 2^64; desk-scale boxes stay far below that.
class PartitionTable {
 public:
  PartitionTable(const roots::RootSystem& rs, roots::Coords box, kernels::Backend backend);
  PartitionTable(const roots::RootSystem& rs, roots::Coords box)
      : PartitionTable(rs, std::move(box), kernels::best_backend()) {}

  const roots::Coords& box() const { return box_; }
  /// Precondition: 0 <= nu[i] <= box[i].
  std::uint64_t at(const roots::Coords& nu) const;
  /// Row-major counts, last coordinate contiguous.
  const std::vector<std::uint64_t>& raw() const { return counts_; }

 private:
  std::size_t flat(const roots::Coords& nu) const;

  roots::Coords box_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint64_t> counts_;
};

/// Box containing every ν >= 0 of height <= h.
roots::Coords height_box(int rank, int h);

}  // namespace locan::verma
