#include "locan/partition.hpp"

#include "locan/errors.hpp"

namespace locan::verma {

using roots::Coords;

PartitionTable::PartitionTable(const roots::RootSystem& rs, Coords box, kernels::Backend backend)
    : box_(std::move(box)) {
  const int r = rs.rank();
  if (static_cast<int>(box_.size()) != r) throw DomainError("partition box rank mismatch");
  strides_.assign(r, 1);
  std::size_t total = 1;
  for (int i = r - 1; i >= 0; --i) {
    if (box_[i] < 0) throw DomainError("partition box must be nonnegative");
    strides_[i] = total;
    total *= static_cast<std::size_t>(box_[i] + 1);
  }
  counts_.assign(total, 0);
  counts_[0] = 1;

  const std::size_t row_len = static_cast<std::size_t>(box_[r - 1] + 1);
  // Unbounded knapsack, one positive root at a time. Rows are visited in
  // increasing order so that the source row already includes this root.
  for (const auto& root : rs.positive_roots()) {
    const auto& beta = root.coords();
    bool fits = true;
    std::size_t offset = 0;
    for (int i = 0; i < r; ++i) {
      fits = fits && beta[i] <= box_[i];
      offset += static_cast<std::size_t>(beta[i]) * strides_[i];
    }
    if (!fits) continue;
    const auto tail = static_cast<std::size_t>(beta[r - 1]);
    const std::size_t len = row_len - tail;

    Coords outer(r, 0);
    for (int i = 0; i < r - 1; ++i) outer[i] = beta[i];
    while (true) {
      std::size_t row = 0;
      for (int i = 0; i < r - 1; ++i) row += static_cast<std::size_t>(outer[i]) * strides_[i];
      std::uint64_t* dst = counts_.data() + row + tail;
      kernels::accumulate(backend, dst, dst - offset, len);
      // next outer index with outer[i] >= beta[i]
      int i = r - 2;
      for (; i >= 0; --i) {
        if (++outer[i] <= box_[i]) break;
        outer[i] = beta[i];
      }
      if (i < 0) break;
    }
  }
}

std::size_t PartitionTable::flat(const Coords& nu) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0 || nu[i] > box_[i]) throw DomainError("point outside the partition box");
    idx += static_cast<std::size_t>(nu[i]) * strides_[i];
  }
  return idx;
}

std::uint64_t PartitionTable::at(const Coords& nu) const {
  if (nu.size() != box_.size()) throw DomainError("partition point rank mismatch");
  return counts_[flat(nu)];
}

Coords height_box(int rank, int h) { return Coords(rank, h); }

}  // namespace locan::verma
