#ifndef HOFA_SET_PARTITION_HPP
#define HOFA_SET_PARTITION_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace hofa {

/// Partition of [r] into disjoint nonempty blocks, blocks ordered by their
/// minimum element and elements increasing within each block.
struct SetPartition {
  std::vector<std::vector<int>> blocks;
};

inline constexpr int kMaxPartitionOrder = 10;  // Bell(10) = 115975

/// All set partitions of [r], enumerated as restricted-growth strings and
/// cached per r.
inline const std::vector<SetPartition>& partitions(int r) {
  if (r < 1) throw std::invalid_argument("partitions requires r >= 1");
  if (r > kMaxPartitionOrder) throw std::length_error("partition order exceeds implementation cap");
  static std::map<int, std::vector<SetPartition>> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;

  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(r), 0);
  auto emit = [&]() {
    const int nblocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    SetPartition part;
    part.blocks.assign(static_cast<std::size_t>(nblocks), {});
    for (int i = 0; i < r; ++i) {
      part.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    }
    out.push_back(std::move(part));
  };
  auto rec = [&](auto&& self, int i, int cur_max) -> void {
    if (i == r) {
      emit();
      return;
    }
    for (int b = 0; b <= cur_max + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(cur_max, b));
    }
  };
  rgs[0] = 0;
  rec(rec, 1, 0);

  auto [pos, inserted] = cache.emplace(r, std::move(out));
  return pos->second;
}

}  // namespace hofa

#endif
