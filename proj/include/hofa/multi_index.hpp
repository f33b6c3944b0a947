#ifndef HOFA_MULTI_INDEX_HPP
#define HOFA_MULTI_INDEX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hofa/combinatorics.hpp"

namespace hofa {

/// Weakly increasing tuple of 1-based indices in [p]; the canonical
/// representative of a symmetric-tensor entry's permutation orbit.
class MultiIndex {
 public:
  MultiIndex(std::vector<int> raw, int p) : idx_(std::move(raw)) {
    if (idx_.empty()) throw std::invalid_argument("MultiIndex must have length >= 1");
    for (int v : idx_) {
      if (v < 1 || v > p) throw std::domain_error("MultiIndex entry out of range [1,p]");
    }
    std::sort(idx_.begin(), idx_.end());
  }

  MultiIndex(std::initializer_list<int> raw, int p) : MultiIndex(std::vector<int>(raw), p) {}

  int size() const { return static_cast<int>(idx_.size()); }
  int operator[](int s) const { return idx_[static_cast<std::size_t>(s)]; }
  const std::vector<int>& values() const { return idx_; }

  bool operator==(const MultiIndex& o) const { return idx_ == o.idx_; }
  bool operator<(const MultiIndex& o) const { return idx_ < o.idx_; }

 private:
  std::vector<int> idx_;
};

inline MultiIndex canonical_index(std::vector<int> raw, int p) {
  return MultiIndex(std::move(raw), p);
}

inline std::size_t index_count(int p, int r) {
  return binomial_u64(p + r - 1, r);
}

/// Lexicographic rank of a weakly increasing r-tuple over [p], in [0, C(p+r-1,r)).
/// The tuple maps to a strictly increasing combination via b_s = i_s + s - 1.
inline std::size_t index_rank(const MultiIndex& mi, int p) {
  const int r = mi.size();
  const int n = p + r - 1;
  std::size_t rank = 0;
  int prev = 0;
  for (int s = 0; s < r; ++s) {
    const int b = mi[s] + s;  // 1-based strictly increasing
    for (int v = prev + 1; v < b; ++v) {
      rank += binomial_u64(n - v, r - s - 1);
    }
    prev = b;
  }
  return rank;
}

/// All weakly increasing r-tuples over [p] in lexicographic order.
inline std::vector<MultiIndex> enumerate_indices(int p, int r) {
  if (p < 1 || r < 1) throw std::invalid_argument("enumerate_indices requires p >= 1, r >= 1");
  std::vector<MultiIndex> out;
  out.reserve(index_count(p, r));
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  while (true) {
    out.emplace_back(cur, p);
    int s = r - 1;
    while (s >= 0 && cur[static_cast<std::size_t>(s)] == p) --s;
    if (s < 0) break;
    const int v = cur[static_cast<std::size_t>(s)] + 1;
    for (int t = s; t < r; ++t) cur[static_cast<std::size_t>(t)] = v;
  }
  return out;
}

}  // namespace hofa

#endif
