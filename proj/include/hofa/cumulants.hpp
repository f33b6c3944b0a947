#ifndef HOFA_CUMULANTS_HPP
#define HOFA_CUMULANTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hofa/set_partition.hpp"
#include "hofa/sym_tensor.hpp"

namespace hofa {

/// Symmetric tensors of consecutive orders up to max_order, all over the
/// same ambient dimension p. With zero_mean set, the order-1 tensor is
/// omitted and treated as identically zero.
template <typename T>
struct TensorSequence {
  int p = 1;
  int max_order = 2;
  bool zero_mean = true;
  std::vector<SymTensor<T>> tensors;  // orders first_order()..max_order

  int first_order() const { return zero_mean ? 2 : 1; }

  static TensorSequence zeros(int p, int max_order, bool zero_mean) {
    if (max_order < 2) throw std::invalid_argument("TensorSequence requires max_order >= 2");
    TensorSequence s;
    s.p = p;
    s.max_order = max_order;
    s.zero_mean = zero_mean;
    for (int r = s.first_order(); r <= max_order; ++r) s.tensors.emplace_back(p, r);
    return s;
  }

  SymTensor<T>& order(int r) {
    if (r < first_order() || r > max_order) throw std::domain_error("tensor order out of sequence range");
    return tensors[static_cast<std::size_t>(r - first_order())];
  }
  const SymTensor<T>& order(int r) const {
    if (r < first_order() || r > max_order) throw std::domain_error("tensor order out of sequence range");
    return tensors[static_cast<std::size_t>(r - first_order())];
  }

  bool operator==(const TensorSequence& o) const {
    return p == o.p && max_order == o.max_order && zero_mean == o.zero_mean && tensors == o.tensors;
  }
};

namespace detail {

// Shared partition-sum transform. Weighted = cumulants from moments with
// the (-1)^{L-1}(L-1)! factor; unweighted = moments from cumulants.
template <typename T, bool Weighted>
TensorSequence<T> partition_transform(const TensorSequence<T>& in) {
  TensorSequence<T> out = TensorSequence<T>::zeros(in.p, in.max_order, in.zero_mean);
  std::vector<int> sub;
  for (int r = in.first_order(); r <= in.max_order; ++r) {
    const auto idxs = enumerate_indices(in.p, r);
    for (const auto& mi : idxs) {
      T acc{};
      for (const SetPartition& part : partitions(r)) {
        const int nblocks = static_cast<int>(part.blocks.size());
        // With zero mean, any singleton block annihilates the term.
        if (in.zero_mean) {
          bool has_singleton = false;
          for (const auto& b : part.blocks) {
            if (b.size() == 1) {
              has_singleton = true;
              break;
            }
          }
          if (has_singleton) continue;
        }
        T term;
        if constexpr (Weighted) {
          long long w = 1;
          for (int l = 2; l < nblocks; ++l) w *= l;  // (L-1)!
          if (nblocks % 2 == 0) w = -w;              // (-1)^(L-1)
          term = T(w);
        } else {
          term = T(1);
        }
        for (const auto& block : part.blocks) {
          sub.clear();
          for (int pos : block) sub.push_back(mi[pos - 1]);
          term = term * in.order(static_cast<int>(block.size()))(sub);
        }
        acc += term;
      }
      out.order(r).at(mi) = acc;
    }
  }
  return out;
}

}  // namespace detail

template <typename T>
TensorSequence<T> moments_to_cumulants(const TensorSequence<T>& moments) {
  return detail::partition_transform<T, true>(moments);
}

template <typename T>
TensorSequence<T> cumulants_to_moments(const TensorSequence<T>& cumulants) {
  return detail::partition_transform<T, false>(cumulants);
}

enum class Dist { CenteredExponential, UniformSym, Rademacher };

inline Dist parse_dist(const std::string& tag) {
  if (tag == "centered-exponential") return Dist::CenteredExponential;
  if (tag == "uniform") return Dist::UniformSym;
  if (tag == "rademacher") return Dist::Rademacher;
  throw std::domain_error("unknown distribution tag: " + tag);
}

inline std::string dist_tag(Dist d) {
  switch (d) {
    case Dist::CenteredExponential: return "centered-exponential";
    case Dist::UniformSym: return "uniform";
    case Dist::Rademacher: return "rademacher";
  }
  throw std::logic_error("unreachable");
}

/// Raw moments m_1..m_k; all three laws have mean zero.
std::vector<Rational> analytic_moments(Dist dist, int max_order);

/// Cumulants kappa_1..kappa_k, computed exactly from the moment sequence.
std::vector<Rational> analytic_cumulants(Dist dist, int max_order);

}  // namespace hofa

#endif
