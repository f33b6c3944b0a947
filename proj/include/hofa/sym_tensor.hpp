#ifndef HOFA_SYM_TENSOR_HPP
#define HOFA_SYM_TENSOR_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hofa/multi_index.hpp"

namespace hofa {

/// Order-r symmetric tensor over dimension p, stored densely on the
/// canonical (weakly increasing) multi-indices. Lookup with an unsorted
/// tuple resolves to the canonical entry.
template <typename T>
class SymTensor {
 public:
  SymTensor(int p, int order)
      : p_(p), order_(order), data_(index_count(p, order), T{}) {
    if (p < 1 || order < 1) throw std::invalid_argument("SymTensor requires p >= 1, order >= 1");
  }

  int p() const { return p_; }
  int order() const { return order_; }
  std::size_t size() const { return data_.size(); }

  T& at(const MultiIndex& mi) {
    check(mi);
    return data_[index_rank(mi, p_)];
  }
  const T& at(const MultiIndex& mi) const {
    check(mi);
    return data_[index_rank(mi, p_)];
  }

  T& operator()(std::vector<int> raw) { return at(MultiIndex(std::move(raw), p_)); }
  const T& operator()(std::vector<int> raw) const { return at(MultiIndex(std::move(raw), p_)); }
  T& operator()(std::initializer_list<int> raw) { return at(MultiIndex(raw, p_)); }
  const T& operator()(std::initializer_list<int> raw) const { return at(MultiIndex(raw, p_)); }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const SymTensor& o) const {
    return p_ == o.p_ && order_ == o.order_ && data_ == o.data_;
  }

 private:
  void check(const MultiIndex& mi) const {
    if (mi.size() != order_) throw std::domain_error("MultiIndex length does not match tensor order");
  }

  int p_;
  int order_;
  std::vector<T> data_;
};

/// Diagonal symmetric tensor identified with its diagonal vector.
template <typename T>
class DiagTensor {
 public:
  DiagTensor(int n, int order) : n_(n), order_(order), diag_(static_cast<std::size_t>(n), T{}) {
    if (n < 1 || order < 1) throw std::invalid_argument("DiagTensor requires n >= 1, order >= 1");
  }
  static DiagTensor from_diag(int order, std::vector<T> diag) {
    DiagTensor d(static_cast<int>(diag.size()), order);
    d.diag_ = std::move(diag);
    return d;
  }

  int n() const { return n_; }
  int order() const { return order_; }
  T& operator[](int j) { return diag_[static_cast<std::size_t>(j - 1)]; }  // 1-based
  const T& operator[](int j) const { return diag_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<T>& diag() const { return diag_; }
  std::vector<T>& diag() { return diag_; }

  SymTensor<T> to_sym() const {
    SymTensor<T> t(n_, order_);
    for (int j = 1; j <= n_; ++j) {
      t.at(MultiIndex(std::vector<int>(static_cast<std::size_t>(order_), j), n_)) = (*this)[j];
    }
    return t;
  }

 private:
  int n_;
  int order_;
  std::vector<T> diag_;
};

/// p x m loading matrix; when flagged lower-triangular, entries with i < j
/// (1 <= i < j <= m) are structurally zero.
template <typename T>
class LoadingMatrix {
 public:
  LoadingMatrix(int p, int m, bool lower_triangular = true)
      : p_(p), m_(m), lower_(lower_triangular), v_(static_cast<std::size_t>(p) * m, T{}) {
    if (p < 1 || m < 1) throw std::invalid_argument("LoadingMatrix requires p >= 1, m >= 1");
  }

  int p() const { return p_; }
  int m() const { return m_; }
  bool lower_triangular() const { return lower_; }

  const T& operator()(int i, int j) const {  // 1-based
    return v_[static_cast<std::size_t>(i - 1) * m_ + (j - 1)];
  }
  void set(int i, int j, T val) {
    if (lower_ && i < j) throw std::domain_error("lower-triangular gauge: lambda_ij = 0 for i < j");
    v_[static_cast<std::size_t>(i - 1) * m_ + (j - 1)] = std::move(val);
  }

 private:
  int p_;
  int m_;
  bool lower_;
  std::vector<T> v_;
};

/// Tucker product of a diagonal core by Lambda^T in every mode:
/// entry (i_1..i_r) = sum_l d_l * lambda_{i_1,l} ... lambda_{i_r,l}.
/// For a lower-triangular Lambda and canonical indices the sum truncates
/// at min{m, i_1}.
template <typename T>
SymTensor<T> tucker_diag(const DiagTensor<T>& D, const LoadingMatrix<T>& L) {
  if (D.n() != L.m()) throw std::domain_error("tucker_diag: core dimension must equal loading columns");
  const int p = L.p();
  const int r = D.order();
  SymTensor<T> out(p, r);
  const auto idxs = enumerate_indices(p, r);
  std::size_t pos = 0;
  for (const auto& mi : idxs) {
    const int lmax = L.lower_triangular() ? std::min(L.m(), mi[0]) : L.m();
    T acc{};
    for (int l = 1; l <= lmax; ++l) {
      T term = D[l];
      for (int s = 0; s < r; ++s) term = term * L(mi[s], l);
      acc = acc + term;
    }
    out.data()[pos++] = acc;
  }
  return out;
}

template <typename T>
SymTensor<T> add_diag(const SymTensor<T>& t, const DiagTensor<T>& e) {
  if (t.p() != e.n() || t.order() != e.order()) {
    throw std::domain_error("add_diag: shape mismatch");
  }
  SymTensor<T> out = t;
  for (int j = 1; j <= t.p(); ++j) {
    out.at(MultiIndex(std::vector<int>(static_cast<std::size_t>(t.order()), j), t.p())) += e[j];
  }
  return out;
}

}  // namespace hofa

#endif
