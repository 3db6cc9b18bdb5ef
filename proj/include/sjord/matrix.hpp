#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sjord/kernels.hpp"
#include "sjord/scalars.hpp"

namespace sjord {

/// Finite-dimensional Z2-graded vector space: one parity bit per basis vector.
class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<std::uint8_t> parity) : parity_(std::move(parity)) {}

  /// All-even space of dimension d.
  static SuperSpace even(std::size_t d) { return SuperSpace(std::vector<std::uint8_t>(d, 0)); }
  /// Defining representation of sl(n|1): n even vectors then one odd one.
  static SuperSpace fundamental(int n);

  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<std::uint8_t>& parities() const { return parity_; }

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::vector<std::uint8_t> parity_;
};

/// Row-major tensor product: index (i, k) -> i * dim(w) + k, parity p(i) + p(k).
SuperSpace tensor(const SuperSpace& v, const SuperSpace& w);
SuperSpace tensor_power(const SuperSpace& v, int k);

/// Dense square matrix over S acting on a SuperSpace, with an optional
/// declared operator parity.
template <class S>
class GradedMatrix {
 public:
  GradedMatrix() = default;
  explicit GradedMatrix(SuperSpace space, std::optional<int> parity = std::nullopt)
      : space_(std::move(space)), data_(space_.dim() * space_.dim()), parity_(parity) {}

  static GradedMatrix zero(const SuperSpace& space) { return GradedMatrix(space); }
  static GradedMatrix identity(const SuperSpace& space) {
    GradedMatrix m(space, 0);
    for (std::size_t i = 0; i < space.dim(); ++i) m(i, i) = S(1L);
    return m;
  }
  /// Matrix unit E_ij (0-based), parity p(i) + p(j).
  static GradedMatrix unit(const SuperSpace& space, std::size_t i, std::size_t j) {
    GradedMatrix m(space, (space.parity(i) + space.parity(j)) % 2);
    m(i, j) = S(1L);
    return m;
  }

  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::optional<int> parity() const { return parity_; }
  GradedMatrix with_parity(std::optional<int> p) const {
    GradedMatrix r = *this;
    r.parity_ = p;
    return r;
  }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * dim() + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * dim() + j]; }
  std::span<const S> data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!sjord::is_zero(x)) return false;
    return true;
  }

  /// Every nonzero entry (i, j) has p(i) + p(j) equal to the declared parity.
  bool parity_consistent() const {
    if (!parity_) return true;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!sjord::is_zero((*this)(i, j)) && (space_.parity(i) + space_.parity(j)) % 2 != *parity_) return false;
    return true;
  }

  /// Parity read off the nonzero entries; nullopt for zero or inhomogeneous.
  std::optional<int> infer_parity() const {
    std::optional<int> p;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        if (sjord::is_zero((*this)(i, j))) continue;
        const int e = (space_.parity(i) + space_.parity(j)) % 2;
        if (p && *p != e) return std::nullopt;
        p = e;
      }
    return p;
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    GradedMatrix<T> out(space_, parity_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  GradedMatrix& operator+=(const GradedMatrix& o) {
    check_space(o);
    parity_ = sum_parity(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  GradedMatrix& operator-=(const GradedMatrix& o) {
    check_space(o);
    parity_ = sum_parity(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator-(GradedMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend GradedMatrix operator*(const S& c, GradedMatrix a) {
    for (auto& x : a.data_)
      if (!sjord::is_zero(x)) x = c * x;
    return a;
  }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    a.check_space(b);
    std::optional<int> p;
    if (a.parity_ && b.parity_) p = (*a.parity_ + *b.parity_) % 2;
    GradedMatrix c(a.space_, p);
    kernels::matmul_parallel<S>(a.data_, b.data_, c.data_, a.dim());
    return c;
  }
  /// Entrywise equality; declared parities are metadata and not compared.
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.space_ == b.space_ && a.data_ == b.data_;
  }

  /// First (row, col) where the two matrices differ, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const GradedMatrix& o) const {
    check_space(o);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!((*this)(i, j) == o(i, j))) return std::make_pair(i, j);
    return std::nullopt;
  }

 private:
  void check_space(const GradedMatrix& o) const {
    if (!(space_ == o.space_)) throw Error("matrix spaces differ");
  }
  static std::optional<int> sum_parity(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.parity_ == b.parity_) return a.parity_;
    if (b.is_zero()) return a.parity_;
    if (a.is_zero()) return b.parity_;
    return std::nullopt;
  }

  SuperSpace space_;
  std::vector<S> data_;
  std::optional<int> parity_;
};

using HMatrix = GradedMatrix<HPoly>;
using QMatrix = GradedMatrix<QRat>;
using QHMatrix = GradedMatrix<QHPoly>;

/// Matrix power by repeated multiplication (k >= 0).
template <class S>
GradedMatrix<S> power(const GradedMatrix<S>& m, int k) {
  GradedMatrix<S> acc = GradedMatrix<S>::identity(m.space());
  if (k > 0 && m.parity()) acc = acc.with_parity((*m.parity() * k) % 2);
  for (int i = 0; i < k; ++i) acc = acc * m;
  return acc;
}

/// Constant term of every entry (the h = 0 specialization).
HMatrix eval_h0(const HMatrix& m);

/// Exact entrywise division by h^k; throws DivisibilityFailure.
HMatrix divide_by_h(const HMatrix& m, int k);

/// Embeds a Q[h] matrix into Q(q)[h].
QHMatrix to_qh(const HMatrix& m);
QHMatrix to_qh(const QMatrix& m);

/// Entrywise q -> 1; PoleAtOne messages carry the 1-based entry coordinates.
HMatrix limit_at_one(const QHMatrix& m);

/// Parity operator (-1)^F of the space.
HMatrix parity_operator(const SuperSpace& space);

}  // namespace sjord
