#pragma once

// Order sums s_i(m,k) and layer order sums S(F(m,k)).
//
// Three evaluation paths are provided and must agree:
//  - STable: s(k) = A_m s(k-1) + B_m f(k), O(k m^2) per column (default);
//  - s_table_direct: the literal sum  sum_{s<k} A^{k-s-1} B A^s [1]^T;
//  - layer_order_sum_convolution: m k f(m,k) minus a convolution of the
//    f_i sequences.

#include "consets/exactmath.hpp"
#include "consets/layer_engine.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace consets {

// B_m = diag(1, 2, ..., m)
inline IntMatrix weight_matrix(std::size_t m) {
  if (m == 0) throw domain_error("weight_matrix: layer size must be >= 1");
  std::vector<BigInt> diag(m);
  for (std::size_t i = 0; i < m; ++i) diag[i] = i + 1;
  return IntMatrix::diagonal(diag);
}

// Append-only table of s_i(m,k) and S(F(m,k)), sharing its FTable.
class STable {
 public:
  explicit STable(std::shared_ptr<FTable> ftable) : f_(std::move(ftable)) {
    if (!f_) throw domain_error("STable: null FTable");
    std::vector<BigInt> first(f_->m());
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i + 1;
    push(std::move(first));
    extend_to(f_->horizon());
  }

  STable(std::size_t m, std::size_t k_max) : STable(std::make_shared<FTable>(m, k_max)) {}

  std::size_t m() const { return f_->m(); }
  std::size_t horizon() const { return columns_.size(); }
  const FTable& ftable() const { return *f_; }
  std::shared_ptr<FTable> shared_ftable() const { return f_; }

  void extend_to(std::size_t k_max) {
    if (k_max == 0) throw domain_error("STable: horizon must be >= 1");
    f_->extend_to(std::max(k_max, f_->horizon()));
    const IntMatrix& a = f_->recurrence();
    columns_.reserve(k_max);
    while (columns_.size() < k_max) {
      const std::size_t k = columns_.size() + 1;
      std::vector<BigInt> next = mat_vec(a, columns_.back());
      auto fk = f_->column(k);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += (i + 1) * fk[i];
      push(std::move(next));
    }
  }

  // s_i(m,k)
  const BigInt& s(std::size_t i, std::size_t k) const {
    if (i == 0 || i > m()) throw domain_error("STable: profile index out of range");
    return column(k)[i - 1];
  }

  std::span<const BigInt> column(std::size_t k) const {
    if (k == 0 || k > horizon()) throw domain_error("STable: layer out of range");
    return columns_[k - 1];
  }

  // S(F(m,k))
  const BigInt& layer_sum(std::size_t k) const {
    if (k == 0 || k > horizon()) throw domain_error("STable: layer out of range");
    return sums_[k - 1];
  }

 private:
  void push(std::vector<BigInt> col) {
    sums_.push_back(dot(f_->weights(), col));
    columns_.push_back(std::move(col));
  }

  std::shared_ptr<FTable> f_;
  std::vector<std::vector<BigInt>> columns_;
  std::vector<BigInt> sums_;
};

inline STable s_table_recursive(std::size_t m, std::size_t k_max) { return STable(m, k_max); }

namespace detail {

// A^0, A^1, ..., A^{count-1}
inline std::vector<IntMatrix> matrix_powers(const IntMatrix& a, std::size_t count) {
  std::vector<IntMatrix> powers;
  powers.reserve(count);
  powers.push_back(IntMatrix::identity(a.order()));
  while (powers.size() < count) powers.push_back(powers.back() * a);
  return powers;
}

// (sum_{s=0}^{k-1} A^{k-s-1} W A^s) [1]^T with materialized powers.
inline std::vector<BigInt> sandwich_sum(const IntMatrix& a, const IntMatrix& w, std::size_t k) {
  const auto powers = matrix_powers(a, k);
  IntMatrix total(a.order());
  for (std::size_t s = 0; s < k; ++s) total += powers[k - s - 1] * w * powers[s];
  return total.row_sums();
}

}  // namespace detail

// Reference path: the literal matrix sum. Cost is O(k m^3); keep k small.
inline std::vector<BigInt> s_table_direct(std::size_t m, std::size_t k) {
  if (k == 0) throw domain_error("s_table_direct: layer must be >= 1");
  const auto rec = build_recurrence_matrix(m);
  return detail::sandwich_sum(rec.matrix, weight_matrix(m), k);
}

// sum_{s=1}^{k} f_i(m,s) f_i(m,k+1-s); `reversed` runs s downwards.
inline BigInt profile_self_convolution(const FTable& ftable, std::size_t i, std::size_t k,
                                       bool reversed = false) {
  if (k == 0 || k > ftable.horizon())
    throw domain_error("profile_self_convolution: horizon too short");
  BigInt acc = 0;
  for (std::size_t t = 1; t <= k; ++t) {
    const std::size_t s = reversed ? k + 1 - t : t;
    acc += ftable.f(i, s) * ftable.f(i, k + 1 - s);
  }
  return acc;
}

// S(F(m,k)) = m k f(m,k) - sum_{i<m} C(m,i) (m-i) sum_s f_i(m,s) f_i(m,k+1-s)
inline BigInt layer_order_sum_convolution(std::size_t m, std::size_t k, const FTable& ftable) {
  if (ftable.m() != m) throw domain_error("layer_order_sum_convolution: table has wrong m");
  if (k == 0 || k > ftable.horizon())
    throw domain_error("layer_order_sum_convolution: horizon too short");
  BigInt result = BigInt(m) * k * ftable.total(k);
  for (std::size_t i = 1; i < m; ++i)
    result -= ftable.binomials()(m, i) * (m - i) * profile_self_convolution(ftable, i, k);
  return result;
}

// Checks sum_j C(m,j) x_{i,j}(k) == C(m,i) sum_s f_i(m,s) f_i(m,k+1-s), where
// x_i(k) is evaluated from the literal sum of A^{k-s-1} E_{i,i} A^s [1]^T.
inline bool convolution_identity_check(std::size_t m, std::size_t i, std::size_t k,
                                       const FTable& ftable) {
  if (ftable.m() != m || i == 0 || i > m || k == 0)
    throw domain_error("convolution_identity_check: index out of range");
  const auto rec = build_recurrence_matrix(m);
  IntMatrix unit(m);
  unit(i - 1, i - 1) = 1;
  const auto x = detail::sandwich_sum(rec.matrix, unit, k);
  const BigInt lhs = dot(ftable.weights(), x);
  const BigInt rhs = ftable.binomials()(m, i) * profile_self_convolution(ftable, i, k);
  return lhs == rhs;
}

}  // namespace consets
