#pragma once

// Layer transfer matrix for K_m x P_n and the per-layer counts f_i(m,k).
//
// Layer sizes and indices are 1-based at the API surface (they are counts
// and layer numbers); storage is 0-based.

#include "consets/exactmath.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace consets {

// Pascal's triangle rows 0..m.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      rows_[n].assign(n + 1, BigInt(1));
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  std::size_t max_n() const { return rows_.size() - 1; }

  // C(n,k), zero when k > n.
  const BigInt& operator()(std::size_t n, std::size_t k) const {
    static const BigInt zero = 0;
    if (n > max_n()) throw domain_error("BinomialTable: row out of range");
    return k > n ? zero : rows_[n][k];
  }

  // [C(n,1), ..., C(n,n)]
  std::vector<BigInt> positive_row(std::size_t n) const {
    std::vector<BigInt> row(n);
    for (std::size_t k = 1; k <= n; ++k) row[k - 1] = (*this)(n, k);
    return row;
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

struct RecurrenceMatrix {
  std::size_t m;
  IntMatrix matrix;
};

// entry(i,j) = C(m,j) - C(m-i,j), 1 <= i,j <= m.
inline RecurrenceMatrix build_recurrence_matrix(std::size_t m) {
  if (m == 0) throw domain_error("build_recurrence_matrix: layer size must be >= 1");
  BinomialTable binom(m);
  IntMatrix a(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) a(i - 1, j - 1) = binom(m, j) - binom(m - i, j);
  return {m, std::move(a)};
}

// C_m = diag(C(m,1), ..., C(m,m))
inline IntMatrix binomial_weight_matrix(std::size_t m) {
  if (m == 0) throw domain_error("binomial_weight_matrix: layer size must be >= 1");
  return IntMatrix::diagonal(BinomialTable(m).positive_row(m));
}

// Append-only table of f_i(m,k) and f(m,k). Column k is A_m^{k-1} * [1...1]^T.
// Growth is single-writer; a table that is no longer extended can be shared.
class FTable {
 public:
  FTable(std::size_t m, std::size_t k_max) : binom_(check_m(m)), rec_(build_recurrence_matrix(m)) {
    weights_ = binom_.positive_row(m);
    columns_.push_back(std::vector<BigInt>(m, BigInt(1)));
    totals_.push_back(dot(weights_, columns_.back()));
    extend_to(k_max);
  }

  std::size_t m() const { return rec_.m; }
  std::size_t horizon() const { return columns_.size(); }
  const IntMatrix& recurrence() const { return rec_.matrix; }
  const BinomialTable& binomials() const { return binom_; }
  // [C(m,1), ..., C(m,m)]
  std::span<const BigInt> weights() const { return weights_; }

  void extend_to(std::size_t k_max) {
    if (k_max == 0) throw domain_error("FTable: horizon must be >= 1");
    columns_.reserve(k_max);
    totals_.reserve(k_max);
    while (columns_.size() < k_max) {
      columns_.push_back(mat_vec(rec_.matrix, columns_.back()));
      totals_.push_back(dot(weights_, columns_.back()));
    }
  }

  // f_i(m,k)
  const BigInt& f(std::size_t i, std::size_t k) const {
    check_cell(i, k);
    return columns_[k - 1][i - 1];
  }

  // f(m,k)
  const BigInt& total(std::size_t k) const {
    if (k == 0 || k > horizon()) throw domain_error("FTable: layer out of range");
    return totals_[k - 1];
  }

  // [f_1(m,k), ..., f_m(m,k)]
  std::span<const BigInt> column(std::size_t k) const {
    if (k == 0 || k > horizon()) throw domain_error("FTable: layer out of range");
    return columns_[k - 1];
  }

 private:
  static std::size_t check_m(std::size_t m) {
    if (m == 0) throw domain_error("FTable: layer size must be >= 1");
    return m;
  }
  void check_cell(std::size_t i, std::size_t k) const {
    if (i == 0 || i > m()) throw domain_error("FTable: profile index out of range");
    if (k == 0 || k > horizon()) throw domain_error("FTable: layer out of range");
  }

  BinomialTable binom_;
  RecurrenceMatrix rec_;
  std::vector<BigInt> weights_;
  std::vector<std::vector<BigInt>> columns_;
  std::vector<BigInt> totals_;
};

inline FTable f_table(std::size_t m, std::size_t k_max) { return FTable(m, k_max); }

// [C(m,1..m)] . (i-th column of A_m^{k-1}), which should equal C(m,i) f_i(m,k).
inline BigInt weighted_profile_sum(std::size_t m, std::size_t i, std::size_t k) {
  if (m == 0 || i == 0 || i > m || k == 0)
    throw domain_error("weighted_profile_sum: index out of range");
  const auto rec = build_recurrence_matrix(m);
  std::vector<BigInt> col(m);
  col[i - 1] = 1;
  for (std::size_t step = 1; step < k; ++step) col = mat_vec(rec.matrix, col);
  return dot(BinomialTable(m).positive_row(m), col);
}

// Whether C_m * A_m^k is symmetric.
inline bool check_weighted_symmetry(std::size_t m, std::size_t k) {
  const auto rec = build_recurrence_matrix(m);
  IntMatrix prod = binomial_weight_matrix(m);
  for (std::size_t step = 0; step < k; ++step) prod = prod * rec.matrix;
  return prod.is_symmetric();
}

}  // namespace consets
