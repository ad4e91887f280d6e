#pragma once

// Headline quantities for K_m x P_n: number of connected sets N, their total
// order S, average order A = S/N and density D = A/(m n).

#include "consets/exactmath.hpp"
#include "consets/layer_engine.hpp"
#include "consets/order_engine.hpp"

#include <cstddef>
#include <memory>

namespace consets {

struct ProductResult {
  std::size_t m = 0;
  std::size_t n = 0;
  BigInt count_N;
  BigInt total_S;
  BigRational average_A;
  BigRational density_D;
};

inline ProductResult make_product_result(std::size_t m, std::size_t n, BigInt count, BigInt total) {
  ProductResult r;
  r.m = m;
  r.n = n;
  r.average_A = BigRational(total, count);
  r.density_D = r.average_A / BigRational(BigInt(m) * n);
  r.count_N = std::move(count);
  r.total_S = std::move(total);
  return r;
}

// Evaluates any n for a fixed m over one shared pair of layer tables.
class ProductEngine {
 public:
  explicit ProductEngine(std::size_t m, std::size_t n_hint = 1)
      : tables_(check(m, n_hint), n_hint) {}

  std::size_t m() const { return tables_.m(); }
  const FTable& ftable() const { return tables_.ftable(); }
  const STable& stable() const { return tables_; }

  void reserve(std::size_t n) {
    if (n > tables_.horizon()) tables_.extend_to(n);
  }

  // sum_{k=1}^{n} (n+1-k) f(m,k)
  BigInt count(std::size_t n) {
    prepare(n);
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += (n + 1 - k) * tables_.ftable().total(k);
    return acc;
  }

  // sum_{k=1}^{n} (n+1-k) S(F(m,k))
  BigInt total(std::size_t n) {
    prepare(n);
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += (n + 1 - k) * tables_.layer_sum(k);
    return acc;
  }

  ProductResult result(std::size_t n) { return make_product_result(m(), n, count(n), total(n)); }

 private:
  static std::size_t check(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw domain_error("K_m x P_n requires m >= 1 and n >= 1");
    return m;
  }
  void prepare(std::size_t n) {
    if (n == 0) throw domain_error("K_m x P_n requires n >= 1");
    reserve(n);
  }

  STable tables_;
};

inline BigInt count_connected_sets(std::size_t m, std::size_t n) {
  return ProductEngine(m, n).count(n);
}

inline BigInt total_order(std::size_t m, std::size_t n) { return ProductEngine(m, n).total(n); }

inline ProductResult compute_product(std::size_t m, std::size_t n) {
  return ProductEngine(m, n).result(n);
}

inline BigRational average_order(std::size_t m, std::size_t n) {
  return compute_product(m, n).average_A;
}

inline BigRational density(std::size_t m, std::size_t n) { return compute_product(m, n).density_D; }

// Average order straight from the closed double sum (convolution of the f_i
// sequences), bypassing the order-sum table.
inline BigRational average_order_explicit(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw domain_error("K_m x P_n requires m >= 1 and n >= 1");
  FTable ft(m, n);
  BigInt numer = 0, denom = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    numer += (n - k + 1) * layer_order_sum_convolution(m, k, ft);
    denom += (n - k + 1) * ft.total(k);
  }
  return {numer, denom};
}

}  // namespace consets
