#pragma once

// Scalar linear recurrence for f(m,.) from the characteristic polynomial of
// the recurrence matrix (Cayley-Hamilton), plus checks of the closed-form
// claims about its top and constant coefficients.

#include "consets/exactmath.hpp"
#include "consets/layer_engine.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace consets {

inline BigInt fibonacci(std::size_t n) {
  BigInt a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

inline IntPolynomial recurrence_char_poly(std::size_t m) {
  return char_poly(build_recurrence_matrix(m).matrix);
}

// One claimed coefficient identity and what was actually observed.
struct CoefficientCheck {
  std::string name;  // e.g. "c_{5,1}"
  BigInt claimed;
  BigInt observed;
  bool holds() const { return claimed == observed; }
};

struct CoefficientReport {
  std::size_t m = 0;
  IntPolynomial poly{{BigInt(1)}};
  std::vector<CoefficientCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.holds()) return false;
    return true;
  }
  // Empty when everything holds.
  std::string failure() const {
    for (const auto& c : checks)
      if (!c.holds())
        return c.name + ": claimed " + c.claimed.str() + ", observed " + c.observed.str();
    return {};
  }
};

// With p_m(x) = x^m + c_{m,m} x^{m-1} + ... + c_{m,1}, checks the claims
// c_{m,m} = F(m+1) - 2^m, c_{m,1} = 1 for m >= 3 and (c_{2,2}, c_{2,1}) = (-2, -1).
inline CoefficientReport validate_coefficients(std::size_t m) {
  if (m < 2) throw domain_error("validate_coefficients: requires m >= 2");
  CoefficientReport report;
  report.m = m;
  report.poly = recurrence_char_poly(m);
  const std::string idx = std::to_string(m);
  const BigInt& top = report.poly.coefficient(m - 1);
  const BigInt& constant = report.poly.coefficient(0);
  if (m == 2) {
    report.checks.push_back({"c_{2,2}", BigInt(-2), top});
    report.checks.push_back({"c_{2,1}", BigInt(-1), constant});
  } else {
    report.checks.push_back(
        {"c_{" + idx + "," + idx + "}", fibonacci(m + 1) - (BigInt(1) << m), top});
    report.checks.push_back({"c_{" + idx + ",1}", BigInt(1), constant});
  }
  return report;
}

struct LinearRecurrence {
  std::size_t order = 0;
  // coefficients[j] multiplies f(m,k-1-j): -c_{m,m}, -c_{m,m-1}, ..., -c_{m,1}
  std::vector<BigInt> coefficients;
  // f(m,1), ..., f(m,order), from the matrix path
  std::vector<BigInt> seed;

  // sum_j coefficients[j] * prev[prev.size()-1-j], prev holding at least `order` terms
  BigInt next_term(std::span<const BigInt> prev) const {
    if (prev.size() < order) throw domain_error("LinearRecurrence: not enough history");
    BigInt acc = 0;
    for (std::size_t j = 0; j < order; ++j) acc += coefficients[j] * prev[prev.size() - 1 - j];
    return acc;
  }
};

inline LinearRecurrence build_recurrence(std::size_t m) {
  const IntPolynomial p = recurrence_char_poly(m);
  LinearRecurrence rec;
  rec.order = m;
  rec.coefficients.reserve(m);
  for (std::size_t j = 0; j < m; ++j) rec.coefficients.push_back(-p.coefficient(m - 1 - j));
  const FTable ft(m, m);
  for (std::size_t k = 1; k <= m; ++k) rec.seed.push_back(ft.total(k));
  return rec;
}

// f(m,1..k_max)
inline std::vector<BigInt> stream_f(const LinearRecurrence& rec, std::size_t k_max) {
  if (k_max == 0) throw domain_error("stream_f: horizon must be >= 1");
  std::vector<BigInt> out;
  out.reserve(k_max);
  for (std::size_t k = 0; k < k_max && k < rec.seed.size(); ++k) out.push_back(rec.seed[k]);
  while (out.size() < k_max) out.push_back(rec.next_term(out));
  return out;
}

// Whether the recurrence reproduces f(m,k) at k = m, using f(m,0) = 1. That
// value is the weighted sum of A_m^{-1} [1]^T: the bottom row of A_m is the
// binomial row, so [C(m,1..m)] A_m^{-1} is the last unit vector.
inline bool recurrence_holds_at_order(std::size_t m) {
  const LinearRecurrence rec = build_recurrence(m);
  std::vector<BigInt> history{BigInt(1)};
  history.insert(history.end(), rec.seed.begin(), rec.seed.end() - 1);
  return rec.next_term(history) == rec.seed.back();
}

}  // namespace consets
